//! Randomized pipeline-vs-oracle comparison across every form.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tusi_core::forms::{CanonicalEquation, Form, GeneralPoly};
use tusi_core::numerics::{rat, Rational};
use tusi_core::oracle::differential_check;
use tusi_core::pipeline::{solve, SolveOptions};

fn seed() -> u64 {
    std::env::var("TUSI_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x7u64)
}

fn coef(rng: &mut impl Rng, max: i64) -> Rational {
    rat(rng.gen_range(1..=max), rng.gen_range(1..=max))
}

fn run_form(form: Form, count: usize, rng: &mut ChaCha8Rng) {
    let opts = SolveOptions {
        base: 10,
        digits: 12,
    };
    let width = rat(1, 1_000_000_000_000);
    for _ in 0..count {
        let (a, b) = (coef(rng, 1000), coef(rng, 1000));
        let eq = CanonicalEquation::new(form, a, b, coef(rng, 1000));
        let eq = match form {
            Form::C21 => CanonicalEquation::new(form, eq.a, Rational::zero(), eq.c),
            Form::C22 => CanonicalEquation::new(form, Rational::zero(), eq.b, eq.c),
            _ => eq,
        };
        let poly = eq.to_general();
        let sol = solve(&poly, &opts).unwrap_or_else(|e| panic!("{eq}: {e}"));
        let report = differential_check(&sol, &width);
        assert!(report.agrees(), "{eq}: {:?}", report.discrepancies);
    }
}

#[test]
fn cubic_forms_agree_with_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(seed());
    for form in [Form::C21, Form::C22, Form::C23, Form::C24, Form::C25] {
        run_form(form, 60, &mut rng);
    }
}

#[test]
fn always_solvable_forms_agree_with_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(seed() ^ 0x55);
    let opts = SolveOptions {
        base: 60,
        digits: 6,
    };
    for _ in 0..200 {
        let c: Vec<i64> = (0..3).map(|_| rng.gen_range(-20..=20)).collect();
        let poly = GeneralPoly::new(rat(1, 1), rat(c[0], 1), rat(c[1], 1), rat(c[2], 1));
        let Ok(sol) = solve(&poly, &opts) else {
            continue;
        };
        let report = differential_check(&sol, &rat(1, 1_000_000_000_000));
        assert!(report.agrees(), "{poly}: {:?}", report.discrepancies);
    }
}
