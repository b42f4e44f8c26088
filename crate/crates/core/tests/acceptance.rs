//! Acceptance criteria, one PASS/FAIL line each. Seeded by `TUSI_SEED`.
//!
//! Runs as a plain binary so the verdict lines are always visible.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tusi_core::analysis::{critical_point, decide_case, verify_maximum, CaseOutcome, Lemma2Class};
use tusi_core::extraction::DigitString;
use tusi_core::forms::{target_function, CanonicalEquation, Form, GeneralPoly, TargetFunction};
use tusi_core::numerics::{int, pow_base, rat, Interval, QuadExt, Rational};
use tusi_core::oracle::{isolate_positive_roots, refine, IsolatedRoot};
use tusi_core::pipeline::{solve, RootReport, Solution, SolveOptions};
use tusi_core::reduction::{reduce_q8_to_q7, solve_q7, Q8Instance, SubstitutionKind, Value};
use tusi_core::Error;

const CUBIC_FORMS: [Form; 5] = [Form::C21, Form::C22, Form::C23, Form::C24, Form::C25];

/// Random instances per form for the trichotomy run.
const PER_FORM: usize = 10_000;
const RUNTIME_BUDGET: Duration = Duration::from_secs(600);

fn seed() -> u64 {
    std::env::var("TUSI_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0)
}

fn rng_for(criterion: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed() ^ (criterion << 32))
}

fn coef(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(1..=1000), rng.gen_range(1..=1000))
}

fn random_instance(form: Form, rng: &mut impl Rng) -> CanonicalEquation {
    let (a, b, c) = (coef(rng), coef(rng), coef(rng));
    match form {
        Form::C21 => CanonicalEquation::new(form, a, Rational::zero(), c),
        Form::C22 => CanonicalEquation::new(form, Rational::zero(), b, c),
        _ => CanonicalEquation::new(form, a, b, c),
    }
}

fn tenth_power(k: i64) -> Rational {
    pow_base(10, -k)
}

/// Checks and failures of one criterion.
struct Tally {
    id: u32,
    what: &'static str,
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new(id: u32, what: &'static str) -> Self {
        Tally {
            id,
            what,
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(detail());
        }
    }

    fn report(&self) -> bool {
        let verdict = if self.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "{verdict} criterion {}: {} ({} checks, {} failures)",
            self.id,
            self.what,
            self.checks,
            self.failures.len()
        );
        for f in self.failures.iter().take(5) {
            println!("    {f}");
        }
        self.failures.is_empty()
    }
}

fn oracle_outcome(roots: &[IsolatedRoot]) -> &'static str {
    match roots
        .iter()
        .map(|r| r.multiplicity)
        .collect::<Vec<_>>()
        .as_slice()
    {
        [] => "Impossible",
        [2] => "DoubleRoot",
        [1, 1] => "TwoRoots",
        _ => "unexpected",
    }
}

fn qe_in(x: &QuadExt, iv: &Interval) -> bool {
    let lo = QuadExt::rational(iv.lo().clone(), x.d());
    let hi = QuadExt::rational(iv.hi().clone(), x.d());
    (x - &lo).sign() >= 0 && (&hi - x).sign() >= 0
}

/// Decided case against the oracle's roots, which must sit inside the brackets.
fn trichotomy_fits(
    outcome: &CaseOutcome,
    roots: &[IsolatedRoot],
    poly: &GeneralPoly,
    width: &Rational,
) -> bool {
    if outcome.name() != oracle_outcome(roots) {
        return false;
    }
    match outcome {
        CaseOutcome::Impossible => true,
        CaseOutcome::DoubleRoot(x0) => qe_in(x0, &roots[0].interval),
        CaseOutcome::TwoRoots { small, large } => {
            let s = refine(&roots[0], poly, width).interval;
            let l = refine(&roots[1], poly, width).interval;
            small.contains_interval(&s) && large.contains_interval(&l)
        }
        _ => false,
    }
}

fn closed_form_x0(tf: &TargetFunction, x0: &QuadExt) -> bool {
    match tf.form {
        Form::C21 => x0.as_rational() == Some(&(&tf.alpha * rat(2, 3))),
        Form::C22 => QuadExt::new(Rational::zero(), Rational::one(), &tf.beta / int(3))
            .is_ok_and(|v| &v == x0),
        _ => true,
    }
}

/// `v <= root < v + ulp`, exactly.
fn certified(poly: &GeneralPoly, root: &RootReport) -> bool {
    let ds: &DigitString = &root.digits;
    let v = ds.value().clone();
    let next = &v + ds.ulp();
    match &root.exact {
        Some(x) => {
            let d = x.d();
            (x - &QuadExt::rational(v, d)).sign() >= 0
                && (&QuadExt::rational(next, d) - x).sign() > 0
        }
        None => {
            let (pv, pn) = (poly.eval(&v), poly.eval(&next));
            pv.is_zero() || (pv.is_negative() != pn.is_negative() && !pn.is_zero())
        }
    }
}

fn chains_sound(sol: &Solution, tolerance: &Rational) -> Result<(), String> {
    for r in &sol.roots {
        if r.chain.len() > 4 {
            return Err(format!("chain of length {}", r.chain.len()));
        }
        r.chain
            .verify(tolerance)
            .map_err(|e| format!("{}: {e}", r.role.label()))?;
    }
    Ok(())
}

/// Criteria 1, 3, 8 and 9 share one pass over the random instances.
fn random_forms(c1: &mut Tally, c3: &mut Tally, c8: &mut Tally, c9: &mut Tally) -> Duration {
    let mut rng = rng_for(1);
    let oracle_width = tenth_power(12);
    let back_map_tol = tenth_power(9);
    let opts10 = SolveOptions {
        base: 10,
        digits: 10,
    };
    let opts60 = SolveOptions {
        base: 60,
        digits: 6,
    };
    let mut trichotomy_time = Duration::ZERO;
    for form in CUBIC_FORMS {
        let mut overlap_budget = 200;
        for _ in 0..PER_FORM {
            let eq = random_instance(form, &mut rng);
            let poly = eq.to_general();

            let start = Instant::now();
            let tf = target_function(&eq).expect("C21..C25 have a target function");
            let mr = critical_point(&tf);
            let outcome = match &mr {
                Ok(mr) => decide_case(&tf, mr),
                Err(Error::PositivityImpossible) => Ok(CaseOutcome::Impossible),
                Err(e) => Err(e.clone()),
            };
            let oracle = isolate_positive_roots(&poly);
            let fits = outcome
                .as_ref()
                .is_ok_and(|o| trichotomy_fits(o, &oracle, &poly, &oracle_width));
            trichotomy_time += start.elapsed();
            c1.check(fits, || format!("{eq}: {outcome:?} vs oracle {oracle:?}"));

            if let Ok(mr) = &mr {
                let fp = tf.poly(&mr.d).derivative().eval(&mr.x0);
                let a_prime = (&mr.x0.scale(&int(3)) - &tf.alpha).pow(2);
                let d = &tf.alpha * &tf.alpha + &tf.beta * int(3);
                c3.check(
                    fp.is_zero()
                        && a_prime == QuadExt::rational(d, &mr.d)
                        && closed_form_x0(&tf, &mr.x0),
                    || format!("{eq}: x0 = {}", mr.x0),
                );
            }

            let sol = match solve(&poly, &opts10) {
                Ok(sol) => sol,
                Err(e) => {
                    c8.check(false, || format!("{eq}: {e}"));
                    continue;
                }
            };
            c8.check(chains_sound(&sol, &back_map_tol).is_ok(), || {
                format!("{eq}: {}", chains_sound(&sol, &back_map_tol).unwrap_err())
            });
            for r in &sol.roots {
                c9.check(certified(&poly, r), || {
                    format!("{eq}: {} = {}", r.role.label(), r.digits.render())
                });
            }
            if overlap_budget > 0 && !sol.roots.is_empty() {
                overlap_budget -= 1;
                match solve(&poly, &opts60) {
                    Ok(s60) => {
                        for (r10, r60) in sol.roots.iter().zip(&s60.roots) {
                            c9.check(certified(&poly, r60), || {
                                format!("{eq}: base 60 {}", r60.digits.render())
                            });
                            c9.check(
                                r10.digits.enclosure().intersects(r60.digits.enclosure()),
                                || {
                                    format!(
                                        "{eq}: {} vs {}",
                                        r10.digits.render(),
                                        r60.digits.render()
                                    )
                                },
                            );
                        }
                    }
                    Err(e) => c9.check(false, || format!("{eq}: base 60: {e}")),
                }
            }
        }
    }
    c1.check(trichotomy_time < RUNTIME_BUDGET, || {
        format!("took {trichotomy_time:?}")
    });
    trichotomy_time
}

fn maximum_property(t: &mut Tally) {
    let mut rng = rng_for(2);
    for form in CUBIC_FORMS {
        let mut done = 0;
        while done < 200 {
            let eq = random_instance(form, &mut rng);
            let tf = target_function(&eq).unwrap();
            let Ok(mr) = critical_point(&tf) else {
                continue;
            };
            done += 1;
            match verify_maximum(&tf, &mr, 10, &mut rng) {
                Ok(check) => {
                    t.checks += check.checked.saturating_sub(1);
                    t.check(check.passed(), || format!("{eq}: {:?}", check.violations))
                }
                Err(e) => t.check(false, || format!("{eq}: {e}")),
            }
        }
    }
}

fn worked_c21(t: &mut Tally) {
    let eq = CanonicalEquation::c21(int(3), int(2));
    let poly = eq.to_general();
    let sol = solve(
        &poly,
        &SolveOptions {
            base: 10,
            digits: 12,
        },
    )
    .unwrap();
    t.check(sol.lemma2 == Some(Lemma2Class::Equal), || {
        format!("lemma2 {:?}", sol.lemma2)
    });
    t.check(sol.roots.len() == 2, || {
        format!("{} roots", sol.roots.len())
    });
    let (x1, x2) = (&sol.roots[0], &sol.roots[1]);
    t.check(
        x1.exact.as_ref().and_then(QuadExt::as_rational) == Some(&int(1)),
        || format!("x1 = {:?}", x1.exact),
    );
    t.check(x1.digits.render() == "1.000000000000", || {
        x1.digits.render()
    });
    t.check(x2.digits.render() == "2.732050807568", || {
        x2.digits.render()
    });
    t.check(x2.digits.enclosure().width() <= tenth_power(12), || {
        "x2 enclosure too wide".into()
    });

    let oracle = isolate_positive_roots(&poly);
    let ulp = tenth_power(12);
    let fine = refine(&oracle[1], &poly, &tenth_power(14)).interval;
    let floor = |r: &Rational| (r / &ulp).floor() * &ulp;
    t.check(
        floor(fine.lo()) == *x2.digits.value() && floor(fine.hi()) == *x2.digits.value(),
        || format!("oracle {fine:?}"),
    );
    let one_plus_sqrt3 = QuadExt::new(int(1), int(1), int(3)).unwrap();
    t.check(qe_in(&one_plus_sqrt3, x2.digits.enclosure()), || {
        "1+sqrt3 outside x2".into()
    });

    let s60 = solve(
        &poly,
        &SolveOptions {
            base: 60,
            digits: 7,
        },
    )
    .unwrap();
    t.check(
        s60.roots[1].digits.render().starts_with("2;43,55,22"),
        || s60.roots[1].digits.render(),
    );
    t.check(
        s60.roots[1]
            .digits
            .enclosure()
            .intersects(x2.digits.enclosure())
            && s60.roots[0].digits.render() == "1;0,0,0,0,0,0,0",
        || s60.roots[0].digits.render(),
    );
}

fn worked_c24(t: &mut Tally) {
    let eq = CanonicalEquation::new(Form::C24, int(7), int(8), int(4));
    let poly = eq.to_general();
    let sol = solve(
        &poly,
        &SolveOptions {
            base: 10,
            digits: 12,
        },
    )
    .unwrap();
    let mr = sol.maximum.as_ref().unwrap();
    t.check(mr.x0.as_rational() == Some(&int(4)), || {
        format!("x0 = {}", mr.x0)
    });
    t.check(mr.c0.as_rational() == Some(&int(16)), || {
        format!("c0 = {}", mr.c0)
    });
    t.check(sol.roots.len() == 2, || {
        format!("{} roots", sol.roots.len())
    });
    let (x1, x2) = (&sol.roots[0], &sol.roots[1]);
    let first = &x1.chain.steps[0];
    t.check(
        first.kind == SubstitutionKind::ShiftMinus
            && first.pivot.exact().and_then(QuadExt::as_rational) == Some(&int(4)),
        || format!("first step {}", first.describe()),
    );
    t.check(x1.digits.render() == "2.000000000000", || {
        x1.digits.render()
    });
    let big = QuadExt::new(rat(5, 2), rat(1, 2), int(33)).unwrap();
    t.check(qe_in(&big, x2.digits.enclosure()), || x2.digits.render());
    t.check(x2.digits.enclosure().width() <= tenth_power(12), || {
        "x2 enclosure too wide".into()
    });

    let oracle = isolate_positive_roots(&poly);
    let r1 = refine(&oracle[0], &poly, &tenth_power(12)).interval;
    t.check(r1 == Interval::point(int(2)), || {
        format!("oracle x1 {r1:?}")
    });
    let r2 = refine(&oracle[1], &poly, &tenth_power(12)).interval;
    t.check(r2.intersects(x2.digits.enclosure()), || {
        format!("oracle x2 {r2:?}")
    });
}

fn c24_impossible(t: &mut Tally) {
    let mut rng = rng_for(6);
    let outcome = |a: Rational, b: Rational, c: Rational| {
        let eq = CanonicalEquation::new(Form::C24, a, b, c);
        solve(&eq.to_general(), &SolveOptions::default()).map(|s| s.outcome.name())
    };
    for _ in 0..1000 {
        let a = coef(&mut rng);
        let b = &a * &a / int(4) + coef(&mut rng);
        let c = coef(&mut rng);
        let got = outcome(a.clone(), b.clone(), c.clone());
        t.check(got == Ok("Impossible"), || {
            format!("a={a} b={b} c={c}: {got:?}")
        });
    }
    for _ in 0..100 {
        let a = coef(&mut rng);
        let b = &a * &a / int(4);
        let c = coef(&mut rng);
        let got = outcome(a.clone(), b.clone(), c.clone());
        t.check(got == Ok("Impossible"), || {
            format!("boundary a={a} c={c}: {got:?}")
        });
    }
}

fn root_relation(t: &mut Tally) {
    let mut rng = rng_for(7);
    let tol = tenth_power(9);
    let opts = SolveOptions {
        base: 10,
        digits: 15,
    };
    let mut done = 0;
    while done < 1000 {
        let eq = random_instance(Form::C21, &mut rng);
        let tf = target_function(&eq).unwrap();
        let mr = critical_point(&tf).unwrap();
        if !matches!(decide_case(&tf, &mr), Ok(CaseOutcome::TwoRoots { .. })) {
            continue;
        }
        done += 1;
        let sol = solve(&eq.to_general(), &opts).unwrap();
        let x1 = sol.roots[0].digits.enclosure().clone();
        let x2 = sol.roots[1].digits.enclosure().clone();
        let a = Interval::point(eq.a.clone());
        let e = x2.mul(&x2).sub(&a.sub(&x1).mul(&x2.add(&x1)));
        let worst = e.lo().abs().max(e.hi().abs());
        t.check(worst <= tol && e.contains_zero(), || {
            format!("{eq}: residual up to {worst}")
        });
    }
    // x1 < x2 rational; the third root is -x1·x2/(x1 + x2)
    for _ in 0..200 {
        let (p, q) = (coef(&mut rng), coef(&mut rng));
        if p == q {
            continue;
        }
        let (x1, x2) = if p < q { (p, q) } else { (q, p) };
        let s = &x1 + &x2;
        let a = &s - &x1 * &x2 / &s;
        let c = (&x1 * &x2) * (&x1 * &x2) / &s;
        let eq = CanonicalEquation::c21(a.clone(), c);
        let exact_identity = &x2 * &x2 == (&a - &x1) * (&x2 + &x1);
        let sol = solve(
            &eq.to_general(),
            &SolveOptions {
                base: 10,
                digits: 12,
            },
        )
        .unwrap();
        let found = sol.roots.len() == 2
            && sol.roots[0].digits.enclosure().contains(&x1)
            && sol.roots[1].digits.enclosure().contains(&x2);
        t.check(exact_identity && found, || format!("{eq}: x1={x1} x2={x2}"));
    }
}

fn q8_offset(t: &mut Tally) {
    let mut rng = rng_for(10);
    let opts = SolveOptions::default();
    let one = Rational::one();
    for _ in 0..1000 {
        let (b, c) = (coef(&mut rng), coef(&mut rng));
        let q8 = solve(
            &CanonicalEquation::new(Form::Q8, Rational::zero(), b.clone(), c.clone()).to_general(),
            &opts,
        );
        let q7 = solve(
            &CanonicalEquation::new(Form::Q7, Rational::zero(), b.clone(), c.clone()).to_general(),
            &opts,
        );
        let (y, x) = match (q8, q7) {
            (Ok(s8), Ok(s7)) => (s8.roots[0].exact.clone(), s7.roots[0].exact.clone()),
            other => {
                t.check(false, || format!("b={b} c={c}: {other:?}"));
                continue;
            }
        };
        let (Some(y), Some(x)) = (y, x) else {
            t.check(false, || format!("b={b} c={c}: inexact root"));
            continue;
        };
        // the explicit offset step agrees with the solved forms
        let inst = Q8Instance {
            b: QuadExt::rational(b.clone(), &one),
            c: QuadExt::rational(c.clone(), &one),
        };
        let (q7, _) = reduce_q8_to_q7(&inst);
        let via_step = solve_q7(&q7, 10, 12).ok().and_then(|v| match v {
            Value::Exact(x) => Some(x),
            Value::Enclosed(_) => None,
        });
        let residual = &(&y * &y) - &(&(&y * &b) + &c);
        t.check(
            (&y - &x).as_rational() == Some(&b)
                && via_step.as_ref() == Some(&x)
                && residual.is_zero(),
            || format!("b={b} c={c}: y={y} x={x}"),
        );
    }
}

fn main() -> ExitCode {
    let started = Instant::now();
    println!("acceptance run, TUSI_SEED={}", seed());
    let mut c1 = Tally::new(1, "trichotomy matches the Sturm oracle on C21..C25");
    let mut c2 = Tally::new(2, "f(u) < c0 at sampled points on both sides of x0");
    let mut c3 = Tally::new(
        3,
        "f'(x0) = 0, (3x0 - alpha)^2 = alpha^2 + 3 beta, closed forms of x0",
    );
    let mut c4 = Tally::new(4, "worked C21 a=3 c=2");
    let mut c5 = Tally::new(5, "worked C24 a=7 b=8 c=4");
    let mut c6 = Tally::new(6, "C24 with b >= a^2/4 is impossible");
    let mut c7 = Tally::new(7, "x2^2 = (a - x1)(x2 + x1) on C21 two-root instances");
    let mut c8 = Tally::new(
        8,
        "back-maps satisfy the source equation within 1e-9, chains <= 4",
    );
    let mut c9 = Tally::new(
        9,
        "digit strings certified, base 10 and base 60 enclosures overlap",
    );
    let mut c10 = Tally::new(10, "root(Q8) - root(Q7) = b exactly");

    let trichotomy = random_forms(&mut c1, &mut c3, &mut c8, &mut c9);
    maximum_property(&mut c2);
    worked_c21(&mut c4);
    worked_c24(&mut c5);
    c24_impossible(&mut c6);
    root_relation(&mut c7);
    q8_offset(&mut c10);

    let all = [&c1, &c2, &c3, &c4, &c5, &c6, &c7, &c8, &c9, &c10];
    // report every criterion before deciding
    let verdicts: Vec<bool> = all.iter().map(|t| t.report()).collect();
    let passed = verdicts.iter().all(|&ok| ok);
    println!(
        "trichotomy run {:.1}s, total {:.1}s",
        trichotomy.as_secs_f64(),
        started.elapsed().as_secs_f64()
    );
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
