//! Affine changes of variable linking an equation `f(x) = c` to auxiliary
//! forms whose roots are easier to reach.
//!
//! * `x = x0 + X` sends the large root to the single positive root of
//!   `X³ + a'X² = c'` (form `C15`);
//! * `x = x0 − X` sends the small root to the small root of
//!   `a'X² − X³ = c'` (form `C21`);
//! * for `C21` itself the small root comes from the large one through
//!   `X² + (a − x2)X = x2(a − x2)`, `x1 = (a − x2) + X` (form `Q7`);
//! * `y = x + b` turns `y² − by = c` into `x² + bx = c`;
//! * `y = 2a/3 − x` moves a small root above `a/3` below it.
//!
//! In both shifts `a' = 3x0 − alpha = sqrt(d)` and `c' = c0 − c`; the linear
//! term vanishes because `f'(x0) = 0`.

mod instances;
mod step;

pub use instances::{C15Instance, C21Instance, Q7Enclosed, Q7Instance, Q8Instance};
pub use step::{verify_back_map, Equation, ReductionChain, ReductionStep, SubstitutionKind, Value};

use num_traits::{One, Zero};

use crate::analysis::{Lemma2Class, MaximumReport};
use crate::extraction::extract_monotone;
use crate::forms::{Form, TargetFunction};
use crate::numerics::{int, qe_to_interval, rat, Interval, QuadExt, Rational};
use crate::{Error, Result};

fn check_below_max(tf: &TargetFunction, mr: &MaximumReport) -> Result<QuadExt> {
    let margin = &mr.c0 - &tf.c;
    if margin.sign() <= 0 {
        return Err(Error::Usage("the shift needs c < c0"));
    }
    Ok(margin)
}

/// `f(x0 + X)` with its linear term checked to vanish.
fn recentred(tf: &TargetFunction, mr: &MaximumReport) -> Result<[QuadExt; 4]> {
    let shifted = crate::extraction::taylor_shift(&tf.poly(&mr.d), &mr.x0);
    if !shifted.coeff(1).is_zero() {
        return Err(Error::Inconsistent("linear term survives the shift to x0"));
    }
    Ok(core::array::from_fn(|i| shifted.coeff(i)))
}

/// `x = x0 + X`: the large root as the root of `X³ + a'X² = c'`.
pub fn shift_for_large_root(
    tf: &TargetFunction,
    mr: &MaximumReport,
) -> Result<(C15Instance, ReductionStep)> {
    let margin = check_below_max(tf, mr)?;
    // f(x0 + X) = c0 + (alpha − 3x0)X² − X³
    let [k0, _, k2, _] = recentred(tf, mr)?;
    debug_assert_eq!(k0, mr.c0);
    let target = C15Instance { a: -k2, c: margin };
    let step = ReductionStep::new(
        SubstitutionKind::ShiftPlus,
        Value::Exact(mr.x0.clone()),
        Equation::target(tf, &mr.d),
        Equation::C15(target.clone()),
    );
    Ok((target, step))
}

/// `x = x0 − X`: the small root as `x0 − X1` with `X1` the small root of
/// `a'X² − X³ = c'`. Not used for `C21`, which would map to itself.
pub fn shift_for_small_root(
    tf: &TargetFunction,
    mr: &MaximumReport,
) -> Result<(C21Instance, ReductionStep)> {
    if !matches!(tf.form, Form::C22 | Form::C23 | Form::C24 | Form::C25) {
        return Err(Error::WrongForm(tf.form));
    }
    let margin = check_below_max(tf, mr)?;
    // f(x0 − X) = c0 + (alpha − 3x0)X² + X³
    let [_, _, k2, _] = recentred(tf, mr)?;
    let target = C21Instance { a: -k2, c: margin };
    let step = ReductionStep::new(
        SubstitutionKind::ShiftMinus,
        Value::Exact(mr.x0.clone()),
        Equation::target(tf, &mr.d),
        Equation::C21(target.clone()),
    );
    Ok((target, step))
}

/// The large root of a `C21` instance via its own `x = 2a/3 + X` shift.
pub fn c21_large_root_shift(eq: &C21Instance) -> Result<(C15Instance, ReductionStep)> {
    let margin = &eq.c0() - &eq.c;
    if margin.sign() <= 0 {
        return Err(Error::Usage("the shift needs c < c0"));
    }
    // a·(x0+X)² − (x0+X)³ = c0 − a·X² − X³ at x0 = 2a/3
    let target = C15Instance {
        a: eq.a.clone(),
        c: margin,
    };
    let step = ReductionStep::new(
        SubstitutionKind::ShiftPlus,
        Value::Exact(eq.x0()),
        Equation::C21(eq.clone()),
        Equation::C15(target.clone()),
    );
    Ok((target, step))
}

/// The quadratic `X² + (a − x2)X = x2(a − x2)` whose positive root gives the
/// small root `x1 = (a − x2) + X` of `aX² − X³ = c`.
pub fn small_root_via_quadratic(eq: &C21Instance, x2: &Value) -> Result<(Equation, ReductionStep)> {
    let (target, pivot) = match x2 {
        Value::Exact(x2) => {
            let gap = &eq.a - x2;
            if gap.sign() <= 0 {
                return Err(Error::Inconsistent("large root must lie below a"));
            }
            let c = x2 * &gap;
            (
                Equation::Q7(Q7Instance { b: gap.clone(), c }),
                Value::Exact(gap),
            )
        }
        Value::Enclosed(x2) => {
            let w = if x2.is_point() {
                rat(1, 1 << 40)
            } else {
                x2.width() / int(4)
            };
            let a = qe_to_interval(&eq.a, &w)?;
            let gap = a.sub(x2);
            if gap.lo() <= &Rational::zero() {
                return Err(Error::Inconsistent("large root must lie below a"));
            }
            let c = x2.mul(&gap);
            (
                Equation::Q7Enclosed(Q7Enclosed { b: gap.clone(), c }),
                Value::Enclosed(gap),
            )
        }
    };
    let step = ReductionStep::new(
        SubstitutionKind::Offset,
        pivot,
        Equation::C21(eq.clone()),
        target.clone(),
    );
    Ok((target, step))
}

/// `y = x + b`: `y² − by = c` becomes `x² + bx = c`.
pub fn reduce_q8_to_q7(eq: &Q8Instance) -> (Q7Instance, ReductionStep) {
    let target = Q7Instance {
        b: eq.b.clone(),
        c: eq.c.clone(),
    };
    let step = ReductionStep::new(
        SubstitutionKind::Offset,
        Value::Exact(eq.b.clone()),
        Equation::Q8(eq.clone()),
        Equation::Q7(target.clone()),
    );
    (target, step)
}

/// `y = 2a/3 − x` for a `C21` instance whose small root lies above `a/3`:
/// `y` is the small root of `a·y² − y³ = c0 − c` and lies below `a/3`.
pub fn lemma2_transform(eq: &C21Instance) -> Result<(C21Instance, ReductionStep)> {
    if Lemma2Class::of(eq) != Lemma2Class::Above {
        return Err(Error::Usage("the reflection y = 2a/3 - x needs c > c0/2"));
    }
    let target = C21Instance {
        a: eq.a.clone(),
        c: &eq.c0() - &eq.c,
    };
    let step = ReductionStep::new(
        SubstitutionKind::Lemma2,
        Value::Exact(eq.x0()),
        Equation::C21(eq.clone()),
        Equation::C21(target.clone()),
    );
    Ok((target, step))
}

/// Positive root of `X² + bX = c`: exact in a quadratic field when the
/// discriminant allows it, otherwise a digit enclosure.
pub fn solve_q7(eq: &Q7Instance, base: u32, n_digits: usize) -> Result<Value> {
    if eq.c.sign() <= 0 || eq.b.sign() < 0 {
        return Err(Error::Usage("X² + bX = c needs b >= 0 and c > 0"));
    }
    let two = int(2);
    let disc = &(&eq.b * &eq.b) + &eq.c.scale(&int(4));
    if let (Some(b), Some(d)) = (eq.b.as_rational(), disc.as_rational()) {
        let root = QuadExt::new(-b / &two, rat(1, 2), d.clone())?;
        return Ok(Value::Exact(root));
    }
    if let Some(s) = disc.sqrt_exact() {
        return Ok(Value::Exact((&s - &eq.b).scale(&rat(1, 2))));
    }
    // root <= sqrt(c) when b >= 0; 1 + c bounds sqrt(c)
    let bound = qe_to_interval(&eq.c, &Rational::one())?.hi() + Rational::one();
    let poly = Q7Instance {
        b: eq.b.clone(),
        c: QuadExt::zero(eq.c.d()),
    }
    .poly();
    let digits = extract_monotone(
        &poly,
        &eq.c,
        &Interval::new(Rational::zero(), bound),
        base,
        n_digits,
    )?;
    Ok(Value::Enclosed(digits.enclosure().clone()))
}

/// Enclosure of the positive root of `X² + bX = c` from enclosures of `b`
/// and `c`, using that the root decreases in `b` and increases in `c`.
pub fn solve_q7_enclosed(eq: &Q7Enclosed, sqrt_width: &Rational) -> Result<Interval> {
    let root = |b: &Rational, c: &Rational, upper: bool| -> Result<Rational> {
        let disc = b * b + c * int(4);
        let s = crate::numerics::sqrt_enclosure(&disc.max(Rational::zero()), sqrt_width)?;
        let s = if upper {
            s.hi().clone()
        } else {
            s.lo().clone()
        };
        Ok(((s - b) / int(2)).max(Rational::zero()))
    };
    let lo = root(eq.b.hi(), eq.c.lo(), false)?;
    let hi = root(eq.b.lo(), eq.c.hi(), true)?;
    Ok(Interval::new(lo.clone().min(hi.clone()), hi.max(lo)))
}
