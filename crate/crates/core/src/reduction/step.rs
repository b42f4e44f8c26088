use alloc::vec::Vec;
use core::fmt;

use num_traits::Signed;

use super::instances::{C15Instance, C21Instance, Q7Enclosed, Q7Instance, Q8Instance};
use crate::forms::TargetFunction;
use crate::numerics::{qe_to_interval, Interval, QPoly, QuadExt, Rational};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubstitutionKind {
    /// `x = pivot + X`
    ShiftPlus,
    /// `x = pivot − X`
    ShiftMinus,
    /// `x = X + pivot`
    Offset,
    /// `x = pivot − y` with `pivot = 2a/3`
    Lemma2,
}

impl SubstitutionKind {
    pub fn name(&self) -> &'static str {
        match self {
            SubstitutionKind::ShiftPlus => "shift_plus",
            SubstitutionKind::ShiftMinus => "shift_minus",
            SubstitutionKind::Offset => "offset",
            SubstitutionKind::Lemma2 => "lemma2",
        }
    }
}

/// A number known exactly or only through a rational enclosure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Exact(QuadExt),
    Enclosed(Interval),
}

impl Value {
    pub fn enclosure(&self, width: &Rational) -> Interval {
        match self {
            Value::Exact(x) => qe_to_interval(x, width).expect("positive width"),
            Value::Enclosed(iv) => iv.clone(),
        }
    }

    pub fn exact(&self) -> Option<&QuadExt> {
        match self {
            Value::Exact(x) => Some(x),
            Value::Enclosed(_) => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(x) => write!(f, "{x}"),
            Value::Enclosed(iv) => write!(f, "{iv}"),
        }
    }
}

/// Equation on either side of a substitution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equation {
    /// `f(x) = c`, with the radicand of the instance's field.
    Target {
        tf: TargetFunction,
        d: Rational,
    },
    C15(C15Instance),
    C21(C21Instance),
    Q7(Q7Instance),
    Q7Enclosed(Q7Enclosed),
    Q8(Q8Instance),
}

impl Equation {
    pub fn target(tf: &TargetFunction, d: &Rational) -> Self {
        Equation::Target {
            tf: tf.clone(),
            d: d.clone(),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Equation::Target { tf, .. } => tf.form.tag(),
            Equation::C15(_) => "C15",
            Equation::C21(_) => "C21",
            Equation::Q7(_) | Equation::Q7Enclosed(_) => "Q7",
            Equation::Q8(_) => "Q8",
        }
    }

    /// `P` with the equation equivalent to `P = 0`, when the coefficients are
    /// exact.
    pub fn poly(&self) -> Option<QPoly> {
        Some(match self {
            Equation::Target { tf, d } => tf
                .poly(d)
                .minus_constant(&QuadExt::rational(tf.c.clone(), d)),
            Equation::C15(e) => e.poly(),
            Equation::C21(e) => e.poly(),
            Equation::Q7(e) => e.poly(),
            Equation::Q8(e) => e.poly(),
            Equation::Q7Enclosed(_) => return None,
        })
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Equation::Target { tf, .. } => {
                let eq = crate::forms::CanonicalEquation::new(
                    tf.form,
                    tf.alpha.abs(),
                    tf.beta.abs(),
                    tf.c.clone(),
                );
                write!(f, "{eq}")
            }
            Equation::C15(e) => write!(f, "{e}"),
            Equation::C21(e) => write!(f, "{e}"),
            Equation::Q7(e) => write!(f, "{e}"),
            Equation::Q7Enclosed(e) => write!(f, "{e}"),
            Equation::Q8(e) => write!(f, "{e}"),
        }
    }
}

/// One affine substitution with the roots computed on both sides of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub kind: SubstitutionKind,
    pub pivot: Value,
    pub source: Equation,
    pub target: Equation,
    /// Root of `target` found by the solver, once solved.
    pub target_root: Option<Value>,
    /// `back_map(target_root)`.
    pub source_root: Option<Value>,
    /// Width to which exact values were enclosed when mapping back.
    pub width: Option<Rational>,
}

impl ReductionStep {
    pub fn new(kind: SubstitutionKind, pivot: Value, source: Equation, target: Equation) -> Self {
        ReductionStep {
            kind,
            pivot,
            source,
            target,
            target_root: None,
            source_root: None,
            width: None,
        }
    }

    /// Source-variable value for a target-variable value. Exact inputs stay
    /// exact when the pivot is; otherwise enclosures are combined outward,
    /// exact parts being enclosed to `width`.
    pub fn back_map(&self, root: &Value, width: &Rational) -> Value {
        let plus = matches!(
            self.kind,
            SubstitutionKind::ShiftPlus | SubstitutionKind::Offset
        );
        if let (Value::Exact(p), Value::Exact(r)) = (&self.pivot, root) {
            if let Ok(v) = if plus {
                p.checked_add(r)
            } else {
                p.checked_sub(r)
            } {
                return Value::Exact(v);
            }
        }
        let p = self.pivot.enclosure(width);
        let r = root.enclosure(width);
        Value::Enclosed(if plus { p.add(&r) } else { p.sub(&r) })
    }

    /// Records the target root and its image.
    pub fn solved(mut self, target_root: Value, width: &Rational) -> Self {
        let source = self.back_map(&target_root, width);
        self.target_root = Some(target_root);
        self.source_root = Some(source);
        self.width = Some(width.clone());
        self
    }

    pub fn describe(&self) -> alloc::string::String {
        match self.kind {
            SubstitutionKind::ShiftPlus => alloc::format!("x = {} + X", self.pivot),
            SubstitutionKind::ShiftMinus => alloc::format!("x = {} - X", self.pivot),
            SubstitutionKind::Offset => alloc::format!("x = X + {}", self.pivot),
            SubstitutionKind::Lemma2 => alloc::format!("x = {} - y", self.pivot),
        }
    }
}

/// Checks that the recorded source root really solves the source equation:
/// exactly for exact roots, and by a sign change across an enclosure no
/// wider than `tolerance` otherwise.
pub fn verify_back_map(step: &ReductionStep, tolerance: &Rational) -> Result<()> {
    let (Some(target_root), Some(source_root), Some(width)) =
        (&step.target_root, &step.source_root, &step.width)
    else {
        return Err(Error::Usage("step has not been solved"));
    };
    if &step.back_map(target_root, width) != source_root {
        return Err(Error::Certification(
            "recorded source root is not the back-mapped target root",
        ));
    }
    let poly = step
        .source
        .poly()
        .ok_or(Error::Usage("source equation has enclosed coefficients"))?;
    match source_root {
        Value::Exact(x) => {
            let poly = QPoly::new(poly.coeffs().to_vec(), x.d())
                .map_err(|_| Error::Certification("root outside the field"))?;
            if poly.eval(x).is_zero() {
                Ok(())
            } else {
                Err(Error::Certification(
                    "exact back-mapped root does not solve the source",
                ))
            }
        }
        Value::Enclosed(iv) => {
            if &iv.width() > tolerance {
                return Err(Error::Certification(
                    "back-mapped enclosure wider than tolerance",
                ));
            }
            let s_lo = poly.eval_rational(iv.lo()).sign();
            let s_hi = poly.eval_rational(iv.hi()).sign();
            if s_lo * s_hi <= 0 {
                Ok(())
            } else {
                Err(Error::Certification(
                    "no sign change across the back-mapped enclosure",
                ))
            }
        }
    }
}

/// Ordered substitutions from the input equation to a solved form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionChain {
    pub steps: Vec<ReductionStep>,
}

impl ReductionChain {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Tag of the last target, if any.
    pub fn terminal(&self) -> Option<&'static str> {
        self.steps.last().map(|s| s.target.tag())
    }

    pub fn push(&mut self, step: ReductionStep) {
        self.steps.push(step);
    }

    pub fn verify(&self, tolerance: &Rational) -> Result<()> {
        self.steps
            .iter()
            .try_for_each(|s| verify_back_map(s, tolerance))
    }
}
