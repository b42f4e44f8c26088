//! Positivity domain, exact maximum and the three-way case decision for the
//! forms `f(x) = c`.
//!
//! For `f(x) = -x³ + alpha·x² + beta·x` the critical point is
//! `x0 = (alpha + sqrt d)/3` with `d = alpha² + 3·beta`, the positive root of
//! `f'(x)/3 = 0`. It and the maximum `c0 = f(x0)` live in `Q(sqrt d)`;
//! comparing `c` with `c0` decides between no root, a double root and two
//! roots `0 < x1 < x0 < x2`.

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::forms::{Form, GeneralPoly, TargetFunction};
use crate::numerics::{int, qe_to_interval, rat, Interval, QPoly, QuadExt, Rational};
use crate::reduction::C21Instance;
use crate::{Error, Result};

/// Exact location of the maximum of `f` and the positivity domain
/// `D = (domain_lo, domain_hi)` where `f > 0`.
///
/// `domain_lo` is zero except for `C24`. The domain ends may use a radicand
/// different from `d`; they are only ever compared through enclosures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximumReport {
    pub d: Rational,
    pub x0: QuadExt,
    pub c0: QuadExt,
    pub domain_lo: QuadExt,
    pub domain_hi: QuadExt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseOutcome {
    Impossible,
    DoubleRoot(QuadExt),
    /// Rational brackets, each holding exactly one root:
    /// `small ⊂ (0, x0)` and `large ⊂ (x0, domain_hi)`.
    TwoRoots {
        small: Interval,
        large: Interval,
    },
    UniqueRoot(Interval),
    /// Several distinct roots, only for `OtherCubic` with the sign pattern
    /// `x³ + bx = ax² + c`; one bracket per root, increasing.
    Several(Vec<Interval>),
}

impl CaseOutcome {
    pub fn name(&self) -> &'static str {
        match self {
            CaseOutcome::Impossible => "Impossible",
            CaseOutcome::DoubleRoot(_) => "DoubleRoot",
            CaseOutcome::TwoRoots { .. } => "TwoRoots",
            CaseOutcome::UniqueRoot(_) => "UniqueRoot",
            CaseOutcome::Several(_) => "Several",
        }
    }
}

/// Position of the small root of `aX² − X³ = c` relative to `a/3`, decided by
/// comparing `c` with half the maximum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma2Class {
    /// `c = c0/2`, so `x1 = a/3`.
    Equal,
    /// `c > c0/2`, so `x1 > a/3`.
    Above,
    /// `c < c0/2`, so `x1 < a/3`.
    Below,
}

impl Lemma2Class {
    pub fn name(&self) -> &'static str {
        match self {
            Lemma2Class::Equal => "Equal",
            Lemma2Class::Above => "Above",
            Lemma2Class::Below => "Below",
        }
    }

    pub fn of(eq: &C21Instance) -> Self {
        let half_max = eq.c0().scale(&rat(1, 2));
        match (&eq.c - &half_max).sign() {
            0 => Lemma2Class::Equal,
            1 => Lemma2Class::Above,
            _ => Lemma2Class::Below,
        }
    }
}

fn half_root(shift: Rational, radicand: Rational) -> Result<QuadExt> {
    // (shift + sqrt(radicand)) / 2
    QuadExt::new(shift / int(2), rat(1, 2), radicand)
}

/// Critical point, maximum and positivity domain of `f`.
///
/// Fails with [`Error::PositivityImpossible`] for `C24` when `a² <= 4b`: then
/// `x² − ax + b >= 0` and `f <= 0` on all of `x > 0`.
pub fn critical_point(tf: &TargetFunction) -> Result<MaximumReport> {
    if !tf.form.has_target_function() {
        return Err(Error::WrongForm(tf.form));
    }
    let (alpha, beta) = (&tf.alpha, &tf.beta);
    let disc24 = alpha * alpha + beta * int(4); // a² − 4b for C24
    if tf.form == Form::C24 && disc24 <= Rational::zero() {
        return Err(Error::PositivityImpossible);
    }
    let d = alpha * alpha + beta * int(3);
    let x0 = QuadExt::new(alpha / int(3), rat(1, 3), d.clone())?;
    let c0 = tf.eval_qe(&x0);

    let zero = || QuadExt::rational(Rational::zero(), &d);
    let (a, b) = (alpha.clone(), beta.clone());
    let (domain_lo, domain_hi) = match tf.form {
        Form::C21 => (zero(), QuadExt::rational(a, &d)),
        Form::C22 => (zero(), QuadExt::sqrt_of(&b)?),
        Form::C23 => (zero(), half_root(a.clone(), &a * &a + &b * int(4))?),
        Form::C24 => {
            let lo = QuadExt::new(&a / int(2), rat(-1, 2), disc24.clone())?;
            (lo, half_root(a, disc24)?)
        }
        Form::C25 => (zero(), half_root(a.clone(), &a * &a + &b * int(4))?),
        _ => unreachable!(),
    };
    Ok(MaximumReport {
        d,
        x0,
        c0,
        domain_lo,
        domain_hi,
    })
}

/// Rational enclosure of `x` refined until `accept` holds for it.
pub(crate) fn enclose_until(
    x: &QuadExt,
    mut accept: impl FnMut(&Interval) -> bool,
) -> Result<Interval> {
    let mut width = Rational::one();
    loop {
        let iv = qe_to_interval(x, &width)?;
        if accept(&iv) {
            return Ok(iv);
        }
        if iv.is_point() {
            return Err(Error::Inconsistent(
                "refinement cannot satisfy the bracket condition",
            ));
        }
        width /= int(16);
    }
}

/// The three-way decision `c` vs `c0`, with isolating brackets in the
/// two-root case.
pub fn decide_case(tf: &TargetFunction, mr: &MaximumReport) -> Result<CaseOutcome> {
    let margin = &mr.c0 - &tf.c;
    match margin.sign() {
        -1 => Ok(CaseOutcome::Impossible),
        0 => Ok(CaseOutcome::DoubleRoot(mr.x0.clone())),
        _ => {
            let (small, large) = two_root_brackets(tf, mr)?;
            Ok(CaseOutcome::TwoRoots { small, large })
        }
    }
}

fn two_root_brackets(tf: &TargetFunction, mr: &MaximumReport) -> Result<(Interval, Interval)> {
    let c = &tf.c;
    // f > c at both ends of the x0 enclosure
    let x0 = enclose_until(&mr.x0, |iv| {
        iv.lo() > &Rational::zero() && &tf.eval(iv.lo()) > c && &tf.eval(iv.hi()) > c
    })?;
    // rational point strictly inside D on the right with f < c
    let right = enclose_until(&mr.domain_hi, |iv| {
        iv.lo() > x0.hi() && &tf.eval(iv.lo()) < c
    })?;
    let mut right = right.lo().clone();
    if mr.domain_hi.as_rational() == Some(&right) {
        let mut eps = &right - x0.hi();
        loop {
            eps /= int(2);
            let inner = &right - &eps;
            if &tf.eval(&inner) < c {
                right = inner;
                break;
            }
        }
    }
    // f(0) = 0 < c: halve towards 0 until below c
    let mut left = x0.lo() / int(2);
    while &tf.eval(&left) >= c {
        left /= int(2);
    }
    Ok((
        Interval::new(left, x0.lo().clone()),
        Interval::new(x0.hi().clone(), right),
    ))
}

/// half-maximum class of a `C21` instance that has a root.
pub fn lemma2_classify(tf: &TargetFunction, outcome: &CaseOutcome) -> Result<Lemma2Class> {
    let eq = C21Instance::from_target(tf).ok_or(Error::WrongForm(tf.form))?;
    if !matches!(
        outcome,
        CaseOutcome::DoubleRoot(_) | CaseOutcome::TwoRoots { .. }
    ) {
        return Err(Error::Usage(
            "half-maximum class needs a double root or two roots",
        ));
    }
    Ok(Lemma2Class::of(&eq))
}

/// A positive root located on one monotone segment of a cubic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentRoot {
    /// Rational bracket with a sign change, or a point for exact roots.
    pub bracket: Interval,
    /// Set for roots at a critical point, which are then rational.
    pub exact: Option<QuadExt>,
    pub multiplicity: u32,
}

/// Positive roots of a cubic with nonzero constant term, located exactly
/// by splitting `(0, B]` at the critical points of `P` (which live in
/// `Q(sqrt(p² − 3q))` for monic `P = x³ + px² + qx + r`) and reading signs
/// at the segment ends. `B` is the Cauchy bound.
pub fn locate_cubic_roots(poly: &GeneralPoly) -> Result<Vec<SegmentRoot>> {
    if poly.degree() != Some(3) {
        return Err(Error::Usage("segment analysis needs a cubic"));
    }
    let m = poly.monic()?;
    if m.c0.is_zero() {
        return Err(Error::RootAtOrigin(alloc::boxed::Box::new(poly.clone())));
    }
    let (p, q) = (&m.c2, &m.c1);
    let disc = p * p - q * int(3);
    let qp = QPoly::from_rationals(&m.coeffs(), &disc.clone().max(Rational::one()));
    let d = qp.d().clone();
    let bound = Rational::one()
        + [&m.c2, &m.c1, &m.c0]
            .iter()
            .map(|c| c.abs())
            .max()
            .expect("three coefficients");

    // breakpoints 0 < t1 < t2 < B, as exact values
    let mut cuts = Vec::new();
    if disc.is_positive() {
        for s in [-1, 1] {
            let t = QuadExt::new(-p / int(3), rat(s, 3), disc.clone())?;
            if t.sign() > 0 {
                cuts.push(t);
            }
        }
    } else if disc.is_zero() {
        // inflection with horizontal tangent: a triple root or nothing
        let t = -p / int(3);
        if t.is_positive() && m.eval(&t).is_zero() {
            return Ok(alloc::vec![SegmentRoot {
                bracket: Interval::point(t.clone()),
                exact: Some(QuadExt::rational(t, &d)),
                multiplicity: 3,
            }]);
        }
    }
    let mut ends = alloc::vec![QuadExt::zero(&d)];
    ends.extend(cuts.iter().cloned());
    ends.push(QuadExt::rational(bound, &d));
    let signs: Vec<i8> = ends.iter().map(|t| qp.eval(t).sign()).collect();

    let mut roots = Vec::new();
    for i in 0..ends.len() - 1 {
        if signs[i] == 0 {
            // a vanishing critical point is a double root, hence rational
            let t = ends[i]
                .as_rational()
                .ok_or(Error::Inconsistent("irrational double root"))?;
            roots.push(SegmentRoot {
                bracket: Interval::point(t.clone()),
                exact: Some(ends[i].clone()),
                multiplicity: 2,
            });
        }
        if signs[i] * signs[i + 1] < 0 {
            roots.push(SegmentRoot {
                bracket: inner_bracket(&qp, &ends[i], signs[i], &ends[i + 1], signs[i + 1])?,
                exact: None,
                multiplicity: 1,
            });
        }
    }
    Ok(roots)
}

/// Rational `[u, v]` inside the segment `(s, t)` keeping the end signs, so
/// that it still holds the segment's single root.
fn inner_bracket(p: &QPoly, s: &QuadExt, s_sign: i8, t: &QuadExt, t_sign: i8) -> Result<Interval> {
    let sign_at = |x: &Rational| p.eval_rational(x).sign();
    let mut width = Rational::one();
    loop {
        let si = qe_to_interval(s, &width)?;
        let ti = qe_to_interval(t, &width)?;
        let (u, v) = (si.hi(), ti.lo());
        if u < v && sign_at(u) == s_sign && sign_at(v) == t_sign {
            return Ok(Interval::new(u.clone(), v.clone()));
        }
        width /= int(16);
    }
}

/// Outcome of sampling the maximum property on both sides of `x0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximumCheck {
    pub checked: usize,
    /// Sample points where `f(u) < c0` failed.
    pub violations: Vec<Rational>,
}

impl MaximumCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn unit_fraction<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let den: i64 = rng.gen_range(2..=1_000_000);
    let num: i64 = rng.gen_range(1..den);
    rat(num, den)
}

/// Samples `samples` rational points on each side of `x0` inside the domain
/// and checks `f(u) < c0` exactly.
pub fn verify_maximum<R: Rng + ?Sized>(
    tf: &TargetFunction,
    mr: &MaximumReport,
    samples: usize,
    rng: &mut R,
) -> Result<MaximumCheck> {
    if samples == 0 {
        return Err(Error::Usage("at least one sample is required"));
    }
    // refine all three together so the x0 enclosure sits strictly inside D
    let mut width = Rational::one();
    let (x0, lo, hi) = loop {
        let x0 = qe_to_interval(&mr.x0, &width)?;
        let lo = qe_to_interval(&mr.domain_lo, &width)?;
        let hi = qe_to_interval(&mr.domain_hi, &width)?;
        if lo.hi() < x0.lo() && hi.lo() > x0.hi() {
            break (x0, lo, hi);
        }
        width /= int(16);
    };
    // keep samples off x0 itself when it is rational
    let (mut left_hi, mut right_lo) = (x0.lo().clone(), x0.hi().clone());
    if x0.is_point() {
        let mut eps = Rational::one();
        while &(x0.lo() - &eps) <= lo.hi() || &(x0.hi() + &eps) >= hi.lo() {
            eps /= int(2);
        }
        left_hi = x0.lo() - &eps;
        right_lo = x0.hi() + &eps;
    }
    let (left_lo, right_hi) = (lo.hi().clone(), hi.lo().clone());

    let mut points = Vec::with_capacity(2 * samples + 2);
    // the enclosure ends themselves approach x0 from both sides
    points.push(left_hi.clone());
    points.push(right_lo.clone());
    for _ in 0..samples {
        let t = unit_fraction(rng);
        points.push(&left_lo + (&left_hi - &left_lo) * &t);
        let t = unit_fraction(rng);
        points.push(&right_lo + (&right_hi - &right_lo) * &t);
    }
    let violations = points
        .iter()
        .filter(|u| {
            let fu = QuadExt::rational(tf.eval(u), &mr.d);
            (&mr.c0 - &fu).sign() <= 0
        })
        .cloned()
        .collect();
    Ok(MaximumCheck {
        checked: points.len(),
        violations,
    })
}
