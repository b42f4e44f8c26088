//! The full resolution of one equation: classification, maximum and case
//! decision, reduction chains, and digit extraction of every positive root.
//!
//! Two-root cases take the large root first through `x = x0 + X`; the small
//! root then follows from it through the quadratic detour, after a preliminary
//! `x = x0 − X` for the forms other than `C21`.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::analysis::enclose_until;
use crate::analysis::{
    critical_point, decide_case, lemma2_classify, locate_cubic_roots, CaseOutcome, Lemma2Class,
    MaximumReport,
};
use crate::extraction::{
    digits_of_qe, digits_with_guard, extract_c21_small, extract_in_bracket, extract_monotone,
    DigitString,
};
use crate::forms::{
    classify, target_function, CanonicalEquation, Form, GeneralPoly, TargetFunction,
};
use crate::numerics::{
    int, pow_base, qe_to_interval, rat, sqrt_enclosure, Interval, QPoly, QuadExt, Rational,
};
use crate::reduction::{
    c21_large_root_shift, reduce_q8_to_q7, shift_for_large_root, shift_for_small_root,
    small_root_via_quadratic, solve_q7, solve_q7_enclosed, C15Instance, C21Instance, Equation,
    Q7Instance, Q8Instance, ReductionChain, ReductionStep, Value,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub base: u32,
    /// Fraction digits of every emitted root.
    pub digits: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            base: 10,
            digits: 12,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootRole {
    /// `x1` of a two-root case.
    Small,
    /// `x2` of a two-root case.
    Large,
    /// `x0` when `c = c0`.
    Double,
    /// Any root of a form without a maximum.
    Plain,
}

impl RootRole {
    pub fn label(&self) -> &'static str {
        match self {
            RootRole::Small => "x1",
            RootRole::Large => "x2",
            RootRole::Double => "x0",
            RootRole::Plain => "x",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootReport {
    pub role: RootRole,
    pub digits: DigitString,
    pub multiplicity: u32,
    /// The root in closed form, when the solver found it exactly.
    pub exact: Option<QuadExt>,
    /// Substitutions leading from the equation to the solved form this root
    /// came from, each with its target and source roots filled in.
    pub chain: ReductionChain,
}

/// Everything learned about one equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub input: GeneralPoly,
    /// How many factors `x` were removed before classification.
    pub origin_factors: u32,
    /// `None` when the signs of the terms already exclude positive roots.
    pub equation: Option<CanonicalEquation>,
    pub maximum: Option<MaximumReport>,
    pub outcome: CaseOutcome,
    pub lemma2: Option<Lemma2Class>,
    pub roots: Vec<RootReport>,
    pub options: SolveOptions,
}

impl Solution {
    pub fn form_tag(&self) -> &'static str {
        match &self.equation {
            Some(eq) => eq.form.tag(),
            None => "none",
        }
    }

    /// The polynomial whose positive roots were computed: the input with
    /// factors `x` removed.
    pub fn reduced_poly(&self) -> Option<GeneralPoly> {
        self.equation.as_ref().map(CanonicalEquation::to_general)
    }

    /// All substitutions used, in order of first use and without repeats.
    pub fn steps(&self) -> Vec<&ReductionStep> {
        let mut out: Vec<&ReductionStep> = Vec::new();
        for r in &self.roots {
            for s in &r.chain.steps {
                if !out
                    .iter()
                    .any(|t| t.kind == s.kind && t.source == s.source && t.target == s.target)
                {
                    out.push(s);
                }
            }
        }
        out
    }
}

/// Solves `text`, an equation in the input grammar.
pub fn solve_str(text: &str, opts: &SolveOptions) -> Result<Solution> {
    solve(&crate::forms::parse(text)?, opts)
}

pub fn solve(input: &GeneralPoly, opts: &SolveOptions) -> Result<Solution> {
    if opts.base < 2 {
        return Err(Error::Usage("base must be at least 2"));
    }
    if input.degree().is_some_and(|d| d < 1) || input.is_zero() {
        // constants have no roots to look for
        return Err(if input.is_zero() {
            Error::ZeroPolynomial
        } else {
            Error::DegreeTooLow(0)
        });
    }
    let mut poly = input.clone();
    let mut origin_factors = 0;
    let equation = loop {
        match classify(&poly) {
            Ok(eq) => break Some(eq),
            Err(Error::RootAtOrigin(quotient)) => {
                origin_factors += 1;
                if quotient.degree() == Some(0) {
                    break None;
                }
                poly = *quotient;
            }
            Err(Error::ImpossibleBySigns) => break None,
            Err(e) => return Err(e),
        }
    };
    let mut sol = Solution {
        input: input.clone(),
        origin_factors,
        equation: equation.clone(),
        maximum: None,
        outcome: CaseOutcome::Impossible,
        lemma2: None,
        roots: Vec::new(),
        options: *opts,
    };
    let Some(eq) = equation else {
        return Ok(sol);
    };
    let p = QPoly::from_rationals(&eq.to_general().coeffs(), &Rational::one());
    match eq.form {
        Form::C21 | Form::C22 | Form::C23 | Form::C24 | Form::C25 => {
            solve_target(&eq, &p, opts, &mut sol)?
        }
        Form::Linear => {
            let x = QuadExt::rational(eq.c.clone(), &Rational::one());
            sol.outcome = CaseOutcome::UniqueRoot(Interval::point(eq.c.clone()));
            sol.roots.push(plain_exact(&p, x, 1, opts)?);
        }
        Form::Q7 => {
            let q7 = Q7Instance {
                b: QuadExt::rational(eq.b.clone(), &Rational::one()),
                c: QuadExt::rational(eq.c.clone(), &Rational::one()),
            };
            let x = solve_q7(&q7, opts.base, opts.digits)?;
            let x = x
                .exact()
                .cloned()
                .ok_or(Error::Inconsistent("rational Q7 has a closed form"))?;
            let root = plain_exact(&p, x, 1, opts)?;
            sol.outcome = CaseOutcome::UniqueRoot(root.digits.enclosure().clone());
            sol.roots.push(root);
        }
        Form::Q8 => {
            let one = Rational::one();
            let q8 = Q8Instance {
                b: QuadExt::rational(eq.b.clone(), &one),
                c: QuadExt::rational(eq.c.clone(), &one),
            };
            let (q7, step) = reduce_q8_to_q7(&q8);
            let x = solve_q7(&q7, opts.base, opts.digits)?;
            let step = step.solved(x, &fine(opts));
            let y = step
                .source_root
                .as_ref()
                .and_then(Value::exact)
                .cloned()
                .ok_or(Error::Inconsistent("rational Q8 has a closed form"))?;
            let mut root = plain_exact(&p, y, 1, opts)?;
            root.chain.push(step);
            sol.outcome = CaseOutcome::UniqueRoot(root.digits.enclosure().clone());
            sol.roots.push(root);
        }
        Form::OtherQuadratic => solve_other_quadratic(&eq, &p, opts, &mut sol)?,
        Form::C15 => {
            let one = Rational::one();
            let inst = C15Instance {
                a: QuadExt::rational(eq.a.clone(), &one),
                c: QuadExt::rational(eq.c.clone(), &one),
            };
            let bracket = c15_bracket(&inst)?;
            let zero_c = C15Instance {
                a: inst.a.clone(),
                c: QuadExt::zero(&one),
            };
            let digits =
                extract_monotone(&zero_c.poly(), &inst.c, &bracket, opts.base, opts.digits)?;
            sol.outcome = CaseOutcome::UniqueRoot(bracket);
            sol.roots.push(plain(digits, 1));
        }
        Form::OtherCubic { .. } => {
            let located = locate_cubic_roots(&eq.to_general())?;
            let mut brackets = Vec::new();
            for r in located {
                brackets.push(r.bracket.clone());
                let root = match r.exact {
                    Some(x) => plain_exact(&p, x, r.multiplicity, opts)?,
                    None => plain(
                        extract_in_bracket(&p, &r.bracket, opts.base, opts.digits)?,
                        1,
                    ),
                };
                sol.roots.push(root);
            }
            sol.outcome = match brackets.len() {
                0 => {
                    return Err(Error::Inconsistent(
                        "a cubic with negative constant has a positive root",
                    ))
                }
                1 => CaseOutcome::UniqueRoot(brackets.pop().expect("one bracket")),
                _ => CaseOutcome::Several(brackets),
            };
        }
    }
    Ok(sol)
}

fn plain(digits: DigitString, multiplicity: u32) -> RootReport {
    RootReport {
        role: RootRole::Plain,
        digits,
        multiplicity,
        exact: None,
        chain: ReductionChain::default(),
    }
}

fn plain_exact(
    p: &QPoly,
    x: QuadExt,
    multiplicity: u32,
    opts: &SolveOptions,
) -> Result<RootReport> {
    let digits = digits_of_qe(p, &x, opts.base, opts.digits)?;
    Ok(RootReport {
        exact: Some(x),
        ..plain(digits, multiplicity)
    })
}

/// Width used to enclose exact values that only feed enclosures.
fn fine(opts: &SolveOptions) -> Rational {
    pow_base(opts.base, -(2 * opts.digits as i64 + 8))
}

fn ulp(base: u32, k: usize) -> Rational {
    pow_base(base, -(k as i64))
}

/// `x² + c = bx`: maximum `b²/4` of `bx − x²` at `b/2`, roots in closed form.
fn solve_other_quadratic(
    eq: &CanonicalEquation,
    p: &QPoly,
    opts: &SolveOptions,
    sol: &mut Solution,
) -> Result<()> {
    let (b, c) = (&eq.b, &eq.c);
    let d = b * b;
    let x0 = b / int(2);
    let c0 = &d / int(4);
    sol.maximum = Some(MaximumReport {
        d: d.clone(),
        x0: QuadExt::rational(x0.clone(), &d),
        c0: QuadExt::rational(c0.clone(), &d),
        domain_lo: QuadExt::zero(&d),
        domain_hi: QuadExt::rational(b.clone(), &d),
    });
    let disc = &d - c * int(4);
    if disc < Rational::zero() {
        sol.outcome = CaseOutcome::Impossible;
    } else if disc.is_zero() {
        let x = QuadExt::rational(x0, &d);
        sol.outcome = CaseOutcome::DoubleRoot(x.clone());
        let mut r = plain_exact(p, x, 2, opts)?;
        r.role = RootRole::Double;
        sol.roots.push(r);
    } else {
        let small = QuadExt::new(x0.clone(), rat(-1, 2), disc.clone())?;
        let large = QuadExt::new(x0, rat(1, 2), disc)?;
        let mut r1 = plain_exact(p, small, 1, opts)?;
        let mut r2 = plain_exact(p, large, 1, opts)?;
        r1.role = RootRole::Small;
        r2.role = RootRole::Large;
        sol.outcome = CaseOutcome::TwoRoots {
            small: r1.digits.enclosure().clone(),
            large: r2.digits.enclosure().clone(),
        };
        sol.roots.push(r1);
        sol.roots.push(r2);
    }
    Ok(())
}

fn solve_target(
    eq: &CanonicalEquation,
    p: &QPoly,
    opts: &SolveOptions,
    sol: &mut Solution,
) -> Result<()> {
    let tf = target_function(eq)?;
    let mr = match critical_point(&tf) {
        Ok(mr) => mr,
        Err(Error::PositivityImpossible) => {
            sol.outcome = CaseOutcome::Impossible;
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    sol.maximum = Some(mr.clone());
    let outcome = decide_case(&tf, &mr)?;
    if tf.form == Form::C21 {
        sol.lemma2 = lemma2_classify(&tf, &outcome).ok();
    }
    match &outcome {
        CaseOutcome::Impossible => {}
        CaseOutcome::DoubleRoot(x0) => {
            let mut r = plain_exact(p, x0.clone(), 2, opts)?;
            r.role = RootRole::Double;
            sol.roots.push(r);
        }
        CaseOutcome::TwoRoots { small, large } => {
            let (x2, x2_step) = large_root(&tf, &mr, p, opts)?;
            let x1 = if tf.form == Form::C21 {
                small_root_c21(&tf, p, &x2_step, sol.lemma2, opts)?
            } else {
                small_root_shifted(&tf, &mr, p, opts)?
            };
            for (r, bracket) in [(&x1, small), (&x2, large)] {
                if !r.digits.enclosure().intersects(bracket) {
                    return Err(Error::Inconsistent("root escaped its bracket"));
                }
            }
            sol.roots.push(x1);
            sol.roots.push(x2);
        }
        CaseOutcome::UniqueRoot(_) | CaseOutcome::Several(_) => {
            return Err(Error::Inconsistent("a maximum gives at most two roots"))
        }
    }
    sol.outcome = outcome;
    Ok(())
}

/// Bracket `[0, U]` for the positive root of `X³ + aX² = c`, which lies
/// below both the cube root of `c` and `sqrt(c/a)`.
fn c15_bracket(inst: &C15Instance) -> Result<Interval> {
    let c_hi = qe_to_interval(&inst.c, &rat(1, 1 << 20))?.hi().clone();
    let mut cube = Rational::one();
    while &cube * &cube * &cube < c_hi {
        cube *= int(2);
    }
    while {
        let half = &cube / int(2);
        &half * &half * &half >= c_hi
    } {
        cube /= int(2);
    }
    let mut bound = cube;
    if inst.a.sign() > 0 {
        let a_lo = enclose_until(&inst.a, |iv| iv.lo() > &Rational::zero())?
            .lo()
            .clone();
        let s = sqrt_enclosure(&(&c_hi / a_lo), &rat(1, 1 << 20))?
            .hi()
            .clone();
        bound = bound.min(s);
    }
    Ok(Interval::new(Rational::zero(), bound))
}

/// Root of a `C15` instance with `k` digits, exact when the digits end.
fn c15_root(inst: &C15Instance, base: u32, k: usize) -> Result<Value> {
    let zero_c = C15Instance {
        a: inst.a.clone(),
        c: QuadExt::zero(inst.c.d()),
    };
    let ds = extract_monotone(&zero_c.poly(), &inst.c, &c15_bracket(inst)?, base, k)?;
    Ok(if ds.is_exact() {
        Value::Exact(QuadExt::rational(ds.value().clone(), inst.c.d()))
    } else {
        Value::Enclosed(ds.enclosure().clone())
    })
}

fn value_interval(v: &Value, width: &Rational) -> Interval {
    v.enclosure(width)
}

/// `x2 = x0 + X` with `X³ + sqrt(d)·X² = c0 − c`.
fn large_root(
    tf: &TargetFunction,
    mr: &MaximumReport,
    p: &QPoly,
    opts: &SolveOptions,
) -> Result<(RootReport, ReductionStep)> {
    let (c15, step) = shift_for_large_root(tf, mr)?;
    let mut last = None;
    let digits = digits_with_guard(p, opts.base, opts.digits, |k| {
        let w = ulp(opts.base, k);
        let x = c15_root(&c15, opts.base, k)?;
        let solved = step.clone().solved(x, &w);
        let iv = value_interval(solved.source_root.as_ref().expect("solved"), &w);
        last = Some(solved);
        Ok(Some(iv))
    })?;
    let solved = last.expect("at least one round");
    let exact = solved.source_root.as_ref().and_then(Value::exact).cloned();
    let mut chain = ReductionChain::default();
    chain.push(solved.clone());
    Ok((
        RootReport {
            role: RootRole::Large,
            digits,
            multiplicity: 1,
            exact,
            chain,
        },
        solved,
    ))
}

/// Positive root of a `Q7` that may only be known through enclosures.
fn q7_root(q7: &Equation, base: u32, k: usize) -> Result<Value> {
    match q7 {
        Equation::Q7(inst) => solve_q7(inst, base, k),
        Equation::Q7Enclosed(inst) => {
            Ok(Value::Enclosed(solve_q7_enclosed(inst, &ulp(base, k + 2))?))
        }
        _ => Err(Error::Inconsistent("quadratic detour must end in Q7")),
    }
}

/// The detour `x1 = (a − x2) + X` for an instance `aX² − X³ = c`, given its
/// large root. `None` when `x2` is too coarse for `a − x2 > 0` to show.
fn detour(inst: &C21Instance, x2: &Value, base: u32, k: usize) -> Result<Option<ReductionStep>> {
    let (q7, step) = match small_root_via_quadratic(inst, x2) {
        Ok(r) => r,
        Err(Error::Inconsistent(_)) if matches!(x2, Value::Enclosed(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let z = q7_root(&q7, base, k)?;
    Ok(Some(step.solved(z, &ulp(base, k))))
}

/// Small root of `C21`: digits from the half-maximum dispatch, confirmed by the
/// quadratic detour through the large root.
fn small_root_c21(
    tf: &TargetFunction,
    p: &QPoly,
    x2_step: &ReductionStep,
    class: Option<Lemma2Class>,
    opts: &SolveOptions,
) -> Result<RootReport> {
    let inst = C21Instance::from_target(tf).ok_or(Error::WrongForm(tf.form))?;
    let class = class.ok_or(Error::Inconsistent(
        "C21 two-root case without a half-maximum class",
    ))?;
    let digits = extract_c21_small(&inst, class, opts.base, opts.digits)?;

    let x2 = x2_step
        .source_root
        .clone()
        .ok_or(Error::Inconsistent("large root unsolved"))?;
    let mut k = opts.digits + crate::extraction::guard_digits(opts.base);
    let mut x2_step = x2_step.clone();
    let mut x2 = x2;
    let offset = loop {
        if let Some(step) = detour(&inst, &x2, opts.base, k)? {
            let mapped = step
                .source_root
                .as_ref()
                .expect("solved")
                .enclosure(&fine(opts));
            if mapped.width() < ulp(opts.base, opts.digits) {
                break step;
            }
        }
        k *= 2;
        if k > 64 * (opts.digits + 8) {
            return Err(Error::Certification("quadratic detour does not sharpen"));
        }
        let w = ulp(opts.base, k);
        let (c15, fresh) = match &x2_step.target {
            Equation::C15(c15) => (c15.clone(), x2_step.clone()),
            _ => return Err(Error::Inconsistent("large-root step must target C15")),
        };
        x2_step = fresh.solved(c15_root(&c15, opts.base, k)?, &w);
        x2 = x2_step.source_root.clone().expect("solved");
    };
    let mapped = offset
        .source_root
        .as_ref()
        .expect("solved")
        .enclosure(&fine(opts));
    if !mapped.intersects(digits.enclosure()) {
        return Err(Error::Certification(
            "half-maximum digits disagree with the quadratic detour",
        ));
    }
    let exact = match offset.source_root.as_ref().and_then(Value::exact) {
        Some(x) => Some(x.clone()),
        None if class == Lemma2Class::Equal => Some(inst.a.scale(&rat(1, 3))),
        None => None,
    };
    let mut chain = ReductionChain::default();
    chain.push(x2_step);
    chain.push(offset);
    Ok(RootReport {
        role: RootRole::Small,
        digits: check_exact(p, digits)?,
        multiplicity: 1,
        exact,
        chain,
    })
}

fn check_exact(p: &QPoly, digits: DigitString) -> Result<DigitString> {
    if digits.is_exact() && !p.eval_rational(digits.value()).is_zero() {
        return Err(Error::Certification(
            "digits marked exact do not solve the equation",
        ));
    }
    Ok(digits)
}

/// Small root of `C22`..`C25`: `x1 = x0 − X1` where `X1` is the small root
/// of `sqrt(d)·X² − X³ = c0 − c`, itself reached through the large root of
/// that instance and the quadratic detour.
fn small_root_shifted(
    tf: &TargetFunction,
    mr: &MaximumReport,
    p: &QPoly,
    opts: &SolveOptions,
) -> Result<RootReport> {
    let (inst, minus) = shift_for_small_root(tf, mr)?;
    let (c15, plus) = c21_large_root_shift(&inst)?;
    let mut last = None;
    let digits = digits_with_guard(p, opts.base, opts.digits, |k| {
        let w = ulp(opts.base, k);
        let plus = plus.clone().solved(c15_root(&c15, opts.base, k)?, &w);
        let big = plus.source_root.clone().expect("solved");
        let Some(offset) = detour(&inst, &big, opts.base, k)? else {
            return Ok(None);
        };
        let small = offset.source_root.clone().expect("solved");
        let minus = minus.clone().solved(small, &w);
        let iv = value_interval(minus.source_root.as_ref().expect("solved"), &w);
        last = Some([minus, plus, offset]);
        Ok(Some(iv))
    })?;
    let steps = last.expect("at least one round");
    let exact = steps[0]
        .source_root
        .as_ref()
        .and_then(Value::exact)
        .cloned();
    let mut chain = ReductionChain::default();
    for s in steps {
        chain.push(s);
    }
    Ok(RootReport {
        role: RootRole::Small,
        digits,
        multiplicity: 1,
        exact,
        chain,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(text: &str, digits: usize, base: u32) -> Solution {
        solve_str(text, &SolveOptions { base, digits }).unwrap()
    }

    fn rendered(sol: &Solution) -> Vec<alloc::string::String> {
        sol.roots.iter().map(|r| r.digits.render()).collect()
    }

    #[test]
    fn worked_c21() {
        let sol = run("x^3 + 2 = 3x^2", 12, 10);
        assert_eq!(sol.form_tag(), "C21");
        assert_eq!(sol.outcome.name(), "TwoRoots");
        assert_eq!(sol.lemma2, Some(Lemma2Class::Equal));
        assert_eq!(rendered(&sol), ["1.000000000000", "2.732050807568"]);
        assert!(sol.roots[0].digits.is_exact());
        assert_eq!(sol.roots[0].exact, Some(QuadExt::rational(int(1), &int(9))));
        assert_eq!(sol.roots[1].chain.len(), 1);
        assert_eq!(sol.roots[0].chain.len(), 2);
        for r in &sol.roots {
            r.chain.verify(&rat(1, 1_000_000_000)).unwrap();
        }
    }

    #[test]
    fn worked_c24() {
        let sol = run("x^3 + 8x + 4 = 7x^2", 12, 10);
        assert_eq!(sol.form_tag(), "C24");
        assert_eq!(rendered(&sol), ["2.000000000000", "5.372281323269"]);
        assert!(sol.roots[0].digits.is_exact());
        assert_eq!(sol.roots[0].chain.len(), 3);
        assert_eq!(sol.roots[0].chain.steps[0].target.tag(), "C21");
        assert_eq!(sol.roots[0].chain.terminal(), Some("Q7"));
        for r in &sol.roots {
            r.chain.verify(&rat(1, 1_000_000_000)).unwrap();
        }
    }

    #[test]
    fn other_cases() {
        assert_eq!(
            run("x^3 + 5 = 3x^2", 6, 10).outcome,
            CaseOutcome::Impossible
        );
        let double = run("x^3 + 4 = 3x^2", 6, 10);
        assert_eq!(double.outcome.name(), "DoubleRoot");
        assert_eq!(rendered(&double), ["2.000000"]);
        assert_eq!(double.roots[0].multiplicity, 2);
        assert_eq!(
            run("x^3 + 1 = 3x^2", 6, 10).lemma2,
            Some(Lemma2Class::Below)
        );
        let above = run("x^3 + 3 = 3x^2", 6, 10);
        assert_eq!(above.lemma2, Some(Lemma2Class::Above));
        assert_eq!(rendered(&above)[0], "1.347296");
        // C24 without positivity
        assert_eq!(
            run("x^3 + 2x + 1 = x^2", 6, 10).outcome,
            CaseOutcome::Impossible
        );
        assert_eq!(run("x^3 + x^2 + 1 = 0", 6, 10).form_tag(), "none");
    }

    #[test]
    fn quadratics_and_linear() {
        let q8 = run("y^2 - 2y = 3".replace('y', "x").as_str(), 4, 10);
        assert_eq!(q8.form_tag(), "Q8");
        assert_eq!(rendered(&q8), ["3.0000"]);
        assert_eq!(q8.roots[0].chain.len(), 1);
        assert_eq!(rendered(&run("x^2 + 2x = 3", 4, 10)), ["1.0000"]);
        let oq = run("x^2 + 2 = 3x", 4, 10);
        assert_eq!(oq.outcome.name(), "TwoRoots");
        assert_eq!(rendered(&oq), ["1.0000", "2.0000"]);
        let lin = run("x^2 = 2x", 4, 10);
        assert_eq!(lin.origin_factors, 1);
        assert_eq!(rendered(&lin), ["2.0000"]);
        assert_eq!(run("x^3 = 0", 4, 10).outcome, CaseOutcome::Impossible);
    }

    #[test]
    fn c15_and_other_cubics() {
        let sol = run("x^3 + 3x^2 = 2", 6, 10);
        assert_eq!(sol.form_tag(), "C15");
        assert_eq!(rendered(&sol), ["0.732050"]);
        let sol = run("x^3 + 11x = 6x^2 + 6", 4, 10);
        assert_eq!(sol.outcome.name(), "Several");
        assert_eq!(rendered(&sol), ["1.0000", "2.0000", "3.0000"]);
        let sol = run("x^3 + 9x = 6x^2 + 4", 4, 10);
        assert_eq!(rendered(&sol), ["1.0000", "4.0000"]);
        assert_eq!(sol.roots[0].multiplicity, 2);
    }

    #[test]
    fn c22_to_c25_small_roots() {
        let sol = run("x^3 + 1 = 3x", 9, 10);
        assert_eq!(rendered(&sol), ["0.347296355", "1.532088886"]);
        let sol = run("x^3 + 2x^2 + 1 = 5x", 9, 60);
        assert_eq!(sol.form_tag(), "C23");
        assert_eq!(sol.roots.len(), 2);
        let sol = run("x^3 + 1 = 2x^2 + 3x", 9, 10);
        assert_eq!(sol.form_tag(), "C25");
        for r in &sol.roots {
            r.chain.verify(&rat(1, 1_000_000_000)).unwrap();
        }
    }
}
