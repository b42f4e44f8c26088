//! Structured and human-readable renderings of a solved equation.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use tusi_core::analysis::{verify_maximum, CaseOutcome};
use tusi_core::numerics::{floor_scaled, pow_base, qe_to_interval, QuadExt, Rational};
use tusi_core::oracle::OracleReport;
use tusi_core::pipeline::{RootReport, Solution};
use tusi_core::reduction::{ReductionStep, Value};

/// Exact `p + q·sqrt(d)` with decimal strings for each rational.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadJson {
    pub p: String,
    pub q: String,
    pub d: String,
}

impl From<&QuadExt> for QuadJson {
    fn from(x: &QuadExt) -> Self {
        QuadJson {
            p: x.p().to_string(),
            q: x.q().to_string(),
            d: x.d().to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub kind: String,
    pub pivot: String,
    pub target: String,
    /// Root of the target equation that was mapped back.
    pub root: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootJson {
    pub label: String,
    pub digits: String,
    pub base: u32,
    pub enclosure: [String; 2],
    pub multiplicity: u32,
    pub exact: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleJson {
    pub verdict: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub discrepancies: Vec<String>,
}

/// One equation's report, in canonical key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub input: String,
    pub form: String,
    pub x0: Option<QuadJson>,
    pub c0: Option<QuadJson>,
    pub case: String,
    pub lemma2: Option<String>,
    pub chain: Vec<StepJson>,
    pub roots: Vec<RootJson>,
    pub oracle: OracleJson,
}

fn step_json(s: &ReductionStep) -> StepJson {
    StepJson {
        kind: s.kind.name().to_string(),
        pivot: s.pivot.to_string(),
        target: s.target.to_string(),
        root: s.target_root.as_ref().map(Value::to_string),
    }
}

fn root_json(r: &RootReport) -> RootJson {
    let enc = r.digits.enclosure();
    RootJson {
        label: r.role.label().to_string(),
        digits: r.digits.render(),
        base: r.digits.base(),
        enclosure: [enc.lo().to_string(), enc.hi().to_string()],
        multiplicity: r.multiplicity,
        exact: r.exact.as_ref().map(QuadExt::to_string),
    }
}

pub fn oracle_json(report: Option<&OracleReport>) -> OracleJson {
    match report {
        None => OracleJson {
            verdict: "skipped".to_string(),
            discrepancies: Vec::new(),
        },
        Some(r) => OracleJson {
            verdict: r.verdict().to_string(),
            discrepancies: r.discrepancies.iter().map(|d| d.to_string()).collect(),
        },
    }
}

impl SolveReport {
    pub fn new(input: &str, sol: &Solution, oracle: Option<&OracleReport>) -> Self {
        SolveReport {
            input: input.to_string(),
            form: sol.form_tag().to_string(),
            x0: sol.maximum.as_ref().map(|m| QuadJson::from(&m.x0)),
            c0: sol.maximum.as_ref().map(|m| QuadJson::from(&m.c0)),
            case: sol.outcome.name().to_string(),
            lemma2: sol.lemma2.map(|c| c.name().to_string()),
            chain: sol.steps().into_iter().map(step_json).collect(),
            roots: sol.roots.iter().map(root_json).collect(),
            oracle: oracle_json(oracle),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report fields serialize")
    }
}

/// Truncated decimal of a rational with `n` fraction digits.
pub fn decimal(r: &Rational, n: usize) -> String {
    let neg = r < &Rational::from_integer(0.into());
    let mag = if neg { -r.clone() } else { r.clone() };
    let scaled = floor_scaled(&mag, 10, n).to_string();
    let padded = format!("{scaled:0>width$}", width = n + 1);
    let (int, frac) = padded.split_at(padded.len() - n);
    let sign = if neg { "-" } else { "" };
    if n == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// Exact rendering followed by a decimal approximation, e.g.
/// `1 + sqrt(3) ≈ 2.732050`.
pub fn exact_and_decimal(x: &QuadExt, n: usize) -> String {
    match x.as_rational() {
        Some(r) if r.is_integer() => r.to_string(),
        _ => {
            let iv = qe_to_interval(x, &pow_base(10, -(n as i64) - 2)).expect("positive width");
            format!("{x} ≈ {}", decimal(iv.lo(), n))
        }
    }
}

fn push_root(out: &mut String, r: &RootReport) {
    let exact = match (&r.exact, r.digits.is_exact()) {
        (Some(x), _) => format!("  = {x}"),
        (None, true) => "  (exact)".to_string(),
        _ => String::new(),
    };
    let mult = if r.multiplicity > 1 {
        format!("  multiplicity {}", r.multiplicity)
    } else {
        String::new()
    };
    let _ = writeln!(
        out,
        "  {} = {}{exact}{mult}\n      enclosure {}",
        r.role.label(),
        r.digits.render(),
        r.digits.enclosure()
    );
}

/// Compact text report.
pub fn render_text(input: &str, sol: &Solution, oracle: Option<&OracleReport>) -> String {
    let n = sol.options.digits;
    let mut out = String::new();
    let _ = writeln!(out, "input:   {input}");
    match &sol.equation {
        Some(eq) => {
            let _ = writeln!(out, "form:    {}  ({eq})", eq.form);
        }
        None => {
            let _ = writeln!(
                out,
                "form:    none (the signs of the terms exclude positive roots)"
            );
        }
    }
    if let Some(m) = &sol.maximum {
        let _ = writeln!(
            out,
            "maximum: x0 = {}, c0 = {}",
            exact_and_decimal(&m.x0, n),
            exact_and_decimal(&m.c0, n)
        );
    }
    let _ = writeln!(out, "case:    {}", sol.outcome.name());
    if let Some(c) = sol.lemma2 {
        let _ = writeln!(out, "lemma2:  {}", c.name());
    }
    if !sol.roots.is_empty() {
        let _ = writeln!(out, "roots:");
        for r in &sol.roots {
            push_root(&mut out, r);
        }
    }
    let o = oracle_json(oracle);
    let _ = writeln!(out, "oracle:  {}", o.verdict);
    for d in &o.discrepancies {
        let _ = writeln!(out, "  ! {d}");
    }
    out
}

fn block(out: &mut String, k: usize, title: &str) {
    let _ = writeln!(out, "[{k}] {title}");
}

/// Step-by-step trace: form, domain, maximum, case, reductions, extraction.
pub fn render_trace(
    input: &str,
    sol: &Solution,
    oracle: Option<&OracleReport>,
    seed: u64,
) -> String {
    use rand::SeedableRng;
    let n = sol.options.digits;
    let mut out = String::new();
    let _ = writeln!(out, "input: {input}");
    if sol.origin_factors > 0 {
        let _ = writeln!(
            out,
            "x = 0 is a root; {} factor(s) x removed",
            sol.origin_factors
        );
    }

    block(&mut out, 1, "form");
    match &sol.equation {
        Some(eq) => {
            let _ = writeln!(out, "    {eq}  ->  {}", eq.form);
        }
        None => {
            let _ = writeln!(out, "    every term has the same sign: no positive root");
        }
    }

    block(&mut out, 2, "domain");
    match &sol.maximum {
        Some(m) => {
            let _ = writeln!(
                out,
                "    f > 0 on ({}, {})",
                exact_and_decimal(&m.domain_lo, n),
                exact_and_decimal(&m.domain_hi, n)
            );
        }
        None if sol
            .equation
            .as_ref()
            .is_some_and(|e| e.form.has_target_function()) =>
        {
            let _ = writeln!(out, "    empty: f <= 0 for every x > 0");
        }
        None => {
            let _ = writeln!(out, "    not applicable");
        }
    }

    block(&mut out, 3, "maximum");
    match (&sol.maximum, &sol.equation) {
        (Some(m), Some(eq)) => {
            let _ = writeln!(out, "    d  = {}", m.d);
            let _ = writeln!(out, "    x0 = {}", exact_and_decimal(&m.x0, n));
            let _ = writeln!(out, "    c0 = {}", exact_and_decimal(&m.c0, n));
            if let Ok(tf) = tusi_core::forms::target_function(eq) {
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                if let Ok(check) = verify_maximum(&tf, m, 10, &mut rng) {
                    let verdict = if check.passed() { "holds" } else { "FAILS" };
                    let _ = writeln!(
                        out,
                        "    f(u) < c0 at {} sampled points around x0: {verdict}",
                        check.checked
                    );
                }
            }
        }
        _ => {
            let _ = writeln!(out, "    not applicable");
        }
    }

    block(&mut out, 4, "case");
    let _ = writeln!(out, "    {}", sol.outcome.name());
    match &sol.outcome {
        CaseOutcome::TwoRoots { small, large } => {
            let _ = writeln!(out, "    x1 in {small}\n    x2 in {large}");
        }
        CaseOutcome::UniqueRoot(b) => {
            let _ = writeln!(out, "    x in {b}");
        }
        CaseOutcome::Several(bs) => {
            for b in bs {
                let _ = writeln!(out, "    x in {b}");
            }
        }
        _ => {}
    }
    if let Some(c) = sol.lemma2 {
        let _ = writeln!(out, "    half-maximum class: {}", c.name());
    }

    block(&mut out, 5, "reductions");
    let mut any = false;
    for r in &sol.roots {
        for s in &r.chain.steps {
            any = true;
            let _ = writeln!(
                out,
                "    {}: {}  [{}]",
                r.role.label(),
                s.describe(),
                s.kind.name()
            );
            let _ = writeln!(out, "        {}  ->  {}", s.source, s.target);
            if let (Some(t), Some(src)) = (&s.target_root, &s.source_root) {
                let _ = writeln!(out, "        root {t}  maps to  {src}");
            }
        }
    }
    if matches!(
        sol.equation.as_ref().map(|e| e.form),
        Some(tusi_core::forms::Form::C22)
    ) && sol.roots.len() == 2
    {
        let _ = writeln!(
            out,
            "    note: the historical order takes the small root first for this form; \
             the results do not depend on the order"
        );
    }
    if !any {
        let _ = writeln!(out, "    none");
    }

    block(&mut out, 6, "extraction");
    if sol.roots.is_empty() {
        let _ = writeln!(out, "    no positive root");
    }
    for r in &sol.roots {
        push_root(&mut out, r);
    }
    let o = oracle_json(oracle);
    let _ = writeln!(out, "oracle: {}", o.verdict);
    for d in &o.discrepancies {
        let _ = writeln!(out, "  ! {d}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use tusi_core::numerics::rat;

    #[test]
    fn decimals_truncate() {
        assert_eq!(decimal(&rat(7, 3), 3), "2.333");
        assert_eq!(decimal(&rat(-7, 3), 2), "-2.33");
        assert_eq!(decimal(&rat(1, 40), 2), "0.02");
        assert_eq!(decimal(&rat(5, 1), 0), "5");
    }
}
