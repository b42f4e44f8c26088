use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::sturm::{isolate_positive_roots, refine, IsolatedRoot};
use crate::analysis::CaseOutcome;
use crate::numerics::{qe_to_interval, Interval, Rational};
use crate::pipeline::Solution;

/// One way the pipeline and the oracle disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Discrepancy {
    /// The case variant does not fit the oracle's root count and
    /// multiplicities.
    Case {
        pipeline: &'static str,
        oracle_multiplicities: Vec<u32>,
    },
    /// Different numbers of distinct positive roots.
    Count { pipeline: usize, oracle: usize },
    /// The root's enclosure meets no oracle interval, or several.
    Match { root: usize, hits: usize },
    Multiplicity {
        root: usize,
        pipeline: u32,
        oracle: u32,
    },
    /// The two-root localization `0 < x1 < x0 < x2` fails against the
    /// oracle's intervals.
    Localization(String),
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Discrepancy::Case {
                pipeline,
                oracle_multiplicities,
            } => write!(
                f,
                "case {pipeline} but the oracle finds multiplicities {oracle_multiplicities:?}"
            ),
            Discrepancy::Count { pipeline, oracle } => {
                write!(
                    f,
                    "{pipeline} roots in the pipeline, {oracle} in the oracle"
                )
            }
            Discrepancy::Match { root, hits } => {
                write!(
                    f,
                    "root #{root} meets {hits} oracle intervals instead of one"
                )
            }
            Discrepancy::Multiplicity {
                root,
                pipeline,
                oracle,
            } => write!(
                f,
                "root #{root} has multiplicity {pipeline}, oracle says {oracle}"
            ),
            Discrepancy::Localization(msg) => write!(f, "localization: {msg}"),
        }
    }
}

/// Result of comparing a solution with the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    /// Oracle roots of the solved polynomial, refined to the check width.
    pub oracle_roots: Vec<IsolatedRoot>,
    pub discrepancies: Vec<Discrepancy>,
}

impl OracleReport {
    pub fn agrees(&self) -> bool {
        self.discrepancies.is_empty()
    }

    pub fn verdict(&self) -> &'static str {
        if self.agrees() {
            "agree"
        } else {
            "disagree"
        }
    }
}

fn case_fits(outcome: &CaseOutcome, mults: &[u32]) -> bool {
    match outcome {
        CaseOutcome::Impossible => mults.is_empty(),
        CaseOutcome::DoubleRoot(_) => mults == [2],
        CaseOutcome::TwoRoots { .. } => mults == [1, 1],
        CaseOutcome::UniqueRoot(_) => mults.len() == 1,
        CaseOutcome::Several(b) => mults.len() == b.len() && b.len() >= 2,
    }
}

/// Compares `sol` against an independent isolation of the positive roots of
/// its input polynomial, refined to `width`.
pub fn differential_check(sol: &Solution, width: &Rational) -> OracleReport {
    let oracle_roots: Vec<IsolatedRoot> = if sol.input.is_zero() {
        Vec::new()
    } else {
        isolate_positive_roots(&sol.input)
            .iter()
            .map(|r| refine(r, &sol.input, width))
            .collect()
    };
    let mut discrepancies = Vec::new();
    let mults: Vec<u32> = oracle_roots.iter().map(|r| r.multiplicity).collect();
    if !case_fits(&sol.outcome, &mults) {
        discrepancies.push(Discrepancy::Case {
            pipeline: sol.outcome.name(),
            oracle_multiplicities: mults.clone(),
        });
    }
    if sol.roots.len() != oracle_roots.len() {
        discrepancies.push(Discrepancy::Count {
            pipeline: sol.roots.len(),
            oracle: oracle_roots.len(),
        });
    }
    let mut matched: Vec<Option<usize>> = Vec::new();
    for (i, root) in sol.roots.iter().enumerate() {
        let enc = root.digits.enclosure();
        let hits: Vec<usize> = oracle_roots
            .iter()
            .enumerate()
            .filter(|(_, o)| o.interval.intersects(enc))
            .map(|(j, _)| j)
            .collect();
        if hits.len() != 1 {
            discrepancies.push(Discrepancy::Match {
                root: i,
                hits: hits.len(),
            });
            matched.push(None);
            continue;
        }
        let o = &oracle_roots[hits[0]];
        if o.multiplicity != root.multiplicity {
            discrepancies.push(Discrepancy::Multiplicity {
                root: i,
                pipeline: root.multiplicity,
                oracle: o.multiplicity,
            });
        }
        matched.push(Some(hits[0]));
    }
    if let (CaseOutcome::TwoRoots { .. }, Some(mr), [Some(i1), Some(i2)]) =
        (&sol.outcome, &sol.maximum, matched.as_slice())
    {
        if let Err(msg) = localization(
            &oracle_roots[*i1].interval,
            &oracle_roots[*i2].interval,
            &qe_to_interval(&mr.x0, width).expect("positive width"),
        ) {
            discrepancies.push(Discrepancy::Localization(msg));
        }
    }
    OracleReport {
        oracle_roots,
        discrepancies,
    }
}

fn localization(x1: &Interval, x2: &Interval, x0: &Interval) -> Result<(), String> {
    if x1.lo() < &Rational::from_integer(0.into()) {
        return Err(alloc::format!("x1 in {x1} is not positive"));
    }
    if x1.lo() > x0.hi() {
        return Err(alloc::format!("x1 in {x1} lies right of x0 in {x0}"));
    }
    if x2.hi() < x0.lo() {
        return Err(alloc::format!("x2 in {x2} lies left of x0 in {x0}"));
    }
    if x1.lo() >= x2.hi() {
        return Err(alloc::format!("x1 in {x1} is not below x2 in {x2}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{int, rat};
    use crate::pipeline::{solve_str, SolveOptions};

    fn check(text: &str) -> OracleReport {
        let sol = solve_str(text, &SolveOptions::default()).unwrap();
        differential_check(&sol, &rat(1, 1_000_000_000_000))
    }

    #[test]
    fn worked_instances_agree() {
        let r = check("x^3 + 2 = 3x^2");
        assert!(r.agrees(), "{:?}", r.discrepancies);
        assert_eq!(r.oracle_roots[0].interval, Interval::point(int(1)));
        let r = check("x^3 + 8x + 4 = 7x^2");
        assert!(r.agrees(), "{:?}", r.discrepancies);
        assert_eq!(r.oracle_roots[0].interval, Interval::point(int(2)));
        for text in [
            "x^3 + 5 = 3x^2",
            "x^3 + 4 = 3x^2",
            "x^3 + 11x = 6x^2 + 6",
            "x^2 = 2x",
        ] {
            let r = check(text);
            assert!(r.agrees(), "{text}: {:?}", r.discrepancies);
        }
    }

    #[test]
    fn tampered_solution_is_flagged() {
        let mut sol = solve_str("x^3 + 2 = 3x^2", &SolveOptions::default()).unwrap();
        sol.roots.pop();
        let r = differential_check(&sol, &rat(1, 1_000_000));
        assert!(!r.agrees());
        assert!(r.discrepancies.contains(&Discrepancy::Count {
            pipeline: 1,
            oracle: 2
        }));
        sol.outcome = CaseOutcome::Impossible;
        let r = differential_check(&sol, &rat(1, 1_000_000));
        assert!(matches!(r.discrepancies[0], Discrepancy::Case { .. }));
    }
}
