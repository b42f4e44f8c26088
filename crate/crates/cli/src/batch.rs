//! One equation per line, solved concurrently and reported in input order.

use rayon::prelude::*;

use crate::{run_one, Config, Outcome};

/// Aggregate over a batch file.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub equations: usize,
    pub agree: usize,
    pub disagree: usize,
    pub skipped_oracle: usize,
    pub parse_errors: usize,
    pub internal_errors: usize,
}

impl Summary {
    pub fn line(&self) -> String {
        format!(
            "summary: {} equations, oracle agree {}, disagree {}, unchecked {}, \
             parse errors {}, internal errors {}",
            self.equations,
            self.agree,
            self.disagree,
            self.skipped_oracle,
            self.parse_errors,
            self.internal_errors
        )
    }

    pub fn failed(&self) -> bool {
        self.internal_errors > 0 || self.disagree > 0
    }
}

/// Lines that hold an equation, with their 1-based line numbers.
pub fn equations(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

/// Solves every line; the rendered outputs come back in input order.
pub fn run(text: &str, cfg: &Config) -> (Vec<String>, Summary) {
    let lines = equations(text);
    let results: Vec<(usize, Outcome)> = lines
        .par_iter()
        .map(|&(n, eq)| (n, run_one(eq, cfg)))
        .collect();
    let mut summary = Summary::default();
    let mut out = Vec::with_capacity(results.len());
    for (n, outcome) in results {
        summary.equations += 1;
        match &outcome {
            Outcome::Solved { agree, .. } => match agree {
                Some(true) => summary.agree += 1,
                Some(false) => summary.disagree += 1,
                None => summary.skipped_oracle += 1,
            },
            Outcome::ParseError(_) => summary.parse_errors += 1,
            Outcome::Internal(_) => summary.internal_errors += 1,
        }
        out.push(outcome.render(cfg, Some(n)));
    }
    (out, summary)
}
