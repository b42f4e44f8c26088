//! Runner, batch mode and report formats behind the `tusi` binary.

pub mod batch;
pub mod report;

use std::time::{Duration, Instant};

use tusi_core::numerics::{pow_base, Rational};
use tusi_core::oracle::{differential_check, OracleReport};
use tusi_core::pipeline::{solve_str, SolveOptions};
use tusi_core::Error;

use report::{render_text, render_trace, SolveReport};

#[derive(Clone, Copy, clap::ValueEnum, PartialEq, Eq, Debug)]
pub enum Format {
    Text,
    Json,
}

/// Settings shared by single and batch runs.
#[derive(Clone, Debug)]
pub struct Config {
    pub opts: SolveOptions,
    pub format: Format,
    pub trace: bool,
    pub oracle: bool,
    /// Seeds the sampled maximum check shown in traces.
    pub seed: u64,
}

impl Config {
    /// Oracle intervals are refined to one ulp of the requested digits.
    pub fn oracle_width(&self) -> Rational {
        pow_base(self.opts.base, -(self.opts.digits as i64))
    }
}

/// The result of one equation, ready to render.
pub enum Outcome {
    Solved {
        input: String,
        text: String,
        json: String,
        agree: Option<bool>,
        elapsed: Duration,
    },
    ParseError(String),
    Internal(String),
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        match self {
            Outcome::Solved {
                agree: Some(false), ..
            } => 3,
            Outcome::Solved { .. } => 0,
            Outcome::ParseError(_) => 2,
            Outcome::Internal(_) => 3,
        }
    }

    /// Text or one JSON line; `line` tags batch entries.
    pub fn render(&self, cfg: &Config, line: Option<usize>) -> String {
        let tag = line.map(|n| format!("line {n}: ")).unwrap_or_default();
        match (self, cfg.format) {
            (Outcome::Solved { json, .. }, Format::Json) => json.clone(),
            (Outcome::Solved { text, elapsed, .. }, Format::Text) => {
                let head = line.map(|n| format!("# line {n}\n")).unwrap_or_default();
                format!(
                    "{head}{text}time:    {:.3} ms\n",
                    elapsed.as_secs_f64() * 1e3
                )
            }
            (Outcome::ParseError(msg) | Outcome::Internal(msg), Format::Json) => {
                let kind = if matches!(self, Outcome::ParseError(_)) {
                    "parse"
                } else {
                    "internal"
                };
                serde_json::json!({ "line": line, "error": { "kind": kind, "message": msg } })
                    .to_string()
            }
            (Outcome::ParseError(msg), Format::Text) => format!("{tag}error: {msg}\n"),
            (Outcome::Internal(msg), Format::Text) => format!("{tag}internal error: {msg}\n"),
        }
    }
}

fn is_user_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Syntax { .. }
            | Error::DegreeTooHigh(_)
            | Error::DegreeTooLow(_)
            | Error::ZeroPolynomial
            | Error::Usage(_)
    )
}

pub fn run_one(input: &str, cfg: &Config) -> Outcome {
    let start = Instant::now();
    let sol = match solve_str(input, &cfg.opts) {
        Ok(sol) => sol,
        Err(e) if is_user_error(&e) => return Outcome::ParseError(e.to_string()),
        Err(e) => return Outcome::Internal(e.to_string()),
    };
    let elapsed = start.elapsed();
    let oracle: Option<OracleReport> = cfg
        .oracle
        .then(|| differential_check(&sol, &cfg.oracle_width()));
    let text = if cfg.trace {
        render_trace(input, &sol, oracle.as_ref(), cfg.seed)
    } else {
        render_text(input, &sol, oracle.as_ref())
    };
    Outcome::Solved {
        input: input.to_string(),
        text,
        json: SolveReport::new(input, &sol, oracle.as_ref()).to_json(),
        agree: oracle.as_ref().map(OracleReport::agrees),
        elapsed,
    }
}
