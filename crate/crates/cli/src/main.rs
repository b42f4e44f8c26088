//! `tusi`: positive roots of cubic and quadratic equations by the maximum,
//! affine reductions and digit extraction, checked against a Sturm oracle.

use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use tusi::{batch, run_one, Config, Format, Outcome};
use tusi_core::pipeline::SolveOptions;

#[derive(Parser)]
#[command(
    name = "tusi",
    version,
    about = "Positive roots of cubics the historical way, with exact certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one equation, e.g. "x^3 + 2 = 3x^2".
    Solve {
        /// The equation; omit when `--batch` is given.
        equation: Option<String>,
        #[command(flatten)]
        flags: Flags,
        /// Read equations from FILE, one per line.
        #[arg(long, value_name = "FILE")]
        batch: Option<std::path::PathBuf>,
    },
    /// Solve every equation of FILE, one per line; `#` starts a comment.
    Batch {
        file: std::path::PathBuf,
        #[command(flatten)]
        flags: Flags,
    },
}

#[derive(Args, Clone, Debug)]
struct Flags {
    /// Fraction digits of each root.
    #[arg(long, default_value_t = 12)]
    digits: usize,
    /// Base of the digit expansion.
    #[arg(long, default_value_t = 10, value_parser = parse_base)]
    base: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Show every step of the resolution.
    #[arg(long)]
    trace: bool,
    /// Skip the comparison with the Sturm-sequence oracle.
    #[arg(long)]
    no_oracle: bool,
}

fn parse_base(s: &str) -> Result<u32, String> {
    match s {
        "10" => Ok(10),
        "60" => Ok(60),
        _ => Err(format!("base must be 10 or 60, got {s}")),
    }
}

fn config(f: &Flags) -> Config {
    Config {
        opts: SolveOptions {
            base: f.base,
            digits: f.digits,
        },
        format: f.format,
        trace: f.trace,
        oracle: !f.no_oracle,
        seed: std::env::var("TUSI_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(0),
    }
}

fn run_batch(path: &std::path::Path, cfg: &Config) -> anyhow::Result<u8> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let (lines, summary) = batch::run(&text, cfg);
    for l in &lines {
        if cfg.format == Format::Json {
            println!("{l}");
        } else {
            print!("{l}");
            println!();
        }
    }
    match cfg.format {
        Format::Text => println!("{}", summary.line()),
        Format::Json => eprintln!("{}", summary.line()),
    }
    Ok(if summary.failed() { 3 } else { 0 })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let code = match cli.command {
        Command::Batch { file, flags } => batch_exit(&file, &config(&flags)),
        Command::Solve {
            equation,
            flags,
            batch,
        } => {
            let cfg = config(&flags);
            match (equation, batch) {
                (_, Some(file)) => batch_exit(&file, &cfg),
                (Some(eq), None) => {
                    let outcome = run_one(&eq, &cfg);
                    let rendered = outcome.render(&cfg, None);
                    match (&outcome, cfg.format) {
                        (Outcome::Solved { .. }, Format::Json) => println!("{rendered}"),
                        (Outcome::Solved { .. }, Format::Text) => print!("{rendered}"),
                        (_, Format::Json) => println!("{rendered}"),
                        (_, Format::Text) => eprint!("{rendered}"),
                    }
                    outcome.exit_code()
                }
                (None, None) => {
                    eprintln!("error: give an equation or --batch FILE");
                    2
                }
            }
        }
    };
    ExitCode::from(code)
}

fn batch_exit(file: &std::path::Path, cfg: &Config) -> u8 {
    match run_batch(file, cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}
