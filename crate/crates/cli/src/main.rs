use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use antialg_core::algebra::{catalog, load_spec};
use antialg_core::{AlgebraSpec, Scalar, WeightWindow};

mod commands;
mod report;

use report::{render_human, render_json, Outcome};

#[derive(Parser)]
#[command(name = "antialg", version, about = "Exact computations with Lie antialgebras and their enveloping algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Weight window `lo..hi`, half-integers allowed (e.g. `-5/2..5/2`).
    #[arg(long, global = true, allow_hyphen_values = true)]
    window: Option<WeightWindow>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Antialgebra,
    Jordan,
    Superalgebra,
    Halfunit,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RepCheck {
    /// The split null extension satisfies the antialgebra axioms.
    Module,
    /// Products act by symmetrized compositions.
    Representation,
}

#[derive(Subcommand)]
enum Command {
    /// Check an axiom suite on a catalog algebra or a definition file.
    Verify {
        target: String,
        suite: Suite,
        /// Even generator tested by the half-unit suite.
        #[arg(long)]
        unit: Option<String>,
    },
    /// Normal form of an element of the enveloping algebra.
    Nf {
        target: String,
        element: String,
        /// Completion degree bound.
        #[arg(long, default_value_t = 8)]
        degree: u32,
    },
    /// Compare the completed enveloping algebra with its quadratic model.
    Pbw {
        target: String,
        #[arg(long, default_value_t = 4)]
        degree: u32,
    },
    /// The two necessary conditions for the PBW property on cubic elements.
    Bg { target: String },
    /// Adjoint Lie superalgebra, its consistency checks and known identifications.
    Adjoint { target: String },
    /// Check a representation: `vad`, `diffop` or a definition file.
    Rep {
        target: String,
        rep: String,
        /// Which condition to check; defaults to `representation` for `diffop`
        /// and `module` otherwise.
        #[arg(long = "as", value_enum)]
        check: Option<RepCheck>,
        /// Polynomial degree bound of the `diffop` carrier.
        #[arg(long, default_value_t = 6)]
        degree: u32,
    },
    /// Whether a density module carries an antialgebra action.
    Density {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Scalar,
    },
    /// Rewriting rules of the completed enveloping algebra.
    Rules {
        target: String,
        #[arg(long, default_value_t = 4)]
        degree: u32,
    },
}

/// A catalog name, or the path of a definition file.
pub fn load_target(target: &str, window: Option<WeightWindow>) -> anyhow::Result<AlgebraSpec> {
    if Path::new(target).is_file() {
        let text = std::fs::read_to_string(target).with_context(|| format!("reading {target}"))?;
        let spec = load_spec(&text).with_context(|| format!("in {target}"))?;
        return Ok(match window {
            Some(w) => spec.with_window(w),
            None => spec,
        });
    }
    Ok(catalog(target, window)?)
}

fn config(cli: &Cli) -> BTreeMap<String, String> {
    let mut c = BTreeMap::new();
    let mut put = |k: &str, v: String| {
        c.insert(k.to_string(), v);
    };
    if let Some(w) = cli.window {
        put("window", w.to_string());
    }
    match &cli.command {
        Command::Verify { target, suite, unit } => {
            put("target", target.clone());
            put("suite", suite.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default());
            if let Some(u) = unit {
                put("unit", u.clone());
            }
        }
        Command::Nf { target, degree, .. } | Command::Pbw { target, degree } | Command::Rules { target, degree } => {
            put("target", target.clone());
            put("degree", degree.to_string());
        }
        Command::Bg { target } | Command::Adjoint { target } => put("target", target.clone()),
        Command::Rep { target, rep, check, degree } => {
            put("target", target.clone());
            put("rep", rep.clone());
            if let Some(c) = check.and_then(|c| c.to_possible_value()) {
                put("as", c.get_name().to_string());
            }
            if rep == "diffop" {
                put("degree", degree.to_string());
            }
        }
        Command::Density { lambda } => put("lambda", lambda.to_string()),
    }
    c
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let w = cli.window;
    match &cli.command {
        Command::Verify { target, suite, unit } => commands::verify(&load_target(target, w)?, *suite, unit.as_deref()),
        Command::Nf { target, element, degree } => commands::nf(&load_target(target, w)?, element, *degree),
        Command::Pbw { target, degree } => commands::pbw(&load_target(target, w)?, *degree),
        Command::Bg { target } => commands::bg(&load_target(target, w)?),
        Command::Adjoint { target } => commands::adjoint(&load_target(target, w)?),
        Command::Rep { target, rep, check, degree } => commands::rep(&load_target(target, w)?, rep, *check, *degree),
        Command::Density { lambda } => match w {
            Some(w) => commands::density(*lambda, w),
            None => bail!("density needs --window"),
        },
        Command::Rules { target, degree } => commands::rules(&load_target(target, w)?, *degree),
    }
}

fn quoted(arg: &str) -> String {
    if arg.is_empty() || arg.contains(char::is_whitespace) {
        format!("{arg:?}")
    } else {
        arg.to_string()
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let elapsed = start.elapsed().as_millis();
    match cli.format {
        Format::Human => {
            let _ = write!(std::io::stdout(), "{}", render_human(&outcome));
            eprintln!("elapsed: {elapsed} ms");
        }
        Format::Json => {
            let command = std::env::args().skip(1).map(|a| quoted(&a)).collect::<Vec<_>>().join(" ");
            match render_json(&command, &config(&cli), &outcome, elapsed) {
                Ok(s) => {
                    let _ = writeln!(std::io::stdout(), "{s}");
                }
                Err(e) => {
                    eprintln!("error: {e:#}");
                    return ExitCode::from(2);
                }
            }
        }
    }
    if outcome.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
