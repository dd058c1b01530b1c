//! Command-line front end for the motivic and Lefschetz decomposition engines.

pub mod descriptor_file;
pub mod render;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use motdec_core::lefschetz::lefschetz_report;
use motdec_core::motivic::{beauville_table, decompose_with, product_index_set};
use motdec_core::realization::{build_operators, build_realization, compare_predictions, verify};
use motdec_core::weight_lattice::DualityConvention;
use motdec_core::{Error, Result};
use serde::Serialize;

pub use descriptor_file::{load_descriptor, DescriptorFile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Md,
    Json,
}

#[derive(Debug, Args)]
struct Common {
    /// Descriptor file (JSON).
    path: PathBuf,
    #[arg(long, value_enum, default_value = "md")]
    format: Format,
}

#[derive(Debug, Parser)]
#[command(name = "motdec", version, about = "Motivic and Lefschetz decompositions of abelian schemes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Refined motivic decomposition indexed by admissible Γ-orbits.
    Decompose {
        #[command(flatten)]
        common: Common,
        /// Identify the dual center through the polarization (conjugates CM centers).
        #[arg(long)]
        conjugate_dual: bool,
    },
    /// Lefschetz components with their refinement, depth and core.
    Lefschetz {
        #[command(flatten)]
        common: Common,
    },
    /// Summands contributing to each Beauville piece of CH^j.
    Beauville {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        codim: u32,
        /// Also list the rows with negative s.
        #[arg(long)]
        include_negative: bool,
    },
    /// Checks the Lie-algebra relations on the exterior-algebra model.
    VerifySp {
        #[command(flatten)]
        common: Common,
    },
    /// Compares character-oracle multiplicities with the combinatorial predictions.
    Compare {
        #[command(flatten)]
        common: Common,
    },
    /// Index set of the decomposition of a product of abelian schemes.
    Product {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<u32>,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
}

/// What a run printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: 0 }
    }

    fn error(e: &Error) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() }
    }
}

fn emit<T: Serialize>(format: Format, value: &T, md: impl FnOnce(&T) -> String) -> Result<String> {
    match format {
        Format::Md => Ok(md(value)),
        Format::Json => serde_json::to_string_pretty(value)
            .map(|s| s + "\n")
            .map_err(|e| Error::Verification(format!("serializing the report: {e}"))),
    }
}

/// A report that was produced but failed its own checks: printed, then exit 3.
fn gated(stdout: String, passed: bool, what: &str) -> Outcome {
    if passed {
        Outcome::ok(stdout)
    } else {
        Outcome { stdout, stderr: format!("error: {what}\n"), code: 3 }
    }
}

fn execute(command: Command) -> Result<Outcome> {
    match command {
        Command::Decompose { common, conjugate_dual } => {
            let desc = load_descriptor(&common.path)?;
            let convention =
                if conjugate_dual { DualityConvention::Polarization } else { DualityConvention::DualScheme };
            let report = decompose_with(&desc, convention)?;
            Ok(Outcome::ok(emit(common.format, &report, render::decompose_md)?))
        }
        Command::Lefschetz { common } => {
            let desc = load_descriptor(&common.path)?;
            let report = lefschetz_report(&desc)?;
            Ok(Outcome::ok(emit(common.format, &report, render::lefschetz_md)?))
        }
        Command::Beauville { common, codim, include_negative } => {
            let desc = load_descriptor(&common.path)?;
            let table = beauville_table(&desc, codim, include_negative)?;
            Ok(Outcome::ok(emit(common.format, &table, |t| render::beauville_md(codim, t))?))
        }
        Command::VerifySp { common } => {
            let desc = load_descriptor(&common.path)?;
            let ops = build_operators(&build_realization(&desc)?)?;
            let report = verify(&ops)?;
            let out = emit(common.format, &report, render::verify_md)?;
            let what = report.failure_summary().unwrap_or_default();
            Ok(gated(out, report.passed, &format!("verification failure: {what}")))
        }
        Command::Compare { common } => {
            let desc = load_descriptor(&common.path)?;
            let report = compare_predictions(&desc)?;
            let out = emit(common.format, &report, render::compare_md)?;
            let what = report.mismatches().join("; ");
            Ok(gated(out, report.passed, &format!("prediction mismatch: {what}")))
        }
        Command::Product { dims, format } => {
            let indices = product_index_set(&dims)?;
            Ok(Outcome::ok(emit(format, &indices, |i| render::product_md(&dims, i))?))
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code: 1 }
            } else {
                Outcome::ok(text)
            };
        }
    };
    execute(cli.command).unwrap_or_else(|e| Outcome::error(&e))
}
