//! Command line interface for the solvmfd toolkit.
//!
//! Every subcommand prints a single JSON report to stdout (optionally also
//! written to a file via `--json`) and exits with 0 when the property under
//! test holds, 1 when it checkably fails, and 2 on malformed input.

mod commands;
mod report;

use clap::{Parser, Subcommand};
use solvmfd_core::CoreError;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "solvmfd",
    version,
    about = "Classify compact quotients of 3-dimensional complex solvable Lie groups"
)]
struct Cli {
    /// Tolerance for floating-point residual checks.
    #[arg(long, global = true, default_value_t = solvmfd_core::tol::DEFAULT_TOL)]
    tol: f64,

    /// Seed for randomized subcommands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Also write the JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    /// Pretty-print the JSON report.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the three-kind classification catalog with structural checks.
    Catalog,
    /// Test integrability of an almost complex structure on a Lie algebra.
    Integrable {
        /// Lie algebra JSON file.
        #[arg(long, value_name = "FILE")]
        algebra: PathBuf,
        /// Almost complex structure JSON file.
        #[arg(long, value_name = "FILE")]
        j: PathBuf,
    },
    /// Verify a lattice specification, then classify the quotient and
    /// compute its invariants.
    Lattice {
        /// Lattice specification JSON file.
        #[arg(long, value_name = "FILE")]
        spec: PathBuf,
    },
    /// First Betti number of the quotient defined by a lattice.
    H1 {
        /// Lattice specification JSON file.
        #[arg(long, value_name = "FILE")]
        spec: PathBuf,
    },
    /// Check the frame diagonalization lemma on one frame or many random
    /// ones.
    Lemma2 {
        /// 2x2 frame block (JSON array of arrays).
        #[arg(long, value_name = "FILE", requires = "p", conflicts_with = "random")]
        q: Option<PathBuf>,
        /// 4x4 frame block (JSON array of arrays).
        #[arg(long, value_name = "FILE", requires = "q", conflicts_with = "random")]
        p: Option<PathBuf>,
        /// Check this many seeded random frames instead of reading files.
        #[arg(long, value_name = "N")]
        random: Option<usize>,
    },
    /// Decide pseudo-Kahler existence for the quotient defined by a lattice.
    Pseudokahler {
        /// Lattice specification JSON file.
        #[arg(long, value_name = "FILE")]
        spec: PathBuf,
    },
}

fn run(cli: &Cli) -> anyhow::Result<report::RunReport> {
    match &cli.command {
        Command::Catalog => commands::catalog_cmd(),
        Command::Integrable { algebra, j } => commands::integrable_cmd(algebra, j),
        Command::Lattice { spec } => commands::lattice_cmd(spec, cli.tol),
        Command::H1 { spec } => commands::h1_cmd(spec, cli.tol),
        Command::Lemma2 { q, p, random } => {
            let input = match (q, p, random) {
                (Some(q), Some(p), None) => commands::Lemma2Input::Files { q, p },
                (None, None, Some(count)) => commands::Lemma2Input::Random {
                    count: *count,
                    seed: cli.seed,
                },
                _ => anyhow::bail!(CoreError::InvalidSpec(
                    "lemma2 needs either --q and --p or --random N".into()
                )),
            };
            commands::lemma2_cmd(input, cli.tol)
        }
        Command::Pseudokahler { spec } => commands::pseudokahler_cmd(spec, cli.tol),
    }
}

/// Exit code for an error: 1 when a check ran and failed, 2 when the inputs
/// never made it through parsing or validation.
fn error_exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<CoreError>() {
        Some(CoreError::Classification(_)) | Some(CoreError::NotSubalgebra(_)) => 1,
        Some(_) => 2,
        None => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if let Err(err) = report.emit(cli.pretty, cli.json.as_deref()) {
                eprintln!("error: {err:#}");
                return ExitCode::from(2);
            }
            ExitCode::from(u8::from(!report.pass))
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(error_exit_code(&err))
        }
    }
}
