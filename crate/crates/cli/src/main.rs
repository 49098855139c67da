//! `monopole`: batch front end for the exact computations in `monopole-core`.
//!
//! Exit codes: 0 computed, 1 the input is mathematically inconsistent,
//! 2 usage, parse or I/O failure.

mod commands;
mod expr;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use monopole_core::manifolds::Library;

use commands::{CliError, Report, RingChoice, EXIT_USAGE};

/// Directory whose *.json descriptor files replace the bundled library.
const LIBRARY_ENV: &str = "MONOPOLE_LIBRARY_DIR";

#[derive(Parser)]
#[command(
    name = "monopole",
    version,
    about = "Exact computations for refined Seiberg-Witten invariants"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of an element of R(Pin(2)) or R(T).
    #[command(group(ArgGroup::new("which").required(true).args(["pin", "t"])))]
    Ring {
        /// Element of R(Pin(2)) = Z[λ,h]/(λ²−1, λh−h).
        #[arg(long, allow_hyphen_values = true)]
        pin: Option<String>,
        /// Element of R(T) = Z[z, z⁻¹].
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        /// Apply the restriction R(Pin(2)) → R(T).
        #[arg(long, alias = "restrict-to-T")]
        restrict_to_t: bool,
        /// Evaluate the character at j.
        #[arg(long)]
        eval_j: bool,
    },
    /// 10/8-type bounds for spin manifolds and the character computation behind them.
    Furuta {
        #[arg(long, allow_hyphen_values = true)]
        sign: i64,
        #[arg(long)]
        b_plus: Option<u32>,
    },
    /// The group Z ⊕ A(k,d) receiving refined invariants.
    Group {
        #[arg(long, conflicts_with = "k")]
        b_plus: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        d: u32,
    },
    /// K-theoretic lower bound for stable James numbers.
    James {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: usize,
    },
    /// Decide (non-)vanishing of the monopole class of a sum.
    Classify {
        #[arg(long)]
        file: PathBuf,
        /// Expression name; all expressions when omitted.
        #[arg(long)]
        expr: Option<String>,
    },
    /// Descriptor of the underlying manifold of a sum.
    Sum {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        expr: Option<String>,
    },
    /// Stable stem π_n of the sphere spectrum, 0 ≤ n ≤ 5.
    Stem {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
}

fn library() -> Result<Library, CliError> {
    let dir = std::env::var_os(LIBRARY_ENV).map(PathBuf::from);
    Library::load(dir.as_deref()).map_err(|e| CliError {
        code: EXIT_USAGE,
        message: format!("{LIBRARY_ENV}: {e}"),
    })
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Ring {
            pin,
            t,
            restrict_to_t,
            eval_j,
        } => match (pin, t) {
            (Some(x), None) => commands::ring(RingChoice::Pin, x, *restrict_to_t, *eval_j),
            (None, Some(x)) => commands::ring(RingChoice::T, x, *restrict_to_t, *eval_j),
            _ => unreachable!("clap enforces exactly one of --pin and --t"),
        },
        Command::Furuta { sign, b_plus } => commands::furuta(*sign, *b_plus),
        Command::Group { b_plus, k, d } => commands::group(*b_plus, *k, *d),
        Command::James { m, n } => commands::james(*m, *n),
        Command::Classify { file, expr } => {
            commands::classify_cmd(file, expr.as_deref(), &library()?)
        }
        Command::Sum { file, expr } => commands::sum(file, expr.as_deref(), &library()?),
        Command::Stem { n } => commands::stem(*n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let out = if cli.json {
                serde_json::to_string_pretty(&report.json).expect("JSON values serialize")
            } else {
                report.text
            };
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout().lock(), "{out}");
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
