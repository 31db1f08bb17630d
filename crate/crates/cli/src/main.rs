use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ffc_cli::commands::{self, Options};
use ffc_cli::report::Format;
use ffc_cli::{CliError, Outcome};

#[derive(Parser)]
#[command(
    name = "ffc",
    version,
    about = "Verify class-number-one function fields over small finite fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Curve catalog (TOML); the built-in catalog is used when omitted
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    /// Restrict to one catalog id
    #[arg(long, global = true)]
    curve: Option<String>,
    /// Largest place degree in censuses
    #[arg(long, global = true, default_value_t = 5)]
    max_place_degree: u32,
    /// Largest point degree searched in the 64-row table
    #[arg(long, global = true, default_value_t = 4)]
    dmax: u32,
    /// Largest extension degree for the smoothness probe
    #[arg(long, global = true, default_value_t = 6)]
    probe_depth: u32,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Check genus and class number of every catalog curve
    Verify {
        #[command(flatten)]
        common: Common,
    },
    /// Check the 64 cubic-quadric pairs and analyze the survivor
    Table64 {
        #[command(flatten)]
        common: Common,
    },
    /// Point counts, L-polynomial, class number and census of one model
    Zeta {
        /// Model file with `q` and a `[model]` table
        model: Option<PathBuf>,
        /// Number of point counts N_1..N_m to report
        #[arg(long)]
        counts: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Place census through --max-place-degree
    Places {
        #[command(flatten)]
        common: Common,
    },
    /// Run the built-in invariant checks
    Selftest {
        #[command(flatten)]
        common: Common,
    },
}

impl From<Common> for Options {
    fn from(c: Common) -> Self {
        Options {
            catalog: c.catalog,
            curve: c.curve,
            max_place_degree: c.max_place_degree,
            dmax: c.dmax,
            probe_depth: c.probe_depth,
            out: c.out,
            format: c.format,
        }
    }
}

fn thread_count() -> Result<usize, CliError> {
    match std::env::var("FFC_THREADS") {
        Err(_) => Ok(1),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(CliError::Input(format!(
                "FFC_THREADS must be a positive integer, got {v:?}"
            ))),
        },
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let threads = thread_count()?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Input(format!("thread pool: {e}")))?;
    match cli.command {
        Command::Verify { common } => commands::verify(&common.into()),
        Command::Table64 { common } => commands::table64(&common.into()),
        Command::Zeta {
            model,
            counts,
            common,
        } => commands::zeta(&common.into(), model.as_deref(), counts),
        Command::Places { common } => commands::places(&common.into()),
        Command::Selftest { common } => commands::selftest(&common.into()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                Outcome::InputError.code()
            } else {
                0
            });
        }
    };
    let outcome = run(cli).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        e.outcome()
    });
    ExitCode::from(outcome.code())
}
