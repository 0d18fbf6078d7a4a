mod commands;
mod config;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use likeiper::mpseries::{DEFAULT_DIGITS, DEFAULT_ORDER};
use likeiper::Error;

use commands::RouteArg;
use config::{Format, RunConfig};

/// Li-Keiper coefficients, their cluster bounds and the constant c, from
/// the Taylor expansion of the Riemann xi function about s = 1.
#[derive(Parser, Debug)]
#[command(name = "likeiper", version)]
struct Cli {
    /// Working precision in significant decimal digits.
    #[arg(long, global = true, default_value_t = DEFAULT_DIGITS)]
    digits: u32,

    /// Truncation order of the xi Taylor series.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER)]
    order: usize,

    /// Last index tabulated by `table`.
    #[arg(long = "max-n", global = true, default_value_t = 15)]
    max_n: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Constant cache file (default: $LIKEIPER_CACHE, then the user data directory).
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    /// Compute everything from scratch without reading or writing a cache.
    #[arg(long = "no-cache", global = true)]
    no_cache: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// phi, lambda, bounds and residuals for n = 1..max-n.
    Table {
        /// Add the n*lambda_1, 0.3x + const and 0.1 x log x + const columns.
        #[arg(long)]
        curves: bool,
    },
    /// Run every invariant check; exit status 1 if any fails.
    Verify,
    /// The constant c by one route.
    Constant {
        #[arg(long, value_enum, default_value_t = RouteArg::Exact)]
        route: RouteArg,
        /// Terms of the lambda series (default 15) or cutoff of the binary series (default 32).
        #[arg(long)]
        terms: Option<u64>,
    },
    /// Taylor coefficients a_0..a_order of xi about s = 1.
    Xi,
    /// Partitions of n with their cluster weights.
    Partitions {
        #[arg(long)]
        n: u32,
    },
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Usage(_) => 2,
        Error::Precision { .. } => 3,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    let cfg = RunConfig {
        digits: cli.digits,
        order: cli.order,
        max_n: cli.max_n,
        format: cli.format,
        cache_path: config::resolve_cache_path(cli.cache, cli.no_cache),
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let passed = match cli.command {
        Command::Table { curves } => commands::cmd_table(&cfg, curves, &mut out).map(|_| true),
        Command::Verify => commands::cmd_verify(&cfg, &mut out),
        Command::Constant { route, terms } => {
            commands::cmd_constant(&cfg, route, terms, &mut out).map(|_| true)
        }
        Command::Xi => commands::cmd_xi(&cfg, &mut out).map(|_| true),
        Command::Partitions { n } => commands::cmd_partitions(&cfg, n, &mut out).map(|_| true),
    }?;
    out.flush()?;
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("likeiper: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
