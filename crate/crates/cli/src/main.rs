#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use commands::{Failure, Outcome};
use output::Format;

/// Environment variable holding the worker thread count.
const THREADS_VAR: &str = "PLEIG_THREADS";

#[derive(Parser)]
#[command(
    name = "pleig",
    version,
    about = "First eigenvalue of the one-dimensional p-Laplacian"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// lambda, log lambda and lambda' at p, and the rescaled values on (-L, L)
    Eval {
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[arg(long = "L", default_value_t = 1.0, allow_negative_numbers = true)]
        half_length: f64,
    },
    /// Lower and upper bounds on a uniform grid of p
    Bounds {
        #[arg(long, allow_negative_numbers = true)]
        pmin: f64,
        #[arg(long, allow_negative_numbers = true)]
        pmax: f64,
        #[arg(long)]
        n: usize,
    },
    /// Coefficients of the large-p expansion of lambda(p) - p in pi/p
    Series {
        #[arg(long, value_parser = clap::value_parser!(u16).range(0..=1000))]
        order: u16,
        /// Also evaluate the partial sums at this p
        #[arg(long, allow_negative_numbers = true)]
        eval_p: Option<f64>,
    },
    /// Shooting eigensolver and half-period quadrature against the closed form
    Oracle {
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Scan inequalities for violations
    #[command(group(ArgGroup::new("which").required(true).args(["id", "all"])))]
    Verify {
        #[arg(long)]
        id: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 3)]
        refine: usize,
    },
    /// Convergence tables at p -> 1 and p -> inf
    Limits,
    /// Recompute the decimal constants used in the bound proofs
    Constants,
    /// Exponent at which lambda(p)/L^p stops increasing
    Pstar {
        #[arg(long = "L", allow_negative_numbers = true)]
        half_length: f64,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = match raw.trim().parse() {
        Ok(n) if n >= 1 => n,
        _ => {
            return Err(Failure::Usage(format!(
                "{THREADS_VAR} must be an integer >= 1, got '{raw}'"
            )))
        }
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn run(cli: Cli) -> Outcome {
    configure_threads()?;
    match cli.command {
        Command::Eval { p, half_length } => commands::eval(p, half_length),
        Command::Bounds { pmin, pmax, n } => commands::bounds(pmin, pmax, n),
        Command::Series { order, eval_p } => commands::series(order.into(), eval_p),
        Command::Oracle { p, tol } => commands::oracle(p, tol),
        Command::Verify {
            id,
            samples,
            refine,
            ..
        } => commands::verify(id.as_deref(), samples, refine),
        Command::Limits => commands::limits(),
        Command::Constants => commands::constants(),
        Command::Pstar { half_length, tol } => commands::pstar(half_length, tol),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok((table, ok)) => {
            let mut out = io::stdout().lock();
            if let Err(e) = table.write(format, &mut out).and_then(|_| out.flush()) {
                eprintln!("error: {e}");
                return ExitCode::FAILURE;
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
