//! `maxplus` — decide whether a solution of A ⊗ x ≥ x is an extremal
//! generator of the solution space, with machine-checkable evidence.

use std::path::PathBuf;
use std::process;

use clap::{Parser, Subcommand};
use maxplus_cli::commands;
use maxplus_cli::gen::GenParams;
use maxplus_core::Error;

#[derive(Parser)]
#[command(
    name = "maxplus",
    version,
    about = "Decides whether a solution x of A \u{2297} x \u{2265} x is an extremal \
             generator, with verifiable evidence either way"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide extremality; prints a JSON verdict
    Check {
        /// Instance file: dimension, matrix rows, optional blank line + vector
        instance: PathBuf,
        /// Read the vector from this file instead of the instance file
        #[arg(long)]
        vector: Option<PathBuf>,
        /// Attach a verified decomposition to non-extremal verdicts
        #[arg(long)]
        witness: bool,
        /// Verdicts are always JSON; accepted for scripting symmetry
        #[arg(long)]
        json: bool,
    },
    /// Same as `check --witness`
    Witness {
        instance: PathBuf,
        #[arg(long)]
        vector: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// List each support node with its class and degrees
    Classify {
        instance: PathBuf,
        #[arg(long)]
        vector: Option<PathBuf>,
        /// Emit the tangent digraph in DOT format
        #[arg(long)]
        dot: bool,
        /// Emit the node table as JSON
        #[arg(long)]
        json: bool,
    },
    /// Cross-check the verdict by exhaustive search (small integer instances)
    Oracle {
        instance: PathBuf,
        #[arg(long)]
        vector: Option<PathBuf>,
    },
    /// Generate a random instance whose vector is guaranteed to be a solution
    Gen {
        /// Dimension of the square matrix
        n: usize,
        /// Probability that an entry is finite, in (0, 1]
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        /// Smallest finite entry
        #[arg(long, default_value_t = -9, allow_negative_numbers = true)]
        min: i64,
        /// Largest finite entry
        #[arg(long, default_value_t = 9, allow_negative_numbers = true)]
        max: i64,
        /// Seed; same seed, same bytes
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time the decision procedure across sizes and report log-log slopes
    Bench {
        /// Comma-separated sizes, each at least 2
        #[arg(long, value_delimiter = ',', default_value = "100,200,400,800")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Repetitions per size (median is reported)
        #[arg(long, default_value_t = 5)]
        reps: usize,
        /// Density of the generated instances
        #[arg(long, default_value_t = 1.0)]
        density: f64,
        /// Emit the table as JSON
        #[arg(long)]
        json: bool,
    },
}

fn dispatch(command: Command) -> maxplus_core::Result<String> {
    match command {
        Command::Check {
            instance,
            vector,
            witness,
            json: _,
        } => commands::cmd_check(&instance, vector.as_deref(), witness),
        Command::Witness {
            instance,
            vector,
            json: _,
        } => commands::cmd_check(&instance, vector.as_deref(), true),
        Command::Classify {
            instance,
            vector,
            dot,
            json,
        } => commands::cmd_classify(&instance, vector.as_deref(), dot, json),
        Command::Oracle { instance, vector } => commands::cmd_oracle(&instance, vector.as_deref()),
        Command::Gen {
            n,
            density,
            min,
            max,
            seed,
        } => commands::cmd_gen(&GenParams {
            n,
            density,
            min,
            max,
            seed,
        }),
        Command::Bench {
            sizes,
            seed,
            reps,
            density,
            json,
        } => commands::cmd_bench(&sizes, seed, reps, density, json),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            process::exit(code);
        }
    };
    match dispatch(cli.command) {
        Ok(out) => println!("{}", out.trim_end_matches('\n')),
        Err(Error::InvalidInput(msg)) => {
            eprintln!("error: {msg}");
            process::exit(2);
        }
        Err(Error::InvariantViolation(msg)) => {
            eprintln!("internal error: {msg}");
            process::exit(3);
        }
    }
}
