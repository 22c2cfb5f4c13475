//! `equiobs`: command-line access to the obstruction computations.
//!
//! Every subcommand prints one report on stdout, as JSON (default) or text.
//! Diagnostics go to stderr. Exit status is 2 for invalid arguments and 1
//! when `verify` finds a mismatch.

mod commands;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{Failure, Report};

#[derive(Parser, Debug)]
#[command(name = "equiobs", version, about = "Exact equivariant obstruction computations")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Twisted cohomology H^{2n-1} of the top fragment of S^n x S^n.
    Cohomology {
        #[arg(long, value_parser = clap::value_parser!(i64).range(8..=1_000_000_000))]
        n: i64,
    },
    /// The Z/2 chain-map example whose obstruction is 2 in Z/4.
    ObstructionExample,
    /// The general chain-map obstruction for a problem file over a group
    /// given as a Cayley table.
    Obstruction {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        problem: PathBuf,
    },
    /// The primary obstruction for (d, j) = (6k + 2, 4k + 1).
    Theta {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=1_000_000_000_000))]
        k: u64,
        /// Also compare with the enumerated degree (k <= 8).
        #[arg(long)]
        cross_check: bool,
    },
    /// Admissibility verdict for (d, j, 2).
    Admissible {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        j: u32,
    },
    /// Degree of multiplication of monic polynomials of even degrees m, n.
    Degree {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Degree of the induced map of spheres instead.
        #[arg(long)]
        sphere: bool,
    },
    /// Resultant of two polynomials given by ascending coefficients, e.g. `1,0,1`.
    Resultant {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Degree congruence mod 8 and its dimension hypothesis (k <= 8).
    Congruence {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=8))]
        k: u64,
    },
    /// Recomputes every reference value and compares.
    Verify,
}

fn run(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Cohomology { n } => commands::cohomology(n),
        Command::ObstructionExample => commands::obstruction_example(),
        Command::Obstruction { group, problem } => commands::obstruction(&group, &problem),
        Command::Theta { k, cross_check } => commands::theta(k, cross_check),
        Command::Admissible { d, j } => Ok(commands::admissible(d, j)),
        Command::Degree { m, n, sphere } => commands::degree(m, n, sphere),
        Command::Resultant { p, q } => commands::resultant(&p, &q),
        Command::Congruence { k } => commands::congruence(k),
        Command::Verify => Ok(verify::verify()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable")),
                Format::Text => print!("{}", report.text),
            }
            if report.failed {
                eprintln!("equiobs: some checks failed");
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("equiobs: {msg}");
            eprintln!("Run `equiobs --help` for usage.");
            ExitCode::from(2)
        }
    }
}
