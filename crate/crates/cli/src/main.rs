//! `galdim`: exact classification of tame local Galois representation
//! dimensions, explicit model construction and verification, and Sophie
//! Germain prime statistics.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

mod commands;
mod output;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "galdim",
    version,
    about = "Exact toolkit for admissible dimensions of local Galois representations \
             with rational inertia traces, and Sophie Germain prime density"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the tamely admissible dimensions over a local field, with the
    /// conductors witnessing each
    TameDims {
        /// Residue characteristic (a prime)
        #[arg(long)]
        p: u64,
        /// Residue degree, so the residue field has q = p^f elements
        #[arg(long)]
        f: u32,
        /// Largest dimension to report
        #[arg(long, default_value_t = 100)]
        max_dim: u64,
        /// Emit a JSON envelope instead of text
        #[arg(long)]
        json: bool,
    },
    /// Decide whether abelian varieties of dimension d over the field are
    /// forced to have reducible associated representations
    CheckAv {
        /// Residue characteristic (a prime)
        #[arg(long)]
        p: u64,
        /// Residue degree
        #[arg(long)]
        f: u32,
        /// Abelian variety dimension
        #[arg(long)]
        d: u64,
        #[arg(long)]
        json: bool,
    },
    /// Build the explicit tame model for conductor m and residue size q
    BuildRep {
        /// Order of the tame quotient acted on (coprime to q)
        #[arg(long)]
        m: u64,
        /// Residue field size
        #[arg(long)]
        q: u64,
        /// Run the identity suite (Frobenius relation, characteristic
        /// polynomial, inertia traces, commutant) and report each check
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
        /// Write the model serialization to this file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// All m with phi(m) = d
    InverseTotient {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        json: bool,
    },
    /// Exact Sophie Germain count up to x with the Bateman-Horn prediction
    Sg {
        /// Count Sophie Germain primes d <= x (sieves up to 2x + 1)
        #[arg(long)]
        x: u64,
        /// Euler-product truncation for the constant C
        #[arg(long, default_value_t = 1_000_000)]
        prime_bound: u64,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// Emit a CSV header and row instead of text
        #[arg(long)]
        csv: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(2);
        }
    }
}
