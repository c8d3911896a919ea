//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "carlitz", version, about = "Exact Carlitz-module arithmetic over F_q(T)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads for the data-parallel paths.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the payload here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct FieldArg {
    /// Size of the constant field, a prime power up to 2^16.
    #[arg(long)]
    pub q: u64,
}

#[derive(Args, Debug, Clone)]
pub struct PrimeArgs {
    #[command(flatten)]
    pub field: FieldArg,
    /// Monic irreducible polynomial in T.
    #[arg(long)]
    pub pi: String,
}

#[derive(Args, Debug, Clone)]
pub struct ThetaArgs {
    #[command(flatten)]
    pub prime: PrimeArgs,
    #[arg(long)]
    pub level: u32,
    /// Places in S: monic irreducibles or `inf`; pi is always included.
    #[arg(long = "S", num_args = 1.., required = true)]
    pub s: Vec<String>,
    /// Auxiliary places, monic irreducibles outside S.
    #[arg(long = "T", num_args = 1..)]
    pub t: Vec<String>,
    /// Degree in u to which the Euler product is expanded.
    #[arg(long, default_value_t = 12)]
    pub udeg: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The Carlitz module Phi_a.
    Phi {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        a: String,
    },
    /// The torsion polynomial Phi_(pi^n)(x).
    Torsion {
        #[command(flatten)]
        prime: PrimeArgs,
        #[arg(long)]
        n: u32,
    },
    /// Minimal polynomial of the torsion generator omega_n.
    Minpoly {
        #[command(flatten)]
        prime: PrimeArgs,
        #[arg(long)]
        n: u32,
    },
    /// The Carlitz exponential mod z^precision.
    Exp {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        precision: i64,
    },
    /// The Carlitz logarithm mod z^precision.
    Log {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        precision: i64,
    },
    /// The Carlitz factorial Pi(n).
    Factorial {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        n: u64,
    },
    /// Bernoulli-Carlitz numbers BC_1 .. BC_n.
    Bc {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        n: u64,
    },
    /// zeta_A(-k), for one k or for 1..=kmax.
    Zetaneg {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, conflicts_with = "kmax", required_unless_present = "kmax")]
        k: Option<u64>,
        #[arg(long)]
        kmax: Option<u64>,
    },
    /// Partial sum of zeta_A(k) over degrees <= D, in t = 1/T.
    Zetapos {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        k: u64,
        #[arg(long = "D")]
        d: usize,
        /// Requested t-adic precision; defaults to the certified bound.
        #[arg(long)]
        tail: Option<i64>,
    },
    /// zeta_A(-k) with the Euler factor at pi removed.
    Zetavadic {
        #[command(flatten)]
        prime: PrimeArgs,
        #[arg(long)]
        k: u64,
    },
    /// The Stickelberger element Theta_(S,T)(u).
    Stickelberger {
        #[command(flatten)]
        theta: ThetaArgs,
    },
    /// Theta at level `level`, projected to level `target`.
    Project {
        #[command(flatten)]
        theta: ThetaArgs,
        #[arg(long)]
        target: u32,
    },
    /// Theta under every character of the Galois group.
    Charval {
        #[command(flatten)]
        theta: ThetaArgs,
    },
    /// Coleman fixed-point, multiplicativity and norm-compatibility suites.
    Colemancheck,
    /// Checks delta_k(c(a, b)) = (a^k - b^k) BC_k / Pi(k) for k <= kmax.
    Cwverify {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        kmax: u32,
    },
    /// Even Bernoulli-Carlitz numbers divisible by pi.
    Okada {
        #[command(flatten)]
        prime: PrimeArgs,
    },
    /// Every property suite, at reduced scale.
    Selftest,
}
