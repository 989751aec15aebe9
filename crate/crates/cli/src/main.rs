//! Command-line front end. Every subcommand prints a human-readable report,
//! or a JSON document with `--json`. Exit codes: 0 ok, 1 a check failed,
//! 2 usage or input error, 3 internal defect.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qsuper::AlgebraError;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "qsuper", version, about = "Exact computations in U_q(gl(m|n))")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized probes.
    #[arg(long, global = true, default_value_t = 20240601)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Rank {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Normal-form an expression.
    Nf {
        #[command(flatten)]
        rank: Rank,
        /// Specialize coefficients at a primitive l-th root of unity.
        #[arg(long)]
        l: Option<u32>,
        expr: String,
    },
    /// Defining relations, root-vector identities, odd-order products and associativity.
    Relcheck {
        #[command(flatten)]
        rank: Rank,
    },
    /// Typicality factors and verdict for a weight (omit the weight for the symbolic polynomial).
    Typical {
        #[command(flatten)]
        rank: Rank,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Build the Kac module of a weight and decide simplicity.
    Kac {
        #[command(flatten)]
        rank: Rank,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, default_value_t = qsuper::modules::DEFAULT_MAX_DIM)]
        max_dim: usize,
    },
    /// Root-of-unity report; with a weight, also the Kac module over the reduced algebra.
    Unity {
        #[command(flatten)]
        rank: Rank,
        #[arg(long)]
        l: u32,
        /// Integral weight: λ(K_s) = η^{±λ_s}.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        /// Expected χ(z_s) values as scalar expressions, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        chi_z: Option<String>,
        #[arg(long, default_value_t = qsuper::modules::DEFAULT_MAX_DIM)]
        max_dim: usize,
    },
    /// Run the full verification battery.
    Selftest {
        /// Run a single entry (1-9).
        #[arg(long)]
        only: Option<u8>,
    },
}

/// Result of a subcommand: whether every check passed.
pub enum Verdict {
    Ok,
    Failed,
}

#[derive(Serialize)]
struct ErrorRecord<'a> {
    error: &'a str,
    message: String,
    exit_code: u8,
}

fn error_kind(e: &AlgebraError) -> &'static str {
    match e {
        AlgebraError::DivisionByZero => "DivisionByZero",
        AlgebraError::DenominatorVanishesAtRoot { .. } => "DenominatorVanishesAtRoot",
        AlgebraError::InvalidRootOrder(_) => "InvalidRootOrder",
        AlgebraError::UnsupportedDivision(_) => "UnsupportedDivision",
        AlgebraError::InvalidSignature { .. } => "InvalidSignature",
        AlgebraError::IndexOutOfRange(_) => "IndexOutOfRange",
        AlgebraError::BadRootIndices { .. } => "BadRootIndices",
        AlgebraError::BraidAtOddRoot(_) => "BraidAtOddRoot",
        AlgebraError::UnknownCommutationRule(_) => "UnknownCommutationRule",
        AlgebraError::NonDominantWeight(_) => "NonDominantWeight",
        AlgebraError::IncompatibleCharacter(_) => "IncompatibleCharacter",
        AlgebraError::NotAScalar => "NotAScalar",
        AlgebraError::WeightIndeterminateInAlgebra => "WeightIndeterminateInAlgebra",
        AlgebraError::InvalidExponent(_) => "InvalidExponent",
        AlgebraError::ModuleTooLarge(_) => "ModuleTooLarge",
        AlgebraError::Serialization(_) => "Serialization",
        AlgebraError::Parse { .. } => "Parse",
    }
}

fn exit_code(e: &AlgebraError) -> u8 {
    match e {
        AlgebraError::UnknownCommutationRule(_) | AlgebraError::Serialization(_) => 3,
        AlgebraError::DivisionByZero | AlgebraError::DenominatorVanishesAtRoot { .. } | AlgebraError::ModuleTooLarge(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = commands::Output { json: cli.json };
    let result = match cli.command {
        Command::Nf { rank, l, expr } => commands::nf(&out, rank.m, rank.n, l, &expr),
        Command::Relcheck { rank } => commands::relcheck(&out, rank.m, rank.n, cli.seed),
        Command::Typical { rank, weight } => commands::typical(&out, rank.m, rank.n, weight.as_deref()),
        Command::Kac { rank, weight, max_dim } => commands::kac(&out, rank.m, rank.n, &weight, max_dim),
        Command::Unity { rank, l, weight, chi_z, max_dim } => {
            commands::unity(&out, rank.m, rank.n, l, weight.as_deref(), chi_z.as_deref(), max_dim)
        }
        Command::Selftest { only } => commands::selftest(&out, only, cli.seed),
    };
    match result {
        Ok(Verdict::Ok) => ExitCode::SUCCESS,
        Ok(Verdict::Failed) => ExitCode::from(1),
        Err(e) => {
            let code = exit_code(&e);
            let rec = ErrorRecord { error: error_kind(&e), message: e.to_string(), exit_code: code };
            eprintln!("{}", serde_json::to_string(&rec).unwrap_or_else(|_| e.to_string()));
            ExitCode::from(code)
        }
    }
}
