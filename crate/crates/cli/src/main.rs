//! `mhs`: derive closed forms for sums of products of multiple harmonic sums, regenerate the
//! coefficient tables, and run the congruence verification sweeps.

mod commands;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mhs_core::Composition;

#[derive(Parser, Debug)]
#[command(name = "mhs", version, about = "Exact multiple harmonic sum identities and congruences")]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads for verification sweeps (0 = all cores)
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Congruences,
    Theorem,
    Corollary,
    Staver,
    All,
}

fn parse_composition(text: &str) -> Result<Composition, String> {
    text.parse().map_err(|e: mhs_core::Error| e.to_string())
}

/// Factors of a product, written `s1;s2;...`.
#[derive(Clone, Debug)]
pub struct Product(pub Vec<Composition>);

fn parse_product(text: &str) -> Result<Product, String> {
    let factors = text
        .split(';')
        .map(parse_composition)
        .collect::<Result<Vec<_>, _>>()?;
    if factors.iter().any(Composition::is_empty) {
        return Err("every factor must be a nonempty composition".into());
    }
    Ok(Product(factors))
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand H_n(s)·H_n(t) with the stuffle product
    Stuffle {
        #[arg(value_parser = parse_composition, allow_hyphen_values = true)]
        s: Composition,
        #[arg(value_parser = parse_composition, allow_hyphen_values = true)]
        t: Composition,
    },
    /// Closed form of Σ_{k=1}^n Π_j H_k(s_j); factors separated by ';' (e.g. "1;1,1")
    Derive {
        #[arg(value_parser = parse_product)]
        product: Product,
        /// JSON list of expressions to express Σ_k f_k - (n+1) f_n in
        #[arg(long)]
        basis: Option<PathBuf>,
        /// Verify against brute-force partial sums for n = 1..=N
        #[arg(long, value_name = "N")]
        check: Option<u64>,
    },
    /// Regenerate the weight-4 or weight-5 coefficient tables
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u32).range(4..=5))]
        weight: u32,
    },
    /// Run verification suites and emit a JSON report
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 7)]
        pmin: u64,
        #[arg(long, default_value_t = 50)]
        pmax: u64,
        #[arg(long, default_value_t = -6, allow_hyphen_values = true)]
        amin: i64,
        #[arg(long, default_value_t = 6, allow_hyphen_values = true)]
        amax: i64,
        #[arg(long, default_value_t = 100)]
        nmax: u64,
    },
    /// Express d!·H_n({1}^d) through products of power sums H_n(m)
    Reduce {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Verify { pmin, pmax, amin, amax, nmax, .. } = &cli.command {
        if *pmin <= 5 || pmin > pmax || amin > amax || *nmax == 0 {
            use clap::CommandFactory;
            Cli::command()
                .error(
                    clap::error::ErrorKind::ValueValidation,
                    "expected 5 < pmin ≤ pmax, amin ≤ amax and nmax ≥ 1",
                )
                .exit();
        }
    }
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
