mod commands;
mod output;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qcyclic::distance::DEFAULT_BUDGET;

use crate::output::{exit_code, Report};

#[derive(Parser, Debug)]
#[command(name = "qcyclic", version, about = "Quantum codes from quaternary cyclic and duadic codes")]
pub struct Cli {
    /// Maximum number of codewords visited by each distance search.
    #[arg(long, global = true, env = "QCYCLIC_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,

    /// Worker threads for distance searches.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: Option<u16>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// JSON list of `{n, k, d, source, kind}` records with known distances.
    #[arg(long, global = true)]
    pub annotations: Option<PathBuf>,

    /// Print full defining sets next to coset leaders.
    #[arg(long, global = true)]
    pub expand: bool,

    #[command(subcommand)]
    pub cmd: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A cyclic code given by its defining set.
#[derive(Args, Debug, Clone, Default)]
pub struct CodeArgs {
    /// Code length (odd).
    #[arg(short = 'n')]
    pub n: Option<usize>,

    /// Coset leaders of the defining set, comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub leaders: Option<Vec<i64>>,

    /// The quadratic residues mod a prime n.
    #[arg(long)]
    pub qr: bool,

    /// First half of the i-th splitting given by -2 (canonical order, from 0).
    #[arg(long)]
    pub duadic_index: Option<usize>,

    /// A code descriptor JSON file.
    #[arg(long)]
    pub descriptor: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the q-cyclotomic cosets mod n.
    Cosets {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'q', default_value_t = 4)]
        q: usize,
    },
    /// List the splittings of Z_n, optionally only those given by one multiplier.
    Splittings {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        multiplier: Option<i64>,
    },
    /// Build a quantum code and bound its distance.
    Quantum {
        #[command(flatten)]
        code: CodeArgs,
        /// Treat the defining set as that of a binary cyclic code.
        #[arg(long)]
        binary: bool,
        /// Fixed subcode of the odd-like code under this multiplier as extra evidence.
        #[arg(long = "fixed-subcode", allow_negative_numbers = true)]
        fixed_subcode: Vec<i64>,
        /// Use the annotated dual-containing classical [n, K] code instead of a defining set.
        #[arg(long, value_name = "K")]
        annotated: Option<usize>,
    },
    /// Bound the minimum distance of a cyclic code.
    Distance {
        #[command(flatten)]
        code: CodeArgs,
        /// Fixed subcode under this multiplier as extra evidence (repeatable).
        #[arg(long = "fixed-subcode", allow_negative_numbers = true)]
        fixed_subcode: Vec<i64>,
        /// Search the binary code with the same defining set.
        #[arg(long)]
        via_binary: bool,
        /// Only count words outside the subcode whose defining set adds these leaders.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        outside: Option<Vec<i64>>,
    },
    /// Reproduce the table of small zero-dimensional codes.
    Table {
        #[arg(long, default_value_t = 23)]
        max_n: usize,
        /// Include the rows from n = 29 on.
        #[arg(long)]
        slow: bool,
    },
    /// Derive shorter codes from an annotated quantum code.
    Secondary {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'k')]
        k: usize,
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
    /// Print the descriptor of a cyclic code.
    Describe {
        #[command(flatten)]
        code: CodeArgs,
    },
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    if let Some(w) = cli.workers {
        rayon::ThreadPoolBuilder::new().num_threads(w as usize).build_global()?;
    }
    commands::dispatch(cli)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
