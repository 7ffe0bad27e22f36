//! `overgroups`: verification, search and catalog front end.

mod cases;
mod commands;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::Outcome;

#[derive(Parser, Debug)]
#[command(
    name = "overgroups",
    version,
    about = "Certify Boolean rank-2 overgroup intervals and reproduce their congruence families"
)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Directory holding generator files.
    #[arg(long, global = true, value_name = "DIR", default_value = "data")]
    data: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Recompute a counterexample end to end and write a certificate.
    Verify {
        #[arg(value_parser = verify::target_names())]
        target: String,
        /// Certificate path; extra subgroup classes get `.2`, `.3`, ... appended.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Re-check a certificate using only membership and order computations.
    CertCheck { file: PathBuf },
    /// Primes up to a limit in a catalog residue family.
    Primes {
        #[arg(long)]
        family: String,
        #[arg(long)]
        limit: u64,
    },
    /// Re-derive a catalog residue family by CRT.
    Derive {
        #[arg(long, required_unless_present = "id")]
        family: Option<String>,
        #[arg(conflicts_with = "family", hide = true)]
        id: Option<String>,
    },
    /// Exponents n with (q^n - 1)/(q - 1) prime.
    RepunitSearch {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n_max: u32,
        /// Keep only n for which the repunit is 7 mod 8.
        #[arg(long)]
        special: bool,
    },
    /// Primes q with (q^n - 1)/(q - 1) prime, for fixed n.
    FixedNSearch {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q_max: u64,
        /// Residue filter `R,R,...:M` replacing the default one.
        #[arg(long, value_name = "RESIDUES:MODULUS", conflicts_with = "no_filter")]
        filter: Option<String>,
        /// Try every prime q.
        #[arg(long)]
        no_filter: bool,
    },
    /// Sweep the mod-8 repunit criterion against direct computation.
    LemmaCheck {
        #[arg(long)]
        q_max: u64,
        #[arg(long)]
        n_max: u64,
    },
    /// Browse the registry of examples.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Build and test one of the permutation modules.
    Repmod {
        #[arg(value_parser = cases::case_names())]
        case: String,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List {
        #[arg(long)]
        markdown: bool,
    },
    Show {
        id: String,
    },
    NonExamples,
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Verify { target, out } => verify::run(&target, &cli.data, out.as_deref()),
        Command::CertCheck { file } => verify::cert_check(&file),
        Command::Primes { family, limit } => commands::primes(&family, limit),
        Command::Derive { family, id } => {
            commands::derive(family.or(id).as_deref().unwrap_or_default())
        }
        Command::RepunitSearch { q, n_max, special } => commands::repunit_search(q, n_max, special),
        Command::FixedNSearch {
            n,
            q_max,
            filter,
            no_filter,
        } => commands::fixed_n_search(n, q_max, filter.as_deref(), no_filter),
        Command::LemmaCheck { q_max, n_max } => commands::lemma_check(q_max, n_max),
        Command::Catalog { action } => match action {
            CatalogAction::List { markdown } => commands::catalog_list(markdown),
            CatalogAction::Show { id } => commands::catalog_show(&id),
            CatalogAction::NonExamples => commands::catalog_non_examples(),
        },
        Command::Repmod { case } => cases::run(&case),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(outcome) => {
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&outcome.json).expect("json")
                );
            } else {
                print!("{}", outcome.text);
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
