//! `hypermap`: browse the affine group catalog, classify simple regular
//! hypermaps, verify the explicit families, export Levi graphs and check
//! individual triples.
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad parameters,
//! 3 group too large for the cap, 4 unreadable input, 5 the triple fails a
//! precondition (the report is still printed).

mod commands;
mod failure;
mod groupfile;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hypermap_core::catalog::Family;
use hypermap_core::classify::EnumerationOptions;
use hypermap_core::group::DEFAULT_CAP;

use commands::{ClassifySource, LeviFormat, Outcome};
use failure::{CliResult, Failure};

#[derive(Parser)]
#[command(name = "hypermap", version, about = "Simple regular hypermaps on affine groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog groups at a prime, as JSON.
    Catalog {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        family: Option<Family>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, default_value_t = 13)]
        max_p: u64,
    },
    /// Classify simple regular hypermaps on catalog groups or a group file.
    Classify {
        #[arg(long, conflicts_with = "group", required_unless_present = "group")]
        p: Option<u64>,
        /// Group file: `degree N`, then one generator per line.
        #[arg(long)]
        group: Option<PathBuf>,
        #[arg(long)]
        family: Option<Family>,
        #[arg(long)]
        n: Option<u64>,
        /// Required number of hypervertices; defaults to p² or the degree.
        #[arg(long)]
        omega: Option<usize>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long, default_value_t = 13)]
        max_p: u64,
        /// Enumerate every γ2 rather than one per conjugacy class.
        #[arg(long)]
        no_prune: bool,
    },
    /// Check the explicit hypermaps and the G7 search at each prime.
    VerifyPaper {
        #[arg(long, default_value = "2,3,5")]
        p_list: String,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = 13)]
        max_p: u64,
    },
    /// Export the Levi graph of a hypergraph file or a classify report.
    Levi {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = LeviFormat::Dot)]
        format: LeviFormat,
        /// Group within a classify report (0-based).
        #[arg(long, default_value_t = 0)]
        group_index: usize,
        /// Representative within that group (0-based).
        #[arg(long, default_value_t = 0)]
        rep: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Report every condition for one involution triple.
    CheckTriple {
        #[arg(long)]
        group: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        g0: String,
        #[arg(long, allow_hyphen_values = true)]
        g1: String,
        #[arg(long, allow_hyphen_values = true)]
        g2: String,
        #[arg(long)]
        omega: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
}

fn options(workers: usize, prune: bool) -> CliResult<EnumerationOptions> {
    if workers == 0 {
        return Err(Failure::bad("--workers must be at least 1"));
    }
    Ok(EnumerationOptions { prune, workers })
}

fn write_file(path: &PathBuf, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| Failure::bad(format!("cannot write {}: {e}", path.display())))
}

fn run(cli: Cli) -> CliResult<Outcome> {
    match cli.command {
        Command::Catalog { p, family, n, max_p } => commands::catalog(p, family, n, max_p),
        Command::Classify {
            p,
            group,
            family,
            n,
            omega,
            json,
            workers,
            cap,
            max_p,
            no_prune,
        } => {
            let src = ClassifySource {
                p,
                group,
                family,
                n,
                omega,
                max_p,
            };
            let mut out = commands::classify_cmd(src, options(workers, !no_prune)?, cap)?;
            if let Some(path) = json {
                write_file(&path, &out.stdout)?;
                out.stdout.clear();
            }
            Ok(out)
        }
        Command::VerifyPaper { p_list, workers, max_p } => {
            commands::verify_cmd(&p_list, options(workers, true)?, max_p)
        }
        Command::Levi {
            input,
            format,
            group_index,
            rep,
            output,
        } => {
            let mut out = commands::levi_cmd(&input, format, group_index, rep)?;
            if let Some(path) = output {
                write_file(&path, &out.stdout)?;
                out.stdout.clear();
            }
            Ok(out)
        }
        Command::CheckTriple {
            group,
            g0,
            g1,
            g2,
            omega,
            cap,
        } => commands::check_triple(&group, [&g0, &g1, &g2], omega, cap),
    }
}

fn main() -> ExitCode {
    let outcome = match run(Cli::parse()) {
        Ok(o) => o,
        Err(f) => {
            eprintln!("error: {f}");
            return f.exit_code();
        }
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    match outcome.failure {
        Some(f) => {
            eprintln!("error: {f}");
            f.exit_code()
        }
        None => ExitCode::SUCCESS,
    }
}
