//! `qjac`: expand, fit, derive, solve and verify from the command line.

pub mod checks;
pub mod commands;
pub mod suites;

use std::ffi::OsString;

use clap::{Parser, Subcommand};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "qjac", version, about = "Quasi-Jacobi forms and holomorphic anomaly checks")]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(clap::Args, Clone, Debug, Serialize)]
pub struct Config {
    #[arg(long, global = true, default_value_t = 12, value_parser = clap::value_parser!(i64).range(1..))]
    pub qorder: i64,
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(i64).range(1..))]
    pub zorder: i64,
    #[arg(long, global = true, default_value_t = 5, value_parser = clap::value_parser!(i64).range(1..))]
    pub xorder: i64,
    #[arg(long, global = true, default_value_t = 10)]
    pub margin: usize,
    #[arg(long, global = true)]
    pub json: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config { qorder: 12, zorder: 8, xorder: 5, margin: 10, json: false }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand a generator, Eisenstein series or ring expression.
    Gen {
        #[arg(long)]
        name: String,
    },
    /// Recognize a series given as JSON.
    Fit {
        #[arg(long)]
        input: std::path::PathBuf,
    },
    /// Apply Dp, Dtau, dA or dG2 to an expression.
    Derive {
        #[arg(long)]
        name: String,
        expr: String,
    },
    /// Solve the K3 table for one family.
    Solve {
        #[arg(long, value_parser = ["A", "B", "C"])]
        family: String,
        #[arg(long, default_value_t = 5)]
        max_k: i64,
        #[arg(long)]
        l: Option<i64>,
    },
    /// Residue formula for one K3 series.
    Residue {
        #[arg(long, value_parser = ["A", "B", "C"])]
        family: String,
        #[arg(long)]
        k: i64,
        #[arg(long, default_value_t = 0)]
        l: i64,
    },
    /// Run verification suites (all when no suite is named).
    Verify {
        #[arg(long, value_parser = suites::NAMES)]
        suite: Vec<String>,
    },
}

/// One named verification with its outcome.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }

    pub fn failed(name: impl Into<String>, err: impl std::fmt::Display) -> Self {
        Check::new(name, false, format!("error: {err}"))
    }
}

/// Parses `argv` and runs the command; returns the exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let mut out = std::io::stdout().lock();
    match commands::dispatch(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("qjac: {e}");
            e.exit_code()
        }
    }
}
