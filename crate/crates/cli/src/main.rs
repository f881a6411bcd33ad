//! `kgspec`: Table 1 regression, parameter sweeps, scattering scans and the
//! verification report.

mod commands;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use config::RunConfig;

#[derive(Debug, Parser)]
#[command(name = "kgspec", version, about = "Klein-Gordon spectra with a Hulthén plus q-deformed hyperbolic potential")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Common {
    /// JSON run configuration; the Table 1 parameters when omitted.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Pass/fail tolerance (table1: absolute, verify: analytic vs oracle, relative).
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Solver::Analytic)]
    solver: Solver,
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Output file; stdout when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Solver {
    Analytic,
    Oracle,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve the Table 1 cells and compare with the printed energies.
    Table1,
    /// Energy levels over a range of one parameter.
    Sweep,
    /// Phase shifts over an energy range above threshold.
    Scatter,
    /// Run the cross-checks and write a JSON report.
    Verify(commands::verify::VerifyArgs),
}

/// Exit status: 0 success, 1 usage or configuration error, 2 failed check.
pub enum Outcome {
    Success,
    CheckFailed,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let common = cli.common;
    if let Some(t) = common.tol {
        if !(t > 0.0 && t.is_finite()) {
            anyhow::bail!("--tol must be a positive number, got {t}");
        }
    }
    let config = RunConfig::load(common.config.as_deref())?;
    let jobs = common.jobs;
    kgspec::par::with_jobs(jobs, move || match cli.command {
        Command::Table1 => commands::table1::run(&config, &common),
        Command::Sweep => commands::sweep::run(&config, &common),
        Command::Scatter => commands::scatter::run(&config, &common),
        Command::Verify(args) => commands::verify::run(&config, &common, &args),
    })
}
