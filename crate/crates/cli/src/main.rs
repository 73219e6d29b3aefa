use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};

use kzdyn_cli::config::SEED_ENV;
use kzdyn_cli::{emit_report, run_suite, Overrides, Status};

#[derive(Parser, Debug)]
#[command(
    name = "kzdyn",
    version,
    about = "Exact checks of KZ and dynamical difference operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run check suites and write a report.
    Run(RunArgs),
}

#[derive(clap::Args, Debug)]
struct RunArgs {
    /// key=value file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Lie type letter, optionally with the rank (A, B3, G2, ...).
    #[arg(long = "type")]
    lie_type: Option<String>,
    #[arg(long)]
    rank: Option<String>,
    /// Comma-separated wedge degrees, e.g. 1,2 for C^N ⊗ Λ²C^N.
    #[arg(long)]
    modules: Option<String>,
    /// Weight selector for the determinant suite, comma-separated.
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    kappa: Option<String>,
    #[arg(long)]
    samples: Option<String>,
    /// Falls back to the KZDYN_SEED environment variable.
    #[arg(long)]
    seed: Option<String>,
    /// sl2, braid, fusion, kz, compat or det; repeatable.
    #[arg(long = "suite")]
    suites: Vec<String>,
    /// jsonlines or markdown.
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    out: Option<String>,
}

impl RunArgs {
    fn overrides(&self) -> Overrides {
        Overrides {
            lie_type: self.lie_type.clone(),
            rank: self.rank.clone(),
            modules: self.modules.clone(),
            weight: self.weight.clone(),
            kappa: self.kappa.clone(),
            samples: self.samples.clone(),
            seed: self.seed.clone(),
            suites: self
                .suites
                .iter()
                .flat_map(|s| s.split(',').map(|x| x.trim().to_string()))
                .collect(),
            format: self.format.clone(),
            out: self.out.clone(),
        }
    }
}

fn main() -> ExitCode {
    let Command::Run(args) = Cli::parse().command;
    let base = match &args.config {
        Some(path) => match Overrides::read_file(path) {
            Ok(o) => o,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
        None => Overrides::default(),
    };
    let env_seed = std::env::var(SEED_ENV).ok();
    let cfg = match base.merge(args.overrides()).resolve(env_seed.as_deref()) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let result = run_suite(&cfg);
    if let Err(e) = emit_report(&cfg, &result) {
        eprintln!("error: writing report: {e}");
        return ExitCode::from(2);
    }
    let total: Duration = result.timings.iter().sum();
    eprintln!(
        "{} check{}: {} pass, {} fail, {} skip ({:.2?})",
        result.records.len(),
        if result.records.len() == 1 { "" } else { "s" },
        result.count(Status::Pass),
        result.count(Status::Fail),
        result.count(Status::Skip),
        total
    );
    ExitCode::from(result.exit_code() as u8)
}
