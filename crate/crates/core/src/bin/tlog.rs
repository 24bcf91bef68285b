use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tlog::experiment::{self, ExperimentConfig, RunError};

#[derive(Parser)]
#[command(
    name = "tlog",
    version,
    about = "Word-metric experiments for groups K ⋊ ⟨t⟩"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Experiment config (TOML); built-in defaults when omitted
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory; overrides `run.out` and `OUTPUT_DIR`
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Byte budget for ball construction
    #[arg(long, global = true)]
    mem_cap: Option<usize>,
    /// Also write geodesic words and their t-word projections
    #[arg(long, global = true)]
    dump_words: bool,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    Ball,
    Deadends,
    Acx,
    Witness,
    Constants,
    Digits,
}

fn run(cli: &Cli) -> Result<Vec<PathBuf>, RunError> {
    let mut cfg = match &cli.config {
        Some(path) => ExperimentConfig::load(path)?,
        None => ExperimentConfig::default(),
    };
    if let Ok(dir) = std::env::var("OUTPUT_DIR") {
        cfg.run.out = dir;
    }
    if let Some(dir) = &cli.out {
        cfg.run.out = dir.display().to_string();
    }
    if let Some(w) = cli.workers {
        cfg.run.workers = w;
    }
    if let Some(m) = cli.mem_cap {
        cfg.run.mem_cap = m;
    }
    cfg.run.dump_words |= cli.dump_words;
    let cfg = cfg.resolved()?;
    let outputs = match cli.command {
        Command::Ball => experiment::cmd_ball(&cfg),
        Command::Deadends => experiment::cmd_deadends(&cfg),
        Command::Acx => experiment::cmd_acx(&cfg),
        Command::Witness => experiment::cmd_witness(&cfg),
        Command::Constants => experiment::cmd_constants(&cfg),
        Command::Digits => experiment::cmd_digits(&cfg),
    }?;
    Ok(outputs.files)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(files) => {
            for f in files {
                println!("{}", f.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("tlog: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
