use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use findist::config::parse_field;
use findist::{run, Command, ExperimentConfig, HarnessError};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Subcommand {
    Stats,
    Verify,
    Reduce,
    Prune,
    KinematicCheck,
    CliffordCheck,
    Sweep,
}

impl From<Subcommand> for Command {
    fn from(s: Subcommand) -> Command {
        match s {
            Subcommand::Stats => Command::Stats,
            Subcommand::Verify => Command::Verify,
            Subcommand::Reduce => Command::Reduce,
            Subcommand::Prune => Command::Prune,
            Subcommand::KinematicCheck => Command::KinematicCheck,
            Subcommand::CliffordCheck => Command::CliffordCheck,
            Subcommand::Sweep => Command::Sweep,
        }
    }
}

/// Exact distance, bisector and incidence experiments over finite fields.
#[derive(Parser, Debug)]
#[command(name = "findist", version)]
struct Cli {
    #[arg(value_enum)]
    command: Subcommand,
    /// Experiment config (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Report path; defaults to the config's report output, else stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Overrides the config seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Overrides the config field, as p or p,r.
    #[arg(long)]
    field: Option<String>,
}

fn write(path: &Path, text: &str) -> Result<(), HarnessError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| HarnessError::Io(format!("{}: {e}", dir.display())))?;
    }
    std::fs::write(path, text).map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))
}

fn main_inner(cli: Cli) -> Result<bool, HarnessError> {
    let mut config = ExperimentConfig::load(&cli.config)?;
    if let Some(seed) = cli.seed {
        config.seed = seed;
    }
    if let Some(field) = &cli.field {
        config.field = parse_field(field)?;
    }
    let outcome = run(cli.command.into(), &config)?;
    let report_path = cli.out.or_else(|| config.outputs.report.clone());
    match &report_path {
        Some(path) => write(path, &outcome.report.to_json())?,
        None => print!("{}", outcome.report.to_json()),
    }
    if !outcome.report.rows.is_empty() {
        let csv_path = config.outputs.csv.clone().or_else(|| report_path.map(|p| p.with_extension("csv")));
        if let Some(path) = csv_path {
            let csv = outcome.report.to_csv().map_err(|e| HarnessError::Io(e.to_string()))?;
            write(&path, &csv)?;
        }
    }
    for (path, text) in &outcome.artifacts {
        write(path, text)?;
    }
    for f in outcome.report.failures() {
        eprintln!("FAIL {}: {} {} {}", f.name, f.lhs, f.relation, f.rhs);
    }
    Ok(outcome.report.passed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match main_inner(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("findist: {e}");
            ExitCode::from(2)
        }
    }
}
