use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use comod_cli::report::{ErrorInfo, Report, Status, Timings, SCHEMA};
use comod_cli::{execute, sha256_hex, Command, RunOptions};

/// Verify coalgebra, comodule and context definitions.
#[derive(Debug, Parser)]
#[command(name = "comod", version)]
struct Args {
    command: Command,
    /// Definition file.
    file: PathBuf,
    /// Entity names the command acts on.
    names: Vec<String>,
    /// Also write the structured report to this path.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Probe family: standard, basis or split.
    #[arg(long, default_value = "standard")]
    probes: String,
    /// Comma-separated test comodules for equivalence.
    #[arg(long, value_delimiter = ',')]
    tests: Option<Vec<String>>,
    /// Seed for random extra test comodules.
    #[arg(long)]
    seed: Option<u64>,
    /// Largest rank accepted for any entity.
    #[arg(long, default_value_t = 64)]
    max_rank: usize,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let opts = RunOptions { probes: args.probes.clone(), tests: args.tests.clone(), seed: args.seed, max_rank: args.max_rank };
    let report = match std::fs::read_to_string(&args.file) {
        Ok(text) => execute(args.command, &text, &args.names, &opts),
        Err(e) => Report {
            schema: SCHEMA,
            command: args.command.name().to_string(),
            arguments: args.names.clone(),
            ring: None,
            input_digest: sha256_hex(b""),
            status: Status::Error,
            checks: Vec::new(),
            scope: None,
            data: serde_json::Value::Null,
            error: Some(ErrorInfo { kind: "IoError".into(), message: format!("{}: {e}", args.file.display()) }),
            timings: Timings::default(),
        },
    };
    print!("{}", report.summary());
    if let Some(path) = &args.report {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("cannot write report to {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(report.exit_code() as u8)
}
