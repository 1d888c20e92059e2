use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use qcurves_cli::{render, run, Fixture, Format, Suite};

/// Verify the fixed-curve computations on the quadric threefold.
#[derive(Parser, Debug)]
#[command(name = "qcurves", version)]
struct Args {
    /// Suite to run.
    #[arg(value_enum)]
    command: Suite,

    #[arg(long, value_enum, default_value = "md")]
    format: Format,

    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Stop at the first failing check.
    #[arg(long)]
    fail_fast: bool,

    /// Expected-values fixture to use instead of the built-in one.
    #[arg(long)]
    expected: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let fixture = match &args.expected {
        None => Fixture::embedded(),
        Some(path) => match std::fs::read_to_string(path)
            .map_err(|e| e.to_string())
            .and_then(|t| Fixture::parse(&t))
        {
            Ok(f) => f,
            Err(e) => {
                eprintln!("error: cannot load {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
    };
    let report = run(args.command, &fixture, args.fail_fast);
    let text = render(&report, args.format);
    match &args.out {
        None => print!("{text}"),
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
