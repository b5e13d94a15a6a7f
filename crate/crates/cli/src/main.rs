use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use stablecx::RandomCaps;
use stablecx_cli::commands::{self, FuzzOptions, Report};
use stablecx_cli::{load, text, Settings};

#[derive(Parser)]
#[command(name = "stablecx", version, about = "Stable invariants of complexes of free modules over finite-dimensional algebras")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an instance file, check its structure and sample its declared flags.
    Validate { file: PathBuf },
    /// Report the invariants of one named complex or module.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        object: String,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[arg(long, default_value_t = 4)]
        nmax: usize,
    },
    /// Run every complex suite on seeded random complexes over the file's algebra.
    Fuzz {
        file: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        max_rank: usize,
        #[arg(long, default_value_t = 4)]
        max_window: usize,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[arg(long, default_value_t = 4)]
        nmax: usize,
    },
    /// Run every suite on every object declared in the file.
    Theorems {
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[arg(long, default_value_t = 4)]
        nmax: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Analyze { .. } => "analyze",
            Command::Fuzz { .. } => "fuzz",
            Command::Theorems { .. } => "theorems",
        }
    }

    fn file(&self) -> &PathBuf {
        match self {
            Command::Validate { file } | Command::Analyze { file, .. } | Command::Fuzz { file, .. } | Command::Theorems { file, .. } => {
                file
            }
        }
    }
}

fn run(command: &Command) -> Report {
    let name = command.name();
    let text = match std::fs::read_to_string(command.file()) {
        Ok(t) => t,
        Err(e) => return commands::error_report(name, None, &format!("{}: {e}", command.file().display())),
    };
    let inst = match load(&text) {
        Err(e) => return commands::error_report(name, Some(e.line), &e.message),
        Ok(Err(e)) => {
            // A structurally invalid file is the finding of `validate` and unusable input elsewhere.
            let mut report = commands::error_report(name, Some(e.line), &e.message);
            if name == "validate" {
                report.outcome = stablecx_cli::Outcome::Violation;
                report.body["status"] = "violation".into();
            }
            return report;
        }
        Ok(Ok(inst)) => inst,
    };
    match *command {
        Command::Validate { .. } => commands::validate(&inst, Settings::default()),
        Command::Analyze { ref object, depth, nmax, .. } => commands::analyze(&inst, object, Settings { depth, nmax })
            .unwrap_or_else(|| commands::error_report(name, None, &format!("no module or complex named `{object}`"))),
        Command::Fuzz { seed, count, max_rank, max_window, depth, nmax, .. } => commands::fuzz(
            &inst,
            FuzzOptions { seed, count, caps: RandomCaps { max_rank, max_window }, settings: Settings { depth, nmax } },
        ),
        Command::Theorems { depth, nmax, .. } => commands::theorems(&inst, Settings { depth, nmax }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let report = run(&cli.command);
    let out = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report.body).expect("reports serialize") + "\n",
        Format::Text => format!("{}elapsed: {:.2}s\n", text::render(&report.body), start.elapsed().as_secs_f64()),
    };
    // A closed pipe downstream is not an error worth reporting.
    let _ = std::io::stdout().write_all(out.as_bytes());
    ExitCode::from(report.outcome.exit_code() as u8)
}
