use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qwalg::commands::{self, OutputFormat, Outcome, EXIT_INPUT};
use qwalg::Gates;

/// Check, analyze, quotient and enumerate finite QW algebras.
#[derive(Parser)]
#[command(name = "qw", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the BE, bounded, involutive and QW axioms.
    Check { file: PathBuf },
    /// Filters, deductive systems, linearity, quotients and congruences.
    Analyze { file: PathBuf },
    /// Quotient by a deductive system given as comma-separated names.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        ds: String,
    },
    /// Enumerate QW algebras of one order up to isomorphism.
    Search {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        limit: Option<usize>,
        /// Directory for one model file per algebra.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn gates() -> Gates {
    match std::env::var("QW_GATE_OVERRIDE") {
        Ok(v) if !v.is_empty() && v != "0" => Gates::unlimited(),
        _ => Gates::default(),
    }
}

fn read(path: &PathBuf) -> Result<String, Outcome> {
    std::fs::read_to_string(path).map_err(|e| Outcome {
        code: EXIT_INPUT,
        stdout: String::new(),
        stderr: format!("error: {}: {e}\n", path.display()),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        Format::Text => OutputFormat::Text,
        Format::Json => OutputFormat::Json,
    };
    let outcome = match &cli.command {
        Command::Check { file } => read(file).map(|s| commands::check(&s, format)),
        Command::Analyze { file } => read(file).map(|s| commands::analyze(&s, format, &gates())),
        Command::Quotient { file, ds } => read(file).map(|s| commands::quotient(&s, ds, format)),
        Command::Search { order, limit, out } => {
            Ok(commands::search(*order, *limit, out.as_deref(), format, &gates()))
        }
    }
    .unwrap_or_else(|e| e);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code)
}
