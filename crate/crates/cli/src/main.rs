mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use report::RunReport;

#[derive(Parser)]
#[command(name = "tforge", version, about = "Covariants, Tschirnhaus transformations and normal forms")]
struct Cli {
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an exact identity suite.
    Verify {
        #[arg(value_enum)]
        which: Suite,
    },
    /// Apply a covariant to a polynomial.
    Transform {
        #[arg(long)]
        field: String,
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum)]
        covariant: CovariantName,
    },
    /// Bring an irreducible polynomial of degree 3 to 6 into normal form.
    Normalize {
        #[arg(long)]
        field: String,
        #[arg(long, conflicts_with = "degree", required_unless_present = "degree")]
        poly: Option<String>,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Re-verify the table of quintic normal forms over small fields.
    Table {
        /// Read the entries from a JSON file instead of the built-in list.
        #[arg(long)]
        fixture: Option<PathBuf>,
    },
    /// Print the components of a covariant in the polynomial JSON format.
    Export {
        #[arg(long, value_enum)]
        covariant: CovariantName,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Suite {
    Hermite,
    Joubert,
    S4,
    ConditionsTr,
    GroupFacts,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum CovariantName {
    Hermite,
    Joubert,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .format_timestamp(None)
        .target(env_logger::Target::Stderr)
        .init();
    let start = Instant::now();
    let result = match &cli.command {
        Command::Verify { which } => commands::verify(*which),
        Command::Transform { field, poly, covariant } => commands::transform(field, poly, *covariant),
        Command::Normalize { field, poly, degree } => commands::normalize(field, poly.as_deref(), *degree),
        Command::Table { fixture } => commands::table(fixture.as_deref()),
        Command::Export { covariant } => commands::export(*covariant),
    };
    let mut report = match result {
        Ok(r) => r,
        Err(e) => RunReport::failure(command_name(&cli.command), &e),
    };
    if cli.timing {
        report.wall_time_seconds = Some(start.elapsed().as_secs_f64());
    }
    let out = if cli.json { report.to_json_string() } else { report.to_text() };
    print!("{out}");
    if let Some(e) = report.error_message() {
        log::error!("{e}");
    }
    ExitCode::from(report.exit_code)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Verify { .. } => "verify",
        Command::Transform { .. } => "transform",
        Command::Normalize { .. } => "normalize",
        Command::Table { .. } => "table",
        Command::Export { .. } => "export",
    }
}
