use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use mcg_verify::config::DEFAULT_ENUM_CAP;
use mcg_verify::report::write_identity;
use mcg_verify::{run, Check, CheckReport, OutputFormat, RunConfig, VerifyError};

/// Exact homology-level checks of a torsion generating set for the mapping
/// class group of a closed genus-g surface.
#[derive(Debug, Parser)]
#[command(name = "mcg-verify", version)]
struct Cli {
    #[arg(long)]
    genus: usize,
    /// Comma-separated; defaults to every check that applies.
    #[arg(long, value_enum, value_delimiter = ',')]
    checks: Vec<Check>,
    /// Prime for the modp check (2, 3, 5, 7, 11 or 13).
    #[arg(long)]
    prime: Option<u32>,
    /// Largest number of curve classes held by the orbit search.
    #[arg(long, env = "MCG_ORBIT_CAP")]
    orbit_cap: Option<usize>,
    /// Largest group order that is enumerated element by element.
    #[arg(long, env = "MCG_ENUM_CAP", default_value_t = DEFAULT_ENUM_CAP)]
    enum_cap: u64,
    /// Record generator words reaching each element in mod-p enumeration.
    #[arg(long)]
    witness: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn render(report: &CheckReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => report.to_text(),
        OutputFormat::Json => report.to_json() + "\n",
    }
}

fn failures(report: &CheckReport) -> String {
    let mut out = String::new();
    for s in &report.sections {
        for item in s.failures() {
            out.push_str(&format!("{} [{}] {}\n", item.verdict, s.name, item.label));
            if let Some(id) = &item.identity {
                let _ = write_identity(&mut out, id);
            }
        }
    }
    out
}

fn execute(cli: Cli) -> Result<CheckReport, VerifyError> {
    let mut config = RunConfig::new(cli.genus, &cli.checks, cli.prime)?;
    config.output = cli.output;
    config.orbit_cap = cli.orbit_cap;
    config.enum_cap = cli.enum_cap;
    config.witness = cli.witness;
    let report = run(&config)?;
    let body = render(&report, config.output);
    match &cli.out {
        Some(path) => std::fs::write(path, body)
            .map_err(|source| VerifyError::Io { context: format!("writing {}", path.display()), source })?,
        None => print!("{body}"),
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(report) => {
            if !report.passed() {
                eprint!("{}", failures(&report));
            }
            ExitCode::from(report.exit_code())
        }
        Err(e) => {
            eprintln!("mcg-verify: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 1 })
        }
    }
}
