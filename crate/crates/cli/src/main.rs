use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hgl_cli::report::{fit_json, fit_trailer, to_csv, to_json};
use hgl_cli::scenarios::{builtin, BUILTINS};
use hgl_cli::sequence_csv::read_sequence;
use hgl_cli::{gb, parse_scenario, run_scenario, RunOptions};
use hgl_core::growth::{fit_quasipolynomial, FitOptions};
use hgl_core::Execution;

#[derive(Parser)]
#[command(name = "hgl", version, about = "Length growth of Ext and Tor along ideal powers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(clap::Args)]
struct Output {
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Include wall-clock timings (makes output nondeterministic).
    #[arg(long)]
    timing: bool,
    /// Evaluate the n-range on one thread.
    #[arg(long)]
    sequential: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run a built-in scenario.
    Scenario {
        name: String,
        #[command(flatten)]
        out: Output,
    },
    /// Run a scenario file.
    Run {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Fit an `n,length` CSV sequence ("-" reads stdin).
    Fit {
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_period: u32,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Print the Gröbner bases a scenario file builds.
    Gb { file: PathBuf },
    /// List the built-in scenarios.
    List,
}

fn run(name: &str, source: &str, out: &Output) -> Result<String> {
    let spec = parse_scenario(source).map_err(|e| anyhow!("{}: {}", name, e))?;
    let opts = RunOptions {
        execution: if out.sequential { Execution::Sequential } else { Execution::default() },
    };
    let report = run_scenario(name, &spec, &opts)?;
    Ok(match out.format {
        Format::Csv => to_csv(&report, out.timing),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&to_json(&report, out.timing))?),
    })
}

fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn dispatch(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Scenario { name, out } => {
            let b = builtin(&name).ok_or_else(|| anyhow!("no built-in scenario `{}` (try `hgl list`)", name))?;
            run(b.name, b.source, &out)
        }
        Command::Run { file, out } => run(&file.display().to_string(), &read(&file)?, &out),
        Command::Fit { file, max_period, max_degree, format } => {
            let seq = if file.as_os_str() == "-" {
                read_sequence(std::io::stdin())?
            } else {
                read_sequence(fs::File::open(&file).with_context(|| format!("opening {}", file.display()))?)?
            };
            let opts = FitOptions::default().with_max_degree(max_degree).with_max_period(max_period);
            let fit = fit_quasipolynomial(&seq, &opts)?;
            Ok(match format {
                Format::Csv => fit_trailer(&fit),
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&fit_json(&fit))?),
            })
        }
        Command::Gb { file } => {
            let source = read(&file)?;
            let spec = parse_scenario(&source).map_err(|e| anyhow!("{}: {}", file.display(), e))?;
            gb::dump(&spec)
        }
        Command::List => Ok(BUILTINS.iter().map(|b| format!("{:<18} {}\n", b.name, b.summary)).collect()),
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(text) => {
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::FAILURE
        }
    }
}
