use std::fs::File;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sdlu::cli::{parse_scenario, run_command, Format, Num, RunOptions, ScenarioDocument};
use sdlu::Error;

/// Portfolio valuation, dominance, spreads, insurance pricing, and
/// ambiguity under state-dependent linear utility.
///
/// Every subcommand reads one JSON scenario (see the repository README for
/// the schema) from --input or stdin and prints a report.
#[derive(Parser)]
#[command(name = "sdlu", version)]
struct Args {
    #[command(subcommand)]
    command: Command,

    /// Scenario JSON file; stdin when omitted
    #[arg(long, global = true, value_name = "path")]
    input: Option<PathBuf>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// RNG seed for the sampling checks
    #[arg(long, global = true, default_value_t = 0, value_name = "n")]
    seed: u64,

    /// Cross-check insurance contracts on a premium/deductible grid with
    /// this many cells per axis
    #[arg(long, global = true, value_name = "resolution")]
    oracle: Option<usize>,

    /// Force exact rational arithmetic
    #[arg(long, global = true)]
    exact: bool,

    /// Kink gamble offset (decimal or fraction like 1/2), replacing
    /// per-kink defaults
    #[arg(long, global = true, value_name = "d")]
    delta: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Value a portfolio under a state-dependent linear utility profile
    Eval,
    /// Compare two portfolios for first-order stochastic dominance
    Dominance,
    /// Detect a mean-preserving spread and check aversion to it
    Spread,
    /// Price insurance contracts for a binary-loss household
    Insure,
    /// Analyze the kinks of an almost linear utility
    Almost,
    /// Evaluate an ambiguous portfolio by its worst-case selection
    Ambiguity,
    /// Sweep a probability grid through the dominance and spread checks
    Verify,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Eval => "eval",
            Command::Dominance => "dominance",
            Command::Spread => "spread",
            Command::Insure => "insure",
            Command::Almost => "almost",
            Command::Ambiguity => "ambiguity",
            Command::Verify => "verify",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

fn read_scenario(input: &Option<PathBuf>) -> Result<ScenarioDocument, Error> {
    match input {
        Some(path) => {
            let file = File::open(path).map_err(|e| {
                Error::invalid("input", format!("cannot open {}: {e}", path.display()))
            })?;
            parse_scenario(file)
        }
        None => {
            let mut buffer = String::new();
            std::io::stdin()
                .read_to_string(&mut buffer)
                .map_err(|e| Error::invalid("input", format!("cannot read stdin: {e}")))?;
            parse_scenario(buffer.as_bytes())
        }
    }
}

fn run(args: &Args) -> Result<String, Error> {
    let doc = read_scenario(&args.input)?;
    let options = RunOptions {
        format: match args.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        },
        seed: args.seed,
        oracle: args.oracle,
        exact: args.exact,
        delta: args
            .delta
            .as_deref()
            .map(|d| Num::parse_cli(d, "delta"))
            .transpose()?,
    };
    let report = run_command(&doc, args.command.name(), &options)?;
    Ok(report.render(options.format))
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(rendered) => {
            print!("{rendered}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Assertion(_) => 3u8,
                _ => 2u8,
            })
        }
    }
}
