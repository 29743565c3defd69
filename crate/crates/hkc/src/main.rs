use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hkc::run::{
    input_lines, run_command, Command, Options, OutputMode, RunError, DEFAULT_MAX_PRECISION,
};
use rayon::prelude::*;
use serde_json::json;

/// Invariants of curve branches given by power-series parametrizations.
///
/// Generators are comma-separated series in `t`, e.g. "t^6, t^9+t^10,
/// 2*t^19+t^20+t^41"; a summand `O(t^d)` marks a series known modulo t^d.
#[derive(Parser, Debug)]
#[command(name = "hkc", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    opts: GlobalOpts,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Initial working precision.
    #[arg(long, global = true, value_name = "N")]
    precision: Option<usize>,
    /// Largest working precision tried before giving up.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_MAX_PRECISION)]
    max_precision: usize,
    /// Read one parametrization per line from PATH and process them all.
    #[arg(long, global = true, value_name = "PATH")]
    file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Full report: semigroup, Herzog-Kunz data, conductor, torsion witness, extension.
    Analyze { generators: Vec<String> },
    /// Herzog-Kunz generators with certificates y = x + z.
    Hk { generators: Vec<String> },
    /// Value semigroup.
    Semigroup { generators: Vec<String> },
    /// Whether SERIES lies in the ring.
    Member {
        series: String,
        generators: Vec<String>,
    },
    /// Compare the ring with every parametrization listed in FILE.
    Equal {
        other: PathBuf,
        generators: Vec<String>,
    },
    /// Truncate the generators to polynomials without changing the ring.
    Truncate { generators: Vec<String> },
    /// Change the parameter so that the first generator is a pure power.
    Normalize { generators: Vec<String> },
    /// The extension by the conductor over x1 (needs conductor in m^2).
    Extend { generators: Vec<String> },
    /// Torsion witness (needs conductor not in m^2).
    Torsion { generators: Vec<String> },
}

fn read(path: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn split(cmd: Cmd) -> Result<(Command, Vec<String>), String> {
    Ok(match cmd {
        Cmd::Analyze { generators } => (Command::Analyze, generators),
        Cmd::Hk { generators } => (Command::Hk, generators),
        Cmd::Semigroup { generators } => (Command::Semigroup, generators),
        Cmd::Member { series, generators } => (Command::Member(series), generators),
        Cmd::Equal { other, generators } => {
            (Command::Equal(input_lines(&read(&other)?)), generators)
        }
        Cmd::Truncate { generators } => (Command::Truncate, generators),
        Cmd::Normalize { generators } => (Command::Normalize, generators),
        Cmd::Extend { generators } => (Command::Extend, generators),
        Cmd::Torsion { generators } => (Command::Torsion, generators),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let opts = Options {
        precision_override: cli.opts.precision,
        max_precision: cli.opts.max_precision,
        output_mode: if cli.opts.json {
            OutputMode::Json
        } else {
            OutputMode::Text
        },
    };
    let (command, inline) = match split(cli.command) {
        Ok(x) => x,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let inputs = match &cli.opts.file {
        Some(path) => match read(path) {
            Ok(contents) => input_lines(&contents),
            Err(msg) => {
                eprintln!("error: {msg}");
                return ExitCode::from(1);
            }
        },
        None => vec![inline.join(", ")],
    };
    if inputs.is_empty() || (cli.opts.file.is_some() && !inline.is_empty()) {
        eprintln!("error: give the generators inline or with --file, not both or neither");
        return ExitCode::from(1);
    }
    let results: Vec<(String, Result<hkc::Output, RunError>)> = inputs
        .into_par_iter()
        .map(|line| {
            let r = run_command(&command, &line, &opts);
            (line, r)
        })
        .collect();
    let code = results
        .iter()
        .filter_map(|(_, r)| r.as_ref().err().map(RunError::exit_code))
        .max()
        .unwrap_or(0);
    let batch = cli.opts.file.is_some();
    match opts.output_mode {
        OutputMode::Json => {
            let items: Vec<serde_json::Value> = results
                .iter()
                .map(|(line, r)| match r {
                    Ok(out) if batch => json!({ "input": line, "result": out.json }),
                    Ok(out) => out.json.clone(),
                    Err(e) if batch => json!({ "input": line, "error": e.to_json() }),
                    Err(e) => json!({ "error": e.to_json() }),
                })
                .collect();
            let value = if batch {
                serde_json::Value::Array(items)
            } else {
                items.into_iter().next().unwrap()
            };
            println!("{value}");
        }
        OutputMode::Text => {
            for (line, r) in &results {
                if batch {
                    println!("== {line}");
                }
                match r {
                    Ok(out) => println!("{}", out.render(OutputMode::Text)),
                    Err(e) => eprintln!("error: {e}"),
                }
            }
        }
    }
    ExitCode::from(code as u8)
}
