//! `uctk`: batch front-end for the tree and ordinal kernel.

mod commands;
mod report;
mod split;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde_json::Value as Json;

use commands::{Options, COMMANDS};
use report::{Failure, Format, Report};
use split::{split_line, Arg};

#[derive(Parser, Debug)]
#[command(
    name = "uctk",
    version,
    about = "Check level-1/2/3 trees, ordinals below u_omega and their shifts",
    allow_negative_numbers = true,
    after_help = command_list()
)]
struct Cli {
    /// Command to run; see the list below.
    command: String,
    /// Command arguments in the textual grammar. Quote any with spaces.
    args: Vec<String>,
    /// Human-readable output instead of one line per report.
    #[arg(long)]
    pretty: bool,
    /// Seed for randomized corpora.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Size bound for check-lemmas.
    #[arg(long, default_value_t = 4)]
    bound: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn command_list() -> String {
    let mut s = String::from("Commands:\n");
    for (name, _, _, synopsis) in COMMANDS {
        s.push_str(&format!("  {name:<14} {synopsis}\n"));
    }
    s.push_str("\nExit status: 0 ok, 1 rejected by the kernel or a false verdict, 2 usage or syntax error.");
    s
}

fn failed(op: &str, input: &str, f: Failure) -> Report {
    Report {
        op: op.to_string(),
        input: input.to_string(),
        fields: Vec::new(),
        failure: Some(f),
        verdict: None,
    }
}

/// One line of a batch file: a command line, or `{"command": …, "args": […]}`.
fn batch_line(line: &str, line_no: usize, opts: &Options) -> Report {
    let trimmed = line.trim();
    if trimmed.starts_with('{') {
        if let Ok(Json::Object(m)) = serde_json::from_str::<Json>(trimmed) {
            let op = m.get("command").and_then(Json::as_str);
            let args: Option<Vec<Arg>> = match m.get("args") {
                None => Some(Vec::new()),
                Some(Json::Array(v)) => v
                    .iter()
                    .map(|x| {
                        x.as_str().map(|s| Arg {
                            text: s.to_string(),
                            line: line_no,
                            col: 1,
                        })
                    })
                    .collect(),
                Some(_) => None,
            };
            return match (op, args) {
                (Some(op), Some(args)) => commands::run(op, &args, opts),
                _ => failed(
                    "?",
                    trimmed,
                    Failure::usage("E_USAGE", "expected {\"command\": string, \"args\": [string]}"),
                ),
            };
        }
    }
    match split_line(line, line_no) {
        Ok(mut args) => {
            let op = args.remove(0).text;
            commands::run(&op, &args, opts)
        }
        Err(e) => failed(
            "?",
            trimmed,
            Failure {
                code: "E_SYNTAX".into(),
                message: e.msg,
                location: Some(report::Location {
                    arg: 0,
                    line: e.line,
                    col: e.col,
                }),
                exit: 2,
            },
        ),
    }
}

fn batch(path: &str, opts: &Options) -> Vec<Report> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            return vec![failed(
                "batch",
                path,
                Failure::usage("E_IO", format!("cannot read {path}: {e}")),
            )]
        }
    };
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| batch_line(l, i + 1, opts))
        .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options {
        seed: cli.seed,
        bound: cli.bound,
    };
    let reports = if cli.command == "batch" && cli.args.len() == 1 {
        batch(&cli.args[0], &opts)
    } else {
        let args: Vec<Arg> = cli.args.iter().map(|a| Arg::standalone(a)).collect();
        vec![commands::run(&cli.command, &args, &opts)]
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for r in &reports {
        if writeln!(out, "{}", r.render(cli.format, cli.pretty)).is_err() {
            return ExitCode::from(2);
        }
    }
    let code = reports.iter().map(Report::exit_code).max().unwrap_or(0);
    ExitCode::from(code as u8)
}
