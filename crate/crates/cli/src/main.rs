//! `terracini`: command-line front end.
//!
//! Exit status: 0 when the computation finished (a negative verdict is still
//! 0), 1 when an asserted property failed, 2 for invalid input.

mod args;
mod commands;
mod render;

use std::fs;
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = cli.command.name();
    let outcome = match commands::run(&cli.command, cli.field, cli.seed) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {}", format!("{e:#}").replace('\n', " "));
            return ExitCode::from(commands::exit_code(&e) as u8);
        }
    };
    let rendered = if cli.json {
        let envelope = json!({
            "command": name,
            "field": outcome.field,
            "seed": cli.seed.to_string(),
            "pass": outcome.pass,
            "result": outcome.result,
        });
        let mut s = serde_json::to_string_pretty(&envelope).expect("serializable");
        s.push('\n');
        s
    } else {
        format!("# {name}  field {}  seed {}\n{}", outcome.field, cli.seed, outcome.table)
    };
    print!("{rendered}");
    if let Some(path) = &cli.out {
        let body = outcome.artifact.as_deref().unwrap_or(&rendered);
        if let Err(e) = fs::write(path, body) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if outcome.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
