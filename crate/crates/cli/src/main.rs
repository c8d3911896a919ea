//! `carlitz` command-line front end.

mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use carlitz_core::ErrorKind;
use clap::error::ErrorKind as ClapKind;
use clap::Parser;
use serde::Serialize;

use args::Cli;

#[derive(Serialize)]
struct Diagnostic<'a> {
    error: &'a str,
    message: String,
}

fn fail(tag: &str, message: impl ToString, code: u8) -> ExitCode {
    let line = serde_json::to_string(&Diagnostic { error: tag, message: message.to_string().replace('\n', " ") })
        .expect("plain data serializes");
    eprintln!("{line}");
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ClapKind::DisplayHelp | ClapKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail("usage", e.to_string().trim(), 2),
    };
    if cli.threads == 0 {
        return fail("usage", "--threads must be at least 1", 2);
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build() {
        Ok(p) => p,
        Err(e) => return fail("internal", e, 3),
    };
    let payload = match pool.install(|| commands::run(&cli.command, cli.format)) {
        Ok(p) => p,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::Usage => 2,
                ErrorKind::Internal => 3,
            };
            return fail(e.tag(), e, code);
        }
    };
    let mut text = payload.text;
    text.push('\n');
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        return fail("io", e, 2);
    }
    if payload.verified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
