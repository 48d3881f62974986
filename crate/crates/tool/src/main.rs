mod args;
mod fixtures;
mod render;

use std::ffi::OsString;
use std::io::Write;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{CommandFactory, Parser};

use args::Cli;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// What a single invocation prints and how it exits.
#[derive(Debug)]
struct Outcome {
    code: u8,
    stdout: String,
    stderr: String,
}

/// Output text and whether the command passed.
fn run(cli: &Cli) -> Result<(String, bool)> {
    if let Some(dir) = &cli.check_fixtures {
        return fixtures::check(dir);
    }
    let Some(command) = &cli.command else {
        return Ok((Cli::command().render_help().to_string(), true));
    };
    let rendered = render::render(command)?;
    Ok((rendered.text, rendered.pass))
}

fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = u8::try_from(e.exit_code()).unwrap_or(EXIT_USAGE);
            let (stdout, stderr) = if e.use_stderr() { (String::new(), text) } else { (text, String::new()) };
            return Outcome { code, stdout, stderr };
        }
    };
    let written = run(&cli).and_then(|(text, pass)| {
        let stdout = match &cli.out {
            Some(path) => {
                std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
                String::new()
            }
            None => text,
        };
        Ok((stdout, pass))
    });
    match written {
        Ok((stdout, pass)) => Outcome { code: if pass { 0 } else { EXIT_FAIL }, stdout, stderr: String::new() },
        Err(e) => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e:#}\n") },
    }
}

fn main() -> ExitCode {
    let outcome = execute(std::env::args_os());
    let _ = std::io::stdout().lock().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().lock().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code)
}
