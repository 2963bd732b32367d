use std::io::Write;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;

use linkpat_cli::{run, Cli, RunConfig};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn execute(cli: &Cli) -> anyhow::Result<bool> {
    let output = run(&cli.command, &RunConfig::from(cli))?;
    match &cli.out {
        Some(path) => std::fs::write(path, &output.text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout()
            .write_all(output.text.as_bytes())
            .context("writing to stdout")?,
    }
    Ok(output.success)
}
