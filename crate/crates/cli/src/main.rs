use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;

use ideal_homology_cli::{run, Cli};

fn main() -> anyhow::Result<ExitCode> {
    let cli = Cli::parse();
    let report = run(&cli);
    let text = report.render(cli.format);
    match &cli.out {
        Some(path) => std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    if report.exit_status != 0 {
        if let Some(first) = report.lines.first() {
            eprintln!("{first}");
        }
    }
    Ok(ExitCode::from(report.exit_status as u8))
}
