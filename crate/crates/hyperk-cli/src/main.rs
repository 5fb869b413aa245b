use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = hyperk_cli::Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    ExitCode::from(hyperk_cli::run(&cli, &mut out) as u8)
}
