use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = leapfrog_cli::args::Cli::parse();
    ExitCode::from(leapfrog_cli::run(cli))
}
