mod args;
mod commands;
mod render;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::{CliError, Outcome};
use render::Render;

fn emit<T: Render>(r: Result<Outcome<T>, CliError>, cli: &Cli) -> Result<bool, CliError> {
    let out = r?;
    print!("{}", out.value.render(cli.format, cli));
    Ok(out.failed)
}

fn dispatch(cli: &Cli) -> Result<bool, CliError> {
    match &cli.command {
        Command::CiSeries(t) => emit(commands::ci_series(*t), cli),
        Command::Classify(t) => emit(commands::classify_cmd(*t), cli),
        Command::Scan(a) => emit(commands::scan(a), cli),
        Command::Curve(a) => emit(commands::curve(a), cli),
        Command::Lemmas(a) => emit(commands::lemmas(a), cli),
        Command::Fixtures(a) => emit(commands::fixtures_cmd(a), cli),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| dispatch(&cli)) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(4),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
