use std::io;
use std::process::ExitCode;

use clap::Parser;
use gintersect::cli::{run, Cli};
use gintersect::Error;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = cli.into_config().and_then(|cfg| run(&cfg, &mut io::stdout().lock()));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Error::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => report(&e),
    }
}

fn report(e: &Error) -> ExitCode {
    eprintln!("error[{}]: {e}", e.code());
    ExitCode::from(e.exit_code() as u8)
}
