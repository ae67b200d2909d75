use std::io::Write;
use std::process::ExitCode;

use umbral::cli;

fn main() -> ExitCode {
    let outcome = cli::run(std::env::args_os());
    let written = std::io::stdout()
        .write_all(outcome.stdout.as_bytes())
        .and_then(|()| std::io::stderr().write_all(outcome.stderr.as_bytes()));
    let code = match written {
        Ok(()) => outcome.code,
        Err(_) => cli::EXIT_IO,
    };
    ExitCode::from(code as u8)
}
