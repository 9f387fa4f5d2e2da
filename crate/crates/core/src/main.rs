use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = locgenus::cli::run(std::env::args_os());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::io::stdout().flush().ok();
    ExitCode::from(outcome.code as u8)
}
