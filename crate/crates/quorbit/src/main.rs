use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = io::stdin();
    let code = quorbit::run(std::env::args_os(), &mut stdin.lock(), &mut io::stdout().lock(), &mut io::stderr());
    ExitCode::from(code as u8)
}
