use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    // panics are turned into structured internal errors by `run`
    std::panic::set_hook(Box::new(|_| {}));
    let outcome = motcell::run_from_args(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(outcome.stdout.as_bytes());
    let _ = stdout.flush();
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
