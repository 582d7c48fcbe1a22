use std::io::Write;
use std::process::ExitCode;

use edmop::cli::run;
use edmop::config::BUDGETS_VAR;

fn main() -> ExitCode {
    let env = std::env::var(BUDGETS_VAR).ok();
    let out = run(std::env::args_os(), env.as_deref());
    // a closed pipe is not worth a panic
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
