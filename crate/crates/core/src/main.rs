use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = match ppspace::cli::parse(std::env::args_os()) {
        Ok(req) => ppspace::cli::run(&req),
        Err(e) => {
            let (stdout, stderr) = if e.code == 0 {
                (e.message, String::new())
            } else {
                (String::new(), e.message)
            };
            ppspace::cli::Outcome {
                code: e.code,
                stdout,
                stderr,
            }
        }
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
