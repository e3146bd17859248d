use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = std::panic::catch_unwind(|| permquot_cli::run(std::env::args_os()))
        .unwrap_or_else(|_| permquot_cli::Outcome {
            code: permquot_cli::EXIT_INTERNAL,
            stdout: String::new(),
            stderr: "error: internal failure\n".to_string(),
        });
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
