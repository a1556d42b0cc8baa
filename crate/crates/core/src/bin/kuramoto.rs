use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = kuramoto_landscape::cli::run_from_args(std::env::args_os());
    if let Some(msg) = &outcome.diagnostic {
        eprintln!("kuramoto: {msg}");
    }
    if outcome.destination.is_none() {
        if let Some(text) = &outcome.artifact {
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(1);
            }
        }
    }
    ExitCode::from(outcome.exit_code as u8)
}
