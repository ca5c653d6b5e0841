use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = betti_cli::run(std::env::args_os());
    let text = result.output();
    if result.exit_code == betti_cli::EXIT_OK || result.json.is_some() {
        let _ = std::io::stdout().write_all(text.as_bytes());
    } else {
        let _ = std::io::stderr().write_all(text.as_bytes());
    }
    ExitCode::from(result.exit_code as u8)
}
