use std::process::ExitCode;

fn main() -> ExitCode {
    conic_cli::run()
}
