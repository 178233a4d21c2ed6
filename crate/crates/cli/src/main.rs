use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(mixedness_cli::run(std::env::args_os()))
}
