use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(bbbetti::cli::run() as u8)
}
