use std::process::ExitCode;

fn main() -> ExitCode {
    tracelab::cli::main_entry()
}
