//! Command-line front end (placeholder while the library is scaffolded).
use std::process::ExitCode;

pub fn main_entry() -> ExitCode {
    ExitCode::from(2)
}
