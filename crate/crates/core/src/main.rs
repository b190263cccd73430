use std::io::Write;
use std::process::ExitCode;

use jigsaw_spread::cli::{run, Style};

fn main() -> ExitCode {
    let out = run(std::env::args_os(), Style::detect());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
