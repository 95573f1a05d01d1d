use std::io::Write;
use std::process::ExitCode;

use ribbon_moduli::cli;
use ribbon_moduli::sweep::seed_from_env;

fn main() -> ExitCode {
    let out = cli::run(std::env::args_os(), seed_from_env());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
