use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let limit = std::env::var(cylindre_cli::MAX_CELLS_VAR).ok();
    let out = cylindre_cli::run(std::env::args_os(), limit.as_deref());
    print!("{}", out.stdout);
    let _ = std::io::stdout().flush();
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
