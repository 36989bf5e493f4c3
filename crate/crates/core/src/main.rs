use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let response = lattice_rook::cli::run(std::env::args_os());
    print!("{}", response.stdout);
    eprint!("{}", response.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(response.exit_code() as u8)
}
