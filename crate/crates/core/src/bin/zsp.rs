use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = zsp_core::cli::run(
        std::env::args_os(),
        &mut io::stdout().lock(),
        &mut io::stderr(),
    );
    ExitCode::from(code as u8)
}
