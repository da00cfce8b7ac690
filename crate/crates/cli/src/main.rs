use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = cyclelab_cli::main_with_args(
        std::env::args_os(),
        &mut io::stdin().lock(),
        &mut io::BufWriter::new(io::stdout().lock()),
        &mut io::stderr(),
    );
    ExitCode::from(code as u8)
}
