use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let status = geodetic::cli::run(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut out,
        &mut io::stderr(),
    );
    let _ = out.flush();
    ExitCode::from(status as u8)
}
