use std::io::{self, BufWriter};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = io::stdin();
    let mut input = stdin.lock();
    let mut output = BufWriter::new(io::stdout().lock());
    let mut errors = io::stderr().lock();
    let code = sympair::cli::run(std::env::args_os(), &mut input, &mut output, &mut errors);
    drop(output);
    ExitCode::from(code as u8)
}
