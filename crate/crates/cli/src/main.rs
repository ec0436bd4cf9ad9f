use std::io::{stderr, stdout, BufWriter, Write};

fn main() {
    let mut out = BufWriter::new(stdout().lock());
    let status = tp_cli::main_with(std::env::args_os(), &mut out, &mut stderr());
    let _ = out.flush();
    std::process::exit(status);
}
