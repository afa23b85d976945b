use std::io::Write;

fn main() {
    let report = pcalab::cli::dispatch(std::env::args_os());
    let _ = std::io::stdout().write_all(report.out.as_bytes());
    let _ = std::io::stderr().write_all(report.err.as_bytes());
    std::process::exit(report.code);
}
