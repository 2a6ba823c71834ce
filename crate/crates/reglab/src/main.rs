use std::io::Write;

fn main() {
    let (code, text) = reglab::cli::run(std::env::args_os());
    // ignore a closed pipe
    let _ = writeln!(std::io::stdout().lock(), "{}", text);
    std::process::exit(code);
}
