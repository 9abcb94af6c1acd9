use std::io::Write;

fn main() {
    let outcome = recolour::cli::run_from(std::env::args_os());
    // a closed pipe (e.g. `| head`) is not worth a panic
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    std::process::exit(outcome.code);
}
