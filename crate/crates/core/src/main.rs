use std::io::Write;

fn main() {
    let outcome = ruled_surfaces::cli::run(std::env::args_os());
    let _ = if outcome.diagnostic {
        std::io::stderr().write_all(outcome.output.as_bytes())
    } else {
        std::io::stdout().write_all(outcome.output.as_bytes())
    };
    std::process::exit(outcome.exit_code);
}
