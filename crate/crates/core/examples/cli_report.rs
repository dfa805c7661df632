//! Drives the command line in-process and reads the JSON report back.

use ruled_surfaces::cli;

fn main() {
    let argv = ["ruled", "coh", "line", "--e", "0", "--D", "1*h+1*f", "--format", "json"];
    let outcome = cli::run(argv);
    let report: serde_json::Value = serde_json::from_str(&outcome.output).expect("JSON report");
    println!("exit {} -> {}", outcome.exit_code, report["results"][0]);

    let outcome = cli::run(["ruled", "split", "rigid", "--r", "5", "--d", "7"]);
    print!("{}", outcome.output);
}
