//! Runs every property grid with default bounds, as `ruled verify all` does.

use ruled_surfaces::verify::{run, GridBounds, Suite};

fn main() {
    for outcome in run(Suite::All, &GridBounds::default()) {
        match &outcome.counterexample {
            None => println!("{:<10} ok   {:>6} checked", outcome.suite, outcome.checked),
            Some(c) => println!("{:<10} FAIL {c}", outcome.suite),
        }
    }
}
