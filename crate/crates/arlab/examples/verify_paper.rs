//! Runs the bundled verification suites programmatically (the CLI
//! equivalent is `arlab verify-paper --suite all`).
//!
//! Run with: cargo run --release --example verify_paper

use arlab::suite::{verify_paper, SuiteKind};

fn main() {
    let result = verify_paper(SuiteKind::All).unwrap();
    eprint!("{}", result.human_summary());
    println!("{}", serde_json::to_string_pretty(&result).unwrap());
    std::process::exit(if result.exit_ok() { 0 } else { 1 });
}
