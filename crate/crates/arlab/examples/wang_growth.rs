//! The growth experiment on Wang's family I_k = (x^k, y^k, x^{k-1}y + z^k)
//! against J = (z): the strong uniform number s_k grows with k, so no
//! single s works for the whole family.
//!
//! Run with: cargo run --release --example wang_growth

use arlab::artin_rees::wang_experiment;
use arlab::ring::RingPresentation;

fn main() {
    let ring = RingPresentation::standard(&["x", "y", "z"]);
    let (rows, report) = wang_experiment(&ring, 5).unwrap();
    println!("{:>3} {:>16} {:>6}", "k", "rt(I_k; A/(z))", "s_k");
    for row in &rows {
        println!("{:>3} {:>16} {:>6}", row.k, row.rt_mod, row.s);
    }
    println!(
        "strict growth of s on the computed prefix: {:?}",
        report.verdict
    );
}
