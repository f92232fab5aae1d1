//! The explicit brt bound from a primary decomposition of (0), and the
//! uniform bound for principal ideals it implies.
//!
//! Run with: cargo run --example brt_bound

use arlab::artin_rees::{brt, principal_uniform_bound};
use arlab::parse::parse_polynomial;
use arlab::suite::bundled;

fn main() {
    // k[X,Y]/(X^2 Y) with (0) = (x^2) ∩ (y)
    let spec = bundled("eigrt2").unwrap();
    let decomp = spec.decompositions.get("zero").unwrap();
    let (value, report) = brt(&spec.ring, decomp, 32).unwrap();
    println!("brt(k[X,Y]/(X^2 Y)) = {value}");
    println!("intermediate quantities:");
    for (k, v) in &report.quantities {
        println!("  {k} = {v:?}");
    }

    // every principal ideal obeys rt((f)) <= max n_i
    let samples: Vec<_> = ["x", "y", "x + y", "x*y", "x^2 + y"]
        .iter()
        .map(|s| parse_polynomial(s, &spec.ring).unwrap())
        .collect();
    let bound_report = principal_uniform_bound(&spec.ring, decomp, &samples, 32).unwrap();
    println!(
        "principal uniform bound: {:?} with {:?}",
        bound_report.verdict, bound_report.quantities
    );
}
