//! Strong uniform Artin-Rees numbers for cyclic-module pairs and the
//! sandwich inequality relating them to relation types.
//!
//! Run with: cargo run --example artin_rees_numbers

use arlab::artin_rees::{ar_number, check_theorem2, verify_strong_ar};
use arlab::ideal::IdealHandle;
use arlab::parse::parse_polynomial;
use arlab::suite::bundled;

fn main() {
    // I = m, K = (0), L = (x^2) in k[X,Y]/(X^2 Y)
    let spec = bundled("eigrt2").unwrap();
    let ring = &spec.ring;
    let ideal = spec.ideals.get("m").unwrap().clone();
    let inner = IdealHandle::zero(ring);
    let outer = IdealHandle::principal(parse_polynomial("x^2", ring).unwrap());

    let (s, instance) = ar_number(ring, &ideal, &inner, &outer).unwrap();
    println!("pair K = (0) ⊆ L = (x^2), I = (x, y) in k[X,Y]/(X^2 Y)");
    println!("strong uniform number s = {s} (truncation bound rt(I; A/L) = {})", instance.rt_bound);
    for (n, lhs, rhs, equal) in &instance.chain {
        println!(
            "  n = {n}: I^n M ∩ N = ({}) vs I(I^(n-1) M ∩ N) = ({}): equal = {equal}",
            lhs.printed_gens().join(", "),
            rhs.printed_gens().join(", "),
        );
    }

    let ok = verify_strong_ar(&instance, s, s + 4).unwrap();
    println!("identity I^n M ∩ N = I^(n-s)(I^s M ∩ N) for n ≤ s+4: {:?}", ok.verdict);
    if s >= 2 {
        let bad = verify_strong_ar(&instance, s - 1, s + 2).unwrap();
        println!("with s - 1 instead: {:?} ({:?})", bad.verdict, bad.certificate);
    }

    let sandwich = check_theorem2(ring, &ideal, &inner, &outer).unwrap();
    println!(
        "sandwich s ≤ rt(I;A/L) ≤ max(rt(I;A/K), s): {:?} with {:?}",
        sandwich.verdict, sandwich.quantities
    );
}
