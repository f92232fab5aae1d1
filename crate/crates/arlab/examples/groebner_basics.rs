//! Reduced Groebner bases, normal forms, and ideal membership.
//!
//! Run with: cargo run --example groebner_basics

use arlab::groebner::{groebner_basis, normal_form};
use arlab::ideal::IdealHandle;
use arlab::parse::parse_polynomial;
use arlab::ring::RingPresentation;

fn main() {
    // the twisted cubic relations in k[x,y,z] over F_32003
    let ring = RingPresentation::standard(&["x", "y", "z"]);
    let gens: Vec<_> = ["x^2 - y*z", "x*y - z^2", "y^2 - x*z"]
        .iter()
        .map(|s| parse_polynomial(s, &ring).unwrap())
        .collect();

    let gb = groebner_basis(&ring, &gens);
    println!("reduced Groebner basis (grevlex):");
    for g in &gb.elements {
        println!("  {g}");
    }
    println!("all S-polynomials reduce to zero: {}", gb.verify());

    let f = parse_polynomial("x^3 - z^3", &ring).unwrap();
    println!("NF(x^3 - z^3) = {}", normal_form(&f, &gb.elements));

    let ideal = IdealHandle::new(ring.clone(), gens);
    for probe in ["x^3 - z^3", "x + y", "0"] {
        let p = parse_polynomial(probe, &ring).unwrap();
        println!("{probe} in I: {}", ideal.contains(&p).unwrap());
    }
}
