//! Ideal arithmetic in polynomial and quotient rings: products and powers,
//! intersections, colon ideals, elimination, and saturation.
//!
//! Run with: cargo run --example ideal_calculus

use arlab::ideal::IdealHandle;
use arlab::parse::parse_polynomial;
use arlab::ring::RingPresentation;

fn ideal(ring: &RingPresentation, gens: &[&str]) -> IdealHandle {
    IdealHandle::new(
        ring.clone(),
        gens.iter()
            .map(|s| parse_polynomial(s, ring).unwrap())
            .collect(),
    )
}

fn show(label: &str, handle: &IdealHandle) {
    println!("{label} = ({})", handle.printed_gens().join(", "));
}

fn main() {
    let ring = RingPresentation::standard(&["x", "y"]);

    let m = ideal(&ring, &["x", "y"]);
    show("(x,y)^2", &m.power(2).unwrap());

    let a = ideal(&ring, &["x^2", "x*y"]);
    let b = ideal(&ring, &["y^2"]);
    show("(x^2,xy) ∩ (y^2)", &a.intersect(&b).unwrap());

    let i = ideal(&ring, &["x^2*y", "y^3"]);
    let y = parse_polynomial("y", &ring).unwrap();
    show("(x^2 y, y^3) : y", &i.colon_poly(&y).unwrap());

    // the Koszul syzygy appears by eliminating the Rees parameter
    let big = RingPresentation::standard(&["x", "y", "T1", "T2", "t"]);
    let rees_gens = ideal(&big, &["T1 - x*t", "T2 - y*t"]);
    let t_index = big.var_index("t").unwrap();
    let eliminated = rees_gens.eliminate(&[t_index]).unwrap();
    println!(
        "eliminate t from (T1 - xt, T2 - yt): ({})",
        eliminated
            .gens()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );

    // saturation computes H^0_m in the section-7 ring k[X,Y]/(X^3, XY)
    let quotient = ring
        .quotient(&[
            parse_polynomial("x^3", &ring).unwrap(),
            parse_polynomial("x*y", &ring).unwrap(),
        ])
        .unwrap();
    let mq = ideal(&quotient, &["x", "y"]);
    let (sat, steps) = IdealHandle::zero(&quotient).saturate(&mq).unwrap();
    show("(0) : m^inf in k[X,Y]/(X^3, XY)", &sat);
    println!("stable after {steps} colon steps");
}
