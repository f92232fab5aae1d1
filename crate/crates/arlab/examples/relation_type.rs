//! Rees defining ideals and exact relation types on the bundled model
//! rings: the nilpotent squares, the quasi-homogeneous semigroup curves,
//! and k[X,Y]/(X^a Y).
//!
//! Run with: cargo run --example relation_type

use arlab::rees;
use arlab::suite::bundled;

fn main() {
    for name in ["nilp2", "nilp3", "nilp4"] {
        let spec = bundled(name).unwrap();
        let m = spec.ideals.get("m").unwrap();
        let analysis = rees::rees_defining_ideal(&spec.ring, m).unwrap();
        println!("{name}: I = (x, y)");
        println!(
            "  Rees defining ideal (reduced basis in {}):",
            analysis.rees_ring().vars().join(", ")
        );
        for g in analysis.defining_gens() {
            println!("    {g}");
        }
        println!("  max T-degree D = {}", analysis.max_t_degree());
        for (n, vanishes) in analysis.verdicts().unwrap() {
            println!("  E(I)_{n} = 0: {vanishes}");
        }
        println!("  rt(I) = {}", analysis.relation_type().unwrap());
    }

    for name in ["semigroup1", "semigroup2", "semigroup3"] {
        let spec = bundled(name).unwrap();
        let i = spec.ideals.get("I").unwrap();
        println!(
            "{name}: rt((u0, u1)) = {}",
            rees::relation_type(&spec.ring, i).unwrap()
        );
    }

    for name in ["eigrt1", "eigrt2", "eigrt3"] {
        let spec = bundled(name).unwrap();
        let m = spec.ideals.get("m").unwrap();
        println!(
            "{name}: rt(m) = {}",
            rees::relation_type(&spec.ring, m).unwrap()
        );
    }
}
