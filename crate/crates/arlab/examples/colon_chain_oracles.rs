//! The colon-chain routes to the relation type: the principal-ideal chain
//! (0 : x^r) and the two-generator chain J_n = (u I^{n-1} : v^n), run next
//! to the exact Rees-basis computation.
//!
//! Run with: cargo run --example colon_chain_oracles

use arlab::ideal::IdealHandle;
use arlab::parse::parse_polynomial;
use arlab::poly::Polynomial;
use arlab::rees;
use arlab::suite::bundled;

fn main() {
    // (0 : x^r) in k[X,Y]/(X^3, XY) stabilizes exactly at r = 3
    let sect7 = bundled("sect7-a3b1").unwrap();
    let x = parse_polynomial("x", &sect7.ring).unwrap();
    let zero = IdealHandle::zero(&sect7.ring);
    for r in 1..=4u32 {
        let colon = zero.colon_poly(&x.pow(r)).unwrap();
        println!("(0 : x^{r}) = ({})", colon.printed_gens().join(", "));
    }
    println!(
        "principal_rt((x)) = {}",
        rees::principal_rt(&sect7.ring, &x, &zero, 32).unwrap()
    );

    // the two-generator chain on the g = 2 semigroup model
    let sg = bundled("semigroup2").unwrap();
    let u0 = Polynomial::var(&sg.ring, 0);
    let u1 = Polynomial::var(&sg.ring, 1);
    let outcome = rees::two_gen_rt(&sg.ring, &u0, &u1, 32).unwrap();
    println!("semigroup g=2 chain J_n = (u0 I^(n-1) : u1^n):");
    for (n, ideal) in outcome.chain.iter().enumerate() {
        println!("  J_{} = ({})", n + 1, ideal.join(", "));
    }
    println!(
        "two_gen_rt = {:?} ({:?}); Rees basis gives {}",
        outcome.rt,
        outcome.status,
        rees::relation_type(&sg.ring, sg.ideals.get("I").unwrap()).unwrap()
    );
}
