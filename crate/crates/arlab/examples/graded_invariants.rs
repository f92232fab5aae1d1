//! Hilbert functions, lengths, minimal generators, multiplicity, and Krull
//! dimension on the bundled model rings.
//!
//! Run with: cargo run --example graded_invariants

use arlab::graded;
use arlab::ideal::IdealHandle;
use arlab::suite::bundled;

fn main() {
    // k[X,Y]/(X^2, Y^2) is artinian of length 4
    let nilp2 = bundled("nilp2").unwrap();
    let zero = IdealHandle::zero(&nilp2.ring);
    let hf = graded::hilbert_function(&nilp2.ring, &zero, 4).unwrap();
    println!("Hilbert function of k[X,Y]/(X^2,Y^2): {hf:?}");
    println!(
        "length = {}",
        graded::quotient_length(&nilp2.ring, &zero).unwrap()
    );

    // k[X,Y]/(X^2 Y): mu(m^n) = 3 for n >= 2 and e(A) = 3
    let eigrt2 = bundled("eigrt2").unwrap();
    let m = eigrt2.ideals.get("m").unwrap();
    for n in 1..=4u32 {
        let mu = graded::min_gens(&m.power(n).unwrap(), m).unwrap();
        println!("mu(m^{n}) in k[X,Y]/(X^2 Y) = {mu}");
    }
    let (e, stab) = graded::multiplicity_1dim(&eigrt2.ring, m, 32).unwrap();
    println!("e(A) = {e} (stabilized at degree {stab})");
    println!("dim A = {}", graded::krull_dim(&eigrt2.ring));

    // the semigroup model of k[t^3, t^4, t^5] has e = 3
    let sg2 = bundled("semigroup2").unwrap();
    let msg = sg2.ideals.get("m").unwrap();
    let (e2, _) = graded::multiplicity_1dim(&sg2.ring, msg, 32).unwrap();
    println!(
        "e of the g = 2 semigroup model = {e2}, dim = {}",
        graded::krull_dim(&sg2.ring)
    );
}
