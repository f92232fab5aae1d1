//! Property tests for the algebraic invariants: ring axioms, leading-term
//! multiplicativity, parser round trips, membership characterizations of
//! intersections and colons, and Groebner self-checks.

use arlab::field::Field;
use arlab::groebner;
use arlab::ideal::IdealHandle;
use arlab::monomial::{Monomial, MonomialOrder, OrderKind};
use arlab::parse::parse_polynomial;
use arlab::poly::Polynomial;
use arlab::ring::RingPresentation;
use proptest::prelude::*;

fn ring3(field: Field) -> RingPresentation {
    RingPresentation::polynomial_ring(
        field,
        vec![("x".into(), 1), ("y".into(), 2), ("z".into(), 1)],
        MonomialOrder::simple(OrderKind::GradedRevLex, 3),
    )
    .unwrap()
}

prop_compose! {
    fn arb_monomial(max_exp: u32)(exps in prop::collection::vec(0..=max_exp, 3)) -> Vec<u32> {
        exps
    }
}

fn arb_poly(field: Field, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let ring = ring3(field);
    prop::collection::vec((arb_monomial(4), -9i64..=9), 0..=max_terms).prop_map(move |terms| {
        Polynomial::from_terms(
            &ring,
            terms
                .into_iter()
                .map(|(exps, c)| {
                    (
                        Monomial::new(exps, ring.weights()),
                        ring.field().from_int(c),
                    )
                })
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn arithmetic_ring_axioms(
        f in arb_poly(Field::Prime(32003), 4),
        g in arb_poly(Field::Prime(32003), 4),
        h in arb_poly(Field::Prime(32003), 4),
    ) {
        prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(
            f.add(&g).unwrap().add(&h).unwrap(),
            f.add(&g.add(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(
            f.mul(&g).unwrap().mul(&h).unwrap(),
            f.mul(&g.mul(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(
            f.mul(&g.add(&h).unwrap()).unwrap(),
            f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
        );
    }

    #[test]
    fn rational_axioms_spot(
        f in arb_poly(Field::Rationals, 3),
        g in arb_poly(Field::Rationals, 3),
    ) {
        prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
    }

    #[test]
    fn leading_term_is_multiplicative(
        f in arb_poly(Field::Prime(32003), 4),
        g in arb_poly(Field::Prime(32003), 4),
    ) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let prod = f.mul(&g).unwrap();
        prop_assert!(!prod.is_zero()); // coefficients form a domain
        prop_assert_eq!(
            prod.leading_monomial().unwrap().clone(),
            f.leading_monomial().unwrap().mul(g.leading_monomial().unwrap())
        );
        prop_assert_eq!(
            prod.weighted_degree(),
            f.weighted_degree() + g.weighted_degree()
        );
    }

    #[test]
    fn parse_print_roundtrip(f in arb_poly(Field::Prime(32003), 5)) {
        let printed = f.to_string();
        let back = parse_polynomial(&printed, f.ring()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn parse_print_roundtrip_rationals(f in arb_poly(Field::Rationals, 5)) {
        let printed = f.to_string();
        let back = parse_polynomial(&printed, f.ring()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn intersection_membership_characterization(
        a in prop::collection::vec(arb_monomial(3), 1..=3),
        b in prop::collection::vec(arb_monomial(3), 1..=3),
        f in arb_poly(Field::Prime(32003), 3),
    ) {
        let ring = ring3(Field::Prime(32003));
        let mk = |exps: Vec<Vec<u32>>| {
            IdealHandle::new(
                ring.clone(),
                exps.into_iter()
                    .map(|e| Polynomial::monomial(&ring, Monomial::new(e, ring.weights()), ring.field().one()))
                    .collect::<Vec<_>>(),
            )
        };
        let i = mk(a);
        let j = mk(b);
        let meet = i.intersect(&j).unwrap();
        let f = f.transfer(&ring).unwrap();
        prop_assert_eq!(
            meet.contains(&f).unwrap(),
            i.contains(&f).unwrap() && j.contains(&f).unwrap()
        );
    }

    #[test]
    fn colon_membership_characterization(
        a in prop::collection::vec(arb_monomial(3), 1..=3),
        d in arb_monomial(2),
        g in arb_poly(Field::Prime(32003), 3),
    ) {
        let ring = ring3(Field::Prime(32003));
        let i = IdealHandle::new(
            ring.clone(),
            a.into_iter()
                .map(|e| Polynomial::monomial(&ring, Monomial::new(e, ring.weights()), ring.field().one()))
                .collect(),
        );
        let f = Polynomial::monomial(&ring, Monomial::new(d, ring.weights()), ring.field().one());
        let colon = i.colon_poly(&f).unwrap();
        let g = g.transfer(&ring).unwrap();
        prop_assert_eq!(
            colon.contains(&g).unwrap(),
            i.contains(&g.mul(&f).unwrap()).unwrap()
        );
        // (I : f) * (f) is inside I
        let product = colon.product(&IdealHandle::principal(f)).unwrap();
        prop_assert!(product.contained_in(&i).unwrap());
    }

    #[test]
    fn monomial_ideal_oracles(
        a in prop::collection::vec(arb_monomial(3), 1..=3),
        b in prop::collection::vec(arb_monomial(3), 1..=3),
    ) {
        let ring = ring3(Field::Prime(32003));
        let monos = |exps: &[Vec<u32>]| -> Vec<Monomial> {
            exps.iter().map(|e| Monomial::new(e.clone(), ring.weights())).collect()
        };
        let handle = |ms: &[Monomial]| {
            IdealHandle::new(
                ring.clone(),
                ms.iter()
                    .map(|m| Polynomial::monomial(&ring, m.clone(), ring.field().one()))
                    .collect(),
            )
        };
        let (ma, mb) = (monos(&a), monos(&b));
        let (ia, ib) = (handle(&ma), handle(&mb));

        // intersection oracle: pairwise lcms
        let mut lcms: Vec<Monomial> = Vec::new();
        for x in &ma {
            for y in &mb {
                lcms.push(x.lcm(y, ring.weights()));
            }
        }
        let expected = handle(&lcms);
        prop_assert!(ia.intersect(&ib).unwrap().equals(&expected).unwrap());

        // colon oracle: (I : m) = (g / gcd(g, m))
        let m = &mb[0];
        let colon_gens: Vec<Monomial> = ma
            .iter()
            .map(|g| {
                let gcd = Monomial::new(
                    g.exps().iter().zip(m.exps()).map(|(x, y)| *x.min(y)).collect(),
                    ring.weights(),
                );
                gcd.divide_into(g)
            })
            .collect();
        let colon_expected = handle(&colon_gens);
        let f = Polynomial::monomial(&ring, m.clone(), ring.field().one());
        prop_assert!(ia.colon_poly(&f).unwrap().equals(&colon_expected).unwrap());
    }

    #[test]
    fn groebner_self_checks(
        gens in prop::collection::vec(arb_poly(Field::Prime(32003), 3), 1..=3),
    ) {
        let ring = ring3(Field::Prime(32003));
        let gens: Vec<Polynomial> = gens
            .into_iter()
            .map(|g| g.transfer(&ring).unwrap())
            .collect();
        let gb = groebner::groebner_basis(&ring, &gens);
        // S-polynomials reduce to zero
        prop_assert!(gb.verify());
        // reducedness: monic, and no term divisible by another leading monomial
        for (i, f) in gb.elements.iter().enumerate() {
            prop_assert!(f.leading_coeff().unwrap().is_one());
            for (j, g) in gb.elements.iter().enumerate() {
                if i == j {
                    continue;
                }
                let glm = g.leading_monomial().unwrap();
                for (mono, _) in f.terms() {
                    prop_assert!(!glm.divides(mono), "basis not reduced");
                }
            }
        }
        // idempotence
        let again = groebner::reduced_groebner_basis(&ring, &gb.elements);
        prop_assert_eq!(again, gb.elements.clone());
        // mutual membership with the input generators
        for g in &gens {
            prop_assert!(groebner::normal_form(g, &gb.elements).is_zero());
        }
        // normal forms are fully reduced
        for f in &gens {
            let nf = groebner::normal_form(f, &gb.elements);
            for (mono, _) in nf.terms() {
                for b in &gb.elements {
                    prop_assert!(!b.leading_monomial().unwrap().divides(mono));
                }
            }
        }
    }

    #[test]
    fn saturation_contains_every_iterate(
        a in prop::collection::vec(arb_monomial(3), 1..=3),
        b in prop::collection::vec(arb_monomial(2), 1..=2),
    ) {
        let ring = ring3(Field::Prime(32003));
        let mk = |exps: Vec<Vec<u32>>| {
            IdealHandle::new(
                ring.clone(),
                exps.into_iter()
                    .filter(|e| e.iter().any(|&x| x > 0))
                    .map(|e| Polynomial::monomial(&ring, Monomial::new(e, ring.weights()), ring.field().one()))
                    .collect(),
            )
        };
        let i = mk(a);
        let j = mk(b);
        prop_assume!(!j.gens().is_empty());
        let (sat, k) = i.saturate(&j).unwrap();
        let mut current = i.clone();
        for _ in 0..=k {
            prop_assert!(current.contained_in(&sat).unwrap());
            current = current.colon(&j).unwrap();
        }
        prop_assert!(current.equals(&sat).unwrap());
    }
}
