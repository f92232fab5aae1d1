//! Reduced Groebner bases via Buchberger's algorithm with Gebauer-Moeller
//! pair elimination, plus normal forms and ideal membership.

use std::collections::BTreeSet;

use crate::field::Coeff;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::RingPresentation;

/// A computed basis. When `reduced` is true the basis is the unique reduced
/// Groebner basis: monic elements, pairwise non-divisible leading monomials,
/// no term of any element divisible by another element's leading monomial,
/// sorted ascending by leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub ring: RingPresentation,
    pub elements: Vec<Polynomial>,
    pub reduced: bool,
    pub input_count: usize,
}

impl GroebnerBasis {
    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].leading_monomial().map(|m| m.is_one()).unwrap_or(false)
    }

    /// Re-checkable assertion: every S-polynomial of basis pairs reduces to
    /// zero by the basis.
    pub fn verify(&self) -> bool {
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                let s = s_polynomial(&self.elements[i], &self.elements[j]);
                if !normal_form(&s, &self.elements).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Full normal form of f by the list G: the remainder r with f - r in
/// ideal(G) and no term of r divisible by any leading monomial of G.
/// The reducer is always the first list element whose leading monomial
/// divides, so the result is deterministic for a fixed list order.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let mut remainder: Vec<(Monomial, Coeff)> = Vec::new();
    let mut p = f.clone();
    'outer: while !p.is_zero() {
        let lm = p.leading_monomial().unwrap().clone();
        let lc = p.leading_coeff().unwrap().clone();
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let glm = g.leading_monomial().unwrap();
            if glm.divides(&lm) {
                let q = glm.divide_into(&lm);
                let c = lc.div(g.leading_coeff().unwrap());
                p = p.sub(&g.mul_term(&q, &c)).expect("same ring");
                continue 'outer;
            }
        }
        // leading term irreducible: it moves to the remainder
        remainder.push((lm, lc));
        p = Polynomial::from_raw(ring.clone(), p.raw_terms()[1..].to_vec());
    }
    // leading monomials strictly decrease, so the remainder is already sorted
    Polynomial::from_raw(ring, remainder)
}

/// Division by a single divisor with quotient tracking; returns the exact
/// quotient when the remainder is zero.
pub fn divide_exact(f: &Polynomial, d: &Polynomial) -> Option<Polynomial> {
    assert!(!d.is_zero(), "division by zero polynomial");
    let ring = f.ring().clone();
    let dlm = d.leading_monomial().unwrap();
    let dlc = d.leading_coeff().unwrap();
    let mut quotient: Vec<(Monomial, Coeff)> = Vec::new();
    let mut p = f.clone();
    while !p.is_zero() {
        let lm = p.leading_monomial().unwrap().clone();
        let lc = p.leading_coeff().unwrap().clone();
        if !dlm.divides(&lm) {
            return None;
        }
        let q = dlm.divide_into(&lm);
        let c = lc.div(dlc);
        p = p.sub(&d.mul_term(&q, &c)).expect("same ring");
        quotient.push((q, c));
    }
    Some(Polynomial::from_terms(&ring, quotient))
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let ring = f.ring();
    let flm = f.leading_monomial().unwrap();
    let glm = g.leading_monomial().unwrap();
    let lcm = flm.lcm(glm, ring.weights());
    let fq = flm.divide_into(&lcm);
    let gq = glm.divide_into(&lcm);
    let fc = f.leading_coeff().unwrap();
    let gc = g.leading_coeff().unwrap();
    f.mul_term(&fq, &fc.inv())
        .sub(&g.mul_term(&gq, &gc.inv()))
        .expect("same ring")
}

// Pending pair keyed for the normal selection strategy: minimal lcm degree
// first, then lcm exponents, then indices.
type PairKey = (u64, Vec<u32>, usize, usize);

struct Engine {
    ring: RingPresentation,
    basis: Vec<Polynomial>,
    // the same elements sorted ascending by leading monomial (reducer order)
    sorted: Vec<Polynomial>,
    pairs: BTreeSet<PairKey>,
}

impl Engine {
    fn lm(&self, i: usize) -> &Monomial {
        self.basis[i].leading_monomial().unwrap()
    }

    fn pair_key(&self, i: usize, j: usize) -> PairKey {
        let lcm = self.lm(i).lcm(self.lm(j), self.ring.weights());
        (lcm.weighted_degree(), lcm.exps().to_vec(), i, j)
    }

    /// Gebauer-Moeller update: adds h to the basis, filters the new pairs by
    /// the M, F and coprimality criteria and prunes old pairs by the chain
    /// criterion.
    #[allow(clippy::needless_range_loop)]
    fn update(&mut self, h: Polynomial) {
        let t = self.basis.len();
        let hlm = h.leading_monomial().unwrap().clone();
        let weights = self.ring.weights().to_vec();

        let cand_lcms: Vec<Monomial> = (0..t)
            .map(|i| self.lm(i).lcm(&hlm, &weights))
            .collect();

        // M: drop candidates whose lcm is a proper multiple of another
        // candidate's lcm.
        let mut keep: Vec<bool> = (0..t)
            .map(|i| {
                !(0..t).any(|j| {
                    j != i
                        && cand_lcms[j] != cand_lcms[i]
                        && cand_lcms[j].divides(&cand_lcms[i])
                })
            })
            .collect();

        // F: among equal lcms keep a single representative, dropping the
        // whole class when some member has coprime leading monomials.
        for i in 0..t {
            if !keep[i] {
                continue;
            }
            let class: Vec<usize> = (i..t)
                .filter(|&j| keep[j] && cand_lcms[j] == cand_lcms[i])
                .collect();
            let coprime = class.iter().any(|&j| self.lm(j).coprime(&hlm));
            for &j in &class {
                keep[j] = false;
            }
            if !coprime && !self.lm(i).coprime(&hlm) {
                keep[i] = true;
            }
        }

        // chain criterion on old pairs
        let stale: Vec<PairKey> = self
            .pairs
            .iter()
            .filter(|(_, _, i, j)| {
                let lcm_ij = self.lm(*i).lcm(self.lm(*j), &weights);
                hlm.divides(&lcm_ij) && cand_lcms[*i] != lcm_ij && cand_lcms[*j] != lcm_ij
            })
            .cloned()
            .collect();
        for k in stale {
            self.pairs.remove(&k);
        }

        self.basis.push(h.clone());
        for i in 0..t {
            if keep[i] {
                self.pairs.insert(self.pair_key(i, t));
            }
        }
        let pos = self
            .sorted
            .binary_search_by(|g| {
                self.ring
                    .compare(g.leading_monomial().unwrap(), &hlm)
            })
            .unwrap_or_else(|p| p);
        self.sorted.insert(pos, h);
    }
}

/// The reduced Groebner basis of ideal(gens) under the ring's order.
pub fn reduced_groebner_basis(ring: &RingPresentation, gens: &[Polynomial]) -> Vec<Polynomial> {
    reduced_groebner_basis_capped(ring, gens, None)
}

/// Like `reduced_groebner_basis`, but pairs whose lcm exceeds the weighted
/// degree cap are discarded. With a cap this produces a d-truncated basis:
/// for homogeneous inputs it decides membership correctly up to the cap.
/// Termination needs no cap (the rings are noetherian), so `None` is the
/// default everywhere.
pub fn reduced_groebner_basis_capped(
    ring: &RingPresentation,
    gens: &[Polynomial],
    degree_cap: Option<u64>,
) -> Vec<Polynomial> {
    let mut inputs: Vec<Polynomial> = gens
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| f.monic())
        .collect();
    inputs.sort_by(|a, b| {
        ring.compare(
            a.leading_monomial().unwrap(),
            b.leading_monomial().unwrap(),
        )
    });
    inputs.dedup();

    let mut engine = Engine {
        ring: ring.clone(),
        basis: Vec::new(),
        sorted: Vec::new(),
        pairs: BTreeSet::new(),
    };
    for f in inputs {
        // interreducing inputs as they enter keeps the pair set small
        let r = normal_form(&f, &engine.sorted);
        if !r.is_zero() {
            engine.update(r.monic());
        }
    }
    while let Some(key) = engine.pairs.iter().next().cloned() {
        engine.pairs.remove(&key);
        let (lcm_degree, _, i, j) = key;
        if let Some(cap) = degree_cap {
            if lcm_degree > cap {
                continue;
            }
        }
        let s = s_polynomial(&engine.basis[i], &engine.basis[j]);
        let r = normal_form(&s, &engine.sorted);
        if !r.is_zero() {
            engine.update(r.monic());
        }
    }
    interreduce(ring, engine.basis)
}

fn interreduce(ring: &RingPresentation, mut elements: Vec<Polynomial>) -> Vec<Polynomial> {
    elements.retain(|f| !f.is_zero());
    elements.sort_by(|a, b| {
        ring.compare(
            a.leading_monomial().unwrap(),
            b.leading_monomial().unwrap(),
        )
    });
    // minimal set of leading monomials
    let mut minimal: Vec<Polynomial> = Vec::new();
    for f in elements {
        let flm = f.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|g| g.leading_monomial().unwrap().divides(flm))
        {
            minimal.push(f);
        }
    }
    // tail reduction to a fixpoint
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let r = normal_form(&minimal[i], &others).monic();
            if r != minimal[i] {
                minimal[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    minimal.sort_by(|a, b| {
        ring.compare(
            a.leading_monomial().unwrap(),
            b.leading_monomial().unwrap(),
        )
    });
    minimal
}

/// Wrapper carrying the flags of the computed basis.
pub fn groebner_basis(ring: &RingPresentation, gens: &[Polynomial]) -> GroebnerBasis {
    let elements = reduced_groebner_basis(ring, gens);
    GroebnerBasis {
        ring: ring.clone(),
        elements,
        reduced: true,
        input_count: gens.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::RingPresentation;

    fn gb_of(ring: &RingPresentation, gens: &[&str]) -> Vec<Polynomial> {
        let polys: Vec<Polynomial> = gens
            .iter()
            .map(|s| parse_polynomial(s, ring).unwrap())
            .collect();
        reduced_groebner_basis(ring, &polys)
    }

    #[test]
    fn normal_form_examples() {
        let r = RingPresentation::standard(&["x", "y"]);
        let x2 = parse_polynomial("x^2", &r).unwrap();
        let f = parse_polynomial("x^2*y", &r).unwrap();
        assert!(normal_form(&f, std::slice::from_ref(&x2)).is_zero());

        let g = parse_polynomial("x^2+y", &r).unwrap();
        assert_eq!(
            normal_form(&g, std::slice::from_ref(&x2)),
            parse_polynomial("y", &r).unwrap()
        );

        // two-step reduction x^2 -> y -> 0
        let basis = vec![
            parse_polynomial("x^2-y", &r).unwrap(),
            parse_polynomial("y", &r).unwrap(),
        ];
        assert!(normal_form(&x2, &basis).is_zero());
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = RingPresentation::standard(&["x", "y"]);
        let basis = gb_of(&r, &["x^2", "x*y"]);
        let printed: Vec<String> = basis.iter().map(|p| p.to_string()).collect();
        assert_eq!(printed, vec!["x*y", "x^2"]);
    }

    #[test]
    fn linear_system_reduces() {
        use crate::field::Field;
        use crate::monomial::{MonomialOrder, OrderKind};
        let r = RingPresentation::polynomial_ring(
            Field::Prime(32003),
            vec![("x".into(), 1), ("y".into(), 1)],
            MonomialOrder::simple(OrderKind::Lex, 2),
        )
        .unwrap();
        let basis = gb_of(&r, &["x+y", "x-y"]);
        let printed: Vec<String> = basis.iter().map(|p| p.to_string()).collect();
        assert_eq!(printed, vec!["y", "x"]);
    }

    #[test]
    fn principal_ideal_kept() {
        let r = RingPresentation::standard(&["x", "y", "T1", "T2"]);
        let basis = gb_of(&r, &["y*T1 - x*T2"]);
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0].num_terms(), 2);
    }

    #[test]
    fn basis_verifies_and_is_idempotent() {
        let r = RingPresentation::standard(&["x", "y", "z"]);
        let gens = ["x^2 - y*z", "x*y - z^2", "y^2 - x*z"];
        let basis = gb_of(&r, &gens);
        let gb = GroebnerBasis {
            ring: r.clone(),
            elements: basis.clone(),
            reduced: true,
            input_count: 3,
        };
        assert!(gb.verify());
        let again = reduced_groebner_basis(&r, &basis);
        assert_eq!(again, basis);
        // ideal(gens) = ideal(GB): mutual membership
        for s in gens {
            let f = parse_polynomial(s, &r).unwrap();
            assert!(normal_form(&f, &basis).is_zero());
        }
        let gens_polys: Vec<Polynomial> = gens
            .iter()
            .map(|s| parse_polynomial(s, &r).unwrap())
            .collect();
        let gens_gb = reduced_groebner_basis(&r, &gens_polys);
        for g in &basis {
            assert!(normal_form(g, &gens_gb).is_zero());
        }
    }

    #[test]
    fn divide_exact_roundtrip() {
        let r = RingPresentation::standard(&["x", "y"]);
        let f = parse_polynomial("x^2 + x*y", &r).unwrap();
        let d = parse_polynomial("x", &r).unwrap();
        let q = divide_exact(&f, &d).unwrap();
        assert_eq!(q, parse_polynomial("x + y", &r).unwrap());
        assert!(divide_exact(&parse_polynomial("x^2 + y", &r).unwrap(), &d).is_none());
    }

    #[test]
    fn degree_cap_truncates_but_stays_correct_below() {
        // homogeneous ideal: the capped basis decides membership up to the cap
        let r = RingPresentation::standard(&["x", "y", "z"]);
        let gens: Vec<Polynomial> = ["x^2 - y*z", "x*y - z^2", "y^2 - x*z"]
            .iter()
            .map(|s| parse_polynomial(s, &r).unwrap())
            .collect();
        let full = reduced_groebner_basis(&r, &gens);
        let capped = reduced_groebner_basis_capped(&r, &gens, Some(3));
        for probe in ["x^3 - z^3", "x^2*y - y^2*z", "x*y + z^2"] {
            let f = parse_polynomial(probe, &r).unwrap();
            assert_eq!(
                normal_form(&f, &capped).is_zero(),
                normal_form(&f, &full).is_zero(),
                "{probe}"
            );
        }
    }

    #[test]
    fn zero_ideal_empty_basis() {
        let r = RingPresentation::standard(&["x"]);
        assert!(reduced_groebner_basis(&r, &[]).is_empty());
        let z = Polynomial::zero(&r);
        assert!(reduced_groebner_basis(&r, &[z]).is_empty());
    }

    #[test]
    fn homogeneous_inputs_give_homogeneous_basis() {
        let r = RingPresentation::standard(&["x", "y", "z"]);
        let basis = gb_of(&r, &["x^2 - y*z", "x*y - z^2"]);
        assert!(basis.iter().all(|p| p.is_homogeneous()));
    }
}
