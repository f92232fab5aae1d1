//! Ideal arithmetic in polynomial and quotient rings.
//!
//! An ideal of `A = k[X]/J_A` is represented by an ambient ideal containing
//! J_A: every handle's effective generator list is its listed generators
//! together with the defining relations, and the cached basis is the reduced
//! Groebner basis of that ambient ideal.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::{self, GroebnerBasis};
use crate::monomial::{Block, MonomialOrder, OrderKind};
use crate::poly::Polynomial;
use crate::ring::RingPresentation;

#[derive(Debug)]
struct IdealData {
    ring: RingPresentation,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

/// A shared handle to an ideal given by generators, with a lazily cached
/// reduced Groebner basis of (generators + J_A). Cloning is cheap and
/// clones share the cache.
#[derive(Debug, Clone)]
pub struct IdealHandle {
    inner: Arc<IdealData>,
}

impl IdealHandle {
    pub fn new(ring: RingPresentation, gens: Vec<Polynomial>) -> Self {
        for g in &gens {
            assert!(
                ring.same_ambient(g.ring()),
                "generator lives in a different ring"
            );
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        IdealHandle {
            inner: Arc::new(IdealData {
                ring,
                gens,
                gb: OnceLock::new(),
            }),
        }
    }

    pub fn zero(ring: &RingPresentation) -> Self {
        IdealHandle::new(ring.clone(), Vec::new())
    }

    pub fn unit(ring: &RingPresentation) -> Self {
        let one = Polynomial::one(ring);
        IdealHandle::new(ring.clone(), vec![one])
    }

    pub fn principal(f: Polynomial) -> Self {
        let ring = f.ring().clone();
        IdealHandle::new(ring, vec![f])
    }

    pub fn ring(&self) -> &RingPresentation {
        &self.inner.ring
    }

    /// The listed generators (defining relations not included).
    pub fn gens(&self) -> &[Polynomial] {
        &self.inner.gens
    }

    /// Listed generators followed by the defining relations of the ring.
    pub fn effective_gens(&self) -> Vec<Polynomial> {
        let mut gens = self.inner.gens.clone();
        gens.extend(self.inner.ring.defining_gens());
        gens
    }

    /// Reduced Groebner basis of the effective ambient ideal, cached.
    pub fn gb(&self) -> &GroebnerBasis {
        self.inner
            .gb
            .get_or_init(|| groebner::groebner_basis(&self.inner.ring, &self.effective_gens()))
    }

    /// The elements of the reduced basis.
    pub fn reduced_gens(&self) -> &[Polynomial] {
        &self.gb().elements
    }

    fn check_ring(&self, other: &IdealHandle) -> Result<()> {
        if self.inner.ring == *other.ring() {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Membership of f (as an element of A) in this ideal of A.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if !self.inner.ring.same_ambient(f.ring()) {
            return Err(Error::RingMismatch);
        }
        let f = f.transfer(&self.inner.ring)?;
        Ok(groebner::normal_form(&f, &self.gb().elements).is_zero())
    }

    /// Ideal inclusion self ⊆ other (as ideals of A).
    pub fn contained_in(&self, other: &IdealHandle) -> Result<bool> {
        self.check_ring(other)?;
        for g in &self.inner.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality by mutual generator membership.
    pub fn equals(&self, other: &IdealHandle) -> Result<bool> {
        Ok(self.contained_in(other)? && other.contained_in(self)?)
    }

    /// True when this is the zero ideal of A (effective ideal equals J_A).
    pub fn is_zero_ideal(&self) -> bool {
        self.inner
            .gens
            .iter()
            .all(|g| self.inner.ring.is_zero_in_quotient(g))
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.gb().is_unit_ideal()
    }

    /// Canonical printed form: the reduced basis as strings ("0" when the
    /// effective ideal is the zero ideal of the ambient ring).
    pub fn printed_gens(&self) -> Vec<String> {
        self.reduced_gens().iter().map(|p| p.to_string()).collect()
    }

    pub fn sum(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.check_ring(other)?;
        let mut gens = self.inner.gens.clone();
        gens.extend(other.inner.gens.iter().cloned());
        Ok(IdealHandle::new(self.inner.ring.clone(), dedup_polys(gens)))
    }

    pub fn product(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.check_ring(other)?;
        let mut gens = Vec::new();
        for f in &self.inner.gens {
            for g in &other.inner.gens {
                gens.push(f.mul(g)?);
            }
        }
        Ok(IdealHandle::new(self.inner.ring.clone(), dedup_polys(gens)))
    }

    /// I^n with I^0 the unit ideal. Generator lists are deduplicated but not
    /// minimalized.
    pub fn power(&self, n: u32) -> Result<IdealHandle> {
        let mut acc = IdealHandle::unit(&self.inner.ring);
        for _ in 0..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// I ∩ J via the auxiliary-variable method: eliminate u from
    /// u·I + (1-u)·J.
    pub fn intersect(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.check_ring(other)?;
        let gens = intersect_ambient(
            &self.inner.ring,
            &self.effective_gens(),
            &other.effective_gens(),
        )?;
        Ok(IdealHandle::new(self.inner.ring.clone(), gens))
    }

    /// Colon ideal (I : f) for a single ambient-nonzero divisor.
    pub fn colon_poly(&self, f: &Polynomial) -> Result<IdealHandle> {
        if !self.inner.ring.same_ambient(f.ring()) {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Err(Error::ZeroColonDivisor);
        }
        let f = f.transfer(&self.inner.ring)?;
        // (I_eff : f) = (1/f) * (I_eff ∩ (f)) in the ambient polynomial ring
        let meet = intersect_ambient(
            &self.inner.ring,
            &self.effective_gens(),
            std::slice::from_ref(&f),
        )?;
        let mut gens = Vec::with_capacity(meet.len());
        for h in meet {
            let q = groebner::divide_exact(&h, &f)
                .expect("intersection with principal ideal divides exactly");
            gens.push(q);
        }
        Ok(IdealHandle::new(self.inner.ring.clone(), gens))
    }

    /// Colon ideal (I : J) = ∩ over J's generators of (I : g).
    pub fn colon(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.check_ring(other)?;
        let gens: Vec<&Polynomial> = other.gens().iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Err(Error::ZeroColonDivisor);
        }
        let mut acc: Option<IdealHandle> = None;
        for g in gens {
            let part = self.colon_poly(g)?;
            acc = Some(match acc {
                None => part,
                Some(prev) => prev.intersect(&part)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Saturation (I : J^∞): iterates colons until two consecutive results
    /// are equal; also returns the first stable index k (the number of colon
    /// steps after which the chain is constant).
    pub fn saturate(&self, other: &IdealHandle) -> Result<(IdealHandle, usize)> {
        self.check_ring(other)?;
        let mut current = self.clone();
        let mut k = 0usize;
        loop {
            let next = current.colon(other)?;
            if next.equals(&current)? {
                return Ok((current, k));
            }
            current = next;
            k += 1;
        }
    }

    /// Elimination ideal I ∩ k[vars outside `elim`], as a handle of the same
    /// ring whose generators do not involve the eliminated variables.
    pub fn eliminate(&self, elim: &[usize]) -> Result<IdealHandle> {
        for &i in elim {
            if i >= self.inner.ring.n_vars() {
                return Err(Error::UnknownVariable(format!("#{i}")));
            }
        }
        let gens = eliminate_ambient(&self.inner.ring, &self.effective_gens(), elim)?;
        Ok(IdealHandle::new(self.inner.ring.clone(), gens))
    }
}

/// Deterministic dedup of a generator list (canonical printing is faithful).
fn dedup_polys(gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut keyed: Vec<(String, Polynomial)> = gens
        .into_iter()
        .filter(|g| !g.is_zero())
        .map(|g| (g.to_string(), g))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, g)| g).collect()
}

/// Groebner basis of `gens` under a block order eliminating `elim`, keeping
/// only the elements free of the eliminated variables (re-sorted back into
/// the original ring).
pub(crate) fn eliminate_ambient(
    ring: &RingPresentation,
    gens: &[Polynomial],
    elim: &[usize],
) -> Result<Vec<Polynomial>> {
    let rest: Vec<usize> = (0..ring.n_vars()).filter(|i| !elim.contains(i)).collect();
    let order = MonomialOrder {
        blocks: vec![
            Block {
                vars: elim.to_vec(),
                kind: OrderKind::GradedRevLex,
            },
            Block {
                vars: rest,
                kind: OrderKind::GradedRevLex,
            },
        ],
    };
    let elim_ring = RingPresentation::polynomial_ring(
        ring.field(),
        ring.vars()
            .iter()
            .cloned()
            .zip(ring.weights().iter().cloned())
            .collect(),
        order,
    )?;
    let lifted: Result<Vec<Polynomial>> = gens.iter().map(|g| g.transfer(&elim_ring)).collect();
    let basis = groebner::reduced_groebner_basis(&elim_ring, &lifted?);
    let mut out = Vec::new();
    for p in basis {
        let free = p
            .terms()
            .all(|(m, _)| elim.iter().all(|&i| m.exps()[i] == 0));
        if free {
            out.push(p.transfer(ring)?);
        }
    }
    Ok(out)
}

/// Intersection of two ambient ideals by the auxiliary-variable method;
/// the inputs are taken literally (no defining relations are added here).
pub(crate) fn intersect_ambient(
    ring: &RingPresentation,
    a: &[Polynomial],
    b: &[Polynomial],
) -> Result<Vec<Polynomial>> {
    // fresh auxiliary variable name
    let mut aux = "u".to_string();
    while ring.vars().contains(&aux) {
        aux.push('_');
    }
    let mut vars: Vec<(String, u64)> = vec![(aux, 1)];
    vars.extend(
        ring.vars()
            .iter()
            .cloned()
            .zip(ring.weights().iter().cloned()),
    );
    let mut blocks = vec![Block {
        vars: vec![0],
        kind: OrderKind::Lex,
    }];
    for block in &ring.order().blocks {
        blocks.push(Block {
            vars: block.vars.iter().map(|i| i + 1).collect(),
            kind: block.kind,
        });
    }
    let ext = RingPresentation::polynomial_ring(ring.field(), vars, MonomialOrder { blocks })?;
    let u = Polynomial::var(&ext, 0);
    let one_minus_u = Polynomial::one(&ext).sub(&u)?;
    let mut gens = Vec::with_capacity(a.len() + b.len());
    for f in a {
        gens.push(u.mul(&f.lift(&ext, 1)?)?);
    }
    for g in b {
        gens.push(one_minus_u.mul(&g.lift(&ext, 1)?)?);
    }
    let basis = groebner::reduced_groebner_basis(&ext, &gens);
    let keep: Vec<usize> = (1..ext.n_vars()).collect();
    let mut out = Vec::new();
    for p in basis {
        if p.terms().all(|(m, _)| m.exps()[0] == 0) {
            out.push(p.project(ring, &keep)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ideal(ring: &RingPresentation, gens: &[&str]) -> IdealHandle {
        IdealHandle::new(
            ring.clone(),
            gens.iter()
                .map(|s| parse_polynomial(s, ring).unwrap())
                .collect(),
        )
    }

    fn assert_ideal_eq(a: &IdealHandle, b: &IdealHandle) {
        assert!(
            a.equals(b).unwrap(),
            "ideals differ: {:?} vs {:?}",
            a.printed_gens(),
            b.printed_gens()
        );
    }

    #[test]
    fn membership_examples() {
        let r = RingPresentation::standard(&["x", "y"]);
        let sq = ideal(&r, &["x^2", "y^2"]);
        let xy = parse_polynomial("x*y", &r).unwrap();
        assert!(!sq.contains(&xy).unwrap());
        assert!(sq.contains(&Polynomial::zero(&r)).unwrap());

        let i = ideal(&r, &["x^2-y", "x^2"]);
        assert!(i.contains(&parse_polynomial("y", &r).unwrap()).unwrap());
    }

    #[test]
    fn product_and_power() {
        let r = RingPresentation::standard(&["x", "y"]);
        let x = ideal(&r, &["x"]);
        let y = ideal(&r, &["y"]);
        assert_ideal_eq(&x.product(&y).unwrap(), &ideal(&r, &["x*y"]));

        let m = ideal(&r, &["x", "y"]);
        assert_ideal_eq(&m.power(2).unwrap(), &ideal(&r, &["x^2", "x*y", "y^2"]));
    }

    #[test]
    fn cube_vanishes_in_nilpotent_quotient() {
        // (x,y)^3 = 0 in k[X,Y]/(X^2,Y^2)
        let amb = RingPresentation::standard(&["x", "y"]);
        let rels = vec![
            parse_polynomial("x^2", &amb).unwrap(),
            parse_polynomial("y^2", &amb).unwrap(),
        ];
        let a = amb.quotient(&rels).unwrap();
        let m = ideal(&a, &["x", "y"]);
        let cube = m.power(3).unwrap();
        assert!(cube.is_zero_ideal());
        assert!(!m.power(2).unwrap().is_zero_ideal());
    }

    #[test]
    fn intersection_examples() {
        let r = RingPresentation::standard(&["x", "y"]);
        let x = ideal(&r, &["x"]);
        let y = ideal(&r, &["y"]);
        assert_ideal_eq(&x.intersect(&y).unwrap(), &ideal(&r, &["x*y"]));

        let a = ideal(&r, &["x^2", "x*y"]);
        let b = ideal(&r, &["y^2"]);
        assert_ideal_eq(&a.intersect(&b).unwrap(), &ideal(&r, &["x*y^2"]));

        let i = ideal(&r, &["x^2 - y"]);
        assert_ideal_eq(&i.intersect(&IdealHandle::unit(&r)).unwrap(), &i);
    }

    #[test]
    fn colon_examples() {
        let r = RingPresentation::standard(&["x", "y"]);
        let i = ideal(&r, &["x^2*y"]);
        let y = parse_polynomial("y", &r).unwrap();
        assert_ideal_eq(&i.colon_poly(&y).unwrap(), &ideal(&r, &["x^2"]));

        let j = ideal(&r, &["x^2*y", "y^3"]);
        assert_ideal_eq(&j.colon_poly(&y).unwrap(), &ideal(&r, &["x^2", "y^2"]));

        // (0 : y) = (x^2) in k[X,Y]/(X^2 Y)
        let amb = RingPresentation::standard(&["x", "y"]);
        let a = amb
            .quotient(&[parse_polynomial("x^2*y", &amb).unwrap()])
            .unwrap();
        let zero = IdealHandle::zero(&a);
        let ybar = parse_polynomial("y", &a).unwrap();
        assert_ideal_eq(&zero.colon_poly(&ybar).unwrap(), &ideal(&a, &["x^2"]));
    }

    #[test]
    fn colon_by_ideal_and_zero_divisor_error() {
        let r = RingPresentation::standard(&["x", "y"]);
        let i = ideal(&r, &["x^2*y", "x*y^2"]);
        let m = ideal(&r, &["x", "y"]);
        assert_ideal_eq(&i.colon(&m).unwrap(), &ideal(&r, &["x*y"]));
        assert!(matches!(
            i.colon(&IdealHandle::zero(&r)),
            Err(Error::ZeroColonDivisor)
        ));
    }

    #[test]
    fn eliminate_examples() {
        // Koszul syzygy: eliminate t from (T1 - x t, T2 - y t)
        let r = RingPresentation::standard(&["x", "y", "T1", "T2", "t"]);
        let i = ideal(&r, &["T1 - x*t", "T2 - y*t"]);
        let t_idx = r.var_index("t").unwrap();
        let e = i.eliminate(&[t_idx]).unwrap();
        assert_ideal_eq(
            &IdealHandle::new(r.clone(), e.gens().to_vec()),
            &ideal(&r, &["y*T1 - x*T2"]),
        );

        let r2 = RingPresentation::standard(&["x", "y"]);
        let j = ideal(&r2, &["x - y^2"]);
        let e2 = j.eliminate(&[1]).unwrap();
        assert!(e2.gens().is_empty());

        // intersection construction for (x) ∩ (y)
        let r3 = RingPresentation::standard(&["u", "x", "y"]);
        let k = ideal(&r3, &["u*x", "x*y - u*x*y"]);
        let gens = eliminate_ambient(
            &r3,
            &[
                parse_polynomial("u*x", &r3).unwrap(),
                parse_polynomial("y - u*y", &r3).unwrap(),
            ],
            &[0],
        )
        .unwrap();
        let got = IdealHandle::new(r3.clone(), gens);
        assert_ideal_eq(&got, &ideal(&r3, &["x*y"]));
        drop(k);
    }

    #[test]
    fn saturate_examples() {
        // (0) : (x,y)^inf = (x) in k[X,Y]/(X^3, XY), stable within 3 steps
        let amb = RingPresentation::standard(&["x", "y"]);
        let a = amb
            .quotient(&[
                parse_polynomial("x^3", &amb).unwrap(),
                parse_polynomial("x*y", &amb).unwrap(),
            ])
            .unwrap();
        let m = ideal(&a, &["x", "y"]);
        let (sat, k) = IdealHandle::zero(&a).saturate(&m).unwrap();
        assert_ideal_eq(&sat, &ideal(&a, &["x"]));
        assert!(k <= 3, "stabilized at k = {k}");

        // domain: nothing to saturate
        let r = RingPresentation::standard(&["x", "y"]);
        let (sat2, k2) = IdealHandle::zero(&r)
            .saturate(&ideal(&r, &["x", "y"]))
            .unwrap();
        assert!(sat2.is_zero_ideal());
        assert_eq!(k2, 0);

        // (x^2) : (x)^inf = (1)
        let (sat3, _) = ideal(&r, &["x^2"]).saturate(&ideal(&r, &["x"])).unwrap();
        assert!(sat3.is_unit_ideal());
    }

    #[test]
    fn colon_membership_characterization() {
        let r = RingPresentation::standard(&["x", "y"]);
        let i = ideal(&r, &["x^3", "x*y^2"]);
        let f = parse_polynomial("x*y", &r).unwrap();
        let c = i.colon_poly(&f).unwrap();
        for s in ["x^2", "y", "x*y", "x^2 + y"] {
            let g = parse_polynomial(s, &r).unwrap();
            let gf = g.mul(&f).unwrap();
            assert_eq!(c.contains(&g).unwrap(), i.contains(&gf).unwrap(), "g = {s}");
        }
    }
}
