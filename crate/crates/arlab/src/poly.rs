//! Sparse exact-coefficient polynomials with deterministic term order.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::Monomial;
use crate::ring::{RawTerms, RingPresentation};

/// A polynomial of the ambient ring. Terms are kept in descending order
/// under the ring's monomial order and never carry zero coefficients; the
/// zero polynomial has an empty term list.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: RingPresentation,
    terms: RawTerms,
}

/// Snapshot of the leading term of a nonzero polynomial.
#[derive(Debug, Clone)]
pub struct LeadingData {
    pub monomial: Monomial,
    pub coeff: Coeff,
    pub weighted_degree: u64,
    /// Distinct degrees in the requested block, ascending; a single entry
    /// means the polynomial is homogeneous for that block grading.
    pub block_degrees: Option<Vec<u64>>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &RingPresentation) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingPresentation) -> Self {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &RingPresentation, c: Coeff) -> Self {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::one(ring.n_vars()), c)],
        }
    }

    pub fn var(ring: &RingPresentation, idx: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(idx, ring.weights()), ring.field().one())],
        }
    }

    pub fn monomial(ring: &RingPresentation, m: Monomial, c: Coeff) -> Self {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(m, c)],
        }
    }

    /// Builds a polynomial from arbitrary (monomial, coeff) pairs, combining
    /// duplicates and dropping zeros.
    pub fn from_terms(ring: &RingPresentation, pairs: Vec<(Monomial, Coeff)>) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(pairs.len());
        for (m, c) in pairs {
            match acc.entry(m) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let s = e.get().add(&c);
                    if s.is_zero() {
                        e.remove();
                    } else {
                        e.insert(s);
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    if !c.is_zero() {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: RawTerms = acc.into_iter().collect();
        terms.sort_by(|(a, _), (b, _)| ring.compare(b, a));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub(crate) fn from_raw(ring: RingPresentation, terms: RawTerms) -> Self {
        Polynomial { ring, terms }
    }

    pub(crate) fn raw_terms(&self) -> &RawTerms {
        &self.terms
    }

    pub(crate) fn into_raw_terms(self) -> RawTerms {
        self.terms
    }

    pub fn ring(&self) -> &RingPresentation {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_monomial(&self) -> Result<&Monomial> {
        self.terms
            .first()
            .map(|(m, _)| m)
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_coeff(&self) -> Result<&Coeff> {
        self.terms
            .first()
            .map(|(_, c)| c)
            .ok_or(Error::ZeroPolynomial)
    }

    /// Leading monomial, leading coefficient, weighted degree and, when a
    /// block is supplied, the block degrees, in one call.
    pub fn leading_data(&self, block: Option<&[usize]>) -> Result<LeadingData> {
        Ok(LeadingData {
            monomial: self.leading_monomial()?.clone(),
            coeff: self.leading_coeff()?.clone(),
            weighted_degree: self.weighted_degree(),
            block_degrees: block.map(|b| self.block_degrees(b)),
        })
    }

    /// Maximum weighted degree over the terms.
    pub fn weighted_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|(m, _)| m.weighted_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.weighted_degree();
                self.terms.iter().all(|(m, _)| m.weighted_degree() == d)
            }
        }
    }

    /// Degrees occurring in a variable block, ascending and deduplicated.
    pub fn block_degrees(&self, block: &[usize]) -> Vec<u64> {
        let mut ds: Vec<u64> = self.terms.iter().map(|(m, _)| m.block_degree(block)).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// The common block degree when the polynomial is homogeneous for the
    /// block grading.
    pub fn block_degree(&self, block: &[usize]) -> Option<u64> {
        let ds = self.block_degrees(block);
        match ds.len() {
            0 => Some(0),
            1 => Some(ds[0]),
            _ => None,
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring.same_ambient(other.ring()) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        // merge of two descending term lists
        let mut out: RawTerms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.ring.compare(&self.terms[i].0, &other.terms[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = self.terms[i].1.add(&other.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: out,
        })
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut acc: HashMap<Monomial, Coeff> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = e.get().add(&c);
                        if s.is_zero() {
                            e.remove();
                        } else {
                            e.insert(s);
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: RawTerms = acc.into_iter().collect();
        terms.sort_by(|(a, _), (b, _)| self.ring.compare(b, a));
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..n {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k.mul(c))).collect(),
        }
    }

    /// Multiplies by a single term.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc.mul(c)))
                .collect(),
        }
    }

    /// Monic rescaling (leading coefficient 1); zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, lc)) => {
                if lc.is_one() {
                    self.clone()
                } else {
                    self.scale(&lc.inv())
                }
            }
        }
    }

    /// Re-interprets the polynomial in a ring with the same variables but a
    /// possibly different order or defining ideal (terms are re-sorted).
    pub fn transfer(&self, target: &RingPresentation) -> Result<Polynomial> {
        if self.ring.field() != target.field()
            || self.ring.vars() != target.vars()
            || self.ring.weights() != target.weights()
        {
            return Err(Error::RingMismatch);
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|(a, _), (b, _)| target.compare(b, a));
        Ok(Polynomial {
            ring: target.clone(),
            terms,
        })
    }

    /// Image under the ring map sending variable i to `images[i]`; all images
    /// must live in `target`.
    pub fn substitute(&self, target: &RingPresentation, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.n_vars() {
            return Err(Error::RingMismatch);
        }
        if self.ring.field() != target.field() {
            return Err(Error::RingMismatch);
        }
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e))?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Maps into a ring whose variable list extends this ring's at the given
    /// offset (new variables get exponent zero).
    pub fn lift(&self, target: &RingPresentation, offset: usize) -> Result<Polynomial> {
        if self.ring.field() != target.field() {
            return Err(Error::RingMismatch);
        }
        let n = target.n_vars();
        if offset + self.ring.n_vars() > n {
            return Err(Error::RingMismatch);
        }
        let mut terms: RawTerms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; n];
                exps[offset..offset + m.exps().len()].copy_from_slice(m.exps());
                (Monomial::new(exps, target.weights()), c.clone())
            })
            .collect();
        terms.sort_by(|(a, _), (b, _)| target.compare(b, a));
        Ok(Polynomial {
            ring: target.clone(),
            terms,
        })
    }

    /// Drops variables outside `keep` (which maps target index -> source
    /// index); errors when the polynomial involves a dropped variable.
    pub fn project(&self, target: &RingPresentation, keep: &[usize]) -> Result<Polynomial> {
        if self.ring.field() != target.field() || keep.len() != target.n_vars() {
            return Err(Error::RingMismatch);
        }
        let mut terms: RawTerms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.n_vars()];
            for (ti, &si) in keep.iter().enumerate() {
                exps[ti] = m.exps()[si];
            }
            let total: u64 = keep.iter().map(|&si| m.exps()[si] as u64).sum();
            if total != m.total_degree() {
                return Err(Error::SpecFile(
                    "projection drops a used variable".to_string(),
                ));
            }
            terms.push((Monomial::new(exps, target.weights()), c.clone()));
        }
        terms.sort_by(|(a, _), (b, _)| target.compare(b, a));
        Ok(Polynomial {
            ring: target.clone(),
            terms,
        })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = self.ring.vars();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let printed = c.to_string();
            let (neg, mag) = match printed.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, printed),
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if m.is_one() || mag != "1" {
                factors.push(mag);
            }
            for (vi, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(vars[vi].clone()),
                    _ => factors.push(format!("{}^{}", vars[vi], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
