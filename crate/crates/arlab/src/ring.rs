//! Ring presentations `A = k[X]/J_A`: ambient variables with weights, a
//! monomial order, and a defining ideal (possibly zero).
//!
//! Quotient rings are modeled by their graded affine analogues: an ideal I of
//! A is always handled through the ambient ideal I + J_A containing J_A, so
//! every computation below runs in the ambient polynomial ring.

use std::cmp::Ordering;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::{Coeff, Field};
use crate::monomial::{Monomial, MonomialOrder, OrderKind};
use crate::poly::Polynomial;

pub(crate) type RawTerms = Vec<(Monomial, Coeff)>;

#[derive(Debug)]
struct RingData {
    field: Field,
    vars: Vec<String>,
    weights: Vec<u64>,
    order: MonomialOrder,
    defining: Vec<RawTerms>,
    defining_gb: OnceLock<Vec<RawTerms>>,
}

/// A shared, immutable ring presentation. Cloning is cheap.
#[derive(Debug, Clone)]
pub struct RingPresentation {
    inner: Arc<RingData>,
}

impl PartialEq for RingPresentation {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.field == other.inner.field
                && self.inner.vars == other.inner.vars
                && self.inner.weights == other.inner.weights
                && self.inner.order == other.inner.order
                && self.inner.defining == other.inner.defining)
    }
}
impl Eq for RingPresentation {}

impl RingPresentation {
    /// Polynomial ring `k[vars]` with the given weights and order, no relations.
    pub fn polynomial_ring(
        field: Field,
        vars: Vec<(String, u64)>,
        order: MonomialOrder,
    ) -> Result<Self> {
        field.validate()?;
        let mut names = Vec::with_capacity(vars.len());
        let mut weights = Vec::with_capacity(vars.len());
        for (name, w) in vars {
            if w == 0 {
                return Err(Error::SpecFile(format!("variable {name} has weight 0")));
            }
            if names.contains(&name) {
                return Err(Error::SpecFile(format!("duplicate variable {name}")));
            }
            names.push(name);
            weights.push(w);
        }
        Ok(RingPresentation {
            inner: Arc::new(RingData {
                field,
                vars: names,
                weights,
                order,
                defining: Vec::new(),
                defining_gb: OnceLock::new(),
            }),
        })
    }

    /// Convenience: `k[names]` over F_32003, weight 1, graded reverse lex.
    pub fn standard(names: &[&str]) -> Self {
        RingPresentation::polynomial_ring(
            Field::Prime(32003),
            names.iter().map(|n| (n.to_string(), 1)).collect(),
            MonomialOrder::simple(OrderKind::GradedRevLex, names.len()),
        )
        .expect("valid standard ring")
    }

    /// The quotient of this ring by additional relations: the defining ideal
    /// grows by the given ambient polynomials.
    pub fn quotient(&self, relations: &[Polynomial]) -> Result<RingPresentation> {
        let mut defining = self.inner.defining.clone();
        for r in relations {
            if !self.same_ambient(r.ring()) {
                return Err(Error::RingMismatch);
            }
            if !r.is_zero() {
                defining.push(r.raw_terms().to_vec());
            }
        }
        defining.sort_by(|a, b| self.cmp_raw(a, b));
        defining.dedup();
        Ok(RingPresentation {
            inner: Arc::new(RingData {
                field: self.inner.field,
                vars: self.inner.vars.clone(),
                weights: self.inner.weights.clone(),
                order: self.inner.order.clone(),
                defining,
                defining_gb: OnceLock::new(),
            }),
        })
    }

    fn cmp_raw(&self, a: &RawTerms, b: &RawTerms) -> Ordering {
        for ((ma, _), (mb, _)) in a.iter().zip(b.iter()) {
            let ord = self.compare(ma, mb);
            if ord != Ordering::Equal {
                return ord;
            }
        }
        a.len().cmp(&b.len())
    }

    /// Same ambient polynomial ring (field, variables, weights, order),
    /// defining ideal not considered.
    pub fn same_ambient(&self, other: &RingPresentation) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.field == other.inner.field
                && self.inner.vars == other.inner.vars
                && self.inner.weights == other.inner.weights
                && self.inner.order == other.inner.order)
    }

    pub fn field(&self) -> Field {
        self.inner.field
    }

    pub fn vars(&self) -> &[String] {
        &self.inner.vars
    }

    pub fn n_vars(&self) -> usize {
        self.inner.vars.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.inner.weights
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.inner.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.inner.vars.iter().position(|v| v == name)
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.inner.order.compare(a, b, &self.inner.weights)
    }

    pub fn is_quotient(&self) -> bool {
        !self.inner.defining.is_empty()
    }

    /// Generators of the defining ideal J_A as polynomials of this ring.
    pub fn defining_gens(&self) -> Vec<Polynomial> {
        self.inner
            .defining
            .iter()
            .map(|t| Polynomial::from_raw(self.clone(), t.clone()))
            .collect()
    }

    /// Reduced Groebner basis of J_A, cached.
    pub fn defining_gb(&self) -> Vec<Polynomial> {
        let raw = self.inner.defining_gb.get_or_init(|| {
            crate::groebner::reduced_groebner_basis(self, &self.defining_gens())
                .into_iter()
                .map(|p| p.into_raw_terms())
                .collect()
        });
        raw.iter()
            .map(|t| Polynomial::from_raw(self.clone(), t.clone()))
            .collect()
    }

    /// Normal form modulo J_A: the canonical ambient representative of an
    /// element of A.
    pub fn normalize(&self, f: &Polynomial) -> Polynomial {
        if self.inner.defining.is_empty() {
            f.clone()
        } else {
            crate::groebner::normal_form(f, &self.defining_gb())
        }
    }

    /// True when f represents 0 in A.
    pub fn is_zero_in_quotient(&self, f: &Polynomial) -> bool {
        self.normalize(f).is_zero()
    }

    /// The maximal ideal generated by all variables.
    pub fn maximal_ideal(&self) -> crate::ideal::IdealHandle {
        let gens: Vec<Polynomial> = (0..self.n_vars()).map(|i| Polynomial::var(self, i)).collect();
        crate::ideal::IdealHandle::new(self.clone(), gens)
    }
}
