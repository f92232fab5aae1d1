//! Monomials and monomial orders, including block (elimination) orders.

use std::cmp::Ordering;

/// Exponent vector with a cached weighted degree.
///
/// The exponent vector length always equals the ring's variable count and the
/// cached degree is the dot product with the ring's weight vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    wdeg: u64,
}

impl Monomial {
    pub fn new(exps: Vec<u32>, weights: &[u64]) -> Self {
        debug_assert_eq!(exps.len(), weights.len());
        let wdeg = exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum();
        Monomial { exps, wdeg }
    }

    pub fn one(n_vars: usize) -> Self {
        Monomial {
            exps: vec![0; n_vars],
            wdeg: 0,
        }
    }

    pub fn var(idx: usize, weights: &[u64]) -> Self {
        let mut exps = vec![0; weights.len()];
        exps[idx] = 1;
        Monomial {
            exps,
            wdeg: weights[idx],
        }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn weighted_degree(&self) -> u64 {
        self.wdeg
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    /// Degree in a designated variable block (e.g. the T-block of a Rees ring).
    pub fn block_degree(&self, block: &[usize]) -> u64 {
        block.iter().map(|&i| self.exps[i] as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            wdeg: self.wdeg + other.wdeg,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn divide_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
            wdeg: other.wdeg - self.wdeg,
        }
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u64]) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
            weights,
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Base comparison used inside a single block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum OrderKind {
    Lex,
    GradedLex,
    GradedRevLex,
}

/// One block of a product order: a list of variable indices and the order
/// used on that block. Graded kinds grade by the ring weights restricted to
/// the block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub vars: Vec<usize>,
    pub kind: OrderKind,
}

/// A total multiplicative monomial order given as a sequence of blocks;
/// earlier blocks dominate, so a leading block is an elimination block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    pub blocks: Vec<Block>,
}

impl MonomialOrder {
    /// Single-block order over variables 0..n_vars.
    pub fn simple(kind: OrderKind, n_vars: usize) -> Self {
        MonomialOrder {
            blocks: vec![Block {
                vars: (0..n_vars).collect(),
                kind,
            }],
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial, weights: &[u64]) -> Ordering {
        for block in &self.blocks {
            let ord = compare_block(block, a, b, weights);
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }
}

fn compare_block(block: &Block, a: &Monomial, b: &Monomial, weights: &[u64]) -> Ordering {
    match block.kind {
        OrderKind::Lex => lex_cmp(block, a, b),
        OrderKind::GradedLex => block_wdeg(block, a, weights)
            .cmp(&block_wdeg(block, b, weights))
            .then_with(|| lex_cmp(block, a, b)),
        OrderKind::GradedRevLex => block_wdeg(block, a, weights)
            .cmp(&block_wdeg(block, b, weights))
            .then_with(|| revlex_tiebreak(block, a, b)),
    }
}

fn block_wdeg(block: &Block, m: &Monomial, weights: &[u64]) -> u64 {
    block
        .vars
        .iter()
        .map(|&i| m.exps()[i] as u64 * weights[i])
        .sum()
}

fn lex_cmp(block: &Block, a: &Monomial, b: &Monomial) -> Ordering {
    for &i in &block.vars {
        let ord = a.exps()[i].cmp(&b.exps()[i]);
        if ord != Ordering::Equal {
            return ord;
        }
    }
    Ordering::Equal
}

// Last differing variable of the block; smaller exponent there wins.
fn revlex_tiebreak(block: &Block, a: &Monomial, b: &Monomial) -> Ordering {
    for &i in block.vars.iter().rev() {
        let (ea, eb) = (a.exps()[i], b.exps()[i]);
        if ea != eb {
            return eb.cmp(&ea);
        }
    }
    Ordering::Equal
}
