//! Graded invariants: Hilbert functions by standard-monomial counting,
//! length of finite-dimensional quotients, minimal generator counts, the
//! one-dimensional multiplicity, and combinatorial Krull dimension.

use crate::error::{Error, Result};
use crate::ideal::IdealHandle;
use crate::monomial::Monomial;
use crate::ring::RingPresentation;

/// Counts monomials outside the monomial ideal generated by `lt_gens`, per
/// weighted degree 0..=d_max.
fn standard_monomial_counts(lt_gens: &[Monomial], weights: &[u64], d_max: u64) -> Vec<usize> {
    let n = weights.len();
    let mut counts = vec![0usize; (d_max + 1) as usize];
    let mut exps = vec![0u32; n];
    fn rec(
        var: usize,
        deg: u64,
        exps: &mut Vec<u32>,
        lt_gens: &[Monomial],
        weights: &[u64],
        d_max: u64,
        counts: &mut Vec<usize>,
    ) {
        if var == weights.len() {
            let standard = !lt_gens.iter().any(|g| {
                g.exps()
                    .iter()
                    .zip(exps.iter())
                    .all(|(a, b)| *a <= *b)
            });
            if standard {
                counts[deg as usize] += 1;
            }
            return;
        }
        let mut e = 0u32;
        loop {
            let d = deg + e as u64 * weights[var];
            if d > d_max {
                break;
            }
            exps[var] = e;
            rec(var + 1, d, exps, lt_gens, weights, d_max, counts);
            e += 1;
        }
        exps[var] = 0;
    }
    rec(0, 0, &mut exps, lt_gens, weights, d_max, &mut counts);
    counts
}

fn leading_monomials(ideal: &IdealHandle) -> Vec<Monomial> {
    ideal
        .reduced_gens()
        .iter()
        .map(|p| p.leading_monomial().unwrap().clone())
        .collect()
}

fn require_homogeneous(ideal: &IdealHandle) -> Result<()> {
    for g in ideal.gens() {
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
    }
    for g in ideal.ring().defining_gens() {
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
    }
    Ok(())
}

/// Hilbert function of A/I: (d, dim_k (A/I)_d) for d = 0..=d_max, dimensions
/// counted as standard monomials of the effective leading-term ideal.
pub fn hilbert_function(
    ring: &RingPresentation,
    ideal: &IdealHandle,
    d_max: u64,
) -> Result<Vec<(u64, usize)>> {
    if ideal.ring() != ring {
        return Err(Error::RingMismatch);
    }
    require_homogeneous(ideal)?;
    let counts = standard_monomial_counts(&leading_monomials(ideal), ring.weights(), d_max);
    Ok(counts
        .into_iter()
        .enumerate()
        .map(|(d, c)| (d as u64, c))
        .collect())
}

/// Per-variable bound: the least e with x_i^e in the leading-term ideal.
/// All bounds exist exactly when A/I is finite dimensional.
fn pure_power_bounds(lt_gens: &[Monomial], n_vars: usize) -> Option<Vec<u32>> {
    let mut bounds = Vec::with_capacity(n_vars);
    for i in 0..n_vars {
        let mut best: Option<u32> = None;
        for g in lt_gens {
            let pure = g
                .exps()
                .iter()
                .enumerate()
                .all(|(j, &e)| j == i || e == 0);
            if pure && g.exps()[i] > 0 {
                best = Some(best.map_or(g.exps()[i], |b: u32| b.min(g.exps()[i])));
            }
        }
        bounds.push(best?);
    }
    Some(bounds)
}

/// dim_k(A/I) when finite; errors with InfiniteLength otherwise.
pub fn quotient_length(ring: &RingPresentation, ideal: &IdealHandle) -> Result<usize> {
    if ideal.ring() != ring {
        return Err(Error::RingMismatch);
    }
    require_homogeneous(ideal)?;
    let lt = leading_monomials(ideal);
    if lt.iter().any(|m| m.is_one()) {
        // unit ideal: the quotient is the zero ring
        return Ok(0);
    }
    let bounds = pure_power_bounds(&lt, ring.n_vars()).ok_or(Error::InfiniteLength)?;
    let d_max: u64 = bounds
        .iter()
        .zip(ring.weights())
        .map(|(&e, &w)| (e.saturating_sub(1)) as u64 * w)
        .sum();
    let counts = standard_monomial_counts(&lt, ring.weights(), d_max);
    Ok(counts.into_iter().sum())
}

/// Minimal number of homogeneous generators μ(I) = dim_k(I/mI), computed
/// degreewise from standard-monomial counts and truncated at the maximum
/// degree of the reduced basis.
pub fn min_gens(ideal: &IdealHandle, maximal: &IdealHandle) -> Result<usize> {
    let ring = ideal.ring().clone();
    if *maximal.ring() != ring {
        return Err(Error::RingMismatch);
    }
    require_homogeneous(ideal)?;
    if !maximal.equals(&ring.maximal_ideal())? {
        return Err(Error::SpecFile(
            "second argument must be the homogeneous maximal ideal".to_string(),
        ));
    }
    let d_max = ideal
        .reduced_gens()
        .iter()
        .map(|p| p.weighted_degree())
        .max()
        .unwrap_or(0);
    let mi = maximal.product(ideal)?;
    let i_counts = standard_monomial_counts(&leading_monomials(ideal), ring.weights(), d_max);
    let mi_counts = standard_monomial_counts(&leading_monomials(&mi), ring.weights(), d_max);
    // dim I_d - dim (mI)_d = std(mI, d) - std(I, d); the J_A parts cancel
    Ok(mi_counts
        .iter()
        .zip(&i_counts)
        .map(|(a, b)| a - b)
        .sum())
}

/// Length of the subquotient L/K for ideals K ⊆ L of A, when finite.
///
/// Finiteness is certified by a least σ with m^σ L ⊆ K; every homogeneous
/// element of L in degree above maxdeg(basis of L) + σ·w_max then has
/// coefficients in m^σ, so the graded pieces of L/K vanish there and the
/// degreewise dimension count below the cutoff is the exact length.
pub fn module_length(
    ring: &RingPresentation,
    inner: &IdealHandle,
    outer: &IdealHandle,
    bound: usize,
) -> Result<usize> {
    if inner.ring() != ring || outer.ring() != ring {
        return Err(Error::RingMismatch);
    }
    if !inner.contained_in(outer)? {
        return Err(Error::InclusionViolated("K is not contained in L".into()));
    }
    require_homogeneous(inner)?;
    require_homogeneous(outer)?;
    let maximal = ring.maximal_ideal();
    let mut sigma = None;
    for s in 0..=bound as u64 {
        if maximal.power(s as u32)?.product(outer)?.contained_in(inner)? {
            sigma = Some(s);
            break;
        }
    }
    let sigma = sigma.ok_or(Error::InfiniteLength)?;
    let w_max = *ring.weights().iter().max().unwrap_or(&1);
    let outer_deg = outer
        .reduced_gens()
        .iter()
        .map(|p| p.weighted_degree())
        .max()
        .unwrap_or(0);
    let d_cut = outer_deg + sigma * w_max;
    let inner_counts =
        standard_monomial_counts(&leading_monomials(inner), ring.weights(), d_cut);
    let outer_counts =
        standard_monomial_counts(&leading_monomials(outer), ring.weights(), d_cut);
    // dim (L/K)_d = std(K, d) - std(L, d)
    Ok(inner_counts
        .iter()
        .zip(&outer_counts)
        .map(|(k, l)| k - l)
        .sum())
}

/// Krull dimension of A via maximal independent variable sets of the
/// leading-term ideal of J_A.
pub fn krull_dim(ring: &RingPresentation) -> usize {
    let gb = ring.defining_gb();
    let supports: Vec<Vec<usize>> = gb
        .iter()
        .map(|p| {
            p.leading_monomial()
                .unwrap()
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let n = ring.n_vars();
    let mut best = 0usize;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let independent = !supports.iter().any(|sup| {
            !sup.is_empty() && sup.iter().all(|&i| mask & (1 << i) != 0)
        });
        if independent {
            best = size;
        }
    }
    best
}

/// Stabilized value of dim_k(m^n / m^{n+1}) in a one-dimensional ring,
/// with the stabilization degree. Detection requires three consecutive
/// equal values within the bound.
pub fn multiplicity_1dim(
    ring: &RingPresentation,
    maximal: &IdealHandle,
    bound: usize,
) -> Result<(usize, usize)> {
    let dim = krull_dim(ring);
    if dim != 1 {
        return Err(Error::WrongDimension {
            expected: 1,
            found: dim,
        });
    }
    if !maximal.equals(&ring.maximal_ideal())? {
        return Err(Error::SpecFile(
            "argument must be the homogeneous maximal ideal".to_string(),
        ));
    }
    let mut values = Vec::new();
    let mut prev_len = quotient_length(ring, &maximal.power(1)?)?;
    for n in 1..=bound {
        let next_len = quotient_length(ring, &maximal.power(n as u32 + 1)?)?;
        values.push(next_len - prev_len);
        prev_len = next_len;
        if values.len() >= 3 {
            let k = values.len();
            if values[k - 1] == values[k - 2] && values[k - 2] == values[k - 3] {
                return Ok((values[k - 1], n - 2));
            }
        }
    }
    Err(Error::BoundExhausted(bound))
}
