//! Shared test support: an independent linear-algebra oracle for effective
//! relations, and small helpers. Everything here avoids the Groebner path
//! it is used to check.

#![allow(clippy::needless_range_loop, clippy::manual_is_multiple_of)]

use arlab::field::{Coeff, Field};
use arlab::monomial::Monomial;
use arlab::poly::Polynomial;
use arlab::ring::RingPresentation;

/// Dense row-reduction over F_p. Returns the rank.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let n_cols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0usize;
    for col in 0..n_cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] % p != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = mod_pow(rows[rank][col] % p, p - 2, p);
        for c in col..n_cols {
            rows[rank][c] = rows[rank][c] % p * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] % p != 0 {
                let factor = rows[r][col] % p;
                for c in col..n_cols {
                    let sub = factor * rows[rank][c] % p;
                    rows[r][c] = (rows[r][c] + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Kernel basis of the column-indexed linear map given by `columns` (each an
/// image vector), over F_p. Returns kernel vectors in column coordinates.
pub fn kernel_mod_p(columns: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n_cols = columns.len();
    if n_cols == 0 {
        return Vec::new();
    }
    let n_rows = columns[0].len();
    // row-reduce the matrix whose columns are the images
    let mut rows: Vec<Vec<u64>> = (0..n_rows)
        .map(|r| (0..n_cols).map(|c| columns[c][r] % p).collect())
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut rank = 0usize;
    for col in 0..n_cols {
        let Some(pivot) = (rank..n_rows).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = mod_pow(rows[rank][col], p - 2, p);
        for c in 0..n_cols {
            rows[rank][c] = rows[rank][c] * inv % p;
        }
        for r in 0..n_rows {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in 0..n_cols {
                    let sub = factor * rows[rank][c] % p;
                    rows[r][c] = (rows[r][c] + p - sub) % p;
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
        if rank == n_rows {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut kernel = Vec::new();
    for free in 0..n_cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; n_cols];
        v[free] = 1;
        for &(r, c) in &pivots {
            // pivot variable = -row[free] * x_free
            v[c] = (p - rows[r][free] % p) % p;
        }
        kernel.push(v);
    }
    kernel
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn monomials_of_degree(n_vars: usize, degree: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; n_vars];
    fn rec(var: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if var + 1 == exps.len() {
            exps[var] = left;
            out.push(exps.clone());
            return;
        }
        for e in 0..=left {
            exps[var] = e;
            rec(var + 1, left - e, exps, out);
        }
    }
    if n_vars == 0 {
        return out;
    }
    rec(0, degree, &mut exps, &mut out);
    out
}

/// (coefficient exponents, T-exponents) indexing one column of the map.
type BiMonomial = (Vec<u32>, Vec<u32>);

fn coeff_to_u64(c: &Coeff, p: u64) -> u64 {
    match c {
        Coeff::Fp { value, .. } => *value % p,
        Coeff::Rat(_) => panic!("linear-algebra oracle works over F_p"),
    }
}

/// Degreewise linear-algebra computation of dim_k E(I)_n at a fixed
/// coefficient degree `a`, for an ideal generated by polynomials that are
/// homogeneous of one common total degree `d` in a weight-one polynomial
/// ring over F_p.
///
/// E(I)_n in coefficient degree a equals
/// ker(alpha_n)^(a) / sum_j T_j ker(alpha_{n-1})^(a),
/// where alpha sends the degree-(a,n) monomial x^e T^b to x^e prod f_i^{b_i}.
pub fn e_dim_at(ring: &RingPresentation, gens: &[Polynomial], n: u32, a: u32) -> usize {
    let p = match ring.field() {
        Field::Prime(p) => p,
        Field::Rationals => panic!("oracle needs a prime field"),
    };
    assert!(ring.weights().iter().all(|&w| w == 1));
    let d = gens[0].weighted_degree() as u32;
    assert!(gens.iter().all(|g| g.weighted_degree() as u32 == d && g.is_homogeneous()));
    let n_vars = ring.n_vars();
    let m = gens.len();

    // target spaces: monomials of total degree a + d*n (resp. a + d*(n-1))
    let image_basis = |total: u32| -> Vec<Vec<u32>> { monomials_of_degree(n_vars, total) };

    // the image of x^e * prod f_i^{b_i} as a dense vector
    let eval = |e: &[u32], b: &[u32], basis: &[Vec<u32>]| -> Vec<u64> {
        let mut poly = Polynomial::monomial(
            ring,
            Monomial::new(e.to_vec(), ring.weights()),
            ring.field().one(),
        );
        for (i, &bi) in b.iter().enumerate() {
            if bi > 0 {
                poly = poly.mul(&gens[i].pow(bi)).unwrap();
            }
        }
        let mut v = vec![0u64; basis.len()];
        for (mono, c) in poly.terms() {
            let idx = basis
                .iter()
                .position(|b| b.as_slice() == mono.exps())
                .expect("image stays in the graded piece");
            v[idx] = coeff_to_u64(c, p);
        }
        v
    };

    // kernel at T-degree n, coefficient degree a
    let kernel_at = |t_deg: u32, coeff_deg: u32| -> (Vec<BiMonomial>, Vec<Vec<u64>>) {
        let cols: Vec<BiMonomial> = monomials_of_degree(n_vars, coeff_deg)
            .into_iter()
            .flat_map(|e| {
                monomials_of_degree(m, t_deg)
                    .into_iter()
                    .map(move |b| (e.clone(), b))
            })
            .collect();
        let basis = image_basis(coeff_deg + d * t_deg);
        let images: Vec<Vec<u64>> = cols.iter().map(|(e, b)| eval(e, b, &basis)).collect();
        let kernel = kernel_mod_p(&images, p);
        (cols, kernel)
    };

    let (cols_n, ker_n) = kernel_at(n, a);
    if ker_n.is_empty() {
        return 0;
    }
    let (cols_prev, ker_prev) = kernel_at(n - 1, a);

    // embed T_j * (kernel vector at n-1) into the column space at n
    let col_index: std::collections::HashMap<BiMonomial, usize> = cols_n
        .iter()
        .enumerate()
        .map(|(i, c)| (c.clone(), i))
        .collect();
    let mut span_rows: Vec<Vec<u64>> = Vec::new();
    for v in &ker_prev {
        for j in 0..m {
            let mut w = vec![0u64; cols_n.len()];
            for (ci, &coeff) in v.iter().enumerate() {
                if coeff == 0 {
                    continue;
                }
                let (e, b) = &cols_prev[ci];
                let mut b2 = b.clone();
                b2[j] += 1;
                let idx = col_index[&(e.clone(), b2)];
                w[idx] = (w[idx] + coeff) % p;
            }
            span_rows.push(w);
        }
    }
    let dim_ker_n = ker_n.len();
    // rank of the U_1-multiples inside ker_n (they are automatically inside)
    let span_rank = if span_rows.is_empty() {
        0
    } else {
        rank_mod_p(span_rows, p)
    };
    dim_ker_n - span_rank
}

/// E(I)_n != 0 scan over coefficient degrees 0..=cap.
pub fn e_nonzero_up_to(ring: &RingPresentation, gens: &[Polynomial], n: u32, cap: u32) -> bool {
    (0..=cap).any(|a| e_dim_at(ring, gens, n, a) > 0)
}
