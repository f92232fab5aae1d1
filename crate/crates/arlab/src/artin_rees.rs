//! Strong uniform Artin-Rees numbers for cyclic-module pairs, plus
//! executable verifiers for the theorems and bounds that control them.
//!
//! A pair of ideals K ⊆ L encodes the modules M = A/K and N = L/K, which
//! covers every worked example of interest. The chain ideal
//! I^n M ∩ N is represented by ((I^n + K) ∩ L) + K in the ambient ring, and
//! the strong uniform number s is the largest n with
//! I^n M ∩ N ≠ I(I^{n-1} M ∩ N). Scanning stops at rt(I; M/N), which is an
//! exact truncation certificate: the effective relations of the pair vanish
//! above it.

use crate::error::{Error, Result};
use crate::graded;
use crate::ideal::IdealHandle;
use crate::poly::Polynomial;
use crate::rees;
use crate::report::CheckReport;
use crate::ring::RingPresentation;

/// Default bound for colon-chain and power searches.
pub const DEFAULT_BOUND: usize = 32;

/// One Artin-Rees instance: the ring, the ideal I, the pair K ⊆ L, the
/// computed chain, the strong uniform number and its truncation bound.
#[derive(Debug, Clone)]
pub struct ARInstance {
    pub ring: RingPresentation,
    pub ideal: IdealHandle,
    pub inner: IdealHandle,
    pub outer: IdealHandle,
    /// (n, I^n M ∩ N, I(I^{n-1} M ∩ N), equal) for n = 2..=rt_bound
    pub chain: Vec<(u64, IdealHandle, IdealHandle, bool)>,
    pub s: u64,
    pub rt_bound: u64,
}

impl ARInstance {
    /// I^n M ∩ N as an ambient ideal: ((I^n + K) ∩ L) + K.
    fn chain_ideal(&self, n: u64) -> Result<IdealHandle> {
        chain_ideal(&self.ideal, &self.inner, &self.outer, n)
    }
}

fn chain_ideal(
    ideal: &IdealHandle,
    inner: &IdealHandle,
    outer: &IdealHandle,
    n: u64,
) -> Result<IdealHandle> {
    ideal
        .power(n as u32)?
        .sum(inner)?
        .intersect(outer)
}

/// The strong uniform Artin-Rees number s(N, M; {I}) for M = A/K, N = L/K.
///
/// rt(I; M/N) = rt(I; A/L) bounds the search exactly: E(φ)_n vanishes for
/// every n above it, so s is the largest n ≤ rt_bound with
/// I^n M ∩ N ≠ I(I^{n-1} M ∩ N), or 1.
pub fn ar_number(
    ring: &RingPresentation,
    ideal: &IdealHandle,
    inner: &IdealHandle,
    outer: &IdealHandle,
) -> Result<(u64, ARInstance)> {
    if ideal.ring() != ring || inner.ring() != ring || outer.ring() != ring {
        return Err(Error::RingMismatch);
    }
    if !inner.contained_in(outer)? {
        return Err(Error::InclusionViolated("K is not contained in L".into()));
    }
    let rt_bound = rees::relation_type_mod(ring, ideal, outer)?;
    let mut chain = Vec::new();
    let mut s = 1u64;
    let mut prev = chain_ideal(ideal, inner, outer, 1)?;
    for n in 2..=rt_bound {
        let x_n = chain_ideal(ideal, inner, outer, n)?;
        let y_n = ideal.product(&prev)?.sum(inner)?;
        let equal = x_n.equals(&y_n)?;
        if !equal {
            s = n;
        }
        chain.push((n, x_n.clone(), y_n, equal));
        prev = x_n;
    }
    let instance = ARInstance {
        ring: ring.clone(),
        ideal: ideal.clone(),
        inner: inner.clone(),
        outer: outer.clone(),
        chain,
        s,
        rt_bound,
    };
    Ok((s, instance))
}

/// Checks I^n M ∩ N = I^{n-s}(I^s M ∩ N) for s <= n <= n_max.
pub fn verify_strong_ar(instance: &ARInstance, s: u64, n_max: u64) -> Result<CheckReport> {
    let mut report = CheckReport::new("strong-artin-rees-identity")
        .input("ideal", format!("{:?}", gens_strings(&instance.ideal)))
        .input("K", format!("{:?}", gens_strings(&instance.inner)))
        .input("L", format!("{:?}", gens_strings(&instance.outer)))
        .quantity("s", s)
        .quantity("n_max", n_max);
    if s < 1 {
        return Ok(report.fail("s must be at least 1"));
    }
    let base = instance.chain_ideal(s)?;
    for n in s..=n_max {
        let lhs = instance.chain_ideal(n)?;
        let rhs = instance
            .ideal
            .power((n - s) as u32)?
            .product(&base)?
            .sum(&instance.inner)?;
        if !lhs.equals(&rhs)? {
            return Ok(report.fail(format!("identity fails at n = {n}")));
        }
    }
    report.set_quantity("checked_up_to", n_max);
    Ok(report)
}

/// Theorem-2 sandwich: s ≤ rt(I; A/L) ≤ max(rt(I; A/K), s).
pub fn check_theorem2(
    ring: &RingPresentation,
    ideal: &IdealHandle,
    inner: &IdealHandle,
    outer: &IdealHandle,
) -> Result<CheckReport> {
    let (s, instance) = ar_number(ring, ideal, inner, outer)?;
    let r_quotient = instance.rt_bound;
    let r_module = rees::relation_type_mod(ring, ideal, inner)?;
    let report = CheckReport::new("theorem2-sandwich")
        .input("ideal", format!("{:?}", gens_strings(ideal)))
        .input("K", format!("{:?}", gens_strings(inner)))
        .input("L", format!("{:?}", gens_strings(outer)))
        .quantity("s", s)
        .quantity("rt_mod_L", r_quotient)
        .quantity("rt_mod_K", r_module);
    if s > r_quotient {
        return Ok(report.fail(format!("s = {s} exceeds rt(I; A/L) = {r_quotient}")));
    }
    if r_quotient > r_module.max(s) {
        return Ok(report.fail(format!(
            "rt(I; A/L) = {r_quotient} exceeds max(rt(I; A/K), s) = {}",
            r_module.max(s)
        )));
    }
    Ok(report)
}

/// One sample for the dimension conditions of the three-generated chain.
#[derive(Debug, Clone)]
pub enum DimSample {
    /// Condition (d): (x^r y)^r ∈ (x^{r+1}, y^{r+1})(x^{r+1}, y^{r+1}, x^r y)^{r-1}.
    Pair(Polynomial, Polynomial),
    /// Condition (c): (x,y)(x,y,z)^r : z^{r+1} = (x,y)(x,y,z)^{r-1} : z^r.
    Triple(Polynomial, Polynomial, Polynomial),
}

fn colon_or_unit(base: &IdealHandle, divisor: &Polynomial) -> Result<IdealHandle> {
    let ring = base.ring();
    if divisor.is_zero() || ring.is_zero_in_quotient(divisor) {
        Ok(IdealHandle::unit(ring))
    } else {
        base.colon_poly(divisor)
    }
}

/// Evaluates condition (d) for one pair at a given r.
pub fn condition_iv_holds(
    ring: &RingPresentation,
    x: &Polynomial,
    y: &Polynomial,
    r: u64,
) -> Result<bool> {
    if r < 1 {
        return Err(Error::SpecFile("the condition needs r >= 1".into()));
    }
    let x = x.transfer(ring)?;
    let y = y.transfer(ring)?;
    let xr1 = x.pow(r as u32 + 1);
    let yr1 = y.pow(r as u32 + 1);
    let xry = x.pow(r as u32).mul(&y)?;
    let two = IdealHandle::new(ring.clone(), vec![xr1.clone(), yr1.clone()]);
    let three = IdealHandle::new(ring.clone(), vec![xr1, yr1, xry.clone()]);
    let target = two.product(&three.power(r as u32 - 1)?)?;
    target.contains(&xry.pow(r as u32))
}

/// Evaluates condition (c) for one triple at a given r.
pub fn condition_c_holds(
    ring: &RingPresentation,
    x: &Polynomial,
    y: &Polynomial,
    z: &Polynomial,
    r: u64,
) -> Result<bool> {
    if r < 1 {
        return Err(Error::SpecFile("the condition needs r >= 1".into()));
    }
    let x = x.transfer(ring)?;
    let y = y.transfer(ring)?;
    let z = z.transfer(ring)?;
    let two = IdealHandle::new(ring.clone(), vec![x.clone(), y.clone()]);
    let three = IdealHandle::new(ring.clone(), vec![x, y, z.clone()]);
    let lhs = colon_or_unit(&two.product(&three.power(r as u32)?)?, &z.pow(r as u32 + 1))?;
    let rhs = colon_or_unit(
        &two.product(&three.power(r as u32 - 1)?)?,
        &z.pow(r as u32),
    )?;
    lhs.equals(&rhs)
}

/// Evaluates the dimension conditions on each sample at a fixed r; passes
/// when every sample satisfies its condition.
pub fn check_dim_conditions(
    ring: &RingPresentation,
    r: u64,
    samples: &[DimSample],
) -> Result<CheckReport> {
    let mut report = CheckReport::new("dim-conditions").quantity("r", r);
    if r < 1 {
        return Ok(report.fail("r must be at least 1"));
    }
    let mut all = true;
    for (idx, sample) in samples.iter().enumerate() {
        let (name, holds) = match sample {
            DimSample::Pair(x, y) => (
                format!("sample_{idx}_d({x}, {y})"),
                condition_iv_holds(ring, x, y, r)?,
            ),
            DimSample::Triple(x, y, z) => (
                format!("sample_{idx}_c({x}, {y}, {z})"),
                condition_c_holds(ring, x, y, z, r)?,
            ),
        };
        all &= holds;
        report.set_quantity(&name, holds);
    }
    if all {
        Ok(report)
    } else {
        Ok(report.fail("some sample violates the condition at this r"))
    }
}

/// Annihilation bounds:
/// - if I^s kills M = A/K for a least s, then rt(I; M) ≤ s;
/// - if additionally I^t J ⊆ K for given (J, t), then
///   rt(I; A/K) ≤ rt(I; A/(K+J)) + t, and with length((J+K)/K) in place of
///   t when that length is finite.
pub fn check_annihilation_bounds(
    ring: &RingPresentation,
    ideal: &IdealHandle,
    inner: &IdealHandle,
    extra: Option<(&IdealHandle, u64)>,
    bound: usize,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("annihilation-bounds")
        .input("ideal", format!("{:?}", gens_strings(ideal)))
        .input("K", format!("{:?}", gens_strings(inner)));

    // Prop artim: least s with I^s M = 0 gives rt(I; M) <= s
    let mut smallest: Option<u64> = None;
    for s in 1..=bound as u64 {
        if ideal.power(s as u32)?.contained_in(inner)? {
            smallest = Some(s);
            break;
        }
    }
    match smallest {
        Some(s) => {
            let rt = rees::relation_type_mod(ring, ideal, inner)?;
            report.set_quantity("artim_s", s);
            report.set_quantity("artim_rt", rt);
            if rt > s {
                return Ok(report.fail(format!("rt = {rt} exceeds annihilation exponent {s}")));
            }
        }
        None => {
            report.set_quantity("artim_s", "no power of I kills A/K within bound");
            if extra.is_none() {
                return Ok(report
                    .inconclusive_hypothesis("I is not nilpotent on A/K within the bound"));
            }
        }
    }

    if let Some((j_ideal, t)) = extra {
        report
            .inputs
            .insert("J".to_string(), format!("{:?}", gens_strings(j_ideal)));
        let hypothesis = ideal
            .power(t as u32)?
            .product(j_ideal)?
            .contained_in(inner)?;
        if !hypothesis {
            return Ok(report.inconclusive_hypothesis(format!("I^{t} J is not contained in K")));
        }
        let rt_m = rees::relation_type_mod(ring, ideal, inner)?;
        let modulus = inner.sum(j_ideal)?;
        let rt_mn = rees::relation_type_mod(ring, ideal, &modulus)?;
        report.set_quantity("pasquom_t", t);
        report.set_quantity("pasquom_rt_M", rt_m);
        report.set_quantity("pasquom_rt_M_mod_N", rt_mn);
        if rt_m > rt_mn + t {
            return Ok(report.fail(format!("rt(I;M) = {rt_m} exceeds rt(I;M/N) + t = {}", rt_mn + t)));
        }
        // Cor longfinm, per ideal: rt(I; M) <= rt(I; M/N) + length(N)
        match graded::module_length(ring, inner, &modulus, bound) {
            Ok(len) => {
                report.set_quantity("longfinm_length", len);
                if rt_m > rt_mn + len as u64 {
                    return Ok(report.fail(format!(
                        "rt(I;M) = {rt_m} exceeds rt(I;M/N) + length(N) = {}",
                        rt_mn + len as u64
                    )));
                }
            }
            Err(Error::InfiniteLength) => {
                report.set_quantity("longfinm_length", "infinite");
            }
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

/// Lemma mprim at desk scale: rt(I; A/K) ≤ e(A) for m-primary I in a
/// one-dimensional ring. The residue field size is recorded because the
/// superficial-element argument assumes an infinite field.
pub fn check_cm_multiplicity_bound(
    ring: &RingPresentation,
    maximal: &IdealHandle,
    ideal: &IdealHandle,
    modulus: Option<&IdealHandle>,
    bound: usize,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("cm-multiplicity-bound")
        .input("ideal", format!("{:?}", gens_strings(ideal)))
        .quantity(
            "residue_field",
            match ring.field() {
                crate::field::Field::Rationals => "QQ (infinite)".to_string(),
                crate::field::Field::Prime(p) => format!("F_{p} (finite)"),
            }
            .as_str(),
        );
    let dim = graded::krull_dim(ring);
    if dim != 1 {
        return Err(Error::WrongDimension {
            expected: 1,
            found: dim,
        });
    }
    // m-primary: some power of m lands in I
    let mut primary = false;
    for k in 1..=bound as u64 {
        if maximal.power(k as u32)?.contained_in(ideal)? {
            primary = true;
            report.set_quantity("m_power_in_I", k);
            break;
        }
    }
    if !primary {
        return Ok(report.inconclusive_hypothesis("no power of m inside I within the bound"));
    }
    let (e, _) = graded::multiplicity_1dim(ring, maximal, bound)?;
    let rt = match modulus {
        Some(k) => rees::relation_type_mod(ring, ideal, k)?,
        None => rees::relation_type(ring, ideal)?,
    };
    report.set_quantity("e", e);
    report.set_quantity("rt", rt);
    if rt > e as u64 {
        Ok(report.fail(format!("rt = {rt} exceeds e(A) = {e}")))
    } else {
        Ok(report)
    }
}

/// One primary component q with its declared radical p.
#[derive(Debug, Clone)]
pub struct PrimaryComponent {
    pub q: IdealHandle,
    pub p: IdealHandle,
}

/// A user-supplied primary decomposition of (0): minimal components, plus
/// an optional embedded m-primary component for non-Cohen-Macaulay rings.
#[derive(Debug, Clone)]
pub struct PrimaryDecompositionInput {
    pub components: Vec<PrimaryComponent>,
    pub embedded: Option<PrimaryComponent>,
}

impl PrimaryDecompositionInput {
    fn all_components(&self) -> Vec<&PrimaryComponent> {
        let mut out: Vec<&PrimaryComponent> = self.components.iter().collect();
        if let Some(e) = &self.embedded {
            out.push(e);
        }
        out
    }

    /// Verifies ∩ q_i = (0), q_i ⊆ p_i, and p_i^{n_i} ⊆ q_i for some
    /// n_i ≤ bound; returns the exponents n_i for the minimal components
    /// followed by the embedded one.
    pub fn verify(&self, ring: &RingPresentation, bound: usize) -> Result<Vec<u64>> {
        if self.components.is_empty() {
            return Err(Error::BadDecomposition("no components".into()));
        }
        let mut meet: Option<IdealHandle> = None;
        for c in self.all_components() {
            meet = Some(match meet {
                None => c.q.clone(),
                Some(prev) => prev.intersect(&c.q)?,
            });
        }
        if !meet.unwrap().is_zero_ideal() {
            return Err(Error::BadDecomposition(
                "components do not intersect to (0)".into(),
            ));
        }
        let mut exponents = Vec::new();
        for (idx, c) in self.all_components().iter().enumerate() {
            if !c.q.contained_in(&c.p)? {
                return Err(Error::BadDecomposition(format!(
                    "component {idx}: q is not inside its declared radical"
                )));
            }
            let mut found = None;
            for n in 1..=bound as u64 {
                if c.p.power(n as u32)?.contained_in(&c.q)? {
                    found = Some(n);
                    break;
                }
            }
            exponents.push(found.ok_or_else(|| {
                Error::BadDecomposition(format!(
                    "component {idx}: no power of p inside q within bound {bound}"
                ))
            })?);
        }
        let _ = ring;
        Ok(exponents)
    }
}

/// The explicit bound brt(A) = max{ n, e(A/(q_{i_1} ∩..∩ q_{i_l})) + t_{i_1..i_l} }
/// over nonempty subsets of the minimal components, where n is the
/// nilpotency index of the nilradical and t is the largest exponent among
/// the complementary components.
pub fn brt(
    ring: &RingPresentation,
    decomp: &PrimaryDecompositionInput,
    bound: usize,
) -> Result<(u64, CheckReport)> {
    let dim = graded::krull_dim(ring);
    if dim != 1 {
        return Err(Error::WrongDimension {
            expected: 1,
            found: dim,
        });
    }
    let exponents = decomp.verify(ring, bound)?;
    let s = decomp.components.len();
    let mut report = CheckReport::new("brt").quantity("components", s);

    // nilradical = intersection of the minimal primes
    let mut nilrad = decomp.components[0].p.clone();
    for c in &decomp.components[1..] {
        nilrad = nilrad.intersect(&c.p)?;
    }
    let mut nil_index = None;
    for n in 1..=bound as u64 {
        if nilrad.power(n as u32)?.is_zero_ideal() {
            nil_index = Some(n);
            break;
        }
    }
    let n = nil_index.ok_or(Error::BoundExhausted(bound))?;
    report.set_quantity("n", n);
    for (i, e) in exponents.iter().take(s).enumerate() {
        report.set_quantity(&format!("n_{}", i + 1), *e);
    }

    let mut best = n;
    for mask in 1u32..(1 << s) {
        let selected: Vec<usize> = (0..s).filter(|i| mask & (1 << i) != 0).collect();
        let t = (0..s)
            .filter(|i| !selected.contains(i))
            .map(|i| exponents[i])
            .max()
            .unwrap_or(0);
        let mut meet = decomp.components[selected[0]].q.clone();
        for &i in &selected[1..] {
            meet = meet.intersect(&decomp.components[i].q)?;
        }
        let quotient = ring.quotient(meet.gens())?;
        let qdim = graded::krull_dim(&quotient);
        let label: Vec<String> = selected.iter().map(|i| (i + 1).to_string()).collect();
        let label = label.join(",");
        if qdim != 1 {
            return Err(Error::BadDecomposition(format!(
                "A/(q_{{{label}}}) has dimension {qdim}, not 1"
            )));
        }
        let (e, _) = graded::multiplicity_1dim(&quotient, &quotient.maximal_ideal(), bound)?;
        report.set_quantity(&format!("e_{{{label}}}", ), e);
        report.set_quantity(&format!("t_{{{label}}}", ), t);
        best = best.max(e as u64 + t);
    }
    report.set_quantity("brt", best);
    Ok((best, report))
}

/// O'Carroll's principal-ideal bound: with s such that p_i^s ⊆ q_i for all
/// components, every principal ideal has rt((x); A) ≤ s.
pub fn principal_uniform_bound(
    ring: &RingPresentation,
    decomp: &PrimaryDecompositionInput,
    samples: &[Polynomial],
    bound: usize,
) -> Result<CheckReport> {
    let exponents = decomp.verify(ring, bound)?;
    let s = *exponents.iter().max().unwrap();
    let mut report = CheckReport::new("principal-uniform-bound").quantity("s", s);
    for x in samples {
        let rt = rees::principal_rt(ring, x, &IdealHandle::zero(ring), bound)? as u64;
        report.set_quantity(&format!("rt({x})"), rt);
        if rt > s {
            return Ok(report.fail(format!("rt(({x})) = {rt} exceeds s = {s}")));
        }
    }
    Ok(report)
}

/// One row of the Wang growth experiment.
#[derive(Debug, Clone, serde::Serialize)]
pub struct WangRow {
    pub k: u32,
    pub rt_mod: u64,
    pub s: u64,
}

/// Wang's family I_k = (x^k, y^k, x^{k-1} y + z^k) against J = (z) in a
/// three-variable polynomial ring: computes s_k and its truncation bound
/// rt(I_k; A/(z)) for k = 2..=k_max.
pub fn wang_experiment(
    ring: &RingPresentation,
    k_max: u32,
) -> Result<(Vec<WangRow>, CheckReport)> {
    if ring.n_vars() != 3 || ring.is_quotient() {
        return Err(Error::SpecFile(
            "the Wang experiment needs a three-variable polynomial ring".into(),
        ));
    }
    if k_max < 2 {
        return Err(Error::SpecFile("k_max must be at least 2".into()));
    }
    let x = Polynomial::var(ring, 0);
    let y = Polynomial::var(ring, 1);
    let z = Polynomial::var(ring, 2);
    let zero = IdealHandle::zero(ring);
    let l = IdealHandle::principal(z.clone());

    let mut rows = Vec::new();
    let mut report = CheckReport::new("wang-growth").quantity("k_max", k_max as u64);
    for k in 2..=k_max {
        let gens = vec![
            x.pow(k),
            y.pow(k),
            x.pow(k - 1).mul(&y)?.add(&z.pow(k))?,
        ];
        let ideal = IdealHandle::new(ring.clone(), gens);
        let (s, instance) = ar_number(ring, &ideal, &zero, &l)?;
        rows.push(WangRow {
            k,
            rt_mod: instance.rt_bound,
            s,
        });
        report.set_quantity(&format!("s_{k}"), s);
        report.set_quantity(&format!("rt_{k}"), instance.rt_bound);
    }
    // strict growth of s on the computed prefix, and s_k <= rt_k throughout
    for w in rows.windows(2) {
        if w[0].s >= w[1].s {
            return Ok((
                rows.clone(),
                report.fail(format!("s_{} = {} is not below s_{} = {}", w[0].k, w[0].s, w[1].k, w[1].s)),
            ));
        }
    }
    if let Some(row) = rows.iter().find(|r| r.s > r.rt_mod) {
        return Ok((
            rows.clone(),
            report.fail(format!("s_{} exceeds its truncation bound", row.k)),
        ));
    }
    Ok((rows, report))
}

fn gens_strings(ideal: &IdealHandle) -> Vec<String> {
    ideal.gens().iter().map(|g| g.to_string()).collect()
}
