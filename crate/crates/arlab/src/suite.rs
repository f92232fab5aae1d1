//! Bundled verification suites: the worked examples, the theorem and bound
//! checks on fixed and randomized instances, and the Wang growth experiment.
//!
//! Fixtures are embedded so the suites run offline; randomized checks use a
//! fixed seed, so two runs of the same suite produce byte-identical JSON.

use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::artin_rees::{self, DimSample};
use crate::error::{Error, Result};
use crate::graded;
use crate::ideal::IdealHandle;
use crate::monomial::Monomial;
use crate::parse::parse_polynomial;
use crate::poly::Polynomial;
use crate::rees;
use crate::report::{CheckReport, SuiteResult};
use crate::ring::RingPresentation;
use crate::spec_file::{LoadedSpec, RingSpecFile};

/// The bundled ring fixtures, embedded at compile time.
pub const FIXTURES: &[(&str, &str)] = &[
    ("plane", include_str!("../fixtures/plane.json")),
    ("xyz", include_str!("../fixtures/xyz.json")),
    ("nilp2", include_str!("../fixtures/nilp2.json")),
    ("nilp3", include_str!("../fixtures/nilp3.json")),
    ("nilp4", include_str!("../fixtures/nilp4.json")),
    ("semigroup1", include_str!("../fixtures/semigroup1.json")),
    ("semigroup2", include_str!("../fixtures/semigroup2.json")),
    ("semigroup3", include_str!("../fixtures/semigroup3.json")),
    ("eigrt1", include_str!("../fixtures/eigrt1.json")),
    ("eigrt2", include_str!("../fixtures/eigrt2.json")),
    ("eigrt3", include_str!("../fixtures/eigrt3.json")),
    ("sect7-a2b1", include_str!("../fixtures/sect7-a2b1.json")),
    ("sect7-a3b1", include_str!("../fixtures/sect7-a3b1.json")),
    ("sect7-a3b2", include_str!("../fixtures/sect7-a3b2.json")),
];

/// Loads an embedded fixture by name.
pub fn bundled(name: &str) -> Result<LoadedSpec> {
    let text = FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::SpecFile(format!("no bundled fixture `{name}`")))?;
    RingSpecFile::parse_str(text)?.build(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    All,
    Examples,
    Theorems,
    Wang,
}

impl FromStr for SuiteKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(SuiteKind::All),
            "examples" => Ok(SuiteKind::Examples),
            "theorems" => Ok(SuiteKind::Theorems),
            "wang" => Ok(SuiteKind::Wang),
            other => Err(Error::SpecFile(format!("unknown suite `{other}`"))),
        }
    }
}

const BOUND: usize = artin_rees::DEFAULT_BOUND;

fn run(suite: &mut SuiteResult, name: &str, f: impl FnOnce() -> Result<CheckReport>) {
    let start = Instant::now();
    let report = match f() {
        Ok(r) => r,
        Err(e) => CheckReport::new(name).fail(format!("check errored: {e}")),
    };
    suite.push(report, start.elapsed());
}

fn ideal_from(spec: &LoadedSpec, name: &str) -> Result<IdealHandle> {
    spec.ideals
        .get(name)
        .cloned()
        .ok_or_else(|| Error::SpecFile(format!("fixture has no ideal `{name}`")))
}

/// Runs the requested suite.
pub fn verify_paper(kind: SuiteKind) -> Result<SuiteResult> {
    let mut suite = SuiteResult::new(match kind {
        SuiteKind::All => "all",
        SuiteKind::Examples => "examples",
        SuiteKind::Theorems => "theorems",
        SuiteKind::Wang => "wang",
    });
    if matches!(kind, SuiteKind::All | SuiteKind::Examples) {
        example_checks(&mut suite);
    }
    if matches!(kind, SuiteKind::All | SuiteKind::Theorems) {
        theorem_checks(&mut suite);
    }
    if matches!(kind, SuiteKind::All | SuiteKind::Wang) {
        wang_checks(&mut suite);
    }
    Ok(suite)
}

fn example_checks(suite: &mut SuiteResult) {
    for n in 2..=4u32 {
        let name = format!("nilpotent-n{n}");
        run(suite, &name, || nilpotent_check(n));
    }
    for g in 1..=3u32 {
        let name = format!("semigroup-g{g}");
        run(suite, &name, || semigroup_check(g));
    }
    for a in 1..=3u32 {
        let name = format!("eigrt-a{a}");
        run(suite, &name, || eigrt_check(a));
    }
    for (a, b) in [(2u32, 1u32), (3, 1), (3, 2)] {
        let name = format!("sect7-a{a}b{b}");
        run(suite, &name, || sect7_check(a, b));
    }
    run(suite, "condition-iv-plane", condition_iv_plane_check);
    for n in 2..=4u32 {
        let name = format!("condition-iv-artinian-nilp{n}");
        run(suite, &name, || condition_iv_artinian_check(n));
    }
}

fn theorem_checks(suite: &mut SuiteResult) {
    run(suite, "theorem2-randomized", theorem2_randomized_check);
    run(suite, "oracle-two-gen-agreement", two_gen_agreement_check);
    run(suite, "oracle-principal-agreement", principal_agreement_check);
    run(suite, "oracle-colon-equality-consistency", colon_equality_consistency_check);
    run(suite, "oracle-monomial-membership", monomial_membership_check);
    run(suite, "bound-artim-nilpotent", artim_bound_check);
    run(suite, "bound-pasquom-sect7", pasquom_bound_check);
    run(suite, "bound-mprim-random", mprim_bound_check);
    run(suite, "bound-doman-sampled", doman_bound_check);
}

fn wang_checks(suite: &mut SuiteResult) {
    run(suite, "wang-growth", wang_growth_check);
}

// --- worked examples -----------------------------------------------------

fn nilpotent_check(n: u32) -> Result<CheckReport> {
    let spec = bundled(&format!("nilp{n}"))?;
    let m = ideal_from(&spec, "m")?;
    let rt = rees::relation_type(&spec.ring, &m)?;
    let high = m.power(2 * n - 1)?;
    let below = m.power(2 * n - 2)?;
    let report = CheckReport::new(&format!("nilpotent-n{n}"))
        .input("ring", format!("k[x,y]/(x^{n}, y^{n})"))
        .quantity("rt", rt)
        .quantity("power_zero", high.is_zero_ideal())
        .quantity("power_below_nonzero", !below.is_zero_ideal());
    if rt != n as u64 {
        return Ok(report.fail(format!("rt = {rt}, expected {n}")));
    }
    if !high.is_zero_ideal() {
        return Ok(report.fail(format!("I^{} is not zero", 2 * n - 1)));
    }
    if below.is_zero_ideal() {
        return Ok(report.fail(format!("I^{} is zero", 2 * n - 2)));
    }
    Ok(report)
}

fn semigroup_check(g: u32) -> Result<CheckReport> {
    let spec = bundled(&format!("semigroup{g}"))?;
    let ring = &spec.ring;
    let i = ideal_from(&spec, "I")?;
    let m = ideal_from(&spec, "m")?;
    let rt = rees::relation_type(ring, &i)?;
    let u0 = Polynomial::var(ring, 0);
    let u1 = Polynomial::var(ring, 1);
    let two = rees::two_gen_rt(ring, &u0, &u1, BOUND)?;
    let (e, _) = graded::multiplicity_1dim(ring, &m, BOUND)?;
    let mut reduction_ok = true;
    for n in 2..=3u32 {
        let lhs = m.power(n)?;
        let rhs = IdealHandle::principal(u0.clone()).product(&m.power(n - 1)?)?;
        reduction_ok &= lhs.equals(&rhs)?;
    }
    // the reduction number of m is 1, so the full maximal ideal has
    // rt(m) = 2 even though rt((u0, u1)) = g + 1
    let rt_maximal = rees::relation_type(ring, &m)?;
    let report = CheckReport::new(&format!("semigroup-g{g}"))
        .input("ring", format!("toric model of k[t^{}..t^{}]", g + 1, 2 * g + 1))
        .quantity("rt", rt)
        .quantity("two_gen_rt", two.rt.unwrap_or(0))
        .quantity("e", e)
        .quantity("reduction_identity", reduction_ok)
        .quantity("rt_maximal", rt_maximal);
    let want = g as u64 + 1;
    if rt != want || two.rt != Some(want) || e as u64 != want {
        return Ok(report.fail(format!("expected rt = two_gen = e = {want}")));
    }
    if !reduction_ok {
        return Ok(report.fail("m^n = u0 m^{n-1} fails"));
    }
    if rt_maximal != 2 {
        return Ok(report.fail(format!("rt(m) = {rt_maximal}, expected 2")));
    }
    Ok(report)
}

fn eigrt_check(a: u32) -> Result<CheckReport> {
    let spec = bundled(&format!("eigrt{a}"))?;
    let ring = &spec.ring;
    let m = ideal_from(&spec, "m")?;
    let rt = rees::relation_type(ring, &m)?;
    let (e, _) = graded::multiplicity_1dim(ring, &m, BOUND)?;
    let decomp = spec
        .decompositions
        .get("zero")
        .ok_or_else(|| Error::SpecFile("missing decomposition".into()))?;
    let (brt_value, _) = artin_rees::brt(ring, decomp, BOUND)?;
    // the socle chain certifying E(m)_{a+1} != 0:
    // x((0:y) ∩ m^{a-1}) = (x^{a+1}) is properly inside (0:y) ∩ m^a = (x^a)
    let x = parse_polynomial("x", ring)?;
    let y = parse_polynomial("y", ring)?;
    let ann_y = IdealHandle::zero(ring).colon_poly(&y)?;
    let high = ann_y.intersect(&m.power(a)?)?;
    let low = IdealHandle::principal(x.clone()).product(&ann_y.intersect(&m.power(a - 1)?)?)?;
    let socle_ok = high.equals(&IdealHandle::principal(x.pow(a)))?
        && low.equals(&IdealHandle::principal(x.pow(a + 1)))?
        && !high.equals(&low)?;
    let report = CheckReport::new(&format!("eigrt-a{a}"))
        .input("ring", format!("k[x,y]/(x^{a} y)"))
        .quantity("rt", rt)
        .quantity("e", e)
        .quantity("brt", brt_value)
        .quantity("socle_chain_certificate", socle_ok);
    let want = a as u64 + 1;
    if rt != want || e as u64 != want || brt_value != want {
        return Ok(report.fail(format!("expected rt = e = brt = {want}")));
    }
    if !socle_ok {
        return Ok(report.fail("socle chain does not certify E(m)_{a+1} != 0"));
    }
    Ok(report)
}

fn sect7_check(a: u32, b: u32) -> Result<CheckReport> {
    let spec = bundled(&format!("sect7-a{a}b{b}"))?;
    let ring = &spec.ring;
    let x = parse_polynomial("x", ring)?;
    let m = ideal_from(&spec, "m")?;
    let rt_x = rees::principal_rt(ring, &x, &IdealHandle::zero(ring), BOUND)?;
    let mut report = CheckReport::new(&format!("sect7-a{a}b{b}"))
        .input("ring", format!("k[x,y]/(x^{a}, x^{b} y)"))
        .quantity("rt_principal_x", rt_x);
    if rt_x != a as usize {
        return Ok(report.fail(format!("rt((x)) = {rt_x}, expected {a}")));
    }
    if a > b {
        let (sat, _) = IdealHandle::zero(ring).saturate(&m)?;
        let expected = IdealHandle::principal(x.pow(b));
        let sat_ok = sat.equals(&expected)?;
        let len = graded::module_length(ring, &IdealHandle::zero(ring), &sat, BOUND)?;
        let quotient_ring = ring.quotient(&[x.pow(b)])?;
        let decomp = artin_rees::PrimaryDecompositionInput {
            components: vec![artin_rees::PrimaryComponent {
                q: IdealHandle::zero(&quotient_ring),
                p: IdealHandle::principal(Polynomial::var(&quotient_ring, 0)),
            }],
            embedded: None,
        };
        let (brt_quotient, _) = artin_rees::brt(&quotient_ring, &decomp, BOUND)?;
        report.set_quantity("saturation_is_xb", sat_ok);
        report.set_quantity("saturation_length", len);
        report.set_quantity("brt_mod_J", brt_quotient);
        if !sat_ok {
            return Ok(report.fail("H^0_m(A) is not (x^b)"));
        }
        if len != (a - b) as usize {
            return Ok(report.fail(format!("length = {len}, expected {}", a - b)));
        }
        if brt_quotient != b as u64 {
            return Ok(report.fail(format!("brt(A/J) = {brt_quotient}, expected {b}")));
        }
    }
    Ok(report)
}

fn condition_iv_plane_check() -> Result<CheckReport> {
    let spec = bundled("plane")?;
    let ring = &spec.ring;
    let x = parse_polynomial("x", ring)?;
    let y = parse_polynomial("y", ring)?;
    let mut report = CheckReport::new("condition-iv-plane").input("ring", "k[x,y]");
    for r in 1..=3u64 {
        let holds = artin_rees::condition_iv_holds(ring, &x, &y, r)?;
        report.set_quantity(&format!("holds_r{r}"), holds);
        if holds {
            return Ok(report.fail(format!(
                "condition (iv) unexpectedly holds at r = {r} in a 2-dimensional ring"
            )));
        }
    }
    Ok(report)
}

fn condition_iv_artinian_check(n: u32) -> Result<CheckReport> {
    let spec = bundled(&format!("nilp{n}"))?;
    let ring = &spec.ring;
    let pairs: Vec<(Polynomial, Polynomial)> = [
        ("x", "y"),
        ("x", "x + y"),
        ("x + y", "y"),
        ("x*y", "x"),
    ]
    .iter()
    .map(|(a, b)| {
        Ok((
            parse_polynomial(a, ring)?,
            parse_polynomial(b, ring)?,
        ))
    })
    .collect::<Result<_>>()?;
    let mut report =
        CheckReport::new(&format!("condition-iv-artinian-nilp{n}")).quantity("samples", pairs.len());
    for r in 1..=8u64 {
        let samples: Vec<DimSample> = pairs
            .iter()
            .map(|(a, b)| DimSample::Pair(a.clone(), b.clone()))
            .collect();
        let rep = artin_rees::check_dim_conditions(ring, r, &samples)?;
        if rep.passed() {
            report.set_quantity("passing_r", r);
            return Ok(report);
        }
    }
    Ok(report.fail("no r <= 8 satisfies condition (iv) on all samples"))
}

// --- randomized and oracle checks ----------------------------------------

fn random_monomial(rng: &mut ChaCha8Rng, ring: &RingPresentation, max_deg: u32) -> Monomial {
    let n = ring.n_vars();
    loop {
        let mut exps = vec![0u32; n];
        let deg = rng.gen_range(1..=max_deg);
        for _ in 0..deg {
            exps[rng.gen_range(0..n)] += 1;
        }
        if exps.iter().any(|&e| e > 0) {
            return Monomial::new(exps, ring.weights());
        }
    }
}

fn random_mono_or_binomial(
    rng: &mut ChaCha8Rng,
    ring: &RingPresentation,
    max_deg: u32,
) -> Polynomial {
    let one = ring.field().one();
    let m1 = random_monomial(rng, ring, max_deg);
    if rng.gen_bool(0.5) {
        Polynomial::monomial(ring, m1, one)
    } else {
        let m2 = random_monomial(rng, ring, max_deg);
        let sign = if rng.gen_bool(0.5) {
            one.clone()
        } else {
            one.neg()
        };
        Polynomial::from_terms(ring, vec![(m1, one), (m2, sign)])
    }
}

fn theorem2_randomized_check() -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0041_524c_4142);
    let rings = [
        RingPresentation::standard(&["x"]),
        RingPresentation::standard(&["x", "y"]),
        RingPresentation::standard(&["x", "y", "z"]),
    ];
    let instances = 54usize;
    let report = CheckReport::new("theorem2-randomized").quantity("instances", instances);
    for idx in 0..instances {
        let ring = &rings[rng.gen_range(0..rings.len())];
        let n_i = rng.gen_range(1..=3usize);
        let i_gens: Vec<Polynomial> = (0..n_i)
            .map(|_| random_mono_or_binomial(&mut rng, ring, 4))
            .collect();
        let ideal = IdealHandle::new(ring.clone(), i_gens);
        let k_gens: Vec<Polynomial> = (0..rng.gen_range(0..=2usize))
            .map(|_| random_mono_or_binomial(&mut rng, ring, 4))
            .collect();
        let inner = IdealHandle::new(ring.clone(), k_gens.clone());
        let mut l_gens = k_gens;
        for _ in 0..rng.gen_range(1..=2usize) {
            l_gens.push(random_mono_or_binomial(&mut rng, ring, 4));
        }
        let outer = IdealHandle::new(ring.clone(), l_gens);
        let rep = artin_rees::check_theorem2(ring, &ideal, &inner, &outer)?;
        if !rep.passed() {
            return Ok(report.fail(format!(
                "instance {idx} violates the sandwich: {:?}",
                rep.certificate
            )));
        }
    }
    Ok(report)
}

/// The two-generated cross-check corpus: every instance must give the same
/// answer through the Rees basis and through the colon chain.
fn two_gen_agreement_check() -> Result<CheckReport> {
    let mut cases: Vec<(String, RingPresentation, Polynomial, Polynomial)> = Vec::new();
    let plane = bundled("plane")?;
    cases.push((
        "plane".into(),
        plane.ring.clone(),
        parse_polynomial("x", &plane.ring)?,
        parse_polynomial("y", &plane.ring)?,
    ));
    for n in 2..=4u32 {
        let spec = bundled(&format!("nilp{n}"))?;
        cases.push((
            format!("nilp{n}"),
            spec.ring.clone(),
            parse_polynomial("y", &spec.ring)?,
            parse_polynomial("x", &spec.ring)?,
        ));
    }
    for g in 1..=3u32 {
        let spec = bundled(&format!("semigroup{g}"))?;
        cases.push((
            format!("semigroup{g}"),
            spec.ring.clone(),
            Polynomial::var(&spec.ring, 0),
            Polynomial::var(&spec.ring, 1),
        ));
    }
    // The colon-chain criterion needs extra hypotheses and is not valid
    // for arbitrary pairs: in k[x,y]/(x^a y) the chain for m = (x,y) is
    // constant while rt(m) = a+1. The corpus therefore carries only the
    // instantiations where it holds (a regular pair, the nilpotent
    // squares, the semigroup models); the eigrt rings are certified by
    // their socle chains inside eigrt_check instead.
    let mut report = CheckReport::new("oracle-two-gen-agreement").quantity("instances", cases.len());
    for (name, ring, u, v) in cases {
        let handle = IdealHandle::new(ring.clone(), vec![u.clone(), v.clone()]);
        let rt = rees::relation_type(&ring, &handle)?;
        let two = rees::two_gen_rt(&ring, &u, &v, BOUND)?;
        report.set_quantity(&format!("rt_{name}"), rt);
        if two.rt != Some(rt) {
            return Ok(report.fail(format!(
                "{name}: relation_type = {rt} but two_gen_rt = {:?}",
                two.rt
            )));
        }
    }
    Ok(report)
}

fn principal_agreement_check() -> Result<CheckReport> {
    let mut cases: Vec<(String, RingPresentation, Polynomial)> = Vec::new();
    for (a, b) in [(2u32, 1u32), (3, 1), (3, 2)] {
        let spec = bundled(&format!("sect7-a{a}b{b}"))?;
        cases.push((
            format!("sect7-a{a}b{b}-x"),
            spec.ring.clone(),
            parse_polynomial("x", &spec.ring)?,
        ));
    }
    for a in 1..=3u32 {
        let spec = bundled(&format!("eigrt{a}"))?;
        for gen in ["x", "y", "x + y"] {
            cases.push((
                format!("eigrt{a}-{gen}"),
                spec.ring.clone(),
                parse_polynomial(gen, &spec.ring)?,
            ));
        }
    }
    let plane = bundled("plane")?;
    cases.push((
        "plane-x".into(),
        plane.ring.clone(),
        parse_polynomial("x", &plane.ring)?,
    ));
    let mut report =
        CheckReport::new("oracle-principal-agreement").quantity("instances", cases.len());
    for (name, ring, x) in cases {
        let rt = rees::relation_type(&ring, &IdealHandle::principal(x.clone()))?;
        let chain = rees::principal_rt(&ring, &x, &IdealHandle::zero(&ring), BOUND)?;
        report.set_quantity(&format!("rt_{name}"), rt);
        if rt != chain as u64 {
            return Ok(report.fail(format!(
                "{name}: relation_type = {rt} but colon chain gives {chain}"
            )));
        }
    }
    Ok(report)
}

/// colon_equality_certificate returning false certifies E(I)_n != 0, so it
/// must never report false above the computed relation type.
fn colon_equality_consistency_check() -> Result<CheckReport> {
    let mut cases: Vec<(String, RingPresentation, Vec<Polynomial>)> = Vec::new();
    for n in 2..=4u32 {
        let spec = bundled(&format!("nilp{n}"))?;
        cases.push((
            format!("nilp{n}"),
            spec.ring.clone(),
            vec![
                parse_polynomial("y", &spec.ring)?,
                parse_polynomial("x", &spec.ring)?,
            ],
        ));
    }
    for k in 2..=3u32 {
        let spec = bundled("plane")?;
        cases.push((
            format!("wang-image-k{k}"),
            spec.ring.clone(),
            vec![
                parse_polynomial(&format!("x^{k}"), &spec.ring)?,
                parse_polynomial(&format!("y^{k}"), &spec.ring)?,
                parse_polynomial(&format!("x^{}*y", k - 1), &spec.ring)?,
            ],
        ));
    }
    let mut report =
        CheckReport::new("oracle-colon-equality-consistency").quantity("instances", cases.len());
    for (name, ring, gens) in cases {
        let handle = IdealHandle::new(ring.clone(), gens.clone());
        let rt = rees::relation_type(&ring, &handle)?;
        report.set_quantity(&format!("rt_{name}"), rt);
        for n in 2..=rt + 2 {
            let equality = rees::colon_equality_certificate(&ring, &gens, n)?;
            if !equality && n > rt {
                return Ok(report.fail(format!(
                    "{name}: the colon equality certifies E_{n} != 0 above rt = {rt}"
                )));
            }
        }
    }
    Ok(report)
}

fn monomial_membership_check() -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d656d62);
    let rings = [
        RingPresentation::standard(&["x"]),
        RingPresentation::standard(&["x", "y"]),
        RingPresentation::standard(&["x", "y", "z"]),
        RingPresentation::standard(&["x", "y", "z", "w"]),
    ];
    let instances = 200usize;
    let mut report =
        CheckReport::new("oracle-monomial-membership").quantity("instances", instances);
    let mut members = 0usize;
    for idx in 0..instances {
        let ring = &rings[rng.gen_range(0..rings.len())];
        let gens: Vec<Monomial> = (0..rng.gen_range(1..=4usize))
            .map(|_| random_monomial(&mut rng, ring, 6))
            .collect();
        let handle = IdealHandle::new(
            ring.clone(),
            gens.iter()
                .map(|m| Polynomial::monomial(ring, m.clone(), ring.field().one()))
                .collect(),
        );
        let n_terms = rng.gen_range(1..=4usize);
        let f = Polynomial::from_terms(
            ring,
            (0..n_terms)
                .map(|_| {
                    (
                        random_monomial(&mut rng, ring, 6),
                        ring.field().from_int(rng.gen_range(1..=9) as i64),
                    )
                })
                .collect(),
        );
        let by_gb = handle.contains(&f)?;
        // divisibility oracle: every term divisible by some generator
        let by_divisibility = f.terms().all(|(m, _)| gens.iter().any(|g| g.divides(m)));
        if by_gb != by_divisibility {
            return Ok(report.fail(format!(
                "instance {idx}: divisibility oracle disagrees with normal form"
            )));
        }
        if by_gb {
            members += 1;
        }
    }
    report.set_quantity("members", members);
    Ok(report)
}

fn artim_bound_check() -> Result<CheckReport> {
    let mut report = CheckReport::new("bound-artim-nilpotent");
    for n in 2..=4u32 {
        let spec = bundled(&format!("nilp{n}"))?;
        let m = ideal_from(&spec, "m")?;
        let rep = artin_rees::check_annihilation_bounds(
            &spec.ring,
            &m,
            &IdealHandle::zero(&spec.ring),
            None,
            BOUND,
        )?;
        report.set_quantity(&format!("nilp{n}_verdict"), rep.passed());
        if !rep.passed() {
            return Ok(report.fail(format!("nilp{n}: {:?}", rep.certificate)));
        }
    }
    Ok(report)
}

fn pasquom_bound_check() -> Result<CheckReport> {
    // section-7 reduction step: I (x^{a-1}) = 0 in A, so
    // rt(I) <= rt((I + (x^{a-1}))/(x^{a-1})) + 1
    let mut report = CheckReport::new("bound-pasquom-sect7");
    for (a, b) in [(3u32, 1u32), (3, 2)] {
        let spec = bundled(&format!("sect7-a{a}b{b}"))?;
        let ring = &spec.ring;
        let m = ideal_from(&spec, "m")?;
        let j = IdealHandle::principal(parse_polynomial("x", ring)?.pow(a - 1));
        let rep = artin_rees::check_annihilation_bounds(
            ring,
            &m,
            &IdealHandle::zero(ring),
            Some((&j, 1)),
            BOUND,
        )?;
        report.set_quantity(&format!("a{a}b{b}_verdict"), rep.passed());
        if !rep.passed() {
            return Ok(report.fail(format!("a{a}b{b}: {:?}", rep.certificate)));
        }
    }
    Ok(report)
}

/// Ten random m-primary homogeneous ideals per one-dimensional
/// Cohen-Macaulay fixture, each checked against rt <= e(A).
fn mprim_bound_check() -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d7072696d);
    let fixtures = [
        "semigroup1",
        "semigroup2",
        "semigroup3",
        "eigrt1",
        "eigrt2",
        "eigrt3",
    ];
    let mut report = CheckReport::new("bound-mprim-random");
    for name in fixtures {
        let spec = bundled(name)?;
        let ring = &spec.ring;
        let m = ideal_from(&spec, "m")?;
        let (e, _) = graded::multiplicity_1dim(ring, &m, BOUND)?;
        let mut found = 0usize;
        let mut attempts = 0usize;
        while found < 10 && attempts < 200 {
            attempts += 1;
            let n_gens = rng.gen_range(1..=3usize);
            let gens: Vec<Polynomial> = (0..n_gens)
                .map(|_| random_weighted_homogeneous(&mut rng, ring, 12))
                .collect::<Option<Vec<_>>>()
                .unwrap_or_default();
            if gens.is_empty() {
                continue;
            }
            let ideal = IdealHandle::new(ring.clone(), gens);
            if ideal.is_unit_ideal() || ideal.is_zero_ideal() {
                continue;
            }
            // m-primary test
            let mut primary = false;
            for k in 1..=12u32 {
                if m.power(k)?.contained_in(&ideal)? {
                    primary = true;
                    break;
                }
            }
            if !primary {
                continue;
            }
            found += 1;
            let rt = rees::relation_type(ring, &ideal)?;
            if rt > e as u64 {
                return Ok(report.fail(format!(
                    "{name}: rt = {rt} exceeds e = {e} for {:?}",
                    ideal.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>()
                )));
            }
        }
        report.set_quantity(&format!("{name}_instances"), found);
        report.set_quantity(&format!("{name}_e"), e);
        if found < 10 {
            return Ok(report.inconclusive(format!(
                "{name}: only {found} m-primary samples found"
            )));
        }
    }
    Ok(report)
}

/// Random nonzero weighted-homogeneous polynomial of weighted degree <= max.
fn random_weighted_homogeneous(
    rng: &mut ChaCha8Rng,
    ring: &RingPresentation,
    max_wdeg: u64,
) -> Option<Polynomial> {
    let w_min = *ring.weights().iter().min().unwrap();
    let d = rng.gen_range(w_min..=max_wdeg);
    // enumerate monomials of weighted degree exactly d
    let mut monos: Vec<Monomial> = Vec::new();
    let n = ring.n_vars();
    let mut exps = vec![0u32; n];
    fn rec(
        var: usize,
        left: u64,
        exps: &mut Vec<u32>,
        weights: &[u64],
        out: &mut Vec<Monomial>,
    ) {
        if var == weights.len() {
            if left == 0 {
                out.push(Monomial::new(exps.clone(), weights));
            }
            return;
        }
        let mut e = 0u32;
        loop {
            let used = e as u64 * weights[var];
            if used > left {
                break;
            }
            exps[var] = e;
            rec(var + 1, left - used, exps, weights, out);
            e += 1;
        }
        exps[var] = 0;
    }
    rec(0, d, &mut exps, ring.weights(), &mut monos);
    if monos.is_empty() {
        return None;
    }
    let mut terms: Vec<(Monomial, crate::field::Coeff)> = Vec::new();
    for m in monos {
        if rng.gen_bool(0.6) {
            terms.push((m, ring.field().from_int(rng.gen_range(1..=5) as i64)));
        }
    }
    if terms.is_empty() {
        return None;
    }
    let p = Polynomial::from_terms(ring, terms);
    if p.is_zero() {
        None
    } else {
        Some(p)
    }
}

fn doman_bound_check() -> Result<CheckReport> {
    // semigroup models are domains: every sampled ideal must satisfy
    // rt(I) <= e(A); a reduced non-domain gets the weaker rt(I) <= e(A)+1
    let mut rng = ChaCha8Rng::seed_from_u64(0x646f6d616e);
    let mut report = CheckReport::new("bound-doman-sampled");
    for g in 1..=3u32 {
        let spec = bundled(&format!("semigroup{g}"))?;
        let ring = &spec.ring;
        let m = ideal_from(&spec, "m")?;
        let (e, _) = graded::multiplicity_1dim(ring, &m, BOUND)?;
        let mut sampled = 0usize;
        let mut attempts = 0usize;
        while sampled < 5 && attempts < 100 {
            attempts += 1;
            let gens: Vec<Polynomial> = (0..rng.gen_range(1..=2usize))
                .map(|_| random_weighted_homogeneous(&mut rng, ring, 14))
                .collect::<Option<Vec<_>>>()
                .unwrap_or_default();
            if gens.is_empty() {
                continue;
            }
            let ideal = IdealHandle::new(ring.clone(), gens);
            if ideal.is_unit_ideal() || ideal.is_zero_ideal() {
                continue;
            }
            sampled += 1;
            let rt = rees::relation_type(ring, &ideal)?;
            if rt > e as u64 {
                return Ok(report.fail(format!(
                    "semigroup{g}: sampled ideal has rt = {rt} > e = {e}"
                )));
            }
        }
        report.set_quantity(&format!("semigroup{g}_samples"), sampled);
        report.set_quantity(&format!("semigroup{g}_e"), e);
    }
    // reduced, not a domain: k[x,y]/(xy) with e = 2, sampled rt <= e + 1
    let reduced = bundled("eigrt1")?;
    let ring = &reduced.ring;
    let m = ideal_from(&reduced, "m")?;
    let (e, _) = graded::multiplicity_1dim(ring, &m, BOUND)?;
    let mut sampled = 0usize;
    let mut attempts = 0usize;
    while sampled < 5 && attempts < 100 {
        attempts += 1;
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=2usize))
            .map(|_| random_weighted_homogeneous(&mut rng, ring, 8))
            .collect::<Option<Vec<_>>>()
            .unwrap_or_default();
        if gens.is_empty() {
            continue;
        }
        let ideal = IdealHandle::new(ring.clone(), gens);
        if ideal.is_unit_ideal() || ideal.is_zero_ideal() {
            continue;
        }
        sampled += 1;
        let rt = rees::relation_type(ring, &ideal)?;
        if rt > e as u64 + 1 {
            return Ok(report.fail(format!(
                "reduced fixture: sampled ideal has rt = {rt} > e + 1 = {}",
                e + 1
            )));
        }
    }
    report.set_quantity("reduced_samples", sampled);
    report.set_quantity("reduced_e", e);
    Ok(report)
}

// --- Wang ------------------------------------------------------------------

/// Frozen build-time values for the Wang table; the experiment recomputes
/// them and the suite requires an exact match.
pub const WANG_EXPECTED: &[(u32, u64, u64)] = &[(2, 2, 2), (3, 3, 3), (4, 4, 4)];

fn wang_growth_check() -> Result<CheckReport> {
    let spec = bundled("xyz")?;
    let (rows, mut report) = artin_rees::wang_experiment(&spec.ring, 4)?;
    for (k, rt_expected, s_expected) in WANG_EXPECTED {
        let row = rows
            .iter()
            .find(|r| r.k == *k)
            .ok_or_else(|| Error::SpecFile(format!("missing Wang row k = {k}")))?;
        if row.rt_mod != *rt_expected || row.s != *s_expected {
            report = report.fail(format!(
                "k = {k}: computed (rt, s) = ({}, {}), frozen ({rt_expected}, {s_expected})",
                row.rt_mod, row.s
            ));
            return Ok(report);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::{MonomialOrder, OrderKind};

    #[test]
    fn all_fixtures_load() {
        for (name, _) in FIXTURES {
            let spec = bundled(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(!spec.ring.vars().is_empty());
        }
    }

    #[test]
    fn semigroup_fixture_relations_match_elimination() {
        // the checked-in toric relations must equal the elimination output
        for g in 1..=3u32 {
            let spec = bundled(&format!("semigroup{g}")).unwrap();
            let n = g as usize + 1;
            let mut vars: Vec<(String, u64)> = (0..n)
                .map(|i| (format!("u{i}"), g as u64 + 1 + i as u64))
                .collect();
            vars.push(("t".into(), 1));
            let work = RingPresentation::polynomial_ring(
                Field::Prime(32003),
                vars,
                MonomialOrder::simple(OrderKind::GradedRevLex, n + 1),
            )
            .unwrap();
            let t = Polynomial::var(&work, n);
            let gens: Vec<Polynomial> = (0..n)
                .map(|i| {
                    Polynomial::var(&work, i)
                        .sub(&t.pow(g + 1 + i as u32))
                        .unwrap()
                })
                .collect();
            let toric = IdealHandle::new(work.clone(), gens).eliminate(&[n]).unwrap();
            // compare in the work ring: lift fixture relations
            let lifted: Vec<Polynomial> = spec
                .ring
                .defining_gens()
                .iter()
                .map(|p| p.lift(&work, 0).unwrap())
                .collect();
            let fixture_ideal = IdealHandle::new(work.clone(), lifted);
            let toric_ideal = IdealHandle::new(work, toric.gens().to_vec());
            assert!(
                fixture_ideal.equals(&toric_ideal).unwrap(),
                "semigroup{g} fixture does not match elimination"
            );
        }
    }

    #[test]
    fn suite_kind_parsing() {
        assert!(SuiteKind::from_str("examples").is_ok());
        assert!(SuiteKind::from_str("bogus").is_err());
    }

    #[test]
    fn wang_suite_passes() {
        let result = verify_paper(SuiteKind::Wang).unwrap();
        assert!(result.exit_ok(), "{}", result.human_summary());
    }
}
