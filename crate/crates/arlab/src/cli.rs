//! The `arlab` command line: ring/ideal operations, relation types,
//! Artin-Rees numbers, theorem checkers, and the verify-paper suite runner.
//!
//! Every subcommand prints one JSON object to stdout (newline-terminated,
//! deterministic). Exit codes: 0 success or pass, 1 check failure or
//! inconclusive result, 2 usage or input errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::artin_rees::{self, DimSample, DEFAULT_BOUND};
use crate::error::{Error, Result};
use crate::graded;
use crate::ideal::IdealHandle;
use crate::parse::parse_polynomial;
use crate::poly::Polynomial;
use crate::rees::{self, TwoGenStatus};
use crate::report::CheckReport;
use crate::spec_file::{load_ring_spec, LoadedSpec};
use crate::suite::{self, SuiteKind};

#[derive(Parser)]
#[command(
    name = "arlab",
    version,
    about = "Exact workbench for relation types of ideals and strong uniform Artin-Rees numbers"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RingArgs {
    /// Ring specification file (JSON)
    #[arg(long, value_name = "FILE")]
    ring: PathBuf,
    /// Override the coefficient field of the spec file
    #[arg(long, value_parser = ["fp", "qq"])]
    field: Option<String>,
    /// Also write the JSON result to this file
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Groebner basis of a named ideal
    Gb {
        #[command(flatten)]
        ring: RingArgs,
        /// Ideal name from the spec file ("0" and "1" are the zero and unit ideals)
        #[arg(long)]
        ideal: String,
    },
    /// Ideal membership of a polynomial
    Member {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        ideal: String,
    },
    /// Intersection of two named ideals
    Intersect {
        #[command(flatten)]
        ring: RingArgs,
        /// Exactly two ideal names
        #[arg(long = "ideal", num_args = 1)]
        ideals: Vec<String>,
    },
    /// Colon ideal (I : D) with D a named ideal or a polynomial
    Colon {
        #[command(flatten)]
        ring: RingArgs,
        /// I, then optionally the divisor ideal
        #[arg(long = "ideal", num_args = 1)]
        ideals: Vec<String>,
        /// Divisor polynomial (alternative to a second --ideal)
        #[arg(long)]
        poly: Option<String>,
    },
    /// Ideal power I^n
    Power {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        n: u32,
    },
    /// Elimination ideal: generators free of the given variables
    Eliminate {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        ideal: String,
        /// Variable to eliminate (repeatable)
        #[arg(long = "var", required = true)]
        vars: Vec<String>,
    },
    /// Saturation (I : J^infinity) with its stabilization index
    Saturate {
        #[command(flatten)]
        ring: RingArgs,
        /// I, then J
        #[arg(long = "ideal", num_args = 1)]
        ideals: Vec<String>,
    },
    /// Hilbert function of A/I up to degree n (with length when finite)
    Hf {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        ideal: String,
        /// Largest weighted degree to report
        #[arg(long, default_value_t = 16)]
        n: u64,
    },
    /// Minimal number of homogeneous generators of a named ideal
    Mu {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        ideal: String,
    },
    /// Multiplicity of a one-dimensional ring
    Mult {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Krull dimension of the ring
    Dim {
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Rees defining ideal of a named ideal
    Rees {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        ideal: String,
    },
    /// Relation type rt(I)
    Rt {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        ideal: String,
    },
    /// Relation type rt(I; A/K) of the image ideal
    RtMod {
        #[command(flatten)]
        ring: RingArgs,
        /// I, then K
        #[arg(long = "ideal", num_args = 1)]
        ideals: Vec<String>,
    },
    /// Relation type of a principal ideal by its colon chain
    RtPrincipal {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        poly: String,
        /// Optional modulus ideal K (default the zero ideal)
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Relation type of a two-generated ideal by its colon chain
    #[command(name = "rt-2gen")]
    Rt2gen {
        #[command(flatten)]
        ring: RingArgs,
        /// A named ideal with exactly two generators
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Strong uniform Artin-Rees number for I and the pair K ⊆ L
    Ar {
        #[command(flatten)]
        ring: RingArgs,
        /// I, then K, then L
        #[arg(long = "ideal", num_args = 1)]
        ideals: Vec<String>,
    },
    /// Theorem 2 sandwich s ≤ rt(I;A/L) ≤ max(rt(I;A/K), s)
    CheckThm2 {
        #[command(flatten)]
        ring: RingArgs,
        /// I, then K, then L
        #[arg(long = "ideal", num_args = 1)]
        ideals: Vec<String>,
    },
    /// Dimension condition (iv)/(c) samples at a given r
    CheckIv {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        r: u64,
        /// Sample elements: two for condition (iv), three for condition (c);
        /// defaults to all variable pairs
        #[arg(long = "poly")]
        polys: Vec<String>,
    },
    /// Annihilation bounds (nilpotency, pasquom, finite-length step)
    CheckBounds {
        #[command(flatten)]
        ring: RingArgs,
        /// I, then optionally K (default zero), then optionally J
        #[arg(long = "ideal", num_args = 1)]
        ideals: Vec<String>,
        /// Exponent t with I^t J = 0 for the reduction step
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// The explicit bound brt(A) from a named primary decomposition
    Brt {
        #[command(flatten)]
        ring: RingArgs,
        /// Decomposition name from the spec file
        #[arg(long)]
        decomp: String,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Wang's growth experiment for I_k = (x^k, y^k, x^{k-1}y + z^k)
    Wang {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, default_value_t = 4)]
        kmax: u32,
    },
    /// Run the bundled verification suites
    VerifyPaper {
        /// all | examples | theorems | wang
        #[arg(long, default_value = "all")]
        suite: String,
        /// Also write the JSON result to this file
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

fn resolve_ideal(spec: &LoadedSpec, name: &str) -> Result<IdealHandle> {
    match name {
        "0" => Ok(IdealHandle::zero(&spec.ring)),
        "1" => Ok(IdealHandle::unit(&spec.ring)),
        _ => spec
            .ideals
            .get(name)
            .cloned()
            .ok_or_else(|| Error::SpecFile(format!("no ideal named `{name}` in the spec file"))),
    }
}

fn expect_ideals<'a>(names: &'a [String], count: usize, what: &str) -> Result<&'a [String]> {
    if names.len() != count {
        return Err(Error::SpecFile(format!(
            "expected {count} --ideal arguments ({what}), got {}",
            names.len()
        )));
    }
    Ok(names)
}

struct Outcome {
    json: serde_json::Value,
    exit: i32,
    human: Option<String>,
}

impl Outcome {
    fn ok(json: serde_json::Value) -> Self {
        Outcome {
            json,
            exit: 0,
            human: None,
        }
    }

    fn check(report: CheckReport) -> Self {
        let exit = if report.passed() { 0 } else { 1 };
        Outcome {
            json: serde_json::to_value(&report).expect("report serializes"),
            exit,
            human: None,
        }
    }
}

fn run_command(cli: Cli) -> Result<(Outcome, Option<PathBuf>)> {
    match cli.command {
        Command::Gb { ring, ideal } => {
            let spec = load_ring_spec(&ring.ring, ring.field.as_deref())?;
            let handle = resolve_ideal(&spec, &ideal)?;
            Ok((
                Outcome::ok(json!({"basis": handle.printed_gens()})),
                ring.out,
            ))
        }
        Command::Member { ring, poly, ideal } => {
            let spec = load_ring_spec(&ring.ring, ring.field.as_deref())?;
            let handle = resolve_ideal(&spec, &ideal)?;
            let f = parse_polynomial(&poly, &spec.ring)?;
            Ok((
                Outcome::ok(json!({"member": handle.contains(&f)?})),
                ring.out,
            ))
        }
        Command::Intersect { ring, ideals } => {
            let spec = load_ring_spec(&ring.ring, ring.field.as_deref())?;
            let names = expect_ideals(&ideals, 2, "I and J")?;
            let a = resolve_ideal(&spec, &names[0])?;
            let b = resolve_ideal(&spec, &names[1])?;
            Ok((
                Outcome::ok(json!({"generators": a.intersect(&b)?.printed_gens()})),
                ring.out,
            ))
        }
        Command::Colon { ring, ideals, poly } => {
            let spec = load_ring_spec(&ring.ring, ring.field.as_deref())?;
            let result = match (ideals.len(), poly) {
                (1, Some(p)) => {
                    let i = resolve_ideal(&spec, &ideals[0])?;
                    let f = parse_polynomial(&p, &spec.ring)?;
                    i.colon_poly(&f)?
                }
                (2, None) => {
                    let i = resolve_ideal(&spec, &ideals[0])?;
                    let j = resolve_ideal(&spec, &ideals[1])?;
                    i.colon(&j)?
                }
                _ => {
                    return Err(Error::SpecFile(
                        "colon needs --ideal I with either --poly F or a second --ideal J".into(),
                    ))
                }
            };
            Ok((
                Outcome::ok(json!({"generators": result.printed_gens()})),
                ring.out,
            ))
        }
        Command::Power { ring, ideal, n } => {
            let spec = load_ring_spec(&ring.ring, ring.field.as_deref())?;
            let handle = resolve_ideal(&spec, &ideal)?;
            Ok((
                Outcome::ok(json!({"generators": handle.power(n)?.printed_gens()})),
                ring.out,
            ))
        }
        Command::Eliminate { ring, ideal, vars } => {
            let spec = load_ring_spec(&ring.ring, ring.field.as_deref())?;
            let handle = resolve_ideal(&spec, &ideal)?;
            let mut indices = Vec::new();
            for v in &vars {
                indices.push(
                    spec.ring
                        .var_index(v)
                        .ok_or_else(|| Error::UnknownVariable(v.clone()))?,
                );
            }
            let result = handle.eliminate(&indices)?;
            Ok((
                Outcome::ok(json!({
                    "generators": result.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>()
                })),
                ring.out,
            ))
        }
        Command::Saturate { ring, ideals } => {
            let spec = load_ring_spec(&ring.ring, ring.field.as_deref())?;
            let names = expect_ideals(&ideals, 2, "I and J")?;
            let i = resolve_ideal(&spec, &names[0])?;
            let j = resolve_ideal(&spec, &names[1])?;
            let (sat, k) = i.saturate(&j)?;
            Ok((
                Outcome::ok(json!({
                    "generators": sat.printed_gens(),
                    "stable_index": k
                })),
                ring.out,
            ))
        }
        Command::Hf { ring, ideal, n } => {
            let spec = load_ring_spec(&ring.ring, ring.field.as_deref())?;
            let handle = resolve_ideal(&spec, &ideal)?;
            let values = graded::hilbert_function(&spec.ring, &handle, n)?;
            let length = match graded::quotient_length(&spec.ring, &handle) {
                Ok(len) => Some(len),
                Err(Error::InfiniteLength) => None,
                Err(e) => return Err(e),
            };
            Ok((
                Outcome::ok(json!({"values": values, "length": length})),
                ring.out,
            ))
        }
        Command::Mu { ring, ideal } => {
            let spec = load_ring_spec(&ring.ring, ring.field.as_deref())?;
            let handle = resolve_ideal(&spec, &ideal)?;
            let mu = graded::min_gens(&handle, &spec.ring.maximal_ideal())?;
            Ok((Outcome::ok(json!({"mu": mu})), ring.out))
        }
        Command::Mult { ring, bound } => {
            let spec = load_ring_spec(&ring.ring, ring.field.as_deref())?;
            let (e, stab) =
                graded::multiplicity_1dim(&spec.ring, &spec.ring.maximal_ideal(), bound)?;
            Ok((
                Outcome::ok(json!({"e": e, "stabilized_at": stab})),
                ring.out,
            ))
        }
        Command::Dim { ring } => {
            let spec = load_ring_spec(&ring.ring, ring.field.as_deref())?;
            Ok((
                Outcome::ok(json!({"dim": graded::krull_dim(&spec.ring)})),
                ring.out,
            ))
        }
        Command::Rees { ring, ideal } => {
            let spec = load_ring_spec(&ring.ring, ring.field.as_deref())?;
            let handle = resolve_ideal(&spec, &ideal)?;
            let analysis = rees::rees_defining_ideal(&spec.ring, &handle)?;
            let verdicts: Vec<serde_json::Value> = analysis
                .verdicts()?
                .into_iter()
                .map(|(n, v)| json!({"n": n, "vanishes": v}))
                .collect();
            Ok((
                Outcome::ok(json!({
                    "rees_vars": analysis.rees_ring().vars(),
                    "generators": analysis
                        .defining_gens()
                        .iter()
                        .map(|g| g.to_string())
                        .collect::<Vec<_>>(),
                    "max_t_degree": analysis.max_t_degree(),
                    "effective_relations": verdicts
                })),
                ring.out,
            ))
        }
        Command::Rt { ring, ideal } => {
            let spec = load_ring_spec(&ring.ring, ring.field.as_deref())?;
            let handle = resolve_ideal(&spec, &ideal)?;
            Ok((
                Outcome::ok(json!({"rt": rees::relation_type(&spec.ring, &handle)?})),
                ring.out,
            ))
        }
        Command::RtMod { ring, ideals } => {
            let spec = load_ring_spec(&ring.ring, ring.field.as_deref())?;
            let names = expect_ideals(&ideals, 2, "I and K")?;
            let i = resolve_ideal(&spec, &names[0])?;
            let k = resolve_ideal(&spec, &names[1])?;
            let rt = rees::relation_type_mod(&spec.ring, &i, &k)?;
            let mut body = json!({"rt": rt});
            if k.is_unit_ideal() {
                body["warning"] = json!("K is the unit ideal: A/K is the zero module, rt = 1 by convention");
            }
            Ok((Outcome::ok(body), ring.out))
        }
        Command::RtPrincipal {
            ring,
            poly,
            ideal,
            bound,
        } => {
            let spec = load_ring_spec(&ring.ring, ring.field.as_deref())?;
            let x = parse_polynomial(&poly, &spec.ring)?;
            let k = match ideal {
                Some(name) => resolve_ideal(&spec, &name)?,
                None => IdealHandle::zero(&spec.ring),
            };
            Ok((
                Outcome::ok(json!({"rt": rees::principal_rt(&spec.ring, &x, &k, bound)?})),
                ring.out,
            ))
        }
        Command::Rt2gen { ring, ideal, bound } => {
            let spec = load_ring_spec(&ring.ring, ring.field.as_deref())?;
            let handle = resolve_ideal(&spec, &ideal)?;
            if handle.gens().len() != 2 {
                return Err(Error::SpecFile(format!(
                    "rt-2gen needs exactly two generators, `{ideal}` has {}",
                    handle.gens().len()
                )));
            }
            let out = rees::two_gen_rt(
                &spec.ring,
                &handle.gens()[0],
                &handle.gens()[1],
                bound,
            )?;
            let status = match out.status {
                TwoGenStatus::HitUnit => "hit-unit",
                TwoGenStatus::Stable => "stable",
                TwoGenStatus::BoundExhausted => "bound-exhausted",
            };
            let exit = if out.rt.is_some() { 0 } else { 1 };
            Ok((
                Outcome {
                    json: json!({
                        "rt": out.rt,
                        "status": status,
                        "chain": out.chain
                    }),
                    exit,
                    human: None,
                },
                ring.out,
            ))
        }
        Command::Ar { ring, ideals } => {
            let spec = load_ring_spec(&ring.ring, ring.field.as_deref())?;
            let names = expect_ideals(&ideals, 3, "I, K, L")?;
            let i = resolve_ideal(&spec, &names[0])?;
            let k = resolve_ideal(&spec, &names[1])?;
            let l = resolve_ideal(&spec, &names[2])?;
            let (s, instance) = artin_rees::ar_number(&spec.ring, &i, &k, &l)?;
            Ok((
                Outcome::ok(json!({"s": s, "rt_bound": instance.rt_bound})),
                ring.out,
            ))
        }
        Command::CheckThm2 { ring, ideals } => {
            let spec = load_ring_spec(&ring.ring, ring.field.as_deref())?;
            let names = expect_ideals(&ideals, 3, "I, K, L")?;
            let i = resolve_ideal(&spec, &names[0])?;
            let k = resolve_ideal(&spec, &names[1])?;
            let l = resolve_ideal(&spec, &names[2])?;
            let report = artin_rees::check_theorem2(&spec.ring, &i, &k, &l)?;
            Ok((Outcome::check(report), ring.out))
        }
        Command::CheckIv { ring, r, polys } => {
            let spec = load_ring_spec(&ring.ring, ring.field.as_deref())?;
            let samples: Vec<DimSample> = match polys.len() {
                0 => {
                    let n = spec.ring.n_vars();
                    if n < 2 {
                        return Err(Error::SpecFile(
                            "default check-iv samples need at least two variables; pass --poly samples".into(),
                        ));
                    }
                    let mut out = Vec::new();
                    for i in 0..n {
                        for j in i + 1..n {
                            out.push(DimSample::Pair(
                                Polynomial::var(&spec.ring, i),
                                Polynomial::var(&spec.ring, j),
                            ));
                        }
                    }
                    out
                }
                2 => vec![DimSample::Pair(
                    parse_polynomial(&polys[0], &spec.ring)?,
                    parse_polynomial(&polys[1], &spec.ring)?,
                )],
                3 => vec![DimSample::Triple(
                    parse_polynomial(&polys[0], &spec.ring)?,
                    parse_polynomial(&polys[1], &spec.ring)?,
                    parse_polynomial(&polys[2], &spec.ring)?,
                )],
                other => {
                    return Err(Error::SpecFile(format!(
                        "check-iv takes 0, 2 or 3 --poly arguments, got {other}"
                    )))
                }
            };
            let report = artin_rees::check_dim_conditions(&spec.ring, r, &samples)?;
            Ok((Outcome::check(report), ring.out))
        }
        Command::CheckBounds {
            ring,
            ideals,
            n,
            bound,
        } => {
            let spec = load_ring_spec(&ring.ring, ring.field.as_deref())?;
            if ideals.is_empty() || ideals.len() > 3 {
                return Err(Error::SpecFile(
                    "check-bounds takes --ideal I [--ideal K [--ideal J --n t]]".into(),
                ));
            }
            let i = resolve_ideal(&spec, &ideals[0])?;
            let k = if ideals.len() >= 2 {
                resolve_ideal(&spec, &ideals[1])?
            } else {
                IdealHandle::zero(&spec.ring)
            };
            let j = if ideals.len() == 3 {
                Some(resolve_ideal(&spec, &ideals[2])?)
            } else {
                None
            };
            let extra = match (&j, n) {
                (Some(j_handle), Some(t)) => Some((j_handle, t)),
                (Some(_), None) => {
                    return Err(Error::SpecFile(
                        "check-bounds with a third --ideal J also needs --n t".into(),
                    ))
                }
                (None, Some(_)) => {
                    return Err(Error::SpecFile(
                        "check-bounds with --n t also needs a third --ideal J".into(),
                    ))
                }
                (None, None) => None,
            };
            let report =
                artin_rees::check_annihilation_bounds(&spec.ring, &i, &k, extra, bound)?;
            Ok((Outcome::check(report), ring.out))
        }
        Command::Brt { ring, decomp, bound } => {
            let spec = load_ring_spec(&ring.ring, ring.field.as_deref())?;
            let decomposition = spec.decompositions.get(&decomp).ok_or_else(|| {
                Error::SpecFile(format!("no decomposition named `{decomp}` in the spec file"))
            })?;
            let (value, report) = artin_rees::brt(&spec.ring, decomposition, bound)?;
            Ok((
                Outcome::ok(json!({
                    "brt": value,
                    "report": serde_json::to_value(&report)?
                })),
                ring.out,
            ))
        }
        Command::Wang { ring, kmax } => {
            let spec = load_ring_spec(&ring.ring, ring.field.as_deref())?;
            let (rows, report) = artin_rees::wang_experiment(&spec.ring, kmax)?;
            let exit = if report.passed() { 0 } else { 1 };
            Ok((
                Outcome {
                    json: json!({
                        "rows": rows,
                        "report": serde_json::to_value(&report)?
                    }),
                    exit,
                    human: None,
                },
                ring.out,
            ))
        }
        Command::VerifyPaper { suite, out } => {
            let kind: SuiteKind = suite.parse()?;
            let result = suite::verify_paper(kind)?;
            let exit = if result.exit_ok() { 0 } else { 1 };
            Ok((
                Outcome {
                    json: serde_json::to_value(&result)?,
                    exit,
                    human: Some(result.human_summary()),
                },
                out,
            ))
        }
    }
}

/// Parses argv and runs; writes JSON to `stdout` and diagnostics to
/// `stderr`. Returns the process exit code.
pub fn run_from<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version on stdout with exit 0; other parse
            // errors are usage errors (exit 2)
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 2;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    match run_command(cli) {
        Ok((outcome, out_path)) => {
            let mut text =
                serde_json::to_string_pretty(&outcome.json).expect("JSON serializes");
            text.push('\n');
            if let Some(path) = out_path {
                if let Err(e) = std::fs::write(&path, &text) {
                    let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                    return 2;
                }
            }
            let _ = stdout.write_all(text.as_bytes());
            if let Some(human) = outcome.human {
                let _ = stderr.write_all(human.as_bytes());
            }
            outcome.exit
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

/// Entry point used by the binary.
pub fn main_entry() -> i32 {
    let mut stdout = std::io::stdout();
    let mut stderr = std::io::stderr();
    run_from(std::env::args_os(), &mut stdout, &mut stderr)
}
