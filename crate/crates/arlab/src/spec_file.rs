//! JSON ring specification files: field, weighted variables, order,
//! defining relations, named ideals, and named primary decompositions.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::artin_rees::{PrimaryComponent, PrimaryDecompositionInput};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::IdealHandle;
use crate::monomial::{MonomialOrder, OrderKind};
use crate::parse::parse_polynomial;
use crate::poly::Polynomial;
use crate::ring::RingPresentation;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FieldSpec {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VarSpec {
    pub name: String,
    #[serde(default = "default_weight", skip_serializing_if = "is_default_weight")]
    pub weight: u64,
}

fn default_weight() -> u64 {
    1
}
fn is_default_weight(w: &u64) -> bool {
    *w == 1
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComponentSpec {
    pub q: Vec<String>,
    pub p: Vec<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub embedded: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingSpecFile {
    pub field: FieldSpec,
    pub vars: Vec<VarSpec>,
    pub order: String,
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default)]
    pub ideals: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub decompositions: BTreeMap<String, Vec<ComponentSpec>>,
}

/// A fully validated ring spec: the presentation plus its named objects.
#[derive(Debug, Clone)]
pub struct LoadedSpec {
    pub ring: RingPresentation,
    pub ideals: BTreeMap<String, IdealHandle>,
    pub decompositions: BTreeMap<String, PrimaryDecompositionInput>,
}

impl RingSpecFile {
    pub fn parse_str(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::SpecFile(format!("invalid JSON: {e}")))
    }

    /// Builds the ring and named objects, optionally overriding the field
    /// (the declared prime is kept when switching to "fp").
    pub fn build(&self, field_override: Option<&str>) -> Result<LoadedSpec> {
        let declared_p = self.field.p.unwrap_or(32003);
        let field = match field_override.unwrap_or(self.field.kind.as_str()) {
            "fp" => Field::Prime(declared_p),
            "qq" => Field::Rationals,
            other => {
                return Err(Error::SpecFile(format!(
                    "unknown field type `{other}` (expected \"fp\" or \"qq\")"
                )))
            }
        };
        let kind = match self.order.as_str() {
            "lex" => OrderKind::Lex,
            "grlex" => OrderKind::GradedLex,
            "grevlex" => OrderKind::GradedRevLex,
            other => return Err(Error::SpecFile(format!("unknown order `{other}`"))),
        };
        let ambient = RingPresentation::polynomial_ring(
            field,
            self.vars.iter().map(|v| (v.name.clone(), v.weight)).collect(),
            MonomialOrder::simple(kind, self.vars.len()),
        )?;
        let relations: Result<Vec<Polynomial>> = self
            .relations
            .iter()
            .map(|s| {
                parse_polynomial(s, &ambient)
                    .map_err(|e| Error::SpecFile(format!("relation `{s}`: {e}")))
            })
            .collect();
        let ring = ambient.quotient(&relations?)?;
        if ring.defining_gb().iter().any(|p| {
            p.leading_monomial().map(|m| m.is_one()).unwrap_or(false)
        }) {
            return Err(Error::SpecFile(
                "the relations generate the unit ideal".to_string(),
            ));
        }

        let parse_ideal = |name: &str, gens: &[String]| -> Result<IdealHandle> {
            let polys: Result<Vec<Polynomial>> = gens
                .iter()
                .map(|s| {
                    parse_polynomial(s, &ring)
                        .map_err(|e| Error::SpecFile(format!("ideal `{name}`, generator `{s}`: {e}")))
                })
                .collect();
            Ok(IdealHandle::new(ring.clone(), polys?))
        };

        let mut ideals = BTreeMap::new();
        for (name, gens) in &self.ideals {
            ideals.insert(name.clone(), parse_ideal(name, gens)?);
        }
        let mut decompositions = BTreeMap::new();
        for (name, comps) in &self.decompositions {
            let mut components = Vec::new();
            let mut embedded = None;
            for c in comps {
                let comp = PrimaryComponent {
                    q: parse_ideal(&format!("{name}.q"), &c.q)?,
                    p: parse_ideal(&format!("{name}.p"), &c.p)?,
                };
                if c.embedded {
                    embedded = Some(comp);
                } else {
                    components.push(comp);
                }
            }
            decompositions.insert(
                name.clone(),
                PrimaryDecompositionInput {
                    components,
                    embedded,
                },
            );
        }
        Ok(LoadedSpec {
            ring,
            ideals,
            decompositions,
        })
    }
}

/// Loads and validates a ring spec file.
pub fn load_ring_spec(path: &Path, field_override: Option<&str>) -> Result<LoadedSpec> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::SpecFile(format!("{}: {e}", path.display())))?;
    RingSpecFile::parse_str(&text)?.build(field_override)
}
