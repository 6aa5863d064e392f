//! Real forms, their `K`-data and the ladder data of their minimal modules.

mod builtins;
mod families;
pub mod notation;

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::rational::Rational;
use crate::rootsys::{CartanType, KSpace, Weight};
use crate::weyl::WeylWord;

pub use builtins::{builtin_records, infchar_coefficients};
pub use families::{default_instances, instantiate_family, FamilySpec, FAMILIES};

pub const SCHEMA: &str = "minrep-registry/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NonexistenceReason {
    /// The minimal nilpotent orbit does not meet `p_C`.
    #[serde(rename = "orbit-misses-p")]
    OrbitMissesP,
    /// No module of the required Gelfand-Kirillov dimension (`so(p,q)`, `p+q` odd).
    #[serde(rename = "howe-vogan-parity")]
    HoweVoganParity,
}

impl fmt::Display for NonexistenceReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NonexistenceReason::OrbitMissesP => "orbit-misses-p",
            NonexistenceReason::HoweVoganParity => "howe-vogan-parity",
        })
    }
}

/// Which half of `p_C` kills the lowest `K`-type of a Hermitian module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NullSide {
    PMinus,
    PPlus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PSummand {
    pub label: String,
    pub weight: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MinimalModule {
    pub label: String,
    pub mu0: Weight,
    pub beta: Weight,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub null_side: Option<NullSide>,
}

/// ASCII cells of the ladder-data tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DataCells {
    pub rho: String,
    pub mu0: String,
    pub beta: String,
    pub xi0: String,
    pub w0: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RealFormRecord {
    pub name: String,
    pub display: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<i64>,
    /// Simple components of `g_C`; two equal entries for a complex `g`.
    pub g_complex: Vec<CartanType>,
    pub k_space: KSpace,
    pub k_label: String,
    pub hermitian: bool,
    pub p_label: String,
    pub p_summands: Vec<PSummand>,
    pub min_k_type_label: String,
    pub modules: Vec<MinimalModule>,
    pub expected_count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nonexistence: Option<NonexistenceReason>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho_table: Option<Weight>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi0_table: Option<Weight>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w0_word: Option<WeylWord>,
    /// Fundamental-weight coefficients of the infinitesimal character, per component of `g_C`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub infchar_omega: Vec<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cells: Option<DataCells>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub named_roots: BTreeMap<String, Vector>,
}

impl RealFormRecord {
    pub fn is_complex(&self) -> bool {
        self.g_complex.len() == 2
    }

    pub fn g_dim(&self) -> usize {
        self.g_complex.iter().map(|t| t.algebra_dim()).sum()
    }

    /// Checks the structural invariants every record must satisfy.
    pub fn validate(&self) -> Result<()> {
        let fail = |reason: String| Err(Error::Validation { record: self.name.clone(), reason });
        if self.name.trim().is_empty() {
            return fail("empty name".into());
        }
        if self.g_complex.is_empty() || self.g_complex.len() > 2 {
            return fail(format!("g_complex must have 1 or 2 components, found {}", self.g_complex.len()));
        }
        if self.is_complex() && self.g_complex[0] != self.g_complex[1] {
            return fail("components of a complex algebra must agree".into());
        }
        let space = &self.k_space;
        let conform = |what: &str, w: &Weight| {
            space.conforms(w).map_err(|e| Error::Validation {
                record: self.name.clone(),
                reason: format!("{what}: {e}"),
            })
        };
        for (i, s) in self.p_summands.iter().enumerate() {
            conform(&format!("p_summands[{i}]"), &s.weight)?;
        }
        if self.modules.len() != self.expected_count {
            return fail(format!(
                "{} modules listed but expected_count is {}",
                self.modules.len(),
                self.expected_count
            ));
        }
        if (self.expected_count == 0) != self.nonexistence.is_some() {
            return fail("a nonexistence reason is required exactly when expected_count is 0".into());
        }
        if self.hermitian && space.center_dim() == 0 {
            return fail("Hermitian record without a center".into());
        }
        for (i, m) in self.modules.iter().enumerate() {
            conform(&format!("modules[{i}].mu0"), &m.mu0)?;
            conform(&format!("modules[{i}].beta"), &m.beta)?;
            if m.beta.is_ss_zero() {
                return fail(format!("modules[{i}].beta has zero semisimple part"));
            }
            if !self.p_summands.iter().any(|s| s.weight == m.beta) {
                return fail(format!("modules[{i}].beta = {} is not a highest weight of p", m.beta));
            }
            if self.hermitian != m.null_side.is_some() {
                return fail(format!("modules[{i}]: null_side must be present exactly for Hermitian records"));
            }
        }
        if let Some(r) = &self.rho_table {
            conform("rho_table", r)?;
        }
        if let Some(x) = &self.xi0_table {
            conform("xi0_table", x)?;
        }
        if !self.hermitian && self.expected_count > 0 && (self.xi0_table.is_none() || self.w0_word.is_none()) {
            return fail("non-Hermitian record with modules needs xi0_table and w0_word".into());
        }
        if let Some(w) = &self.w0_word {
            let normalized = WeylWord::new(space, w.letters().to_vec()).map_err(|e| Error::Validation {
                record: self.name.clone(),
                reason: format!("w0_word: {e}"),
            })?;
            if &normalized != w {
                return fail("w0_word letters must be roots".into());
            }
        }
        if !self.infchar_omega.is_empty() && self.infchar_omega.len() != self.g_complex.len() {
            return fail("infchar_omega needs one entry per component of g_complex".into());
        }
        Ok(())
    }
}

/// An ordered collection of records.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Registry {
    pub records: Vec<RealFormRecord>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RegistryFile {
    schema: String,
    records: Vec<RealFormRecord>,
}

#[derive(Deserialize)]
struct SchemaProbe {
    schema: Option<String>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
}

impl Registry {
    /// Fixed records followed by the default family instances.
    pub fn builtin() -> Registry {
        let mut records = builtin_records();
        records.extend(default_instances());
        Registry { records }
    }

    pub fn get(&self, name: &str) -> Option<&RealFormRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    pub fn family(&self, id: &str) -> Vec<&RealFormRecord> {
        self.records.iter().filter(|r| r.family.as_deref() == Some(id)).collect()
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        for (i, r) in self.records.iter().enumerate() {
            r.validate().map_err(|e| match e {
                Error::Validation { record, reason } => Error::Validation {
                    record: format!("records[{i}] ({record})"),
                    reason,
                },
                other => other,
            })?;
            if !seen.insert(r.name.as_str()) {
                return Err(Error::Validation {
                    record: format!("records[{i}] ({})", r.name),
                    reason: "duplicate name".into(),
                });
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        let file = RegistryFile { schema: SCHEMA.into(), records: self.records.clone() };
        serde_json::to_string_pretty(&file).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Parses and validates a registry document.
    pub fn from_json(text: &str) -> Result<Registry> {
        let probe: SchemaProbe = serde_json::from_str(text).map_err(json_error)?;
        match probe.schema.as_deref() {
            Some(SCHEMA) => {}
            other => return Err(Error::Schema(other.unwrap_or("<missing>").to_string())),
        }
        let file: RegistryFile = serde_json::from_str(text).map_err(json_error)?;
        let reg = Registry { records: file.records };
        reg.validate()?;
        Ok(reg)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()? + "\n")
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    pub fn load(path: &Path) -> Result<Registry> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Registry::from_json(&text).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
            other => other,
        })
    }
}
