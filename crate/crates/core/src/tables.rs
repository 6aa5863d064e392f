//! The classification tables, assembled from registry records and annotated
//! with the outcome of the checks that certify each cell.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::rational::Rational;
use crate::registry::{infchar_coefficients, RealFormRecord, Registry, FAMILIES};
use crate::rootsys::{make_root_system, CartanType};
use crate::verify::{run_all, CheckId, Status, VerifyConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableId {
    Numbers,
    Infchar,
    Hermitian,
    Nonhermitian,
    Data1,
    Data2,
}

impl TableId {
    pub const ALL: [TableId; 6] =
        [TableId::Numbers, TableId::Infchar, TableId::Hermitian, TableId::Nonhermitian, TableId::Data1, TableId::Data2];

    pub fn name(self) -> &'static str {
        match self {
            TableId::Numbers => "numbers",
            TableId::Infchar => "infchar",
            TableId::Hermitian => "hermitian",
            TableId::Nonhermitian => "nonhermitian",
            TableId::Data1 => "data1",
            TableId::Data2 => "data2",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            TableId::Numbers => "Number of minimal (g_C, K)-modules up to isomorphism",
            TableId::Infchar => "Infinitesimal characters in fundamental-weight coordinates",
            TableId::Hermitian => "Hermitian real forms: K, p_C and the minimal K-types",
            TableId::Nonhermitian => "Non-Hermitian real forms: K, p_C and the minimal K-type",
            TableId::Data1 => "Ladder data: rho_k, mu0, beta",
            TableId::Data2 => "Ladder data: xi0, w0",
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TableId::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| {
            let names: Vec<&str> = TableId::ALL.iter().map(|t| t.name()).collect();
            Error::InvalidParameter(format!("unknown table {s:?} (known: {})", names.join(", ")))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CellStatus {
    Verified,
    Unverified,
}

/// How a cell's text is written: plain labels, or the weight/word notation of the registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CellKind {
    Text,
    Math,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Column {
    pub key: &'static str,
    pub kind: CellKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub text: String,
    /// Present for cells certified by some check.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<CellStatus>,
}

/// One infinitesimal character at a concrete type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InfcharInstance {
    #[serde(rename = "type")]
    pub ty: String,
    pub coefficients: Vec<Rational>,
    pub coordinates: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub cells: Vec<Cell>,
    /// Registry records the row was generated from.
    pub records: Vec<String>,
    /// `record/check: evidence` for every failing check behind the row.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub instances: Vec<InfcharInstance>,
}

impl Row {
    /// `verified`, or `unverified: <columns>` naming every unverified cell.
    pub fn status_text(&self, columns: &[Column]) -> String {
        let bad: Vec<&str> = self
            .cells
            .iter()
            .zip(columns)
            .filter(|(c, _)| c.status == Some(CellStatus::Unverified))
            .map(|(_, col)| col.key)
            .collect();
        if bad.is_empty() {
            "verified".into()
        } else {
            format!("unverified: {}", bad.join(", "))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub id: String,
    pub title: String,
    pub columns: Vec<Column>,
    pub rows: Vec<Row>,
}

impl Table {
    pub fn verified(&self) -> bool {
        self.rows.iter().flat_map(|r| &r.cells).all(|c| c.status != Some(CellStatus::Unverified))
    }

    pub fn column(&self, key: &str) -> Option<usize> {
        self.columns.iter().position(|c| c.key == key)
    }
}

/// Which records stand behind a row.
#[derive(Clone, Copy)]
enum Members {
    Record(&'static str),
    Families(&'static [&'static str]),
}

impl Members {
    fn select<'a>(&self, reg: &'a Registry) -> Vec<&'a RealFormRecord> {
        match self {
            Members::Record(name) => reg.get(name).into_iter().collect(),
            Members::Families(ids) => {
                reg.records.iter().filter(|r| r.family.as_deref().is_some_and(|f| ids.contains(&f))).collect()
            }
        }
    }
}

/// A row in the making: cell texts plus the checks certifying each cell.
struct Draft {
    cells: Vec<(String, &'static [CheckId])>,
    members: Vec<String>,
    instances: Vec<InfcharInstance>,
}

fn text(s: impl Into<String>) -> (String, &'static [CheckId]) {
    (s.into(), &[])
}

const NUMBERS: &[(usize, &str, Members)] = &[
    (1, "sp(n,R) n>=2", Members::Families(&["sp_R"])),
    (2, "so(p,2) p>=5", Members::Families(&["so_p_2"])),
    (2, "so*(2n) n>=4", Members::Families(&["so_star"])),
    (2, "e6(-14)", Members::Record("e6_-14")),
    (2, "e7(-25)", Members::Record("e7_-25")),
    (3, "so(p,q) p,q>=3, p+q>=8 even", Members::Families(&["so_even_even", "so_odd_odd"])),
    (3, "so(p,3) p>=4 even", Members::Families(&["so_2n_3"])),
    (3, "e6(6)", Members::Record("e6_6")),
    (3, "e6(2)", Members::Record("e6_2")),
    (3, "e7(7)", Members::Record("e7_7")),
    (3, "e7(-5)", Members::Record("e7_-5")),
    (3, "e8(8)", Members::Record("e8_8")),
    (3, "e8(-24)", Members::Record("e8_-24")),
    (3, "f4(4)", Members::Record("f4_4")),
    (3, "g2(2)", Members::Record("g2_2")),
    (4, "sp(n) n>=2", Members::Families(&["sp_compact"])),
    (4, "so(n) n>=7", Members::Families(&["so_compact"])),
    (4, "e6", Members::Record("e6")),
    (4, "e7", Members::Record("e7")),
    (4, "e8", Members::Record("e8")),
    (4, "f4", Members::Record("f4")),
    (4, "g2", Members::Record("g2")),
    (4, "so(n,1) n>=6", Members::Families(&["so_n_1"])),
    (4, "sp(p,q) p,q>=1", Members::Families(&["sp_p_q"])),
    (4, "e6(-26)", Members::Record("e6_-26")),
    (4, "f4(-20)", Members::Record("f4_-20")),
    (4, "so(p,q) p,q>=4, p+q odd", Members::Families(&["so_odd_sum"])),
    (5, "sp(n,C) n>=2", Members::Families(&["sp_C"])),
    (6, "so(n,C) n>=7", Members::Families(&["so_C"])),
    (6, "e6(C)", Members::Record("e6_C")),
    (6, "e7(C)", Members::Record("e7_C")),
    (6, "e8(C)", Members::Record("e8_C")),
    (6, "f4(C)", Members::Record("f4_C")),
    (6, "g2(C)", Members::Record("g2_C")),
];

/// `(label, K, p_C, minimal K-types)` of the parametric rows.
struct FamilyLabels {
    g: &'static str,
    k: &'static str,
    p: &'static str,
    min: &'static str,
    members: Members,
}

const HERMITIAN_FAMILIES: &[FamilyLabels] = &[
    FamilyLabels {
        g: "so(p,2) p>=5",
        k: "Spin(p) x R",
        p: "C^p⊠(C_1⊕C_-1)",
        min: "C⊠C_±(p-2)/2",
        members: Members::Families(&["so_p_2"]),
    },
    FamilyLabels {
        g: "sp(n,R) n>=2",
        k: "SU(n) x R",
        p: "S^2(C^n)⊠C_1⊕S^2(∧^(n-1)C^n)⊠C_-1",
        min: "C⊠C_±n/4, C^n⊠C_(n+2)/4, ∧^(n-1)C^n⊠C_-(n+2)/4",
        members: Members::Families(&["sp_R"]),
    },
    FamilyLabels {
        g: "so*(2n) n>=4",
        k: "SU(n) x R",
        p: "∧^2C^n⊠C_1⊕∧^(n-2)C^n⊠C_-1",
        min: "C⊠C_±n/2",
        members: Members::Families(&["so_star"]),
    },
];

const HERMITIAN_FIXED: &[&str] = &["e6_-14", "e7_-25"];

const NONHERMITIAN_FAMILIES: &[FamilyLabels] = &[
    FamilyLabels {
        g: "so(p,q) p>=q>=3, p+q>=8 even",
        k: "Spin(p) x Spin(q)",
        p: "C^p⊠C^q",
        min: "C⊠S^((p-q)/2)(C^q)",
        members: Members::Families(&["so_even_even", "so_odd_odd"]),
    },
    FamilyLabels {
        g: "so(p,3) p>=4 even",
        k: "Spin(p) x SU(2)",
        p: "C^p⊠S^2(C^2)",
        min: "C⊠S^(p-3)(C^2)",
        members: Members::Families(&["so_2n_3"]),
    },
];

/// Fixed-rank rows of the non-Hermitian and ladder-data tables, in order.
const NONHERMITIAN_FIXED: &[&str] = &["f4_4", "e6_2", "e7_-5", "e8_-24", "g2_2", "e6_6", "e7_7", "e8_8"];

/// Families with symbolic ladder-data cells.
const DATA_FAMILIES: &[&str] = &["so_even_even", "so_odd_odd", "so_2n_3"];

struct InfcharRow {
    g: &'static str,
    representative: &'static str,
    matches: fn(CartanType) -> bool,
}

const INFCHAR: &[InfcharRow] = &[
    InfcharRow {
        g: "so(2n+1,C) n>=3",
        representative: "omega1+...+omega(n-3)+1/2omega(n-2)+1/2omega(n-1)+omega(n)",
        matches: |t| matches!(t, CartanType::B(n) if n >= 3),
    },
    InfcharRow {
        g: "sp(n,C) n>=2",
        representative: "omega1+...+omega(n-1)+1/2omega(n)",
        matches: |t| matches!(t, CartanType::C(n) if n >= 2),
    },
    InfcharRow {
        g: "so(2n,C) n>=4",
        representative: "omega1+...+omega(n-3)+omega(n-1)+omega(n)",
        matches: |t| matches!(t, CartanType::D(n) if n >= 4),
    },
    InfcharRow {
        g: "e_n(C) n=6,7,8",
        representative: "omega1+omega2+omega3+omega5+...+omega(n)",
        matches: |t| matches!(t, CartanType::E6 | CartanType::E7 | CartanType::E8),
    },
    InfcharRow {
        g: "f4(C)",
        representative: "1/2omega1+1/2omega2+omega3+omega4",
        matches: |t| t == CartanType::F4,
    },
    InfcharRow { g: "g2(C)", representative: "omega1+1/3omega2", matches: |t| t == CartanType::G2 },
];

fn names(records: &[&RealFormRecord]) -> Vec<String> {
    records.iter().map(|r| r.name.clone()).collect()
}

fn columns(spec: &[(&'static str, CellKind)]) -> Vec<Column> {
    spec.iter().map(|&(key, kind)| Column { key, kind }).collect()
}

fn numbers(reg: &Registry) -> (Vec<Column>, Vec<Draft>) {
    let cols = columns(&[("g", CellKind::Text), ("number", CellKind::Text), ("row", CellKind::Text)]);
    let rows = NUMBERS
        .iter()
        .map(|(group, label, members)| {
            let recs = members.select(reg);
            let counts: BTreeSet<usize> = recs.iter().map(|r| r.expected_count).collect();
            let number = if counts.is_empty() {
                "-".to_string()
            } else {
                counts.iter().map(usize::to_string).collect::<Vec<_>>().join("/")
            };
            Draft {
                cells: vec![text(*label), (number, &[CheckId::CountAndDisjoint]), text(group.to_string())],
                members: names(&recs),
                instances: vec![],
            }
        })
        .collect();
    (cols, rows)
}

fn infchar(reg: &Registry) -> Result<(Vec<Column>, Vec<Draft>)> {
    let cols = columns(&[("g", CellKind::Text), ("representative", CellKind::Text), ("instances", CellKind::Text)]);
    let mut rows = Vec::new();
    for row in INFCHAR {
        let recs: Vec<&RealFormRecord> = reg.records.iter().filter(|r| (row.matches)(r.g_complex[0])).collect();
        let types: BTreeSet<CartanType> = recs.iter().map(|r| r.g_complex[0]).collect();
        let mut instances = Vec::new();
        for ty in types {
            let coefficients = infchar_coefficients(ty)
                .ok_or_else(|| Error::Unsupported(format!("no infinitesimal character tabulated for {ty}")))?;
            let coordinates = make_root_system(ty)?.omega_to_coords(&coefficients)?;
            instances.push(InfcharInstance { ty: ty.to_string(), coefficients, coordinates });
        }
        let listing = instances
            .iter()
            .map(|i| {
                let c: Vec<String> = i.coefficients.iter().map(Rational::to_string).collect();
                format!("{}: ({})", i.ty, c.join(","))
            })
            .collect::<Vec<_>>()
            .join("; ");
        rows.push(Draft {
            cells: vec![text(row.g), (row.representative.to_string(), &[CheckId::InfcharCoords]), text(listing)],
            members: names(&recs),
            instances,
        });
    }
    Ok((cols, rows))
}

const P_CHECKS: &[CheckId] = &[CheckId::PDimension];
const MIN_CHECKS: &[CheckId] = &[CheckId::LadderWellformed, CheckId::CountAndDisjoint];

fn classification(reg: &Registry, families: &[FamilyLabels], fixed: &[&'static str]) -> (Vec<Column>, Vec<Draft>) {
    let cols = columns(&[
        ("g", CellKind::Text),
        ("K", CellKind::Text),
        ("p", CellKind::Text),
        ("minimal K-type", CellKind::Text),
    ]);
    let mut rows: Vec<Draft> = families
        .iter()
        .map(|f| Draft {
            cells: vec![text(f.g), text(f.k), (f.p.into(), P_CHECKS), (f.min.into(), MIN_CHECKS)],
            members: names(&f.members.select(reg)),
            instances: vec![],
        })
        .collect();
    for &name in fixed {
        let recs = Members::Record(name).select(reg);
        let (g, k, p, min) = match recs.first() {
            Some(r) => (r.display.clone(), r.k_label.clone(), r.p_label.clone(), r.min_k_type_label.clone()),
            None => (name.to_string(), "-".into(), "-".into(), "-".into()),
        };
        rows.push(Draft {
            cells: vec![text(g), text(k), (p, P_CHECKS), (min, MIN_CHECKS)],
            members: names(&recs),
            instances: vec![],
        });
    }
    (cols, rows)
}

const DATA1_CHECKS: [&[CheckId]; 3] =
    [&[CheckId::Rho], &[CheckId::LadderWellformed], &[CheckId::LadderWellformed, CheckId::PDimension]];
const DATA2_CHECKS: [&[CheckId]; 2] =
    [&[CheckId::Xi0, CheckId::SameLine], &[CheckId::W0Table, CheckId::W0Formula, CheckId::W0Unique]];

/// Ladder-data rows: symbolic family patterns, then the fixed-rank records' cells.
fn data(reg: &Registry, second: bool) -> (Vec<Column>, Vec<Draft>) {
    let cols = if second {
        columns(&[("g", CellKind::Text), ("xi0", CellKind::Math), ("w0", CellKind::Math)])
    } else {
        columns(&[("g", CellKind::Text), ("rho", CellKind::Math), ("mu0", CellKind::Math), ("beta", CellKind::Math)])
    };
    let annotate = |g: String, cells: Vec<String>, members: Vec<String>| {
        let checks: &[&'static [CheckId]] = if second { &DATA2_CHECKS } else { &DATA1_CHECKS };
        let mut out = vec![text(g)];
        out.extend(cells.into_iter().zip(checks.iter().copied()));
        Draft { cells: out, members, instances: vec![] }
    };
    let mut rows = Vec::new();
    for id in DATA_FAMILIES {
        let spec = FAMILIES.iter().find(|f| f.id == *id).expect("known family");
        let [rho, mu0, beta, xi0, w0] = spec.pattern.expect("family with ladder-data pattern");
        let cells = if second { vec![xi0, w0] } else { vec![rho, mu0, beta] };
        let members = names(&Members::Families(std::slice::from_ref(id)).select(reg));
        let g = format!("{} {}", spec.display, spec.constraint);
        rows.push(annotate(g, cells.into_iter().map(String::from).collect(), members));
    }
    for &name in NONHERMITIAN_FIXED {
        let recs = Members::Record(name).select(reg);
        let (g, cells) = match recs.first().and_then(|r| r.cells.as_ref().map(|c| (r, c))) {
            Some((r, c)) => (
                r.display.clone(),
                if second { vec![c.xi0.clone(), c.w0.clone()] } else { vec![c.rho.clone(), c.mu0.clone(), c.beta.clone()] },
            ),
            None => (name.to_string(), vec!["-".to_string(); if second { 2 } else { 3 }]),
        };
        rows.push(annotate(g, cells, names(&recs)));
    }
    (cols, rows)
}

/// Builds one table from `registry`, running the checks behind its cells with `config`.
pub fn build_table(id: TableId, registry: &Registry, config: &VerifyConfig) -> Result<Table> {
    let (columns, drafts) = match id {
        TableId::Numbers => numbers(registry),
        TableId::Infchar => infchar(registry)?,
        TableId::Hermitian => classification(registry, HERMITIAN_FAMILIES, HERMITIAN_FIXED),
        TableId::Nonhermitian => classification(registry, NONHERMITIAN_FAMILIES, NONHERMITIAN_FIXED),
        TableId::Data1 => data(registry, false),
        TableId::Data2 => data(registry, true),
    };

    let member_names: BTreeSet<&str> = drafts.iter().flat_map(|d| d.members.iter().map(String::as_str)).collect();
    let checks: BTreeSet<CheckId> = drafts.iter().flat_map(|d| d.cells.iter().flat_map(|c| c.1.iter().copied())).collect();
    let records: Vec<RealFormRecord> =
        registry.records.iter().filter(|r| member_names.contains(r.name.as_str())).cloned().collect();
    let checks: Vec<CheckId> = checks.into_iter().collect();
    let reports = run_all(&records, &checks, config)?;
    let by_key: HashMap<(&str, &str), (Status, &str)> = reports
        .iter()
        .map(|r| ((r.record.as_str(), r.check.as_str()), (r.status, r.evidence.as_str())))
        .collect();

    let rows = drafts
        .into_iter()
        .map(|d| {
            let mut failures = BTreeMap::new();
            let cells = d
                .cells
                .into_iter()
                .map(|(text, checks)| {
                    let status = (!checks.is_empty()).then(|| {
                        let mut passed = false;
                        let mut failed = false;
                        for m in &d.members {
                            for c in checks {
                                match by_key.get(&(m.as_str(), c.name())) {
                                    Some((Status::Pass, _)) => passed = true,
                                    Some((Status::Fail, ev)) => {
                                        failed = true;
                                        failures.insert(format!("{m}/{c}"), ev.to_string());
                                    }
                                    _ => {}
                                }
                            }
                        }
                        if passed && !failed {
                            CellStatus::Verified
                        } else {
                            CellStatus::Unverified
                        }
                    });
                    Cell { text, status }
                })
                .collect();
            Row {
                cells,
                records: d.members,
                failures: failures.into_iter().map(|(k, v)| format!("{k}: {v}")).collect(),
                instances: d.instances,
            }
        })
        .collect();

    Ok(Table { id: id.name().into(), title: id.title().into(), columns, rows })
}
