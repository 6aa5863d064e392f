//! Named checks over registry records.

mod checks;
pub mod disjoint;
pub mod fixtures;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::registry::RealFormRecord;
use crate::weyl::{Strategy, DEFAULT_BUDGET};

/// Rungs examined by the finite sweep of `count_and_disjoint`.
pub const DEFAULT_RUNGS: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    Rho,
    PDimension,
    LadderWellformed,
    Xi0,
    W0Table,
    W0Formula,
    W0Unique,
    SameLine,
    Period,
    CountAndDisjoint,
    ComplexBeta,
    InfcharCoords,
}

impl CheckId {
    pub const ALL: [CheckId; 12] = [
        CheckId::Rho,
        CheckId::PDimension,
        CheckId::LadderWellformed,
        CheckId::Xi0,
        CheckId::W0Table,
        CheckId::W0Formula,
        CheckId::W0Unique,
        CheckId::SameLine,
        CheckId::Period,
        CheckId::CountAndDisjoint,
        CheckId::ComplexBeta,
        CheckId::InfcharCoords,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Rho => "rho",
            CheckId::PDimension => "p_dimension",
            CheckId::LadderWellformed => "ladder_wellformed",
            CheckId::Xi0 => "xi0",
            CheckId::W0Table => "w0_table",
            CheckId::W0Formula => "w0_formula",
            CheckId::W0Unique => "w0_unique",
            CheckId::SameLine => "same_line",
            CheckId::Period => "period",
            CheckId::CountAndDisjoint => "count_and_disjoint",
            CheckId::ComplexBeta => "complex_beta",
            CheckId::InfcharCoords => "infchar_coords",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| {
            let names: Vec<&str> = CheckId::ALL.iter().map(|c| c.name()).collect();
            Error::InvalidParameter(format!("unknown check {s:?} (known: {})", names.join(", ")))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub record: String,
    pub status: Status,
    pub evidence: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub strategy: Strategy,
    pub rungs: usize,
    pub budget: u128,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { strategy: Strategy::Reduced, rungs: DEFAULT_RUNGS, budget: DEFAULT_BUDGET, jobs: None }
    }
}

pub(crate) enum Outcome {
    Pass(String),
    Fail(String),
    Skip(String),
}

/// Runs one check on one record.
pub fn run_check(check: CheckId, record: &RealFormRecord, config: &VerifyConfig) -> CheckReport {
    let start = Instant::now();
    let outcome = checks::run(check, record, config).unwrap_or_else(|e| match e {
        Error::BudgetExceeded { order, budget } => {
            Outcome::Skip(format!("budget: {order} candidates exceed {budget}"))
        }
        other => Outcome::Fail(format!("error: {other}")),
    });
    let (status, evidence) = match outcome {
        Outcome::Pass(e) => (Status::Pass, e),
        Outcome::Fail(e) => (Status::Fail, e),
        Outcome::Skip(e) => (Status::Skipped, e),
    };
    CheckReport {
        check: check.name().into(),
        record: record.name.clone(),
        status,
        evidence,
        duration_ms: Some(start.elapsed().as_millis() as u64),
    }
}

/// Every requested check on every record, ordered by record and then by check.
pub fn run_all(records: &[RealFormRecord], checks: &[CheckId], config: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let mut order: Vec<CheckId> = checks.to_vec();
    order.sort();
    order.dedup();
    let tasks: Vec<(&RealFormRecord, CheckId)> =
        records.iter().flat_map(|r| order.iter().map(move |&c| (r, c))).collect();
    let go = || tasks.par_iter().map(|&(r, c)| run_check(c, r, config)).collect::<Vec<_>>();
    match config.jobs {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
            Ok(pool.install(go))
        }
        None => Ok(go()),
    }
}

pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.status != Status::Fail)
}

#[cfg(test)]
mod tests;
