//! Exact machinery for checking the K-type ladder data of minimal
//! representations: root systems, Weyl groups, a registry of real forms and a
//! suite of named checks.

pub mod error;
pub mod linalg;
pub mod rational;
pub mod registry;
pub mod verify;
pub mod rootsys;
pub mod tables;
pub mod weyl;

pub use error::{Error, Result};
pub use linalg::{Matrix, Vector};
pub use rational::{q, Rational};
pub use registry::{instantiate_family, MinimalModule, RealFormRecord, Registry};
pub use rootsys::{
    make_root_system, CartanType, Dominance, FactorRoot, KSpace, Normalization, RootSystem, Weight,
};
pub use weyl::{
    apply, as_element, equal_elements, line_preservers, longest_element, orthogonal_subsystem,
    subgroup_longest, LinePreservers, Strategy, Subsystem, WeylElement, WeylWord,
};
pub use tables::{build_table, Table, TableId};
pub use verify::{run_all, run_check, CheckId, CheckReport, Status, VerifyConfig};
