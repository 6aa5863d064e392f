//! One deliberately corrupted record per check, each built so that its check fails.

use super::CheckId;
use crate::linalg::Vector;
use crate::rational::{q, Rational};
use crate::registry::{builtin_records, instantiate_family, MinimalModule, RealFormRecord};
use crate::rootsys::{FactorRoot, Weight};
use crate::weyl::WeylWord;

fn builtin(name: &str) -> RealFormRecord {
    builtin_records().into_iter().find(|r| r.name == name).expect("builtin record")
}

fn single_reflection(r: &RealFormRecord) -> WeylWord {
    WeylWord::new(&r.k_space, vec![FactorRoot::new(0, Vector::from_ints(&[1, 0, 0, 1]))]).expect("root of C4")
}

/// A copy of a passing record with one field corrupted so that `check` fails.
pub fn mutated(check: CheckId) -> RealFormRecord {
    let mut r = match check {
        CheckId::Period | CheckId::CountAndDisjoint => instantiate_family("sp_R", &[2]).expect("sp(2,R)"),
        CheckId::ComplexBeta => builtin("e6_C"),
        CheckId::InfcharCoords => builtin("g2_2"),
        _ => builtin("e6_6"),
    };
    match check {
        CheckId::Rho => r.rho_table = Some(Weight::semisimple(vec![Vector::from_ints(&[4, 3, 2, 0])])),
        CheckId::PDimension => r.p_summands[0].weight = Weight::semisimple(vec![Vector::from_ints(&[1, 1, 0, 0])]),
        CheckId::LadderWellformed => r.modules[0].mu0 = Weight::semisimple(vec![Vector::from_ints(&[0, 0, 0, -1])]),
        CheckId::Xi0 => {
            r.xi0_table = Some(Weight::semisimple(vec![Vector(vec![q(3, 2), q(1, 2), q(-1, 2), q(-1, 2)])]))
        }
        CheckId::W0Table | CheckId::W0Formula | CheckId::W0Unique | CheckId::SameLine => {
            r.w0_word = Some(single_reflection(&r))
        }
        CheckId::Period => r.family = None,
        CheckId::CountAndDisjoint => {
            let dup = r.modules[0].clone();
            r.modules[2] = shifted(&dup, 3);
        }
        CheckId::ComplexBeta => {
            let m = &mut r.modules[0];
            m.beta = m.beta.scale(&Rational::from_int(2));
        }
        CheckId::InfcharCoords => r.infchar_omega = vec![vec![Rational::one()]],
    }
    r.name = format!("{}~{}", r.name, check.name());
    r
}

/// The module whose ladder starts `k` rungs into `m`'s.
fn shifted(m: &MinimalModule, k: i64) -> MinimalModule {
    let mut out = m.clone();
    out.mu0 = m.mu0.add_scaled(&Rational::from_int(k), &m.beta);
    out.label = format!("{} shifted by {k}", m.label);
    out
}
