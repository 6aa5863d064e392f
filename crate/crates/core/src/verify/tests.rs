use super::fixtures::mutated;
use super::*;
use crate::registry::{instantiate_family, Registry};

fn report(check: CheckId, name: &str) -> CheckReport {
    let reg = Registry::builtin();
    run_check(check, reg.get(name).unwrap(), &VerifyConfig::default())
}

#[test]
fn check_names_round_trip() {
    for c in CheckId::ALL {
        assert_eq!(c.name().parse::<CheckId>().unwrap(), c);
    }
    assert!("w0".parse::<CheckId>().is_err());
}

#[test]
fn g2_2_all_checks() {
    let reg = Registry::builtin();
    let reports = run_all(&[reg.get("g2_2").unwrap().clone()], &CheckId::ALL, &VerifyConfig::default()).unwrap();
    assert_eq!(reports.len(), 12);
    for r in &reports {
        let expected = if r.check == "complex_beta" { Status::Skipped } else { Status::Pass };
        assert_eq!(r.status, expected, "{r:?}");
    }
}

#[test]
fn e8_minus_24_evidence() {
    let xi = report(CheckId::Xi0, "e8_-24");
    assert_eq!(xi.status, Status::Pass);
    assert!(xi.evidence.contains("= 9*beta"), "{}", xi.evidence);
    let line = report(CheckId::SameLine, "e8_-24");
    assert!(line.evidence.contains("(-18)*beta"), "{}", line.evidence);
    let f = report(CheckId::W0Formula, "e8_-24");
    assert_eq!(f.status, Status::Pass, "{}", f.evidence);
    assert!(f.evidence.contains("E6"), "{}", f.evidence);
}

#[test]
fn p_dimensions() {
    for (name, text) in [("e8_8", "128; dim g - dim k = 248 - 120"), ("f4_4", "= 28;"), ("e6_2", "= 40;"), ("g2_2", "= 8;")] {
        let r = report(CheckId::PDimension, name);
        assert_eq!(r.status, Status::Pass);
        assert!(r.evidence.contains(text), "{name}: {}", r.evidence);
    }
}

#[test]
fn hermitian_skips_same_line() {
    let r = report(CheckId::SameLine, "e7_-25");
    assert_eq!(r.status, Status::Skipped);
    assert_eq!(r.evidence, "Hermitian: proposition assumes non-Hermitian");
}

#[test]
fn periods() {
    let cfg = VerifyConfig::default();
    let half = run_check(CheckId::Period, &instantiate_family("sp_R", &[3]).unwrap(), &cfg);
    assert!(half.status == Status::Pass && half.evidence.starts_with("lattice period 1/2"), "{half:?}");
    let one = run_check(CheckId::Period, &instantiate_family("so_star", &[5]).unwrap(), &cfg);
    assert!(one.status == Status::Pass && one.evidence.starts_with("lattice period 1 "), "{one:?}");
}

#[test]
fn budget_skips() {
    let cfg = VerifyConfig { strategy: crate::Strategy::Brute, budget: 100, ..VerifyConfig::default() };
    let reg = Registry::builtin();
    let r = run_check(CheckId::W0Unique, reg.get("e6_6").unwrap(), &cfg);
    assert_eq!(r.status, Status::Skipped);
    assert!(r.evidence.starts_with("budget"), "{}", r.evidence);
}

#[test]
fn every_check_fails_on_its_fixture() {
    let cfg = VerifyConfig::default();
    for c in CheckId::ALL {
        let r = run_check(c, &mutated(c), &cfg);
        assert_eq!(r.status, Status::Fail, "{c}: {}", r.evidence);
    }
}

#[test]
fn fixtures_pass_other_untouched_checks() {
    // The base records themselves pass.
    let cfg = VerifyConfig::default();
    let reg = Registry::builtin();
    for name in ["e6_6", "e6_C", "sp_R(2)"] {
        let reports = run_all(&[reg.get(name).unwrap().clone()], &CheckId::ALL, &cfg).unwrap();
        assert!(all_passed(&reports), "{reports:?}");
    }
}

#[test]
fn ordering_and_jobs() {
    let reg = Registry::builtin();
    let recs: Vec<_> = ["e6_6", "g2_2"].iter().map(|n| reg.get(n).unwrap().clone()).collect();
    let cfg = VerifyConfig { jobs: Some(2), ..VerifyConfig::default() };
    let reports = run_all(&recs, &[CheckId::Rho, CheckId::Xi0], &cfg).unwrap();
    let order: Vec<_> = reports.iter().map(|r| (r.record.as_str(), r.check.as_str())).collect();
    assert_eq!(order, vec![("e6_6", "rho"), ("e6_6", "xi0"), ("g2_2", "rho"), ("g2_2", "xi0")]);
}
