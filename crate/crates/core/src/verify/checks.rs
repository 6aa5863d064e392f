use super::disjoint::{pair_certificate, sweep, PairVerdict};
use super::{CheckId, Outcome, VerifyConfig};
use crate::error::Result;
use crate::rational::{q, Rational};
use crate::registry::RealFormRecord;
use crate::rootsys::{cached_root_system, KSpace, Weight};
use crate::weyl::{
    apply, as_element, equal_elements, line_preservers, space_longest_element, space_orthogonal_subsystems,
    space_subgroup_longest, WeylWord,
};

pub(super) fn run(check: CheckId, r: &RealFormRecord, cfg: &VerifyConfig) -> Result<Outcome> {
    match check {
        CheckId::Rho => rho(r),
        CheckId::PDimension => p_dimension(r),
        CheckId::LadderWellformed => ladder_wellformed(r),
        CheckId::Xi0 => xi0(r),
        CheckId::W0Table => w0_table(r),
        CheckId::W0Formula => w0_formula(r),
        CheckId::W0Unique => w0_unique(r, cfg),
        CheckId::SameLine => same_line(r),
        CheckId::Period => period(r),
        CheckId::CountAndDisjoint => count_and_disjoint(r, cfg),
        CheckId::ComplexBeta => complex_beta(r),
        CheckId::InfcharCoords => infchar_coords(r),
    }
}

fn skip(reason: &str) -> Result<Outcome> {
    Ok(Outcome::Skip(reason.into()))
}

fn verdict(ok: bool, evidence: String) -> Result<Outcome> {
    Ok(if ok { Outcome::Pass(evidence) } else { Outcome::Fail(evidence) })
}

/// Semisimple part projected onto the root span of each factor.
fn canon(space: &KSpace, w: &Weight) -> Weight {
    space.trace_free_canonical(&w.ss_part())
}

fn same(space: &KSpace, a: &Weight, b: &Weight) -> bool {
    canon(space, a) == canon(space, b)
}

/// `c` with `canon(a) = c·canon(b)`.
fn multiple(space: &KSpace, a: &Weight, b: &Weight) -> Option<Rational> {
    canon(space, a).multiple_of(&canon(space, b))
}

/// Data shared by the checks that need `ξ₀` and `w₀`.
struct LineData<'a> {
    space: &'a KSpace,
    beta: &'a Weight,
    xi0: &'a Weight,
    w0: &'a WeylWord,
}

fn line_data(r: &RealFormRecord) -> std::result::Result<LineData<'_>, &'static str> {
    if r.hermitian {
        return Err("Hermitian: no xi0/w0 data");
    }
    let first = r.modules.first().ok_or("no minimal modules")?;
    let xi0 = r.xi0_table.as_ref().ok_or("no xi0 in record")?;
    let w0 = r.w0_word.as_ref().ok_or("no w0 in record")?;
    Ok(LineData { space: &r.k_space, beta: &first.beta, xi0, w0 })
}

fn rho(r: &RealFormRecord) -> Result<Outcome> {
    let Some(table) = &r.rho_table else { return skip("no tabulated rho") };
    let computed = r.k_space.rho();
    verdict(same(&r.k_space, &computed, table), format!("computed {computed}, table {}", table.ss_part()))
}

fn p_dimension(r: &RealFormRecord) -> Result<Outcome> {
    if r.p_summands.is_empty() {
        return skip("p = 0");
    }
    let mut dims = Vec::new();
    for s in &r.p_summands {
        dims.push(r.k_space.weyl_dim(&s.weight.ss_part())?);
    }
    let total: u128 = dims.iter().sum();
    let (g, k) = (r.g_dim(), r.k_space.algebra_dim());
    let parts = dims.iter().map(u128::to_string).collect::<Vec<_>>().join("+");
    verdict(
        g >= k && total == (g - k) as u128,
        format!("dim p = {parts} = {total}; dim g - dim k = {g} - {k} = {}", g as i64 - k as i64),
    )
}

fn ladder_wellformed(r: &RealFormRecord) -> Result<Outcome> {
    if r.modules.is_empty() {
        return skip("no minimal modules");
    }
    let mut notes = Vec::new();
    let mut ok = true;
    for m in &r.modules {
        let mu = r.k_space.is_dominant_integral(&m.mu0)?;
        let b = r.k_space.is_dominant_integral(&m.beta)?;
        let nonzero = !m.beta.is_ss_zero();
        ok &= mu.dominant_integral() && b.dominant_integral() && nonzero;
        notes.push(format!(
            "{}: mu0 {}, beta {}{}",
            m.label,
            if mu.dominant_integral() { "dominant integral" } else { "NOT dominant integral" },
            if b.dominant_integral() { "dominant integral" } else { "NOT dominant integral" },
            if nonzero { "" } else { ", beta_ss = 0" },
        ));
    }
    verdict(ok, notes.join("; "))
}

fn xi0(r: &RealFormRecord) -> Result<Outcome> {
    let d = match line_data(r) {
        Ok(d) => d,
        Err(why) => return skip(why),
    };
    let rho = d.space.rho();
    let mut notes = Vec::new();
    let mut ok = true;
    for m in &r.modules {
        let diff = m.mu0.add(&rho).sub(d.xi0);
        match multiple(d.space, &diff, &m.beta) {
            Some(c) => notes.push(format!("{}: mu0+rho-xi0 = {c}*beta", m.label)),
            None => {
                ok = false;
                notes.push(format!("{}: mu0+rho-xi0 = {} is not a multiple of beta", m.label, canon(d.space, &diff)));
            }
        }
        for (i, (x, b)) in canon(d.space, d.xi0).factors.iter().zip(&m.beta.factors).enumerate() {
            let p = x.dot(b);
            if !p.is_zero() {
                ok = false;
                notes.push(format!("factor {i}: (xi0, beta) = {p}"));
            }
        }
    }
    if ok {
        notes.push("xi0 orthogonal to beta in every factor".into());
    }
    verdict(ok, notes.join("; "))
}

fn w0_table(r: &RealFormRecord) -> Result<Outcome> {
    let d = match line_data(r) {
        Ok(d) => d,
        Err(why) => return skip(why),
    };
    let wb = apply(d.space, d.w0, &d.beta.ss_part())?;
    let wx = apply(d.space, d.w0, &d.xi0.ss_part())?;
    let beta_ok = same(d.space, &wb, &d.beta.neg());
    let xi_ok = same(d.space, &wx, d.xi0);
    verdict(beta_ok && xi_ok, format!("w0(beta) = {}, w0(xi0) = {}", canon(d.space, &wb), canon(d.space, &wx)))
}

fn w0_formula(r: &RealFormRecord) -> Result<Outcome> {
    let d = match line_data(r) {
        Ok(d) => d,
        Err(why) => return skip(why),
    };
    let w_l = space_longest_element(d.space);
    let w_bl = space_subgroup_longest(d.space, d.beta)?;
    let lhs = as_element(d.space, d.w0)?;
    let rhs = as_element(d.space, &w_l.then(&w_bl))?;
    let types: Vec<String> =
        space_orthogonal_subsystems(d.space, d.beta)?.iter().map(|s| s.type_label()).collect();
    verdict(
        equal_elements(&lhs, &rhs),
        format!(
            "w0 {} w_l*w_beta,l (W_beta of type {}; lengths {}+{})",
            if equal_elements(&lhs, &rhs) { "=" } else { "!=" },
            types.join(" x "),
            w_l.len(),
            w_bl.len()
        ),
    )
}

fn w0_unique(r: &RealFormRecord, cfg: &VerifyConfig) -> Result<Outcome> {
    let d = match line_data(r) {
        Ok(d) => d,
        Err(why) => return skip(why),
    };
    let found = line_preservers(d.space, d.beta, d.xi0, cfg.strategy, cfg.budget)?;
    let w0 = as_element(d.space, d.w0)?;
    let has_id = found.elements.iter().any(|p| p.element.is_identity());
    let has_w0 = found.contains(&w0);
    let ok = found.elements.len() == 2 && has_id && has_w0 && !w0.is_identity();
    let listed: Vec<String> = found.elements.iter().map(|p| p.word.to_string()).collect();
    verdict(
        ok,
        format!(
            "{} of {} candidates ({}) preserve the line: {}",
            found.elements.len(),
            found.candidates,
            cfg.strategy,
            if ok { "{1, w0}".to_string() } else { format!("[{}]", listed.join(", ")) }
        ),
    )
}

fn same_line(r: &RealFormRecord) -> Result<Outcome> {
    if r.hermitian {
        return skip("Hermitian: proposition assumes non-Hermitian");
    }
    let d = match line_data(r) {
        Ok(d) => d,
        Err(why) => return skip(why),
    };
    let rho = d.space.rho();
    let mut notes = Vec::new();
    let mut ok = true;
    for m in &r.modules {
        let v = m.mu0.add(&rho).ss_part();
        let wv = apply(d.space, d.w0, &v)?;
        match multiple(d.space, &wv.sub(&v), &m.beta) {
            Some(c) => notes.push(format!("{}: w0(mu0+rho) = mu0+rho + ({c})*beta", m.label)),
            None => {
                ok = false;
                notes.push(format!("{}: w0(mu0+rho) = {} leaves the line", m.label, canon(d.space, &wv)));
            }
        }
    }
    verdict(ok, notes.join("; "))
}

fn expected_period(r: &RealFormRecord) -> Rational {
    match r.family.as_deref() {
        Some("sp_R") | Some("sp_C") => q(1, 2),
        _ => Rational::one(),
    }
}

fn period(r: &RealFormRecord) -> Result<Outcome> {
    if r.modules.is_empty() {
        return skip("no minimal modules");
    }
    let expected = expected_period(r);
    let mut ok = true;
    let mut periods = Vec::new();
    for m in &r.modules {
        let t = r.k_space.lattice_period(&m.beta)?;
        ok &= t == expected;
        periods.push(t.to_string());
    }
    periods.dedup();
    verdict(ok, format!("lattice period {} (expected {expected})", periods.join(", ")))
}

fn count_and_disjoint(r: &RealFormRecord, cfg: &VerifyConfig) -> Result<Outcome> {
    let n = r.modules.len();
    if n != r.expected_count {
        return verdict(false, format!("{n} modules, expected {}", r.expected_count));
    }
    if n == 0 {
        let why = r.nonexistence.map_or("no reason recorded".to_string(), |x| x.to_string());
        return verdict(r.nonexistence.is_some(), format!("0 modules ({why})"));
    }
    let mut notes = Vec::new();
    let mut ok = true;
    for i in 0..n {
        for j in i + 1..n {
            match pair_certificate(&r.k_space, &r.modules[i], &r.modules[j]) {
                PairVerdict::Disjoint(why) => notes.push(format!("#{i}/#{j}: {why}")),
                PairVerdict::Collide(a, b) => {
                    ok = false;
                    notes.push(format!("#{i} rung {a} = #{j} rung {b}"));
                }
            }
        }
    }
    if let Some((i, a, j, b)) = sweep(&r.k_space, &r.modules, cfg.rungs) {
        ok = false;
        notes.push(format!("sweep: #{i} rung {a} = #{j} rung {b}"));
    } else {
        notes.push(format!("no coincidence in rungs 0..={}", cfg.rungs));
    }
    verdict(ok, format!("{n} modules; {}", notes.join("; ")))
}

fn complex_beta(r: &RealFormRecord) -> Result<Outcome> {
    if !r.is_complex() {
        return skip("g is not complex");
    }
    if r.modules.is_empty() {
        return verdict(false, "complex algebra without modules".into());
    }
    let theta = r.k_space.factor(0).highest_root();
    let all_theta = r
        .modules
        .iter()
        .all(|m| r.k_space.num_factors() == 1 && Some(&m.beta.factors[0]) == theta.as_ref());
    let trivial = r.modules.iter().any(|m| m.mu0.is_zero());
    verdict(
        all_theta && trivial,
        format!(
            "beta {} highest root {}; {} module with mu0 = 0",
            if all_theta { "=" } else { "!=" },
            theta.map_or("-".into(), |t| t.to_string()),
            if trivial { "a" } else { "no" }
        ),
    )
}

fn infchar_coords(r: &RealFormRecord) -> Result<Outcome> {
    if r.infchar_omega.is_empty() {
        return skip("no tabulated infinitesimal character");
    }
    if r.infchar_omega.len() != r.g_complex.len() {
        return verdict(false, format!("{} entries for {} components", r.infchar_omega.len(), r.g_complex.len()));
    }
    let mut notes = Vec::new();
    let mut ok = true;
    for (ty, coeffs) in r.g_complex.iter().zip(&r.infchar_omega) {
        let rs = cached_root_system(*ty)?;
        if coeffs.len() != rs.rank() {
            ok = false;
            notes.push(format!("{ty}: {} coefficients for rank {}", coeffs.len(), rs.rank()));
            continue;
        }
        let v = rs.omega_to_coords(coeffs)?;
        let back = rs.simple_pairings(&v);
        let tabulated = crate::registry::infchar_coefficients(*ty);
        let matches = !matches!(&tabulated, Some(t) if t != coeffs);
        ok &= &back == coeffs && matches;
        notes.push(format!(
            "{ty}: lambda = {v}{}",
            if matches { "" } else { " (differs from the standard entry)" }
        ));
    }
    verdict(ok, notes.join("; "))
}
