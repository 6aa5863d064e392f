//! Fixed records: exceptional real forms, complex exceptional algebras and
//! compact forms.

use std::collections::BTreeMap;

use super::notation::{parse_weight, parse_word};
use super::{DataCells, MinimalModule, NonexistenceReason, NullSide, PSummand, RealFormRecord};
use crate::linalg::Vector;
use crate::rational::{q, Rational};
use crate::rootsys::{CartanType, FactorRoot, KSpace, Weight};
use crate::weyl::WeylWord;

use CartanType::{A1Wide, A, B, C, D, E6, E7, E8, F4, G2};

/// Fundamental-weight coefficients of the infinitesimal character of the
/// minimal modules, for the simple types where it is tabulated.
pub fn infchar_coefficients(ty: CartanType) -> Option<Vec<Rational>> {
    let ones = |k: usize| vec![Rational::one(); k];
    let half = Rational::half;
    Some(match ty {
        B(n) if n >= 3 => [ones(n - 3), vec![half(), half(), Rational::one()]].concat(),
        C(n) if n >= 2 => [ones(n - 1), vec![half()]].concat(),
        D(n) if n >= 4 => [ones(n - 3), vec![Rational::zero(), Rational::one(), Rational::one()]].concat(),
        E6 | E7 | E8 => {
            let mut c = ones(ty.rank());
            c[3] = Rational::zero();
            c
        }
        F4 => vec![half(), half(), Rational::one(), Rational::one()],
        G2 => vec![Rational::one(), q(1, 3)],
        _ => return None,
    })
}

pub(crate) fn k_space(types: &[CartanType], center: usize) -> KSpace {
    KSpace::new(types, center).expect("builtin K is supported")
}

pub(crate) fn weight(cell: &str, space: &KSpace) -> Weight {
    parse_weight(cell, space).unwrap_or_else(|e| panic!("builtin cell {cell}: {e}"))
}

/// A record with no modules yet and the infinitesimal character filled from `g`.
pub(crate) fn skeleton(
    name: &str,
    display: &str,
    g: &[CartanType],
    k: KSpace,
    k_label: &str,
    p_label: &str,
    min_k_type_label: &str,
) -> RealFormRecord {
    let infchar: Option<Vec<Vec<Rational>>> = g.iter().map(|&t| infchar_coefficients(t)).collect();
    RealFormRecord {
        name: name.into(),
        display: display.into(),
        family: None,
        params: Vec::new(),
        g_complex: g.to_vec(),
        k_space: k,
        k_label: k_label.into(),
        hermitian: false,
        p_label: p_label.into(),
        p_summands: Vec::new(),
        min_k_type_label: min_k_type_label.into(),
        modules: Vec::new(),
        expected_count: 0,
        nonexistence: None,
        rho_table: None,
        xi0_table: None,
        w0_word: None,
        infchar_omega: infchar.unwrap_or_default(),
        cells: None,
        named_roots: BTreeMap::new(),
    }
}

/// Fills a non-Hermitian record with one module from its table cells.
pub(crate) fn with_cells(mut r: RealFormRecord, cells: [&str; 5]) -> RealFormRecord {
    let [rho, mu0, beta, xi0, w0] = cells;
    let s = &r.k_space;
    let beta_w = weight(beta, s);
    let module = MinimalModule {
        label: r.min_k_type_label.clone(),
        mu0: weight(mu0, s),
        beta: beta_w.clone(),
        null_side: None,
    };
    r.rho_table = Some(weight(rho, s));
    r.xi0_table = Some(weight(xi0, s));
    r.w0_word = Some(parse_word(w0, s, &r.named_roots).unwrap_or_else(|e| panic!("builtin word {w0}: {e}")));
    r.p_summands = vec![PSummand { label: r.p_label.clone(), weight: beta_w }];
    r.modules = vec![module];
    r.expected_count = 1;
    r.cells = Some(DataCells {
        rho: rho.into(),
        mu0: mu0.into(),
        beta: beta.into(),
        xi0: xi0.into(),
        w0: w0.into(),
    });
    r
}

pub(crate) fn no_modules(mut r: RealFormRecord, reason: NonexistenceReason, summands: Vec<(&str, Weight)>) -> RealFormRecord {
    r.nonexistence = Some(reason);
    r.p_summands = summands.into_iter().map(|(l, w)| PSummand { label: l.into(), weight: w }).collect();
    r
}

/// `v` minus its component along `beta`, factor by factor.
pub(crate) fn perp(v: &Weight, beta: &Weight) -> Weight {
    let factors = v
        .factors
        .iter()
        .zip(&beta.factors)
        .map(|(x, b)| if b.is_zero() { x.clone() } else { x.add_scaled(&-(x.dot(b) / b.dot(b)), b) })
        .collect();
    Weight::new(factors, v.center.clone())
}

/// `g` viewed as a real form of `g ⊕ g`, with `K` its compact form.
pub(crate) fn complex_record(
    name: &str,
    display: &str,
    ty: CartanType,
    k_label: &str,
    extra: &[(String, Weight)],
) -> RealFormRecord {
    let k = k_space(&[ty], 0);
    let theta = Weight::semisimple(vec![k.factor(0).highest_root().expect("simple type")]);
    let mut r = skeleton(name, display, &[ty, ty], k.clone(), k_label, "V(θ)", "C");
    r.p_summands = vec![PSummand { label: "V(θ)".into(), weight: theta.clone() }];
    let mut mus = vec![("C".to_string(), k.zero())];
    mus.extend(extra.iter().cloned());
    r.modules = mus
        .into_iter()
        .map(|(label, mu0)| MinimalModule { label, mu0, beta: theta.clone(), null_side: None })
        .collect();
    r.expected_count = r.modules.len();
    r.xi0_table = Some(perp(&k.rho(), &theta));
    r.w0_word = Some(WeylWord::new(&k, vec![FactorRoot::new(0, theta.factors[0].clone())]).expect("θ is a root"));
    r
}

pub(crate) fn compact_record(name: &str, display: &str, ty: CartanType, k_label: &str) -> RealFormRecord {
    let r = skeleton(name, display, &[ty], k_space(&[ty], 0), k_label, "0", "-");
    no_modules(r, NonexistenceReason::OrbitMissesP, Vec::new())
}

pub(crate) fn hermitian_module(label: &str, mu0: Weight, beta: Weight) -> MinimalModule {
    let side = if mu0.center[0].is_negative() { NullSide::PPlus } else { NullSide::PMinus };
    MinimalModule { label: label.into(), mu0, beta, null_side: Some(side) }
}

fn with_center(w: Weight, c: Rational) -> Weight {
    Weight::new(w.factors, Vector(vec![c]))
}

#[allow(clippy::too_many_arguments)]
fn hermitian_exceptional(
    name: &str,
    display: &str,
    g: CartanType,
    k: CartanType,
    k_label: &str,
    p_label: &str,
    plus: (&str, &str),
    minus: (&str, &str),
    charge: i64,
) -> RealFormRecord {
    let s = k_space(&[k], 1);
    let mut r = skeleton(name, display, &[g], s.clone(), k_label, p_label, &format!("C⊠C_±{charge}"));
    r.hermitian = true;
    let bp = with_center(weight(plus.1, &s), Rational::one());
    let bm = with_center(weight(minus.1, &s), Rational::from_int(-1));
    r.p_summands = vec![
        PSummand { label: plus.0.into(), weight: bp.clone() },
        PSummand { label: minus.0.into(), weight: bm.clone() },
    ];
    r.modules = vec![
        hermitian_module(&format!("C⊠C_{charge}"), with_center(s.zero(), Rational::from_int(charge)), bp),
        hermitian_module(&format!("C⊠C_-{charge}"), with_center(s.zero(), Rational::from_int(-charge)), bm),
    ];
    r.expected_count = 2;
    r
}

pub fn builtin_records() -> Vec<RealFormRecord> {
    let mut out = vec![with_cells(
        skeleton("g2_2", "g2(2)", &[G2], k_space(&[A1Wide, A1Wide], 0), "SU(2)_short x SU(2)_long", "S^3(C^2)⊠C^2", "S^2(C^2)⊠C"),
        ["((1,-1),(1,-1))", "((2,-2),0)", "((3,-3),(1,-1))", "0", "s(e1-e2)s(f1-f2)"],
    )];
    out.push(with_cells(
        skeleton("f4_4", "f4(4)", &[F4], k_space(&[C(3), A1Wide], 0), "Sp(3) x SU(2)", "(∧^3C^6)_0⊠C^2", "C⊠S^1(C^2)"),
        ["((3,2,1),(1,-1))", "(0,(1,-1))", "((1,1,1),(1,-1))", "((1,0,-1),0)", "s(e1+e3)s(e2)s(f1-f2)"],
    ));
    out.push(with_cells(
        skeleton("e6_2", "e6(2)", &[E6], k_space(&[A(5), A1Wide], 0), "SU(6) x SU(2)", "∧^3C^6⊠C^2", "C⊠S^2(C^2)"),
        [
            "((5/2,3/2,...,-5/2),(1,-1))",
            "(0,(2,-2))",
            "(1/2(1,1,1,-1,-1,-1),(1,-1))",
            "((1,0,-1,1,0,-1),0)",
            "s(e1-e4)s(e2-e5)s(e3-e6)s(f1-f2)",
        ],
    ));
    out.push(with_cells(
        skeleton("e7_-5", "e7(-5)", &[E7], k_space(&[D(6), A1Wide], 0), "Spin(12) x SU(2)", "V(ω6)⊠C^2", "C⊠S^4(C^2)"),
        [
            "((5,4,...,0),(1,-1))",
            "(0,(4,-4))",
            "(1/2(1,1,1,1,1,1),(1,-1))",
            "((5/2,3/2,...,-5/2),0)",
            "s(e1+e6)s(e2+e5)s(e3+e4)s(f1-f2)",
        ],
    ));
    let mut e8_24 = skeleton("e8_-24", "e8(-24)", &[E8], k_space(&[E7, A1Wide], 0), "E7 x SU(2)", "V(ω7)⊠C^2", "C⊠S^8(C^2)");
    let e8 = k_space(&[E8], 0);
    for (id, cell) in [("eta1", "1/2(1,-1,-1,1,1,-1,1,-1)"), ("eta2", "1/2(-1,1,1,-1,1,-1,1,-1)")] {
        e8_24.named_roots.insert(id.into(), weight(cell, &e8).factors[0].clone());
    }
    out.push(with_cells(
        e8_24,
        [
            "((0,1,2,3,4,5,-17/2,17/2),(1,-1))",
            "(0,(8,-8))",
            "((0,0,0,0,0,1,-1/2,1/2),(1,-1))",
            "((0,1,2,3,4,-4,-4,4),0)",
            "s(e5+e6)s(eta2)s(eta1)s(f1-f2)",
        ],
    ));
    out.push(with_cells(
        skeleton("e6_6", "e6(6)", &[E6], k_space(&[C(4)], 0), "Sp(4)", "(∧^4C^8)_0", "C"),
        ["(4,3,2,1)", "0", "(1,1,1,1)", "(3/2,1/2,-1/2,-3/2)", "s(e1+e4)s(e2+e3)"],
    ));
    out.push(with_cells(
        skeleton("e7_7", "e7(7)", &[E7], k_space(&[A(7)], 0), "SU(8)", "∧^4C^8", "C"),
        [
            "(7/2,5/2,...,-7/2)",
            "0",
            "1/2(1,1,1,1,-1,-1,-1,-1)",
            "(3/2,1/2,-1/2,-3/2,3/2,1/2,-1/2,-3/2)",
            "s(e1-e5)s(e2-e6)s(e3-e7)s(e4-e8)",
        ],
    ));
    out.push(with_cells(
        skeleton("e8_8", "e8(8)", &[E8], k_space(&[D(8)], 0), "Spin(16)", "V(ω8)", "C"),
        ["(7,6,...,1,0)", "0", "1/2(1,1,...,1)", "(7/2,5/2,...,-7/2)", "s(e1+e8)s(e2+e7)s(e3+e6)s(e4+e5)"],
    ));

    out.push(hermitian_exceptional(
        "e6_-14",
        "e6(-14)",
        E6,
        D(5),
        "Spin(10) x R",
        "V(ω5)⊠(C_1⊕C_-1)",
        ("V(ω5)⊠C_1", "1/2(1,1,1,1,1)"),
        ("V(ω5)⊠C_-1", "1/2(1,1,1,1,1)"),
        4,
    ));
    out.push(hermitian_exceptional(
        "e7_-25",
        "e7(-25)",
        E7,
        E6,
        "E6 x R",
        "V(ω1)⊠C_1⊕V(ω6)⊠C_-1",
        ("V(ω1)⊠C_1", "(0,0,0,0,0,-2/3,-2/3,2/3)"),
        ("V(ω6)⊠C_-1", "(0,0,0,0,1,-1/3,-1/3,1/3)"),
        6,
    ));

    let f4 = k_space(&[F4], 0);
    out.push(no_modules(
        skeleton("e6_-26", "e6(-26)", &[E6], f4.clone(), "F4", "V(ω4)", "-"),
        NonexistenceReason::OrbitMissesP,
        vec![("V(ω4)", weight("(1,0,0,0)", &f4))],
    ));
    let b4 = k_space(&[B(4)], 0);
    out.push(no_modules(
        skeleton("f4_-20", "f4(-20)", &[F4], b4.clone(), "Spin(9)", "V(ω4)", "-"),
        NonexistenceReason::OrbitMissesP,
        vec![("V(ω4)", weight("1/2(1,1,1,1)", &b4))],
    ));

    for (name, ty) in [("e6", E6), ("e7", E7), ("e8", E8), ("f4", F4), ("g2", G2)] {
        out.push(compact_record(name, name, ty, &ty.to_string()));
    }
    for (name, ty) in [("e6_C", E6), ("e7_C", E7), ("e8_C", E8), ("f4_C", F4), ("g2_C", G2)] {
        let display = format!("{}(C)", &name[..2]);
        out.push(complex_record(name, &display, ty, &ty.to_string(), &[]));
    }
    out
}
