//! Parametrized families of real forms.

use super::builtins::{complex_record, compact_record, hermitian_module, k_space, no_modules, skeleton};
use super::notation::{format_weight, format_word};
use super::{DataCells, NonexistenceReason, PSummand, RealFormRecord};
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::rational::{q, Rational};
use crate::rootsys::{CartanType, FactorRoot, Weight};
use crate::weyl::WeylWord;

use CartanType::{A1Wide, A, B, C, D};

pub struct FamilySpec {
    pub id: &'static str,
    /// Display pattern, e.g. `so(2n,2m)`.
    pub display: &'static str,
    pub params: &'static [&'static str],
    /// Human-readable parameter constraint.
    pub constraint: &'static str,
    pub defaults: &'static [&'static [i64]],
    /// Symbolic ladder-data cells `[rho, mu0, beta, xi0, w0]`.
    pub pattern: Option<[&'static str; 5]>,
}

pub const FAMILIES: &[FamilySpec] = &[
    FamilySpec {
        id: "so_even_even",
        display: "so(2n,2m)",
        params: &["n", "m"],
        constraint: "n>=m>=2",
        defaults: &[&[2, 2], &[3, 2], &[4, 3]],
        pattern: Some([
            "((n-1,n-2,...,0),(m-1,m-2,...,0))",
            "(0,(n-m,0,...,0))",
            "((1,0,...,0),(1,0,...,0))",
            "((0,n-2,n-3,...,0),(0,m-2,m-3,...,0))",
            "s(e1+en)s(e1-en)s(f1+fm)s(f1-fm)",
        ]),
    },
    FamilySpec {
        id: "so_odd_odd",
        display: "so(2n+1,2m+1)",
        params: &["n", "m"],
        constraint: "n>=m>=1, n+m>=3",
        defaults: &[&[2, 1], &[3, 2]],
        pattern: Some([
            "((n-1/2,n-3/2,...,1/2),(m-1/2,m-3/2,...,1/2))",
            "(0,(n-m,0,...,0))",
            "((1,0,...,0),(1,0,...,0))",
            "((0,n-3/2,n-5/2,...,1/2),(0,m-3/2,m-5/2,...,1/2))",
            "s(e1)s(f1)",
        ]),
    },
    FamilySpec {
        id: "so_2n_3",
        display: "so(2n,3)",
        params: &["n"],
        constraint: "n>=2",
        defaults: &[&[2], &[4]],
        pattern: Some([
            "((n-1,n-2,...,0),(1,-1))",
            "(0,(2n-3,-2n+3))",
            "((1,0,...,0),(2,-2))",
            "((0,n-2,...,0),0)",
            "s(e1+en)s(e1-en)s(f1-f2)",
        ]),
    },
    FamilySpec {
        id: "so_p_2",
        display: "so(p,2)",
        params: &["p"],
        constraint: "p>=5",
        defaults: &[&[5], &[7]],
        pattern: None,
    },
    FamilySpec {
        id: "sp_R",
        display: "sp(n,R)",
        params: &["n"],
        constraint: "n>=2",
        defaults: &[&[2], &[3], &[5]],
        pattern: None,
    },
    FamilySpec {
        id: "so_star",
        display: "so*(2n)",
        params: &["n"],
        constraint: "n>=4",
        defaults: &[&[4], &[5]],
        pattern: None,
    },
    FamilySpec {
        id: "sp_C",
        display: "sp(n,C)",
        params: &["n"],
        constraint: "n>=2",
        defaults: &[&[2], &[3]],
        pattern: None,
    },
    FamilySpec {
        id: "so_C",
        display: "so(n,C)",
        params: &["n"],
        constraint: "n>=7",
        defaults: &[&[7], &[8]],
        pattern: None,
    },
    FamilySpec {
        id: "so_n_1",
        display: "so(n,1)",
        params: &["n"],
        constraint: "n>=6",
        defaults: &[&[6], &[7]],
        pattern: None,
    },
    FamilySpec {
        id: "sp_p_q",
        display: "sp(p,q)",
        params: &["p", "q"],
        constraint: "p,q>=1",
        defaults: &[&[1, 1], &[2, 1]],
        pattern: None,
    },
    FamilySpec {
        id: "so_odd_sum",
        display: "so(p,q)",
        params: &["p", "q"],
        constraint: "p,q>=4, p+q odd",
        defaults: &[&[4, 5], &[6, 5]],
        pattern: None,
    },
    FamilySpec {
        id: "sp_compact",
        display: "sp(n)",
        params: &["n"],
        constraint: "n>=2",
        defaults: &[&[2], &[3]],
        pattern: None,
    },
    FamilySpec {
        id: "so_compact",
        display: "so(n)",
        params: &["n"],
        constraint: "n>=7",
        defaults: &[&[7], &[8]],
        pattern: None,
    },
];

pub fn family_spec(id: &str) -> Option<&'static FamilySpec> {
    FAMILIES.iter().find(|f| f.id == id)
}

/// Every default instance of every family, in declaration order.
pub fn default_instances() -> Vec<RealFormRecord> {
    FAMILIES
        .iter()
        .flat_map(|f| f.defaults.iter().map(move |p| instantiate_family(f.id, p).expect("default parameters are valid")))
        .collect()
}

/// Type of `Spin(k)`.
fn spin(k: usize) -> CartanType {
    if k % 2 == 1 {
        B(k / 2)
    } else {
        D(k / 2)
    }
}

fn int(x: i64) -> Rational {
    Rational::from_int(x)
}

/// `(start, start-1, ..., start-len+1)`.
fn descending(start: Rational, len: usize) -> Vector {
    Vector((0..len).map(|i| &start - int(i as i64)).collect())
}

fn first_zeroed(v: &Vector) -> Vector {
    let mut v = v.clone();
    v.0[0] = Rational::zero();
    v
}

fn e1(dim: usize, c: i64) -> Vector {
    Vector::unit(dim, 0).scale(&int(c))
}

fn fill_cells(mut r: RealFormRecord) -> RealFormRecord {
    let m = &r.modules[0];
    r.cells = Some(DataCells {
        rho: format_weight(r.rho_table.as_ref().unwrap()),
        mu0: format_weight(&m.mu0),
        beta: format_weight(&m.beta),
        xi0: format_weight(r.xi0_table.as_ref().unwrap()),
        w0: format_word(r.w0_word.as_ref().unwrap()),
    });
    r
}

fn ladder(mut r: RealFormRecord, rho: Weight, mu0: Weight, beta: Weight, xi0: Weight, w0: Vec<FactorRoot>) -> RealFormRecord {
    r.rho_table = Some(rho);
    r.xi0_table = Some(xi0);
    r.w0_word = Some(WeylWord::new(&r.k_space, w0).expect("family word letters are roots"));
    r.p_summands = vec![PSummand { label: r.p_label.clone(), weight: beta.clone() }];
    r.modules = vec![super::MinimalModule { label: r.min_k_type_label.clone(), mu0, beta, null_side: None }];
    r.expected_count = 1;
    fill_cells(r)
}

fn root(factor: usize, dim: usize, terms: &[(usize, i64)]) -> FactorRoot {
    let mut v = Vector::zeros(dim);
    for &(i, c) in terms {
        v.0[i] = int(c);
    }
    FactorRoot::new(factor, v)
}

fn bad(id: &str, params: &[i64]) -> Error {
    let spec = family_spec(id).expect("known family");
    Error::InvalidParameter(format!(
        "{id}{params:?}: expected {} parameter(s) ({}) with {}",
        spec.params.len(),
        spec.params.join(","),
        spec.constraint
    ))
}

/// Builds the record of one member of a family.
pub fn instantiate_family(id: &str, params: &[i64]) -> Result<RealFormRecord> {
    let spec = family_spec(id).ok_or_else(|| {
        let known: Vec<&str> = FAMILIES.iter().map(|f| f.id).collect();
        Error::InvalidParameter(format!("unknown family {id:?} (known: {})", known.join(", ")))
    })?;
    if params.len() != spec.params.len() {
        return Err(bad(id, params));
    }
    let ok = match (id, params) {
        ("so_even_even", &[n, m]) => n >= m && m >= 2,
        ("so_odd_odd", &[n, m]) => n >= m && m >= 1 && n + m >= 3,
        ("so_2n_3", &[n]) => n >= 2,
        ("so_p_2", &[p]) => p >= 5,
        ("sp_R", &[n]) | ("sp_C", &[n]) | ("sp_compact", &[n]) => n >= 2,
        ("so_star", &[n]) => n >= 4,
        ("so_C", &[n]) | ("so_compact", &[n]) => n >= 7,
        ("so_n_1", &[n]) => n >= 6,
        ("sp_p_q", &[p, q]) => p >= 1 && q >= 1,
        ("so_odd_sum", &[p, q]) => p >= 4 && q >= 4 && (p + q) % 2 == 1,
        _ => false,
    };
    // Keep every factor within the supported classical ranks.
    if !ok || params.iter().any(|&x| x > 40) {
        return Err(bad(id, params));
    }
    let name = format!(
        "{id}({})",
        params.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
    );
    let u = |x: i64| x as usize;
    let mut r = match (id, params) {
        ("so_even_even", &[n, m]) => {
            let (nu, mu) = (u(n), u(m));
            let s = k_space(&[D(nu), D(mu)], 0);
            let r = skeleton(
                &name,
                &format!("so({},{})", 2 * n, 2 * m),
                &[D(nu + mu)],
                s.clone(),
                &format!("Spin({}) x Spin({})", 2 * n, 2 * m),
                &format!("C^{}⊠C^{}", 2 * n, 2 * m),
                &format!("C⊠S^{}(C^{})", n - m, 2 * m),
            );
            let rho = s.rho();
            let xi0 = Weight::semisimple(rho.factors.iter().map(first_zeroed).collect());
            ladder(
                r,
                rho,
                Weight::semisimple(vec![Vector::zeros(nu), e1(mu, n - m)]),
                Weight::semisimple(vec![e1(nu, 1), e1(mu, 1)]),
                xi0,
                vec![
                    root(0, nu, &[(0, 1), (nu - 1, 1)]),
                    root(0, nu, &[(0, 1), (nu - 1, -1)]),
                    root(1, mu, &[(0, 1), (mu - 1, 1)]),
                    root(1, mu, &[(0, 1), (mu - 1, -1)]),
                ],
            )
        }
        ("so_odd_odd", &[n, m]) => {
            let (nu, mu) = (u(n), u(m));
            let s = k_space(&[B(nu), B(mu)], 0);
            let r = skeleton(
                &name,
                &format!("so({},{})", 2 * n + 1, 2 * m + 1),
                &[D(nu + mu + 1)],
                s.clone(),
                &format!("Spin({}) x Spin({})", 2 * n + 1, 2 * m + 1),
                &format!("C^{}⊠C^{}", 2 * n + 1, 2 * m + 1),
                &format!("C⊠S^{}(C^{})", n - m, 2 * m + 1),
            );
            let rho = s.rho();
            let xi0 = Weight::semisimple(rho.factors.iter().map(first_zeroed).collect());
            ladder(
                r,
                rho,
                Weight::semisimple(vec![Vector::zeros(nu), e1(mu, n - m)]),
                Weight::semisimple(vec![e1(nu, 1), e1(mu, 1)]),
                xi0,
                vec![root(0, nu, &[(0, 1)]), root(1, mu, &[(0, 1)])],
            )
        }
        ("so_2n_3", &[n]) => {
            let nu = u(n);
            let s = k_space(&[D(nu), A1Wide], 0);
            let r = skeleton(
                &name,
                &format!("so({},3)", 2 * n),
                &[B(nu + 1)],
                s.clone(),
                &format!("Spin({}) x SU(2)", 2 * n),
                &format!("C^{}⊠S^2(C^2)", 2 * n),
                &format!("C⊠S^{}(C^2)", 2 * n - 3),
            );
            ladder(
                r,
                s.rho(),
                Weight::semisimple(vec![Vector::zeros(nu), Vector::from_ints(&[2 * n - 3, 3 - 2 * n])]),
                Weight::semisimple(vec![e1(nu, 1), Vector::from_ints(&[2, -2])]),
                Weight::semisimple(vec![first_zeroed(&descending(int(n - 1), nu)), Vector::zeros(2)]),
                vec![
                    root(0, nu, &[(0, 1), (nu - 1, 1)]),
                    root(0, nu, &[(0, 1), (nu - 1, -1)]),
                    root(1, 2, &[(0, 1), (1, -1)]),
                ],
            )
        }
        ("so_p_2", &[p]) => {
            let pu = u(p);
            let s = k_space(&[spin(pu)], 1);
            let d = s.factor(0).dim();
            let mut r = skeleton(
                &name,
                &format!("so({p},2)"),
                &[spin(pu + 2)],
                s.clone(),
                &format!("Spin({p}) x R"),
                &format!("C^{p}⊠(C_1⊕C_-1)"),
                &format!("C⊠C_±{}", q(p - 2, 2)),
            );
            let charge = q(p - 2, 2);
            let bp = Weight::new(vec![e1(d, 1)], Vector(vec![int(1)]));
            let bm = Weight::new(vec![e1(d, 1)], Vector(vec![int(-1)]));
            r.hermitian = true;
            r.p_summands = vec![
                PSummand { label: format!("C^{p}⊠C_1"), weight: bp.clone() },
                PSummand { label: format!("C^{p}⊠C_-1"), weight: bm.clone() },
            ];
            r.modules = vec![
                hermitian_module(&format!("C⊠C_{charge}"), Weight::new(vec![Vector::zeros(d)], Vector(vec![charge.clone()])), bp),
                hermitian_module(&format!("C⊠C_{}", -&charge), Weight::new(vec![Vector::zeros(d)], Vector(vec![-&charge])), bm),
            ];
            r.expected_count = 2;
            r
        }
        ("sp_R", &[n]) => {
            let nu = u(n);
            let s = k_space(&[A(nu - 1)], 1);
            let mut r = skeleton(
                &name,
                &format!("sp({n},R)"),
                &[C(nu)],
                s.clone(),
                &format!("SU({n}) x R"),
                &format!("S^2(C^{n})⊠C_1⊕S^2(∧^{}C^{n})⊠C_-1", n - 1),
                &format!("C⊠C_±{}, C^{n}⊠C_{}, ∧^{}C^{n}⊠C_{}", q(n, 4), q(n + 2, 4), n - 1, q(-(n + 2), 4)),
            );
            let top = Vector((0..nu).map(|i| int(i64::from(i + 1 < nu))).collect());
            let w = |v: Vector, c: Rational| Weight::new(vec![v], Vector(vec![c]));
            let bp = w(e1(nu, 2), int(1));
            let bm = w(top.scale(&int(2)), int(-1));
            r.hermitian = true;
            r.p_summands = vec![
                PSummand { label: format!("S^2(C^{n})⊠C_1"), weight: bp.clone() },
                PSummand { label: format!("S^2(∧^{}C^{n})⊠C_-1", n - 1), weight: bm.clone() },
            ];
            r.modules = vec![
                hermitian_module(&format!("C⊠C_{}", q(n, 4)), w(Vector::zeros(nu), q(n, 4)), bp.clone()),
                hermitian_module(&format!("C⊠C_{}", q(-n, 4)), w(Vector::zeros(nu), q(-n, 4)), bm.clone()),
                hermitian_module(&format!("C^{n}⊠C_{}", q(n + 2, 4)), w(e1(nu, 1), q(n + 2, 4)), bp),
                hermitian_module(&format!("∧^{}C^{n}⊠C_{}", n - 1, q(-(n + 2), 4)), w(top, q(-(n + 2), 4)), bm),
            ];
            r.expected_count = 4;
            r
        }
        ("so_star", &[n]) => {
            let nu = u(n);
            let s = k_space(&[A(nu - 1)], 1);
            let mut r = skeleton(
                &name,
                &format!("so*({})", 2 * n),
                &[D(nu)],
                s.clone(),
                &format!("SU({n}) x R"),
                &format!("∧^2C^{n}⊠C_1⊕∧^{}C^{n}⊠C_-1", n - 2),
                &format!("C⊠C_±{}", q(n, 2)),
            );
            let w = |v: Vector, c: Rational| Weight::new(vec![v], Vector(vec![c]));
            let first = |k: usize| Vector((0..nu).map(|i| int(i64::from(i < k))).collect());
            let bp = w(first(2), int(1));
            let bm = w(first(nu - 2), int(-1));
            r.hermitian = true;
            r.p_summands = vec![
                PSummand { label: format!("∧^2C^{n}⊠C_1"), weight: bp.clone() },
                PSummand { label: format!("∧^{}C^{n}⊠C_-1", n - 2), weight: bm.clone() },
            ];
            r.modules = vec![
                hermitian_module(&format!("C⊠C_{}", q(n, 2)), w(Vector::zeros(nu), q(n, 2)), bp),
                hermitian_module(&format!("C⊠C_{}", q(-n, 2)), w(Vector::zeros(nu), q(-n, 2)), bm),
            ];
            r.expected_count = 2;
            r
        }
        ("sp_C", &[n]) => {
            let nu = u(n);
            let mu = Weight::semisimple(vec![e1(nu, 1)]);
            complex_record(&name, &format!("sp({n},C)"), C(nu), &format!("Sp({n})"), &[(format!("C^{}", 2 * n), mu)])
        }
        ("so_C", &[n]) => complex_record(&name, &format!("so({n},C)"), spin(u(n)), &format!("Spin({n})"), &[]),
        ("so_n_1", &[n]) => {
            let s = k_space(&[spin(u(n))], 0);
            let d = s.factor(0).dim();
            no_modules(
                skeleton(&name, &format!("so({n},1)"), &[spin(u(n) + 1)], s, &format!("Spin({n})"), &format!("C^{n}"), "-"),
                NonexistenceReason::OrbitMissesP,
                vec![("C^n", Weight::semisimple(vec![e1(d, 1)]))],
            )
        }
        ("sp_p_q", &[p, qq]) => {
            let s = k_space(&[C(u(p)), C(u(qq))], 0);
            no_modules(
                skeleton(
                    &name,
                    &format!("sp({p},{qq})"),
                    &[C(u(p + qq))],
                    s,
                    &format!("Sp({p}) x Sp({qq})"),
                    &format!("C^{}⊠C^{}", 2 * p, 2 * qq),
                    "-",
                ),
                NonexistenceReason::OrbitMissesP,
                vec![("C^2p⊠C^2q", Weight::semisimple(vec![e1(u(p), 1), e1(u(qq), 1)]))],
            )
        }
        ("so_odd_sum", &[p, qq]) => {
            let s = k_space(&[spin(u(p)), spin(u(qq))], 0);
            let (dp, dq) = (s.factor(0).dim(), s.factor(1).dim());
            no_modules(
                skeleton(
                    &name,
                    &format!("so({p},{qq})"),
                    &[spin(u(p + qq))],
                    s,
                    &format!("Spin({p}) x Spin({qq})"),
                    &format!("C^{p}⊠C^{qq}"),
                    "-",
                ),
                NonexistenceReason::HoweVoganParity,
                vec![("C^p⊠C^q", Weight::semisimple(vec![e1(dp, 1), e1(dq, 1)]))],
            )
        }
        ("sp_compact", &[n]) => compact_record(&name, &format!("sp({n})"), C(u(n)), &format!("Sp({n})")),
        ("so_compact", &[n]) => compact_record(&name, &format!("so({n})"), spin(u(n)), &format!("Spin({n})")),
        _ => unreachable!("parameters validated above"),
    };
    r.family = Some(id.to_string());
    r.params = params.to_vec();
    Ok(r)
}
