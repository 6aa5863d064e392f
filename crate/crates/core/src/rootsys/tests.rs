use std::collections::HashSet;

use proptest::prelude::*;

use super::*;
use crate::rational::q;

/// Every type exercised by the property tests.
fn all_types() -> Vec<CartanType> {
    use CartanType::*;
    let mut v = vec![A1Wide, E6, E7, E8, F4, G2, B(1), C(1), D(2)];
    for n in 1..=5 {
        v.push(A(n));
    }
    for n in 2..=5 {
        v.push(B(n));
        v.push(C(n));
    }
    for n in 3..=6 {
        v.push(D(n));
    }
    v
}

fn simple_types() -> Vec<CartanType> {
    all_types().into_iter().filter(|t| t.is_simple()).collect()
}

/// Cartan matrix `M[i][j] = ⟨α_i, α_j∨⟩` written down from the Dynkin diagram.
fn dynkin_cartan(ty: CartanType) -> Vec<Vec<i64>> {
    use CartanType::*;
    let n = ty.rank();
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, ij: i64, ji: i64| {
        m[i][j] = ij;
        m[j][i] = ji;
    };
    match ty {
        A(_) | A1Wide | B(1) | C(1) => {
            for i in 1..n {
                link(i - 1, i, -1, -1);
            }
        }
        B(_) => {
            for i in 1..n - 1 {
                link(i - 1, i, -1, -1);
            }
            link(n - 2, n - 1, -2, -1);
        }
        C(_) => {
            for i in 1..n - 1 {
                link(i - 1, i, -1, -1);
            }
            link(n - 2, n - 1, -1, -2);
        }
        D(2) => {}
        D(_) => {
            for i in 1..n - 1 {
                link(i - 1, i, -1, -1);
            }
            link(n - 3, n - 1, -1, -1);
        }
        E6 | E7 | E8 => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            for i in 3..n {
                link(i - 1, i, -1, -1);
            }
        }
        F4 => {
            link(0, 1, -1, -1);
            link(1, 2, -2, -1);
            link(2, 3, -1, -1);
        }
        G2 => link(0, 1, -1, -3),
    }
    m
}

/// Positive roots, in simple-root coordinates, generated by root strings.
fn closure_positive_roots(m: &[Vec<i64>]) -> HashSet<Vec<i64>> {
    let n = m.len();
    let unit = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let mut roots: HashSet<Vec<i64>> = (0..n).map(unit).collect();
    let mut layer: Vec<Vec<i64>> = (0..n).map(unit).collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| beta[j] * m[j][i]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if roots.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if roots.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        layer = next;
    }
    roots
}

fn dual_coxeter(ty: CartanType) -> i64 {
    use CartanType::*;
    match ty {
        A(n) => n as i64 + 1,
        A1Wide => 2,
        B(1) | C(1) => 2,
        B(n) => 2 * n as i64 - 1,
        C(n) => n as i64 + 1,
        D(n) => 2 * n as i64 - 2,
        E6 => 12,
        E7 => 18,
        E8 => 30,
        F4 => 9,
        G2 => 4,
    }
}

#[test]
fn root_counts_match_closure_oracle() {
    for ty in all_types() {
        let rs = space::cached_root_system(ty).unwrap();
        let m = dynkin_cartan(ty);
        for (i, a) in rs.simple_roots().iter().enumerate() {
            for (j, b) in rs.simple_roots().iter().enumerate() {
                assert_eq!(rs.pair_coroot(a, b).unwrap(), Rational::from_int(m[i][j]), "{ty} ({i},{j})");
            }
        }
        let positive = closure_positive_roots(&m);
        assert_eq!(rs.positive_roots().len(), positive.len(), "{ty}");
        assert_eq!(rs.roots().len(), 2 * positive.len(), "{ty}");
        let coeffs: HashSet<Vec<i64>> = rs
            .positive_roots()
            .iter()
            .map(|r| rs.simple_coefficients(r).iter().map(|c| c.to_i64().unwrap()).collect())
            .collect();
        assert_eq!(coeffs, positive, "{ty}");
    }
}

#[test]
fn g2_has_twelve_roots() {
    assert_eq!(RootSystem::new(CartanType::G2).unwrap().roots().len(), 12);
}

#[test]
fn closed_under_reflections_and_negation() {
    for ty in all_types() {
        let rs = space::cached_root_system(ty).unwrap();
        let set: HashSet<&Vector> = rs.roots().iter().collect();
        for a in rs.roots() {
            assert!(set.contains(&-a), "{ty}");
            for b in rs.roots() {
                assert!(set.contains(&rs.reflect(b, a).unwrap()), "{ty}: s_{a} {b}");
            }
        }
    }
}

#[test]
fn rho_pairs_to_one() {
    for ty in all_types() {
        let rs = space::cached_root_system(ty).unwrap();
        assert!(rs.simple_pairings(rs.rho()).iter().all(|p| *p == Rational::one()), "{ty}");
        for (i, w) in rs.fundamental_weights().iter().enumerate() {
            let p = rs.simple_pairings(w);
            for (j, x) in p.iter().enumerate() {
                assert_eq!(*x, Rational::from_int((i == j) as i64));
            }
        }
    }
}

#[test]
fn table_rhos() {
    let c4 = RootSystem::new(CartanType::C(4)).unwrap();
    assert_eq!(c4.rho(), &Vector::from_ints(&[4, 3, 2, 1]));
    let e7 = RootSystem::new(CartanType::E7).unwrap();
    let expected = Vector(
        [0, 1, 2, 3, 4, 5].iter().map(|&x| Rational::from_int(x)).chain([q(-17, 2), q(17, 2)]).collect(),
    );
    assert_eq!(e7.rho(), &expected);
    let a1 = RootSystem::new(CartanType::A1Wide).unwrap();
    assert_eq!(a1.rho(), &Vector::from_ints(&[1, -1]));
    let e8 = RootSystem::new(CartanType::E8).unwrap();
    assert_eq!(e8.rho(), &Vector::from_ints(&[0, 1, 2, 3, 4, 5, 6, 23]));
}

#[test]
fn e7_is_e8_orthogonal_to_e7_plus_e8() {
    let e8 = RootSystem::new(CartanType::E8).unwrap();
    let e7 = RootSystem::new(CartanType::E7).unwrap();
    let n = Vector::from_ints(&[0, 0, 0, 0, 0, 0, 1, 1]);
    let filtered: HashSet<&Vector> = e8.roots().iter().filter(|r| r.dot(&n).is_zero()).collect();
    let roots: HashSet<&Vector> = e7.roots().iter().collect();
    assert_eq!(filtered, roots);
    assert_eq!(roots.len(), 126);
}

#[test]
fn pairing_edge_cases() {
    let a1 = RootSystem::new(CartanType::A1Wide).unwrap();
    let r = Vector::from_ints(&[2, -2]);
    assert_eq!(a1.pair_coroot(&Vector::from_ints(&[1, -1]), &r).unwrap(), Rational::one());
    assert_eq!(a1.reflect(&r, &r).unwrap(), -&r);
    assert_eq!(a1.pair_coroot(&r, &Vector::zeros(2)), Err(Error::ZeroVector));
    assert!(matches!(a1.pair_coroot(&r, &Vector::from_ints(&[1, 1])), Err(Error::NotARoot(_))));
    assert!(matches!(a1.pair_coroot(&r, &Vector::from_ints(&[1])), Err(Error::Dimension { .. })));
}

#[test]
fn unsupported_types_rejected() {
    assert!("A0".parse::<CartanType>().is_err());
    assert!("D1".parse::<CartanType>().is_err());
    assert!("E9".parse::<CartanType>().is_err());
    assert!("H3".parse::<CartanType>().is_err());
    assert!(RootSystem::new(CartanType::B(0)).is_err());
    assert!(RootSystem::new(CartanType::A(MAX_CLASSICAL_RANK + 1)).is_err());
    assert_eq!("a1*".parse::<CartanType>().unwrap(), CartanType::A1Wide);
    assert_eq!("E7".parse::<CartanType>().unwrap().to_string(), "E7");
}

#[test]
fn weyl_dimensions() {
    for ty in simple_types() {
        let rs = space::cached_root_system(ty).unwrap();
        assert_eq!(rs.weyl_dim(&Vector::zeros(rs.dim())).unwrap(), 1);
        let theta = rs.highest_root().unwrap();
        assert_eq!(rs.weyl_dim(&theta).unwrap(), rs.algebra_dim() as u128, "{ty}");
    }
    let c3 = RootSystem::new(CartanType::C(3)).unwrap();
    assert_eq!(c3.weyl_dim(&c3.fundamental_weights()[2]).unwrap(), 14);
    assert_eq!(14 * 2, 52 - 21 - 3);
    let d8 = RootSystem::new(CartanType::D(8)).unwrap();
    let w8 = &d8.fundamental_weights()[7];
    assert_eq!(w8, &Vector(vec![q(1, 2); 8]));
    assert_eq!(d8.weyl_dim(w8).unwrap(), 128);
    let e8 = RootSystem::new(CartanType::E8).unwrap();
    assert_eq!(e8.algebra_dim(), 248);
    assert_eq!(d8.algebra_dim(), 120);

    let bad = Vector::from_ints(&[-1, 0, 0]);
    assert!(matches!(c3.weyl_dim(&bad), Err(Error::NotDominantIntegral { .. })));
    let half = Vector(vec![q(1, 2), q(0, 1), q(0, 1)]);
    assert!(matches!(c3.weyl_dim(&half), Err(Error::NotDominantIntegral { .. })));
}

#[test]
fn casimir_on_highest_root() {
    for ty in simple_types() {
        let rs = space::cached_root_system(ty).unwrap();
        let theta = rs.highest_root().unwrap();
        assert_eq!(rs.casimir_eigenvalue(&theta, Normalization::Killing).unwrap(), Rational::one(), "{ty}");
        // With long roots of squared length 2 the standard value is 2h∨.
        let standard = rs.casimir_eigenvalue(&theta, Normalization::Standard).unwrap();
        let rescaled = standard * Rational::from_int(2) / theta.dot(&theta);
        assert_eq!(rescaled, Rational::from_int(2 * dual_coxeter(ty)), "{ty}");
        assert!(rs.casimir_eigenvalue(&Vector::zeros(rs.dim()), Normalization::Killing).unwrap().is_zero());
    }
    let a1 = RootSystem::new(CartanType::A1Wide).unwrap();
    let lambda = Vector::from_ints(&[1, -1]);
    assert_eq!(a1.casimir_eigenvalue(&lambda, Normalization::Standard).unwrap(), Rational::from_int(6));
    assert_eq!(a1.casimir_eigenvalue(&lambda, Normalization::Killing).unwrap(), q(3, 8));
    let d2 = RootSystem::new(CartanType::D(2)).unwrap();
    assert!(d2.casimir_eigenvalue(&Vector::unit(2, 0), Normalization::Killing).is_err());
}

#[test]
fn omega_coordinates() {
    let g2 = RootSystem::new(CartanType::G2).unwrap();
    let c = [Rational::one(), q(1, 3)];
    let v = g2.omega_to_coords(&c).unwrap();
    assert_eq!(g2.simple_pairings(&v), c.to_vec());
    assert!(g2.omega_to_coords(&[Rational::one()]).is_err());
    assert!(g2.omega_to_coords(&[Rational::zero(), Rational::zero()]).unwrap().is_zero());
    for n in 2..=5 {
        let cn = RootSystem::new(CartanType::C(n)).unwrap();
        let mut c = vec![Rational::one(); n];
        c[n - 1] = q(1, 2);
        let v = cn.omega_to_coords(&c).unwrap();
        assert_eq!(cn.simple_pairings(&v), c);
    }
}

#[test]
fn highest_roots() {
    let g2 = RootSystem::new(CartanType::G2).unwrap();
    assert_eq!(g2.highest_root().unwrap(), Vector::from_ints(&[-1, -1, 2]));
    let c3 = RootSystem::new(CartanType::C(3)).unwrap();
    assert_eq!(c3.highest_root().unwrap(), Vector::from_ints(&[2, 0, 0]));
    assert!(RootSystem::new(CartanType::D(2)).unwrap().highest_root().is_none());
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn rational_vec(n: usize) -> impl Strategy<Value = Vector> {
    proptest::collection::vec(small_rational(), n).prop_map(Vector)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn reflections_preserve_form(seed in 0usize..1000, u in rational_vec(8), v in rational_vec(8)) {
        for ty in all_types() {
            let rs = space::cached_root_system(ty).unwrap();
            let d = rs.dim();
            let u = rs.project_to_span(&Vector(u.0[..d].to_vec()));
            let v = Vector(v.0[..d].to_vec());
            let a = &rs.roots()[seed % rs.roots().len()];
            let su = rs.reflect(&u, a).unwrap();
            let sv = rs.reflect(&v, a).unwrap();
            prop_assert_eq!(rs.bilinear(&su, &sv), rs.bilinear(&u, &v));
            prop_assert_eq!(rs.reflect(&su, a).unwrap(), u.clone());
        }
    }

    #[test]
    fn pairing_is_scale_invariant(seed in 0usize..1000, u in rational_vec(8), k in 1i64..9) {
        for ty in all_types() {
            let rs = space::cached_root_system(ty).unwrap();
            let u = Vector(u.0[..rs.dim()].to_vec());
            let a = &rs.roots()[seed % rs.roots().len()];
            let k = Rational::from_int(k);
            let raw = Rational::from_int(2) * rs.bilinear(&u, a) / rs.bilinear(a, a);
            let scaled = Rational::from_int(2) * (rs.bilinear(&u, a) * &k) / (rs.bilinear(a, a) * &k);
            prop_assert_eq!(&raw, &scaled);
            prop_assert_eq!(rs.pair_coroot(&u, a).unwrap(), raw);
        }
    }

    #[test]
    fn canonicalization_idempotent_and_shift_invariant(u in rational_vec(6), c in small_rational()) {
        let space = KSpace::new(&[CartanType::A(5)], 0).unwrap();
        let w = Weight::semisimple(vec![u.clone()]);
        let once = space.trace_free_canonical(&w);
        prop_assert_eq!(space.trace_free_canonical(&once), once.clone());
        let shifted = Weight::semisimple(vec![Vector(u.0.iter().map(|x| x + &c).collect())]);
        prop_assert_eq!(space.trace_free_canonical(&shifted), once);
    }
}
