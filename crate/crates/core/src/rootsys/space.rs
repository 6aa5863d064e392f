//! The weight space of a maximal compact subalgebra: an ordered list of
//! semisimple factors plus a center.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::{CartanType, Normalization, RootSystem};
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::rational::Rational;

/// Shared, lazily built root system for a Cartan type.
pub(crate) fn cached_root_system(ty: CartanType) -> Result<Arc<RootSystem>> {
    static CACHE: OnceLock<Mutex<HashMap<CartanType, Arc<RootSystem>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(rs) = cache.lock().unwrap().get(&ty) {
        return Ok(rs.clone());
    }
    let rs = Arc::new(RootSystem::new(ty)?);
    cache.lock().unwrap().insert(ty, rs.clone());
    Ok(rs)
}

/// A weight of `t = z(k) + t_ss`: one coordinate vector per semisimple factor
/// and the center coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Weight {
    pub factors: Vec<Vector>,
    #[serde(default)]
    pub center: Vector,
}

impl Weight {
    pub fn new(factors: Vec<Vector>, center: Vector) -> Self {
        Weight { factors, center }
    }

    pub fn semisimple(factors: Vec<Vector>) -> Self {
        Weight { factors, center: Vector::default() }
    }

    pub fn add(&self, other: &Weight) -> Weight {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> Weight {
        Weight {
            factors: self.factors.iter().map(|f| f.scale(c)).collect(),
            center: self.center.scale(c),
        }
    }

    /// `self + c * other`
    pub fn add_scaled(&self, c: &Rational, other: &Weight) -> Weight {
        self.add(&other.scale(c))
    }

    pub fn neg(&self) -> Weight {
        self.scale(&Rational::from_int(-1))
    }

    /// The same weight with the center coordinates set to zero.
    pub fn ss_part(&self) -> Weight {
        Weight {
            factors: self.factors.clone(),
            center: Vector::zeros(self.center.len()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.factors.iter().all(Vector::is_zero) && self.center.is_zero()
    }

    pub fn is_ss_zero(&self) -> bool {
        self.factors.iter().all(Vector::is_zero)
    }

    /// If `self = c * other` coordinatewise (all factors and center), returns `c`.
    pub fn multiple_of(&self, other: &Weight) -> Option<Rational> {
        let a = self.flatten();
        let b = other.flatten();
        (a.len() == b.len()).then(|| a.multiple_of(&b)).flatten()
    }

    /// All coordinates, factors first, then center.
    pub fn flatten(&self) -> Vector {
        let mut v: Vec<Rational> = self.factors.iter().flat_map(|f| f.0.iter().cloned()).collect();
        v.extend(self.center.0.iter().cloned());
        Vector(v)
    }

    fn zip_with(&self, other: &Weight, f: impl Fn(&Vector, &Vector) -> Vector) -> Weight {
        assert_eq!(self.factors.len(), other.factors.len(), "weights from different spaces");
        Weight {
            factors: self.factors.iter().zip(&other.factors).map(|(a, b)| f(a, b)).collect(),
            center: f(&self.center, &other.center),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        if !self.center.is_empty() {
            if !self.factors.is_empty() {
                write!(f, ";")?;
            }
            write!(f, "z=")?;
            for (i, c) in self.center.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A root vector tagged with the factor it belongs to.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct FactorRoot {
    pub factor: usize,
    pub root: Vector,
}

impl FactorRoot {
    pub fn new(factor: usize, root: Vector) -> Self {
        FactorRoot { factor, root }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dominance {
    pub dominant: bool,
    pub integral: bool,
}

impl Dominance {
    pub fn dominant_integral(self) -> bool {
        self.dominant && self.integral
    }
}

/// Coordinate layout of `t^∨` for a maximal compact subalgebra.
///
/// Factors are coordinate-disjoint and the form is block diagonal; each block
/// is the standard form of its factor.
#[derive(Clone)]
pub struct KSpace {
    types: Vec<CartanType>,
    factors: Vec<Arc<RootSystem>>,
    center_dim: usize,
}

impl PartialEq for KSpace {
    fn eq(&self, other: &Self) -> bool {
        self.types == other.types && self.center_dim == other.center_dim
    }
}

impl Eq for KSpace {}

impl fmt::Debug for KSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KSpace({self})")
    }
}

impl fmt::Display for KSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.types.iter().map(|t| t.to_string()).collect();
        if self.center_dim > 0 {
            parts.push(format!("T{}", self.center_dim));
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{}", parts.join(" x "))
    }
}

#[derive(Serialize, Deserialize)]
struct KSpaceRepr {
    factors: Vec<CartanType>,
    #[serde(default)]
    center_dim: usize,
}

impl Serialize for KSpace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        KSpaceRepr { factors: self.types.clone(), center_dim: self.center_dim }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for KSpace {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = KSpaceRepr::deserialize(d)?;
        KSpace::new(&r.factors, r.center_dim).map_err(serde::de::Error::custom)
    }
}

impl KSpace {
    pub fn new(types: &[CartanType], center_dim: usize) -> Result<KSpace> {
        let factors = types.iter().map(|&t| cached_root_system(t)).collect::<Result<Vec<_>>>()?;
        Ok(KSpace { types: types.to_vec(), factors, center_dim })
    }

    pub fn types(&self) -> &[CartanType] {
        &self.types
    }

    pub fn factors(&self) -> &[Arc<RootSystem>] {
        &self.factors
    }

    pub fn factor(&self, i: usize) -> &RootSystem {
        &self.factors[i]
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn center_dim(&self) -> usize {
        self.center_dim
    }

    /// Offset of each factor in the flattened coordinate list.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.factors
            .iter()
            .map(|f| {
                let o = acc;
                acc += f.dim();
                o
            })
            .collect()
    }

    /// Complex dimension of `k`: Σ (|roots| + rank) + dim of the center.
    pub fn algebra_dim(&self) -> usize {
        self.factors.iter().map(|f| f.algebra_dim()).sum::<usize>() + self.center_dim
    }

    pub fn weyl_order(&self) -> u128 {
        self.types.iter().map(|t| t.weyl_order()).product()
    }

    pub fn zero(&self) -> Weight {
        Weight {
            factors: self.factors.iter().map(|f| Vector::zeros(f.dim())).collect(),
            center: Vector::zeros(self.center_dim),
        }
    }

    pub fn rho(&self) -> Weight {
        Weight {
            factors: self.factors.iter().map(|f| f.rho().clone()).collect(),
            center: Vector::zeros(self.center_dim),
        }
    }

    pub fn simple_roots(&self) -> Vec<FactorRoot> {
        self.factors
            .iter()
            .enumerate()
            .flat_map(|(i, f)| f.simple_roots().iter().map(move |r| FactorRoot::new(i, r.clone())))
            .collect()
    }

    pub fn positive_roots(&self) -> Vec<FactorRoot> {
        self.factors
            .iter()
            .enumerate()
            .flat_map(|(i, f)| f.positive_roots().iter().map(move |r| FactorRoot::new(i, r.clone())))
            .collect()
    }

    pub fn conforms(&self, w: &Weight) -> Result<()> {
        if w.factors.len() != self.factors.len() {
            return Err(Error::Dimension { expected: self.factors.len(), got: w.factors.len() });
        }
        for (v, f) in w.factors.iter().zip(&self.factors) {
            if v.len() != f.dim() {
                return Err(Error::Dimension { expected: f.dim(), got: v.len() });
            }
        }
        if w.center.len() != self.center_dim {
            return Err(Error::Dimension { expected: self.center_dim, got: w.center.len() });
        }
        Ok(())
    }

    /// Block-diagonal standard form, including the center coordinates.
    pub fn bilinear(&self, u: &Weight, v: &Weight) -> Result<Rational> {
        self.conforms(u)?;
        self.conforms(v)?;
        let ss: Rational = u.factors.iter().zip(&v.factors).map(|(a, b)| a.dot(b)).sum();
        Ok(ss + u.center.dot(&v.center))
    }

    fn root_factor(&self, alpha: &FactorRoot) -> Result<&RootSystem> {
        self.factors
            .get(alpha.factor)
            .map(|f| f.as_ref())
            .ok_or_else(|| Error::NotARoot(format!("no factor {} in {self}", alpha.factor)))
    }

    /// ⟨λ, α∨⟩ computed inside the factor of α.
    pub fn pair_coroot(&self, lambda: &Weight, alpha: &FactorRoot) -> Result<Rational> {
        self.conforms(lambda)?;
        let f = self.root_factor(alpha)?;
        f.pair_coroot(&lambda.factors[alpha.factor], &alpha.root)
    }

    pub fn is_dominant_integral(&self, lambda: &Weight) -> Result<Dominance> {
        self.conforms(lambda)?;
        let mut dominant = true;
        let mut integral = true;
        for (v, f) in lambda.factors.iter().zip(&self.factors) {
            for p in f.simple_pairings(v) {
                dominant &= !p.is_negative();
                integral &= p.is_integer();
            }
        }
        Ok(Dominance { dominant, integral })
    }

    pub fn reflect(&self, lambda: &Weight, alpha: &FactorRoot) -> Result<Weight> {
        self.conforms(lambda)?;
        let f = self.root_factor(alpha)?;
        let mut out = lambda.clone();
        out.factors[alpha.factor] = f.reflect(&lambda.factors[alpha.factor], &alpha.root)?;
        Ok(out)
    }

    /// Dimension of the irreducible K-module with highest weight λ (the
    /// center acts by a character and does not contribute).
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<u128> {
        self.conforms(lambda)?;
        let mut d: u128 = 1;
        for (v, f) in lambda.factors.iter().zip(&self.factors) {
            d = d
                .checked_mul(f.weyl_dim(v)?)
                .ok_or_else(|| Error::Unsupported("dimension overflow".into()))?;
        }
        Ok(d)
    }

    /// Sum of the per-factor Casimir eigenvalues.
    pub fn casimir_eigenvalue(&self, lambda: &Weight, normalization: Normalization) -> Result<Rational> {
        self.conforms(lambda)?;
        lambda
            .factors
            .iter()
            .zip(&self.factors)
            .map(|(v, f)| f.casimir_eigenvalue(v, normalization))
            .sum()
    }

    /// Projects every factor onto the span of its roots; for A-type factors
    /// this subtracts the multiple of `(1,…,1)` making the coordinate sum
    /// zero. The center is unchanged. Two highest weights label the same
    /// K-type iff their canonical forms agree.
    pub fn trace_free_canonical(&self, lambda: &Weight) -> Weight {
        Weight {
            factors: lambda
                .factors
                .iter()
                .zip(&self.factors)
                .map(|(v, f)| f.project_to_span(v))
                .collect(),
            center: lambda.center.clone(),
        }
    }

    /// The least `t > 0` with `t·β_ss` integral.
    ///
    /// The set of such `t` is `(1/g)ℤ` where `g` generates the ℤ-module
    /// spanned by the simple-coroot pairings of `β_ss`.
    pub fn lattice_period(&self, beta: &Weight) -> Result<Rational> {
        self.conforms(beta)?;
        let mut g = Rational::zero();
        for (v, f) in beta.factors.iter().zip(&self.factors) {
            for p in f.simple_pairings(v) {
                g = g.gcd(&p);
            }
        }
        if g.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(g.recip())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn a1w() -> KSpace {
        KSpace::new(&[CartanType::A1Wide], 0).unwrap()
    }

    #[test]
    fn a1_wide_pairing() {
        let s = a1w();
        let lambda = Weight::semisimple(vec![Vector::from_ints(&[1, -1])]);
        let alpha = FactorRoot::new(0, Vector::from_ints(&[2, -2]));
        assert_eq!(s.pair_coroot(&lambda, &alpha).unwrap(), q(1, 1));
    }

    #[test]
    fn pair_coroot_rejects_bad_roots() {
        let s = a1w();
        let lambda = Weight::semisimple(vec![Vector::from_ints(&[1, -1])]);
        let zero = FactorRoot::new(0, Vector::zeros(2));
        assert_eq!(s.pair_coroot(&lambda, &zero), Err(Error::ZeroVector));
        let outside = FactorRoot::new(0, Vector::from_ints(&[1, 1]));
        assert!(matches!(s.pair_coroot(&lambda, &outside), Err(Error::NotARoot(_))));
        let missing = FactorRoot::new(3, Vector::from_ints(&[1, -1]));
        assert!(matches!(s.pair_coroot(&lambda, &missing), Err(Error::NotARoot(_))));
    }

    #[test]
    fn reflection_swaps_a1_coordinates() {
        let s = KSpace::new(&[CartanType::A(1)], 0).unwrap();
        let lambda = Weight::semisimple(vec![Vector::from_ints(&[1, -1])]);
        let alpha = FactorRoot::new(0, Vector::from_ints(&[1, -1]));
        let r = s.reflect(&lambda, &alpha).unwrap();
        assert_eq!(r.factors[0], Vector::from_ints(&[-1, 1]));
        assert_eq!(s.reflect(&r, &alpha).unwrap(), lambda);
    }

    #[test]
    fn dominance_of_rho_and_negative_unit() {
        let s = KSpace::new(&[CartanType::D(5)], 0).unwrap();
        assert_eq!(
            s.is_dominant_integral(&s.rho()).unwrap(),
            Dominance { dominant: true, integral: true }
        );
        let w = Weight::semisimple(vec![Vector::from_ints(&[-1, 0, 0, 0, 0])]);
        assert!(!s.is_dominant_integral(&w).unwrap().dominant);
    }

    #[test]
    fn e8_8_beta_is_dominant_integral() {
        let s = KSpace::new(&[CartanType::D(8)], 0).unwrap();
        let beta = Weight::semisimple(vec![Vector(vec![q(1, 2); 8])]);
        assert!(s.is_dominant_integral(&beta).unwrap().dominant_integral());
    }

    #[test]
    fn canonical_form() {
        let s = KSpace::new(&[CartanType::A(2), CartanType::B(2)], 1).unwrap();
        let w = Weight::new(
            vec![Vector::from_ints(&[1, 1, 1]), Vector::from_ints(&[1, 0])],
            Vector::from_ints(&[5]),
        );
        let c = s.trace_free_canonical(&w);
        assert_eq!(c.factors[0], Vector::zeros(3));
        assert_eq!(c.factors[1], Vector::from_ints(&[1, 0]));
        assert_eq!(c.center, Vector::from_ints(&[5]));
        let t = Weight::new(
            vec![Vector::from_ints(&[1, 0, -1]), Vector::from_ints(&[0, 0])],
            Vector::zeros(1),
        );
        assert_eq!(s.trace_free_canonical(&t), t);
    }

    #[test]
    fn canonical_separates_even_and_odd_multiples() {
        // A5: 2m·e1 and (2m'+1)·e1 never name the same K-type.
        let s = KSpace::new(&[CartanType::A(5)], 0).unwrap();
        let e1 = |k: i64| Weight::semisimple(vec![Vector::from_ints(&[k, 0, 0, 0, 0, 0])]);
        for m in 0..=10 {
            for m2 in 0..=10 {
                assert_ne!(
                    s.trace_free_canonical(&e1(2 * m)),
                    s.trace_free_canonical(&e1(2 * m2 + 1))
                );
            }
        }
    }

    #[test]
    fn lattice_periods() {
        let su = KSpace::new(&[CartanType::A(3)], 1).unwrap();
        let beta = Weight::new(vec![Vector::from_ints(&[2, 0, 0, 0])], Vector::from_ints(&[1]));
        assert_eq!(su.lattice_period(&beta).unwrap(), q(1, 2));

        let dd = KSpace::new(&[CartanType::D(4), CartanType::D(3)], 0).unwrap();
        let beta = Weight::semisimple(vec![Vector::unit(4, 0), Vector::unit(3, 0)]);
        assert_eq!(dd.lattice_period(&beta).unwrap(), q(1, 1));

        let c = KSpace::new(&[CartanType::C(3)], 0).unwrap();
        let beta = Weight::semisimple(vec![Vector::from_ints(&[2, 0, 0])]);
        assert_eq!(c.lattice_period(&beta).unwrap(), q(1, 2));

        assert_eq!(c.lattice_period(&c.zero()), Err(Error::ZeroVector));
    }

    #[test]
    fn weyl_dim_over_product() {
        let s = KSpace::new(&[CartanType::D(3), CartanType::D(2)], 0).unwrap();
        let w = Weight::semisimple(vec![Vector::unit(3, 0), Vector::unit(2, 0)]);
        assert_eq!(s.weyl_dim(&w).unwrap(), 24);
        assert_eq!(s.algebra_dim(), 21);
    }
}
