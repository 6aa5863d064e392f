//! Root systems in Bourbaki coordinates.
//!
//! Each [`RootSystem`] carries its full root list, a positive system, the
//! ordered simple roots, ρ and the fundamental weights, all as exact rational
//! vectors. The bilinear form on a single system is the standard dot product
//! of its ambient coordinates; coroot pairings are invariant under rescaling
//! it, which is all the verification layer relies on.

mod space;

pub use space::{Dominance, FactorRoot, KSpace, Weight};
pub(crate) use space::cached_root_system;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{orthogonal_basis, Matrix, Vector};
use crate::rational::Rational;

/// Largest rank accepted for the classical families.
pub const MAX_CLASSICAL_RANK: usize = 64;

/// Cartan type of a root system.
///
/// Besides the simple types this also admits the low-rank members used as
/// factors of maximal compact subalgebras: `B1` (so(3), short root `e1`),
/// `C1` (sp(1), root `2e1`) and the reducible `D2` (so(4)). `A1*` is A₁ in
/// two coordinates with positive root `(2,-2)`, so that ρ = `(1,-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A(usize),
    A1Wide,
    B(usize),
    C(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl CartanType {
    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) | CartanType::D(n) => n,
            CartanType::A1Wide => 1,
            CartanType::E6 => 6,
            CartanType::E7 => 7,
            CartanType::E8 => 8,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    /// Number of ambient coordinates.
    pub fn ambient_dim(self) -> usize {
        match self {
            CartanType::A(n) => n + 1,
            CartanType::A1Wide => 2,
            CartanType::B(n) | CartanType::C(n) | CartanType::D(n) => n,
            CartanType::E6 | CartanType::E7 | CartanType::E8 => 8,
            CartanType::F4 => 4,
            CartanType::G2 => 3,
        }
    }

    pub fn is_simple(self) -> bool {
        !matches!(self, CartanType::D(2))
    }

    /// Types whose coordinates carry a central direction that is removed
    /// before comparing weights.
    pub fn is_a_type(self) -> bool {
        matches!(self, CartanType::A(_) | CartanType::A1Wide)
    }

    /// Dimension of the complex Lie algebra.
    pub fn algebra_dim(self) -> usize {
        match self {
            CartanType::A(n) => n * (n + 2),
            CartanType::A1Wide => 3,
            CartanType::B(n) | CartanType::C(n) => n * (2 * n + 1),
            CartanType::D(n) => n * (2 * n - 1),
            CartanType::E6 => 78,
            CartanType::E7 => 133,
            CartanType::E8 => 248,
            CartanType::F4 => 52,
            CartanType::G2 => 14,
        }
    }

    /// Order of the Weyl group from the closed-form formulas.
    pub fn weyl_order(self) -> u128 {
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match self {
            CartanType::A(n) => fact(n + 1),
            CartanType::A1Wide => 2,
            CartanType::B(n) | CartanType::C(n) => (1u128 << n) * fact(n),
            CartanType::D(n) => (1u128 << (n - 1)) * fact(n),
            CartanType::G2 => 12,
            CartanType::F4 => 1152,
            CartanType::E6 => 51_840,
            CartanType::E7 => 2_903_040,
            CartanType::E8 => 696_729_600,
        }
    }

    fn validate(self) -> Result<()> {
        let (n, min) = match self {
            CartanType::A(n) => (n, 1),
            CartanType::B(n) => (n, 1),
            CartanType::C(n) => (n, 1),
            CartanType::D(n) => (n, 2),
            _ => return Ok(()),
        };
        if n < min || n > MAX_CLASSICAL_RANK {
            return Err(Error::Unsupported(format!(
                "{self}: rank must lie in {min}..={MAX_CLASSICAL_RANK}"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::A1Wide => write!(f, "A1*"),
            CartanType::B(n) => write!(f, "B{n}"),
            CartanType::C(n) => write!(f, "C{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::E6 => write!(f, "E6"),
            CartanType::E7 => write!(f, "E7"),
            CartanType::E8 => write!(f, "E8"),
            CartanType::F4 => write!(f, "F4"),
            CartanType::G2 => write!(f, "G2"),
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let unsupported = || Error::Unsupported(format!("unknown Cartan type {s:?}"));
        let ty = match t.to_ascii_uppercase().as_str() {
            "A1*" => CartanType::A1Wide,
            "E6" => CartanType::E6,
            "E7" => CartanType::E7,
            "E8" => CartanType::E8,
            "F4" => CartanType::F4,
            "G2" => CartanType::G2,
            u => {
                let (family, rank) = u.split_at(1);
                let n: usize = rank.parse().map_err(|_| unsupported())?;
                match family {
                    "A" => CartanType::A(n),
                    "B" => CartanType::B(n),
                    "C" => CartanType::C(n),
                    "D" => CartanType::D(n),
                    _ => return Err(unsupported()),
                }
            }
        };
        ty.validate()?;
        Ok(ty)
    }
}

impl Serialize for CartanType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CartanType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Normalization of the invariant form used for Casimir eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// Dot product of the ambient coordinates.
    Standard,
    /// Standard form rescaled so that the adjoint representation has eigenvalue 1.
    Killing,
}

#[derive(Clone, PartialEq, Eq)]
pub struct RootSystem {
    label: String,
    cartan: Option<CartanType>,
    dim: usize,
    roots: Vec<Vector>,
    positive: Vec<Vector>,
    simple: Vec<Vector>,
    rho: Vector,
    fundamental: Vec<Vector>,
    /// Orthogonal basis of the complement of the root span.
    complement: Vec<Vector>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem")
            .field("label", &self.label)
            .field("dim", &self.dim)
            .field("roots", &self.roots.len())
            .field("rank", &self.simple.len())
            .finish()
    }
}

fn signed_pairs(n: usize, out: &mut Vec<Vector>) {
    for i in 0..n {
        for j in i + 1..n {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![0i64; n];
                v[i] = si;
                v[j] = sj;
                out.push(Vector::from_ints(&v));
            }
        }
    }
}

fn scaled_units(n: usize, scale: i64, out: &mut Vec<Vector>) {
    for i in 0..n {
        for s in [scale, -scale] {
            let mut v = vec![0i64; n];
            v[i] = s;
            out.push(Vector::from_ints(&v));
        }
    }
}

fn diff(n: usize, i: usize, j: usize) -> Vector {
    let mut v = vec![0i64; n];
    v[i] = 1;
    v[j] = -1;
    Vector::from_ints(&v)
}

fn half_vector(signs: &[i64]) -> Vector {
    Vector(signs.iter().map(|&s| Rational::new(s, 2)).collect())
}

fn e8_roots() -> Vec<Vector> {
    let mut roots = Vec::with_capacity(240);
    signed_pairs(8, &mut roots);
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            let signs: Vec<i64> = (0..8).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            roots.push(half_vector(&signs));
        }
    }
    roots
}

fn e8_simple() -> Vec<Vector> {
    let mut simple = vec![half_vector(&[1, -1, -1, -1, -1, -1, -1, 1])];
    simple.push(Vector::from_ints(&[1, 1, 0, 0, 0, 0, 0, 0]));
    for i in 0..6 {
        simple.push(diff(8, i + 1, i));
    }
    simple
}

fn explicit_roots(ty: CartanType) -> (Vec<Vector>, Vec<Vector>) {
    let mut roots = Vec::new();
    let simple: Vec<Vector>;
    match ty {
        CartanType::A(n) => {
            let d = n + 1;
            for i in 0..d {
                for j in 0..d {
                    if i != j {
                        roots.push(diff(d, i, j));
                    }
                }
            }
            simple = (0..n).map(|i| diff(d, i, i + 1)).collect();
        }
        CartanType::A1Wide => {
            roots = vec![Vector::from_ints(&[2, -2]), Vector::from_ints(&[-2, 2])];
            simple = vec![Vector::from_ints(&[2, -2])];
        }
        CartanType::B(n) => {
            signed_pairs(n, &mut roots);
            scaled_units(n, 1, &mut roots);
            let mut s: Vec<Vector> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            s.push(Vector::unit(n, n - 1));
            simple = s;
        }
        CartanType::C(n) => {
            signed_pairs(n, &mut roots);
            scaled_units(n, 2, &mut roots);
            let mut s: Vec<Vector> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            s.push(Vector::unit(n, n - 1).scale(&Rational::from_int(2)));
            simple = s;
        }
        CartanType::D(n) => {
            signed_pairs(n, &mut roots);
            let mut s: Vec<Vector> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let mut last = vec![0i64; n];
            last[n - 2] = 1;
            last[n - 1] = 1;
            s.push(Vector::from_ints(&last));
            simple = s;
        }
        CartanType::E8 => {
            roots = e8_roots();
            simple = e8_simple();
        }
        CartanType::E7 => {
            let normal = Vector::from_ints(&[0, 0, 0, 0, 0, 0, 1, 1]);
            roots = e8_roots().into_iter().filter(|r| r.dot(&normal).is_zero()).collect();
            simple = e8_simple().into_iter().take(7).collect();
        }
        CartanType::E6 => {
            let n1 = Vector::from_ints(&[0, 0, 0, 0, 0, 0, 1, 1]);
            let n2 = Vector::from_ints(&[0, 0, 0, 0, 0, 1, -1, 0]);
            roots = e8_roots()
                .into_iter()
                .filter(|r| r.dot(&n1).is_zero() && r.dot(&n2).is_zero())
                .collect();
            simple = e8_simple().into_iter().take(6).collect();
        }
        CartanType::F4 => {
            signed_pairs(4, &mut roots);
            scaled_units(4, 1, &mut roots);
            for mask in 0u32..16 {
                let signs: Vec<i64> = (0..4).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                roots.push(half_vector(&signs));
            }
            simple = vec![
                diff(4, 1, 2),
                diff(4, 2, 3),
                Vector::unit(4, 3),
                half_vector(&[1, -1, -1, -1]),
            ];
        }
        CartanType::G2 => {
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        roots.push(diff(3, i, j));
                    }
                }
            }
            for i in 0..3 {
                for s in [1i64, -1] {
                    let mut v = vec![-s; 3];
                    v[i] = 2 * s;
                    roots.push(Vector::from_ints(&v));
                }
            }
            simple = vec![diff(3, 0, 1), Vector::from_ints(&[-2, 1, 1])];
        }
    }
    (roots, simple)
}

impl RootSystem {
    /// Builds the root system of the given Cartan type in Bourbaki coordinates.
    ///
    /// E6 and E7 live in the 8-dimensional E8 space (orthogonal to `e7+e8`,
    /// and additionally to `e6-e7` for E6), G2 in the plane `x1+x2+x3 = 0` of
    /// three coordinates and `A_n` in `n+1` full coordinates.
    pub fn new(ty: CartanType) -> Result<RootSystem> {
        ty.validate()?;
        let (roots, simple) = explicit_roots(ty);
        let mut rs = RootSystem::from_parts(ty.to_string(), ty.ambient_dim(), roots, simple)?;
        rs.cartan = Some(ty);
        Ok(rs)
    }

    /// Builds a root system from an explicit root list and a choice of simple
    /// roots. Positivity is decided by the sign of simple-root coefficients.
    pub fn from_parts(
        label: impl Into<String>,
        dim: usize,
        roots: Vec<Vector>,
        simple: Vec<Vector>,
    ) -> Result<RootSystem> {
        let label = label.into();
        for r in roots.iter().chain(&simple) {
            if r.len() != dim {
                return Err(Error::Dimension { expected: dim, got: r.len() });
            }
        }
        let rank = simple.len();
        let fundamental = if rank == 0 {
            Vec::new()
        } else {
            let cartan = Matrix::from_rows(
                &simple
                    .iter()
                    .map(|a| Vector(simple.iter().map(|b| coroot_pairing(a, b)).collect()))
                    .collect::<Vec<_>>(),
            );
            let inv = cartan
                .inverse()
                .ok_or_else(|| Error::Unsupported(format!("{label}: simple roots are dependent")))?;
            (0..rank)
                .map(|i| {
                    let mut w = Vector::zeros(dim);
                    for (j, a) in simple.iter().enumerate() {
                        w = w.add_scaled(&inv[(i, j)], a);
                    }
                    w
                })
                .collect()
        };

        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for r in &roots {
            let coeffs = simple_coefficients(r, &simple, &fundamental);
            if coeffs.iter().any(|c| !c.is_integer()) {
                return Err(Error::Unsupported(format!(
                    "{label}: root {r} is not an integral combination of simple roots"
                )));
            }
            if coeffs.iter().all(|c| !c.is_negative()) {
                positive.push(r.clone());
            } else if coeffs.iter().all(|c| !c.is_positive()) {
                negative.push(r.clone());
            } else {
                return Err(Error::Unsupported(format!(
                    "{label}: root {r} has mixed-sign simple coefficients"
                )));
            }
        }
        positive.sort();
        let mut all = positive.clone();
        all.extend(positive.iter().map(|r| -r));

        let set: BTreeSet<&Vector> = roots.iter().collect();
        if set.len() != roots.len() || negative.len() != positive.len() {
            return Err(Error::Unsupported(format!("{label}: root list is not a root system")));
        }

        let mut rho = Vector::zeros(dim);
        for p in &positive {
            rho = &rho + p;
        }
        rho = rho.scale(&Rational::half());

        let complement = if rank == 0 {
            (0..dim).map(|i| Vector::unit(dim, i)).collect()
        } else {
            orthogonal_basis(&Matrix::from_rows(&simple).nullspace())
        };

        Ok(RootSystem {
            label,
            cartan: None,
            dim,
            roots: all,
            positive,
            simple,
            rho,
            fundamental,
            complement,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn cartan_type(&self) -> Option<CartanType> {
        self.cartan
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    /// Positive roots first (sorted), then their negatives in the same order.
    pub fn roots(&self) -> &[Vector] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Vector] {
        &self.positive
    }

    pub fn simple_roots(&self) -> &[Vector] {
        &self.simple
    }

    pub fn rho(&self) -> &Vector {
        &self.rho
    }

    pub fn fundamental_weights(&self) -> &[Vector] {
        &self.fundamental
    }

    pub fn complement(&self) -> &[Vector] {
        &self.complement
    }

    /// dim of the Lie algebra: |roots| + rank.
    pub fn algebra_dim(&self) -> usize {
        self.roots.len() + self.rank()
    }

    pub fn is_root(&self, v: &Vector) -> bool {
        self.roots.contains(v)
    }

    /// Finds the root that is a positive rational multiple of `v`, if any.
    pub fn root_along(&self, v: &Vector) -> Option<&Vector> {
        if v.len() != self.dim || v.is_zero() {
            return None;
        }
        self.roots
            .iter()
            .find(|r| r.multiple_of(v).is_some_and(|c| c.is_positive()))
    }

    /// Whether `v` lies in the span of the roots.
    pub fn in_span(&self, v: &Vector) -> bool {
        self.complement.iter().all(|c| v.dot(c).is_zero())
    }

    /// Orthogonal projection onto the span of the roots.
    pub fn project_to_span(&self, v: &Vector) -> Vector {
        let mut w = v.clone();
        for c in &self.complement {
            let t = w.dot(c) / c.dot(c);
            w = w.add_scaled(&-t, c);
        }
        w
    }

    pub fn bilinear(&self, u: &Vector, v: &Vector) -> Rational {
        u.dot(v)
    }

    /// ⟨λ, α∨⟩ = 2(λ,α)/(α,α).
    pub fn pair_coroot(&self, lambda: &Vector, alpha: &Vector) -> Result<Rational> {
        self.check_root_vector(alpha)?;
        if lambda.len() != self.dim {
            return Err(Error::Dimension { expected: self.dim, got: lambda.len() });
        }
        Ok(coroot_pairing(lambda, alpha))
    }

    fn check_root_vector(&self, alpha: &Vector) -> Result<()> {
        if alpha.len() != self.dim {
            return Err(Error::Dimension { expected: self.dim, got: alpha.len() });
        }
        if alpha.is_zero() {
            return Err(Error::ZeroVector);
        }
        if !self.in_span(alpha) {
            return Err(Error::NotARoot(format!("{alpha} is outside the span of {}", self.label)));
        }
        Ok(())
    }

    /// Pairings with the simple coroots, in simple-root order.
    pub fn simple_pairings(&self, lambda: &Vector) -> Vec<Rational> {
        self.simple.iter().map(|a| coroot_pairing(lambda, a)).collect()
    }

    pub fn is_dominant(&self, lambda: &Vector) -> bool {
        self.simple_pairings(lambda).iter().all(|p| !p.is_negative())
    }

    pub fn is_integral(&self, lambda: &Vector) -> bool {
        self.simple_pairings(lambda).iter().all(Rational::is_integer)
    }

    /// Whether every simple pairing is strictly positive.
    pub fn is_regular_dominant(&self, lambda: &Vector) -> bool {
        self.simple_pairings(lambda).iter().all(Rational::is_positive)
    }

    /// `λ - ⟨λ,α∨⟩ α`.
    pub fn reflect(&self, lambda: &Vector, alpha: &Vector) -> Result<Vector> {
        let c = self.pair_coroot(lambda, alpha)?;
        Ok(lambda.add_scaled(&-c, alpha))
    }

    /// Coefficients of `v` in the basis of simple roots (for `v` in the span).
    pub fn simple_coefficients(&self, v: &Vector) -> Vec<Rational> {
        simple_coefficients(v, &self.simple, &self.fundamental)
    }

    pub fn height(&self, root: &Vector) -> Rational {
        self.simple_coefficients(root).into_iter().sum()
    }

    /// The unique positive root of maximal height, if the system is irreducible.
    pub fn highest_root(&self) -> Option<Vector> {
        let heights: Vec<Rational> = self.positive.iter().map(|r| self.height(r)).collect();
        let max = heights.iter().max()?;
        let mut tops = self.positive.iter().zip(&heights).filter(|(_, h)| *h == max);
        let top = tops.next()?.0.clone();
        tops.next().is_none().then_some(top)
    }

    /// Σ cᵢ ωᵢ in ambient coordinates.
    pub fn omega_to_coords(&self, coefficients: &[Rational]) -> Result<Vector> {
        if coefficients.len() != self.rank() {
            return Err(Error::Dimension { expected: self.rank(), got: coefficients.len() });
        }
        let mut v = Vector::zeros(self.dim);
        for (c, w) in coefficients.iter().zip(&self.fundamental) {
            v = v.add_scaled(c, w);
        }
        Ok(v)
    }

    /// Weyl dimension formula ∏_{α>0} (λ+ρ,α)/(ρ,α).
    pub fn weyl_dim(&self, lambda: &Vector) -> Result<u128> {
        if lambda.len() != self.dim {
            return Err(Error::Dimension { expected: self.dim, got: lambda.len() });
        }
        if !(self.is_dominant(lambda) && self.is_integral(lambda)) {
            return Err(Error::NotDominantIntegral { weight: lambda.to_string() });
        }
        let shifted = lambda + &self.rho;
        let value: Rational = self
            .positive
            .iter()
            .map(|a| shifted.dot(a) / self.rho.dot(a))
            .product();
        debug_assert!(value.is_integer());
        let n = value
            .to_i64()
            .and_then(|n| u128::try_from(n).ok())
            .or_else(|| value.numer().to_string().parse().ok())
            .ok_or_else(|| Error::Unsupported(format!("dimension {value} out of range")))?;
        Ok(n)
    }

    /// Eigenvalue ⟨λ, λ+2ρ⟩ of the Casimir element on the module of highest weight λ.
    pub fn casimir_eigenvalue(&self, lambda: &Vector, normalization: Normalization) -> Result<Rational> {
        if lambda.len() != self.dim {
            return Err(Error::Dimension { expected: self.dim, got: lambda.len() });
        }
        let two_rho = self.rho.scale(&Rational::from_int(2));
        let standard = lambda.dot(&(lambda + &two_rho));
        match normalization {
            Normalization::Standard => Ok(standard),
            Normalization::Killing => {
                let theta = self.highest_root().ok_or_else(|| {
                    Error::Unsupported(format!(
                        "{}: the Killing normalization needs an irreducible system",
                        self.label
                    ))
                })?;
                let adjoint = theta.dot(&(&theta + &two_rho));
                Ok(standard / adjoint)
            }
        }
    }
}

fn coroot_pairing(lambda: &Vector, alpha: &Vector) -> Rational {
    Rational::from_int(2) * lambda.dot(alpha) / alpha.dot(alpha)
}

fn simple_coefficients(v: &Vector, simple: &[Vector], fundamental: &[Vector]) -> Vec<Rational> {
    simple
        .iter()
        .zip(fundamental)
        .map(|(a, w)| Rational::from_int(2) * v.dot(w) / a.dot(a))
        .collect()
}

/// Shorthand for [`RootSystem::new`].
pub fn make_root_system(ty: CartanType) -> Result<RootSystem> {
    RootSystem::new(ty)
}

#[cfg(test)]
mod tests;
