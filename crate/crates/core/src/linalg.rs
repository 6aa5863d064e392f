//! Small dense exact vectors and matrices over [`Rational`].

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector(pub Vec<Rational>);

impl Vector {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![Rational::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Vector::zeros(n);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector(xs.iter().map(|&x| Rational::from_int(x)).collect())
    }

    /// `(numerator, denominator)` pairs.
    pub fn from_fracs(xs: &[(i64, i64)]) -> Self {
        Vector(xs.iter().map(|&(n, d)| Rational::new(n, d)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self + c * other`
    pub fn add_scaled(&self, c: &Rational, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + &(c * b)).collect())
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().sum()
    }

    /// If `self = c * other` for some rational `c`, returns `c`.
    /// Returns `None` when `other` is zero and `self` is not.
    pub fn multiple_of(&self, other: &Vector) -> Option<Rational> {
        let pivot = other.0.iter().position(|x| !x.is_zero());
        let Some(p) = pivot else {
            return if self.is_zero() { Some(Rational::zero()) } else { None };
        };
        let c = &self.0[p] / &other.0[p];
        (other.scale(&c) == *self).then_some(c)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Index<usize> for Vector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.len(), rhs.len());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.len(), rhs.len());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        -&self
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vector]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vector::len);
        let mut m = Matrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, x) in row.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    /// The orthogonal reflection `x -> x - 2 (x,a)/(a,a) a` in the standard form.
    pub fn reflection(a: &Vector) -> Self {
        let n = a.len();
        let norm = a.dot(a);
        let two = Rational::from_int(2);
        let mut m = Matrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                let t = &(&two * &a[i]) * &a[j] / &norm;
                m[(i, j)] = &m[(i, j)] - &t;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(v.len(), self.cols);
        Vector(
            (0..self.rows)
                .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
                .collect(),
        )
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows)
    }

    /// Determinant by fraction-exact elimination.
    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        let mut a = self.clone();
        let n = self.rows;
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                a.swap_rows(p, col);
                det = -det;
            }
            let pivot = a[(col, col)].clone();
            det *= &pivot;
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let f = &a[(r, col)] / &pivot;
                for c in col..n {
                    let t = &f * &a[(col, c)];
                    a[(r, c)] = &a[(r, c)] - &t;
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(p, row);
            let inv = self[(row, col)].recip();
            for c in 0..self.cols {
                self[(row, c)] = &self[(row, c)] * &inv;
            }
            for r in 0..self.rows {
                if r != row && !self[(r, col)].is_zero() {
                    let f = self[(r, col)].clone();
                    for c in 0..self.cols {
                        let t = &f * &self[(row, c)];
                        self[(r, c)] = &self[(r, c)] - &t;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Vec<Vector> {
        let mut r = self.clone();
        let pivots = r.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = Vector::zeros(self.cols);
                x[f] = Rational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    x[p] = -&r[(i, f)];
                }
                x
            })
            .collect()
    }

    /// Solves `self * x = b`; `None` if inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &Vector) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = Vector::zeros(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug[(i, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(inv)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows);
        let mut m = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a * &rhs[(k, j)];
                    m[(i, j)] += t;
                }
            }
        }
        m
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            writeln!(f, "  {}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Orthogonal basis (Gram-Schmidt, unnormalized) of the span of `vs`.
pub fn orthogonal_basis(vs: &[Vector]) -> Vec<Vector> {
    let mut basis: Vec<Vector> = Vec::new();
    for v in vs {
        let mut w = v.clone();
        for b in &basis {
            let c = w.dot(b) / b.dot(b);
            w = w.add_scaled(&-c, b);
        }
        if !w.is_zero() {
            basis.push(w);
        }
    }
    basis
}
