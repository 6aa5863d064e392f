//! Integer-frame orbit walks.
//!
//! Every tracked vector is multiplied by a common scale `S` and every root by
//! `D_α` so that all coordinates, and every reflection coefficient
//! `2(v̂,α̂)/(α̂,α̂)`, are machine integers. A group element is a row holding
//! the images of the tracked vectors; block 0 is a regular chamber vector and
//! serves as the element's key.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::rational::Rational;
use crate::rootsys::RootSystem;

#[derive(Debug, Clone)]
pub(crate) struct Frame {
    pub dim: usize,
    scale: BigInt,
    root_scale: BigInt,
    pub simple: Vec<Vec<i64>>,
    pub positive: Vec<Vec<i64>>,
}

fn lcm_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

fn small(x: &Rational) -> Result<i64> {
    x.to_i64().ok_or_else(|| Error::Unsupported(format!("coordinate {x} exceeds the integer frame")))
}

impl Frame {
    /// Chooses the scale for the given tracked vectors of `rs`.
    pub fn new(rs: &RootSystem, tracked: &[&Vector]) -> Result<Frame> {
        let root_scale = lcm_denominators(rs.roots().iter().flat_map(|r| r.iter()));
        let mut k = BigInt::one();
        let mut dv = BigInt::one();
        for v in tracked {
            dv = dv.lcm(&lcm_denominators(v.iter()));
            for a in rs.positive_roots() {
                let p = Rational::from_int(2) * v.dot(a) / a.dot(a);
                k = k.lcm(p.denom());
            }
        }
        let scale = dv.lcm(&(k * &root_scale));
        let mut frame = Frame {
            dim: rs.dim(),
            scale,
            root_scale,
            simple: Vec::new(),
            positive: Vec::new(),
        };
        frame.simple = rs.simple_roots().iter().map(|r| frame.root_hat(r)).collect::<Result<_>>()?;
        frame.positive = rs.positive_roots().iter().map(|r| frame.root_hat(r)).collect::<Result<_>>()?;
        Ok(frame)
    }

    pub fn to_hat(&self, v: &Vector) -> Result<Vec<i64>> {
        let s = Rational::from(self.scale.clone());
        v.iter().map(|x| small(&(x * &s))).collect()
    }

    pub fn root_hat(&self, r: &Vector) -> Result<Vec<i64>> {
        let s = Rational::from(self.root_scale.clone());
        r.iter().map(|x| small(&(x * &s))).collect()
    }

    pub fn vector_from_hat(&self, v: &[i64]) -> Vector {
        let s = Rational::from(self.scale.clone());
        Vector(v.iter().map(|&x| Rational::from_int(x) / &s).collect())
    }
}

#[inline]
pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Reflects every `dim`-block of `row` in the root `g` (with `(g,g) = norm`).
#[inline]
pub(crate) fn reflect_row(row: &mut [i64], dim: usize, g: &[i64], norm: i64) {
    for block in row.chunks_exact_mut(dim) {
        let p = 2 * dot(block, g);
        if p != 0 {
            debug_assert_eq!(p % norm, 0, "reflection left the integer frame");
            let t = p / norm;
            for (x, y) in block.iter_mut().zip(g) {
                *x -= t * y;
            }
        }
    }
}

/// Layered breadth-first walk of the orbit of `start` under the reflections
/// `gens`. A child `s_g·w` is produced only when `(block0, g) > 0`, i.e. when
/// it is one step longer; duplicates within a layer are merged by block 0.
/// Calls `visit` once per group element and returns the number of elements.
pub(crate) fn walk(
    dim: usize,
    gens: &[Vec<i64>],
    start: Vec<i64>,
    mut visit: impl FnMut(&[i64]),
) -> u128 {
    let row_len = start.len();
    let norms: Vec<i64> = gens.iter().map(|g| dot(g, g)).collect();
    let mut layer = start;
    let mut count: u128 = 0;
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    while !layer.is_empty() {
        let mut next: Vec<i64> = Vec::new();
        seen.clear();
        for row in layer.chunks_exact(row_len) {
            visit(row);
            count += 1;
            for (g, &norm) in gens.iter().zip(&norms) {
                if dot(&row[..dim], g) > 0 {
                    let mut child = row.to_vec();
                    reflect_row(&mut child, dim, g, norm);
                    if !seen.contains(&child[..dim]) {
                        seen.insert(child[..dim].to_vec());
                        next.extend_from_slice(&child);
                    }
                }
            }
        }
        layer = next;
    }
    count
}

/// Simple-reflection indices `i1, …, ik` with `w = s_{i1}⋯s_{ik}`, where
/// `chamber = w·ρ`. Ties go to the lowest index.
pub(crate) fn descent_word(frame: &Frame, chamber: &[i64]) -> Vec<usize> {
    let mut v = chamber.to_vec();
    let norms: Vec<i64> = frame.simple.iter().map(|g| dot(g, g)).collect();
    let mut word = Vec::new();
    while let Some(i) = frame.simple.iter().position(|g| dot(&v, g) < 0) {
        reflect_row(&mut v, frame.dim, &frame.simple[i], norms[i]);
        word.push(i);
    }
    word
}
