//! Elements of `W(k_ss)` that carry the ladder line back into the dominant
//! chamber infinitely often.

use std::fmt;

use super::orbit::{self, dot, reflect_row, Frame};
use super::{check_budget, orthogonal_subsystem, word_matrix, WeylElement, WeylWord};
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::rootsys::{KSpace, RootSystem, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    /// Filter the whole group.
    Brute,
    /// Search only `W_β ∪ w_l·W_β`.
    #[default]
    Reduced,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Brute => "brute",
            Strategy::Reduced => "reduced",
        })
    }
}

impl std::str::FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Strategy::Brute),
            "reduced" => Ok(Strategy::Reduced),
            _ => Err(Error::InvalidParameter(format!("unknown strategy {s:?} (brute|reduced)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinePreserver {
    /// `w·ρ`, which determines `w`.
    pub rho_image: Weight,
    pub word: WeylWord,
    pub element: WeylElement,
}

#[derive(Debug, Clone)]
pub struct LinePreservers {
    /// Sorted by `rho_image`.
    pub elements: Vec<LinePreserver>,
    /// Number of group elements examined.
    pub candidates: u128,
}

impl LinePreservers {
    pub fn contains(&self, e: &WeylElement) -> bool {
        self.elements.iter().any(|p| &p.element == e)
    }
}

#[derive(Clone, Copy)]
struct Flags {
    dominant: bool,
    antidominant: bool,
}

/// Survivors of one factor: ρ-image key plus the sign of `w·β`.
struct FactorHits {
    frame: Frame,
    hits: Vec<(Vec<i64>, Flags)>,
    count: u128,
}

/// Evaluates the per-factor conditions on blocks `[w·ρ, w·β, w·ξ₀]`.
fn evaluate(frame: &Frame, blocks: &[i64]) -> Option<(Vec<i64>, Flags)> {
    let d = frame.dim;
    let (rho, rest) = blocks.split_at(d);
    let (beta, xi) = rest.split_at(d);
    let dominant = frame.simple.iter().all(|a| dot(beta, a) >= 0);
    let antidominant = frame.simple.iter().all(|a| dot(beta, a) <= 0);
    if !(dominant || antidominant) {
        return None;
    }
    let xi_ok = frame
        .positive
        .iter()
        .all(|a| dot(beta, a) != 0 || dot(xi, a) >= 0);
    xi_ok.then(|| (rho.to_vec(), Flags { dominant, antidominant }))
}

fn brute_factor(rs: &RootSystem, beta: &Vector, xi: &Vector) -> Result<FactorHits> {
    let frame = Frame::new(rs, &[rs.rho(), beta, xi])?;
    let mut start = frame.to_hat(rs.rho())?;
    start.extend(frame.to_hat(beta)?);
    start.extend(frame.to_hat(xi)?);
    let mut hits = Vec::new();
    let count = orbit::walk(frame.dim, &frame.simple, start, |row| hits.extend(evaluate(&frame, row)));
    Ok(FactorHits { frame, hits, count })
}

fn reduced_factor(rs: &RootSystem, beta: &Vector, xi: &Vector) -> Result<FactorHits> {
    let sub = orthogonal_subsystem(rs, beta)?;
    let rho_sub = sub.system().rho().clone();
    let frame = Frame::new(rs, &[&rho_sub, rs.rho(), beta, xi])?;
    let gens: Vec<Vec<i64>> = sub.simple_roots().iter().map(|r| frame.root_hat(r)).collect::<Result<_>>()?;
    let w_l: Vec<Vec<i64>> =
        super::longest_element(rs).letters().iter().map(|l| frame.root_hat(&l.root)).collect::<Result<_>>()?;
    let w_l_norms: Vec<i64> = w_l.iter().map(|g| dot(g, g)).collect();
    let with_coset = !beta.is_zero();

    let mut start = frame.to_hat(&rho_sub)?;
    for v in [rs.rho(), beta, xi] {
        start.extend(frame.to_hat(v)?);
    }
    let d = frame.dim;
    let mut hits = Vec::new();
    let mut buf = Vec::new();
    let count = orbit::walk(d, &gens, start, |row| {
        hits.extend(evaluate(&frame, &row[d..]));
        if with_coset {
            buf.clear();
            buf.extend_from_slice(&row[d..]);
            for (g, &n) in w_l.iter().zip(&w_l_norms).rev() {
                reflect_row(&mut buf, d, g, n);
            }
            hits.extend(evaluate(&frame, &buf));
        }
    });
    let count = if with_coset { 2 * count } else { count };
    Ok(FactorHits { frame, hits, count })
}

/// `{w ∈ W(k_ss) : w·β ∈ L₊ ∪ −L₊ and (α, w·ξ₀) ≥ 0 for every α ∈ Δ⁺ with (α, w·β) = 0}`,
/// where `L₊` is the dominant chamber. Only the semisimple parts of `beta`
/// and `xi0` are used.
pub fn line_preservers(
    space: &KSpace,
    beta: &Weight,
    xi0: &Weight,
    strategy: Strategy,
    budget: u128,
) -> Result<LinePreservers> {
    space.conforms(beta)?;
    space.conforms(xi0)?;
    if beta.is_ss_zero() {
        return Err(Error::ZeroVector);
    }
    let sizes: Vec<u128> = match strategy {
        Strategy::Brute => space.types().iter().map(|t| t.weyl_order()).collect(),
        Strategy::Reduced => space
            .factors()
            .iter()
            .zip(&beta.factors)
            .map(|(f, b)| {
                let o = orthogonal_subsystem(f, b)?.order();
                Ok(if b.is_zero() { o } else { 2 * o })
            })
            .collect::<Result<_>>()?,
    };
    let total = sizes.iter().try_fold(1u128, |a, &b| a.checked_mul(b)).unwrap_or(u128::MAX);
    check_budget(total, budget)?;

    let per_factor: Vec<FactorHits> = space
        .factors()
        .iter()
        .zip(beta.factors.iter().zip(&xi0.factors))
        .map(|(f, (b, x))| match strategy {
            Strategy::Brute => brute_factor(f, b, x),
            Strategy::Reduced => reduced_factor(f, b, x),
        })
        .collect::<Result<_>>()?;

    // Cartesian combination: every factor dominant, or every factor antidominant.
    let mut combos: Vec<(Vec<usize>, Flags)> =
        vec![(Vec::new(), Flags { dominant: true, antidominant: true })];
    for fh in &per_factor {
        let mut next = Vec::new();
        for (idx, flags) in &combos {
            for (j, (_, f)) in fh.hits.iter().enumerate() {
                let merged = Flags {
                    dominant: flags.dominant && f.dominant,
                    antidominant: flags.antidominant && f.antidominant,
                };
                if merged.dominant || merged.antidominant {
                    let mut idx = idx.clone();
                    idx.push(j);
                    next.push((idx, merged));
                }
            }
        }
        combos = next;
    }

    let mut elements: Vec<LinePreserver> = combos
        .into_iter()
        .map(|(idx, _)| {
            let mut word = WeylWord::identity();
            let mut blocks = Vec::new();
            let mut rho_image = Weight::new(Vec::new(), Vector::zeros(space.center_dim()));
            for (i, (fh, j)) in per_factor.iter().zip(idx).enumerate() {
                let rs = space.factor(i);
                let key = &fh.hits[j].0;
                let letters = orbit::descent_word(&fh.frame, key)
                    .into_iter()
                    .map(|k| rs.simple_roots()[k].clone())
                    .collect();
                let w = WeylWord::from_roots(i, letters);
                blocks.push(word_matrix(rs, &w));
                word = word.then(&w);
                rho_image.factors.push(fh.frame.vector_from_hat(key));
            }
            LinePreserver { rho_image, word, element: WeylElement::from_blocks(blocks) }
        })
        .collect();
    elements.sort_by(|a, b| a.rho_image.cmp(&b.rho_image));
    let candidates = per_factor.iter().map(|f| f.count).product();
    Ok(LinePreservers { elements, candidates })
}
