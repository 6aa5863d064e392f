//! Disjointness of ladders `{μ0 + mβ : m ∈ ℕ}` after canonicalization.

use std::collections::HashMap;

use num_integer::Integer;

use crate::linalg::{Matrix, Vector};
use crate::rational::Rational;
use crate::registry::MinimalModule;
use crate::rootsys::KSpace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairVerdict {
    /// No `(m, n) ∈ ℕ²` gives a common canonical weight.
    Disjoint(String),
    /// Rungs `m` and `n` coincide.
    Collide(i64, i64),
}

fn canon(space: &KSpace, w: &crate::rootsys::Weight) -> Vector {
    space.trace_free_canonical(w).flatten()
}

fn as_small(x: &Rational) -> Option<i64> {
    x.is_integer().then(|| x.to_i64()).flatten()
}

/// Exact certificate for two ladders: solves `A + mB = A' + nB'` over `ℚ`
/// and inspects the lattice points of the solution set.
pub fn pair_certificate(space: &KSpace, a: &MinimalModule, b: &MinimalModule) -> PairVerdict {
    let (x0, x1) = (canon(space, &a.mu0), canon(space, &a.beta));
    let (y0, y1) = (canon(space, &b.mu0), canon(space, &b.beta));
    let rows = x0.len();
    let mut m = Matrix::zeros(rows, 2);
    for i in 0..rows {
        m[(i, 0)] = x1[i].clone();
        m[(i, 1)] = -&y1[i];
    }
    let rhs = &y0 - &x0;
    let Some(sol) = m.solve(&rhs) else {
        return PairVerdict::Disjoint("no rational solution".into());
    };
    let null = m.nullspace();
    match null.len() {
        0 => match (as_small(&sol[0]), as_small(&sol[1])) {
            (Some(p), Some(q)) if p >= 0 && q >= 0 => PairVerdict::Collide(p, q),
            _ => PairVerdict::Disjoint(format!("unique rational solution (m,n)=({},{}) outside N^2", sol[0], sol[1])),
        },
        1 => line_points(&sol, &null[0]),
        _ => {
            if rhs.is_zero() {
                PairVerdict::Collide(0, 0)
            } else {
                PairVerdict::Disjoint("no rational solution".into())
            }
        }
    }
}

/// Lattice points of `(m0, n0) + t(u, v)` in `ℕ²`.
fn line_points(sol: &Vector, dir: &Vector) -> PairVerdict {
    // Primitive integer direction with u > 0.
    let den = dir[0].denom().lcm(dir[1].denom());
    let scaled: Vec<Rational> = dir.iter().map(|x| x * &Rational::from(den.clone())).collect();
    let g = scaled[0].gcd(&scaled[1]);
    let mut u = (&scaled[0] / &g).to_i64().expect("small direction");
    let mut v = (&scaled[1] / &g).to_i64().expect("small direction");
    if u < 0 {
        u = -u;
        v = -v;
    }
    let (m0, n0) = (&sol[0], &sol[1]);
    let slope = Rational::new(v, u);
    let n_at = |m: i64| n0 + &(&(Rational::from_int(m) - m0) * &slope);
    let no_points = || {
        PairVerdict::Disjoint(format!(
            "solutions (m,n)=({m0},{n0})+t({u},{v}) contain no point of N^2"
        ))
    };
    if u == 0 || v == 0 {
        return no_points();
    }
    if v > 0 {
        // Unbounded in the positive quadrant: any lattice point shifts into it.
        for m in 0..u {
            let n = n_at(m);
            if n.is_integer() {
                let n = n.to_i64().expect("small rung");
                let k = if n < 0 { (-n + v - 1) / v } else { 0 };
                return PairVerdict::Collide(m + k * u, n + k * v);
            }
        }
        return no_points();
    }
    // v < 0: the segment inside the quadrant is bounded by n(m) >= 0.
    let m_max = m0 - &(n0 / &slope);
    let Some(bound) = m_max.floor().to_i64() else { return no_points() };
    for m in 0..=bound {
        let n = n_at(m);
        if n.is_integer() && !n.is_negative() {
            return PairVerdict::Collide(m, n.to_i64().expect("small rung"));
        }
    }
    no_points()
}

/// First coincidence among rungs `0..=rungs`, as `(module, rung, module, rung)`.
pub fn sweep(space: &KSpace, modules: &[MinimalModule], rungs: usize) -> Option<(usize, usize, usize, usize)> {
    let mut seen: HashMap<Vector, (usize, usize)> = HashMap::new();
    for (i, m) in modules.iter().enumerate() {
        for k in 0..=rungs {
            let w = m.mu0.add_scaled(&Rational::from_int(k as i64), &m.beta);
            if let Some(&(j, l)) = seen.get(&canon(space, &w)) {
                if j != i {
                    return Some((j, l, i, k));
                }
            } else {
                seen.insert(canon(space, &w), (i, k));
            }
        }
    }
    None
}
