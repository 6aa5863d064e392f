//! Weyl groups: words of reflections, exact matrix elements, longest
//! elements, root subsystems orthogonal to a weight, and orbit enumeration.

mod orbit;
mod preservers;

pub use preservers::{line_preservers, LinePreserver, LinePreservers, Strategy};

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::rational::Rational;
use crate::rootsys::{CartanType, FactorRoot, KSpace, RootSystem, Weight};
use orbit::Frame;

/// Default limit on the number of group elements an exhaustive walk may visit.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// A product of root reflections. The rightmost letter acts first, so the
/// word `s_a s_b` sends `λ` to `s_a(s_b(λ))`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylWord {
    letters: Vec<FactorRoot>,
}

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord::default()
    }

    /// Builds a word, replacing each letter by the root of its factor that is
    /// a positive multiple of it.
    pub fn new(space: &KSpace, letters: Vec<FactorRoot>) -> Result<Self> {
        let letters = letters
            .into_iter()
            .map(|l| {
                let f = space
                    .factors()
                    .get(l.factor)
                    .ok_or_else(|| Error::NotARoot(format!("no factor {} in {space}", l.factor)))?;
                if l.root.len() != f.dim() {
                    return Err(Error::Dimension { expected: f.dim(), got: l.root.len() });
                }
                let root = f
                    .root_along(&l.root)
                    .ok_or_else(|| Error::NotARoot(format!("{} in factor {} ({})", l.root, l.factor, f.label())))?;
                Ok(FactorRoot::new(l.factor, root.clone()))
            })
            .collect::<Result<_>>()?;
        Ok(WeylWord { letters })
    }

    /// Letters of a single root system, tagged with `factor`.
    fn from_roots(factor: usize, roots: Vec<Vector>) -> Self {
        WeylWord { letters: roots.into_iter().map(|r| FactorRoot::new(factor, r)).collect() }
    }

    pub fn letters(&self) -> &[FactorRoot] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The same letters moved to factor `factor`.
    pub fn on_factor(&self, factor: usize) -> Self {
        WeylWord {
            letters: self.letters.iter().map(|l| FactorRoot::new(factor, l.root.clone())).collect(),
        }
    }

    /// `self · other`
    pub fn then(&self, other: &WeylWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        WeylWord { letters }
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for l in &self.letters {
            write!(f, "s[{}]{}", l.factor, l.root)?;
        }
        Ok(())
    }
}

/// A Weyl group element as one exact matrix per factor; the center is fixed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    blocks: Vec<Matrix>,
}

impl WeylElement {
    pub fn identity(space: &KSpace) -> Self {
        WeylElement { blocks: space.factors().iter().map(|f| Matrix::identity(f.dim())).collect() }
    }

    pub fn from_blocks(blocks: Vec<Matrix>) -> Self {
        WeylElement { blocks }
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.iter().all(Matrix::is_identity)
    }

    /// `self · other` (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement { blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a * b).collect() }
    }

    pub fn apply(&self, lambda: &Weight) -> Weight {
        Weight {
            factors: self.blocks.iter().zip(&lambda.factors).map(|(m, v)| m.apply(v)).collect(),
            center: lambda.center.clone(),
        }
    }
}

/// Applies a word to a weight.
pub fn apply(space: &KSpace, word: &WeylWord, lambda: &Weight) -> Result<Weight> {
    let mut out = lambda.clone();
    for letter in word.letters.iter().rev() {
        let f = space
            .factors()
            .get(letter.factor)
            .ok_or_else(|| Error::NotARoot(format!("no factor {} in {space}", letter.factor)))?;
        if !f.is_root(&letter.root) {
            return Err(Error::NotARoot(format!("{} in {}", letter.root, f.label())));
        }
        out = space.reflect(&out, letter)?;
    }
    Ok(out)
}

pub fn as_element(space: &KSpace, word: &WeylWord) -> Result<WeylElement> {
    let mut e = WeylElement::identity(space);
    for letter in &word.letters {
        let f = space
            .factors()
            .get(letter.factor)
            .ok_or_else(|| Error::NotARoot(format!("no factor {} in {space}", letter.factor)))?;
        if !f.is_root(&letter.root) {
            return Err(Error::NotARoot(format!("{} in {}", letter.root, f.label())));
        }
        e.blocks[letter.factor] = &e.blocks[letter.factor] * &Matrix::reflection(&letter.root);
    }
    Ok(e)
}

pub fn equal_elements(a: &WeylElement, b: &WeylElement) -> bool {
    a == b
}

/// Matrix of a word of roots of a single system.
pub fn word_matrix(rs: &RootSystem, word: &WeylWord) -> Matrix {
    word.letters
        .iter()
        .fold(Matrix::identity(rs.dim()), |m, l| &m * &Matrix::reflection(&l.root))
}

/// Greedy descent from `-ρ` to `ρ`, always reflecting in the lowest-indexed
/// simple root with negative pairing. Returns the longest element as a word
/// in the simple roots.
fn descend_from_minus_rho(rs: &RootSystem) -> Vec<Vector> {
    let mut v = -rs.rho().clone();
    let mut word = Vec::new();
    loop {
        let pairings = rs.simple_pairings(&v);
        let Some(i) = pairings.iter().position(Rational::is_negative) else {
            break;
        };
        let a = &rs.simple_roots()[i];
        v = v.add_scaled(&-&pairings[i], a);
        word.push(a.clone());
    }
    word
}

/// The longest element of `W(rs)`, on factor 0.
pub fn longest_element(rs: &RootSystem) -> WeylWord {
    WeylWord::from_roots(0, descend_from_minus_rho(rs))
}

/// The longest element of `W(k_ss)`: the product of the factors' longest elements.
pub fn space_longest_element(space: &KSpace) -> WeylWord {
    space
        .factors()
        .iter()
        .enumerate()
        .fold(WeylWord::identity(), |w, (i, f)| w.then(&longest_element(f).on_factor(i)))
}

/// The roots of a system orthogonal to a vector, with the induced positive
/// and simple systems.
#[derive(Clone, Debug)]
pub struct Subsystem {
    parent: String,
    system: RootSystem,
    components: Vec<CartanType>,
    order: u128,
}

impl Subsystem {
    pub fn parent(&self) -> &str {
        &self.parent
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn roots(&self) -> &[Vector] {
        self.system.roots()
    }

    pub fn positive_roots(&self) -> &[Vector] {
        self.system.positive_roots()
    }

    pub fn simple_roots(&self) -> &[Vector] {
        self.system.simple_roots()
    }

    /// Cartan types of the irreducible components, largest first.
    pub fn components(&self) -> &[CartanType] {
        &self.components
    }

    /// Order of the subsystem's Weyl group.
    pub fn order(&self) -> u128 {
        self.order
    }

    /// e.g. `E7`, `A3`, `A1xA1`, or `0` for the empty subsystem.
    pub fn type_label(&self) -> String {
        if self.components.is_empty() {
            "0".into()
        } else {
            self.components.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("x")
        }
    }
}

/// Type of an irreducible component from its rank, root count and short-root count.
fn classify_component(rank: usize, roots: usize, short: usize) -> Result<CartanType> {
    let r = rank;
    let ty = if short == 0 {
        match (r, roots) {
            (6, 72) => CartanType::E6,
            (7, 126) => CartanType::E7,
            (8, 240) => CartanType::E8,
            _ if roots == r * (r + 1) => CartanType::A(r),
            _ if r >= 4 && roots == 2 * r * (r - 1) => CartanType::D(r),
            _ => return Err(Error::Unsupported(format!("rank {r} component with {roots} roots"))),
        }
    } else {
        match (r, roots) {
            (2, 12) => CartanType::G2,
            (4, 48) => CartanType::F4,
            _ if roots == 2 * r * r && short == 2 * r => CartanType::B(r),
            _ if roots == 2 * r * r && short == 2 * r * (r - 1) => CartanType::C(r),
            _ => return Err(Error::Unsupported(format!("rank {r} component with {roots} roots"))),
        }
    };
    Ok(ty)
}

/// `Δ_v = {α : (α, v) = 0}` with `Δ_v⁺ = Δ_v ∩ Δ⁺` and its indecomposable
/// elements as simple roots.
pub fn orthogonal_subsystem(rs: &RootSystem, v: &Vector) -> Result<Subsystem> {
    if v.len() != rs.dim() {
        return Err(Error::Dimension { expected: rs.dim(), got: v.len() });
    }
    let positive: Vec<Vector> =
        rs.positive_roots().iter().filter(|a| a.dot(v).is_zero()).cloned().collect();
    let set: BTreeSet<&Vector> = positive.iter().collect();
    let simple: Vec<Vector> = positive
        .iter()
        .filter(|a| !positive.iter().any(|b| set.contains(&(*a - b))))
        .cloned()
        .collect();
    let mut roots = positive.clone();
    roots.extend(positive.iter().map(|a| -a));
    let label = format!("{} ⟂ {}", rs.label(), v);
    let system = RootSystem::from_parts(label, rs.dim(), roots, simple)?;

    // Connected components of the simple roots.
    let n = system.rank();
    let mut comp: Vec<usize> = (0..n).collect();
    fn find(c: &mut Vec<usize>, i: usize) -> usize {
        if c[i] != i {
            let r = find(c, c[i]);
            c[i] = r;
        }
        c[i]
    }
    let simple = system.simple_roots();
    for i in 0..n {
        for j in i + 1..n {
            if !simple[i].dot(&simple[j]).is_zero() {
                let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                comp[a] = b;
            }
        }
    }
    let mut components = Vec::new();
    let mut order: u128 = 1;
    let roots_of: Vec<usize> = system
        .positive_roots()
        .iter()
        .map(|r| {
            let c = system.simple_coefficients(r);
            let i = c.iter().position(|x| !x.is_zero()).expect("nonzero root");
            find(&mut comp, i)
        })
        .collect();
    let leaders: BTreeSet<usize> = (0..n).map(|i| find(&mut comp, i)).collect();
    for leader in leaders {
        let rank = (0..n).filter(|&i| find(&mut comp, i) == leader).count();
        let members: Vec<&Vector> = system
            .positive_roots()
            .iter()
            .zip(&roots_of)
            .filter(|(_, &c)| c == leader)
            .map(|(r, _)| r)
            .collect();
        let max_len = members.iter().map(|r| r.dot(r)).max().expect("nonempty component");
        let short = members.iter().filter(|r| r.dot(r) < max_len).count();
        let ty = classify_component(rank, 2 * members.len(), 2 * short)?;
        order *= ty.weyl_order();
        components.push(ty);
    }
    components.sort_by(|a, b| b.rank().cmp(&a.rank()).then(a.cmp(b)));
    Ok(Subsystem { parent: rs.label().to_string(), system, components, order })
}

/// Longest element of the subsystem's Weyl group, as a word over its simple
/// roots tagged with `factor`.
pub fn subgroup_longest(subsystem: &Subsystem, factor: usize) -> WeylWord {
    WeylWord::from_roots(factor, descend_from_minus_rho(&subsystem.system))
}

/// Per-factor subsystems orthogonal to the factor components of `beta`.
pub fn space_orthogonal_subsystems(space: &KSpace, beta: &Weight) -> Result<Vec<Subsystem>> {
    space.conforms(beta)?;
    space.factors().iter().zip(&beta.factors).map(|(f, b)| orthogonal_subsystem(f, b)).collect()
}

/// `w_{β,l}`: the product over factors of the longest elements of `W_β`.
pub fn space_subgroup_longest(space: &KSpace, beta: &Weight) -> Result<WeylWord> {
    Ok(space_orthogonal_subsystems(space, beta)?
        .iter()
        .enumerate()
        .fold(WeylWord::identity(), |w, (i, s)| w.then(&subgroup_longest(s, i))))
}

/// One element produced by [`enumerate_group`].
pub struct GroupElementRef<'a> {
    rs: &'a RootSystem,
    frame: &'a Frame,
    row: &'a [i64],
}

impl GroupElementRef<'_> {
    /// `w·ρ`, which determines `w`.
    pub fn rho_image(&self) -> Vector {
        self.frame.vector_from_hat(&self.row[..self.frame.dim])
    }

    /// A word in the simple roots for this element.
    pub fn word(&self) -> WeylWord {
        let idx = orbit::descent_word(self.frame, &self.row[..self.frame.dim]);
        WeylWord::from_roots(0, idx.into_iter().map(|i| self.rs.simple_roots()[i].clone()).collect())
    }

    pub fn matrix(&self) -> Matrix {
        word_matrix(self.rs, &self.word())
    }
}

fn check_budget(order: u128, budget: u128) -> Result<()> {
    if order > budget {
        Err(Error::BudgetExceeded { order, budget })
    } else {
        Ok(())
    }
}

/// Visits every element of `W(rs)` exactly once, via the orbit of ρ.
pub fn enumerate_group(
    rs: &RootSystem,
    budget: u128,
    mut visit: impl FnMut(GroupElementRef<'_>),
) -> Result<u128> {
    let order = rs.cartan_type().map_or(0, CartanType::weyl_order);
    check_budget(order, budget)?;
    let frame = Frame::new(rs, &[rs.rho()])?;
    let start = frame.to_hat(rs.rho())?;
    Ok(orbit::walk(frame.dim, &frame.simple, start, |row| {
        visit(GroupElementRef { rs, frame: &frame, row })
    }))
}

/// Number of elements visited by [`enumerate_group`].
pub fn group_order(rs: &RootSystem, budget: u128) -> Result<u128> {
    enumerate_group(rs, budget, |_| {})
}
