//! ASCII cell notation for table entries.
//!
//! Weights: `0`, `(4,3,2,1)`, `1/2(1,1,...,1)`, `((3,2,1),(1,-1))`,
//! `(0,(2,-2))`. A `...` between entries continues the arithmetic
//! progression of the two entries before it until the factor's dimension is
//! filled. Words: `s(e1+e4)s(e2)s(f1-f2)`, where `e`/`f`/`g` index factors
//! 0/1/2 and other identifiers name roots listed with the record.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::rational::Rational;
use crate::rootsys::{FactorRoot, KSpace, Weight};
use crate::weyl::WeylWord;

const FACTOR_LETTERS: [char; 3] = ['e', 'f', 'g'];

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse(format!("{:?} at column {}: {}", self.src, self.pos + 1, msg.into()))
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += self.rest().chars().next().map_or(0, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.err(format!("expected {s:?}")))
        }
    }

    fn done(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.err("unexpected trailing input"))
        }
    }

    /// `-?digits(/digits)?`
    fn rational(&mut self) -> Result<Rational> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut i = self.pos;
        if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
            i += 1;
        }
        let digits = |mut i: usize| {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            i
        };
        let j = digits(i);
        if j == i {
            return Err(self.err("expected a number"));
        }
        let mut end = j;
        if end < bytes.len() && bytes[end] == b'/' {
            let k = digits(end + 1);
            if k > end + 1 {
                end = k;
            }
        }
        self.pos = end;
        self.src[start..end].parse().map_err(|_| {
            self.pos = start;
            self.err("malformed number")
        })
    }

    fn at_number(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '-' || c == '+')
    }
}

enum Entry {
    Value(Rational),
    Ellipsis,
}

/// `[scalar] ( entries )` or `0`, expanded to `dim` coordinates.
fn factor_vector(c: &mut Cursor<'_>, dim: usize) -> Result<Vector> {
    if c.peek() != Some('(') {
        let start = c.pos;
        let scalar = c.rational()?;
        if c.peek() != Some('(') {
            if scalar.is_zero() {
                return Ok(Vector::zeros(dim));
            }
            c.pos = start;
            return Err(c.err("a bare number other than 0 is not a vector"));
        }
        return Ok(factor_vector(c, dim)?.scale(&scalar));
    }
    c.expect("(")?;
    let mut entries = Vec::new();
    loop {
        if c.eat("...") {
            entries.push(Entry::Ellipsis);
        } else {
            entries.push(Entry::Value(c.rational()?));
        }
        if c.eat(")") {
            break;
        }
        c.expect(",")?;
    }
    expand(c, entries, dim)
}

fn expand(c: &Cursor<'_>, entries: Vec<Entry>, dim: usize) -> Result<Vector> {
    let gaps = entries.iter().filter(|e| matches!(e, Entry::Ellipsis)).count();
    let values = || {
        entries.iter().filter_map(|e| match e {
            Entry::Value(v) => Some(v.clone()),
            Entry::Ellipsis => None,
        })
    };
    if gaps == 0 {
        let v: Vec<Rational> = values().collect();
        if v.len() != dim {
            return Err(c.err(format!("expected {dim} coordinates, found {}", v.len())));
        }
        return Ok(Vector(v));
    }
    if gaps > 1 {
        return Err(c.err("at most one ellipsis per vector"));
    }
    let at = entries.iter().position(|e| matches!(e, Entry::Ellipsis)).unwrap();
    let head: Vec<Rational> = values().take(at).collect();
    let tail: Vec<Rational> = values().skip(at).collect();
    if head.len() < 2 || tail.is_empty() {
        return Err(c.err("an ellipsis needs two entries before it and one after"));
    }
    let known = head.len() + tail.len();
    if dim < known {
        return Err(c.err(format!("expected {dim} coordinates, found at least {known}")));
    }
    let step = &head[head.len() - 1] - &head[head.len() - 2];
    let mut out = head.clone();
    for _ in 0..dim - known {
        let next = out.last().unwrap() + &step;
        out.push(next);
    }
    if (out.last().unwrap() + &step) != tail[0] {
        return Err(c.err(format!("ellipsis does not reach {} in {dim} coordinates", tail[0])));
    }
    out.extend(tail);
    Ok(Vector(out))
}

fn split_center(space: &KSpace, factors: Vec<Vector>) -> Weight {
    Weight::new(factors, Vector::zeros(space.center_dim()))
}

/// Parses a weight cell for the semisimple part of `space`.
pub fn parse_weight(cell: &str, space: &KSpace) -> Result<Weight> {
    let mut c = Cursor::new(cell);
    let dims: Vec<usize> = space.factors().iter().map(|f| f.dim()).collect();
    let w = if dims.len() == 1 {
        let v = factor_vector(&mut c, dims[0])?;
        split_center(space, vec![v])
    } else {
        if c.peek() != Some('(') {
            let start = c.pos;
            if c.rational()?.is_zero() && c.peek().is_none() {
                return Ok(space.zero());
            }
            c.pos = start;
            return Err(c.err("expected one entry per factor"));
        }
        c.expect("(")?;
        let mut factors = Vec::new();
        for (i, &d) in dims.iter().enumerate() {
            if i > 0 {
                c.expect(",")?;
            }
            factors.push(factor_vector(&mut c, d)?);
        }
        c.expect(")")?;
        split_center(space, factors)
    };
    c.done()?;
    Ok(w)
}

/// Parses a word cell; `named` maps identifiers such as `eta1` to vectors of factor 0.
pub fn parse_word(cell: &str, space: &KSpace, named: &BTreeMap<String, Vector>) -> Result<WeylWord> {
    let mut c = Cursor::new(cell);
    let mut letters = Vec::new();
    if c.eat("1") {
        c.done()?;
        return Ok(WeylWord::identity());
    }
    while c.peek().is_some() {
        c.expect("s(")?;
        letters.push(root_expr(&mut c, space, named)?);
        c.expect(")")?;
    }
    WeylWord::new(space, letters)
}

fn identifier(c: &mut Cursor<'_>) -> String {
    c.skip_ws();
    let id: String = c.rest().chars().take_while(|ch| ch.is_ascii_alphanumeric()).collect();
    c.pos += id.len();
    id
}

fn root_expr(c: &mut Cursor<'_>, space: &KSpace, named: &BTreeMap<String, Vector>) -> Result<FactorRoot> {
    let mut factor: Option<usize> = None;
    let mut acc: Option<Vector> = None;
    let mut first = true;
    loop {
        let sign = if c.eat("+") {
            Rational::one()
        } else if c.eat("-") {
            Rational::from_int(-1)
        } else if first {
            Rational::one()
        } else {
            break;
        };
        first = false;
        let coeff = if c.at_number() { c.rational()? } else { Rational::one() };
        let start = c.pos;
        let id = identifier(c);
        let (f, v) = if let Some(v) = named.get(&id) {
            (0, v.clone())
        } else {
            let mut chars = id.chars();
            let letter = chars.next().ok_or_else(|| c.err("expected a basis vector"))?;
            let f = FACTOR_LETTERS
                .iter()
                .position(|&l| l == letter)
                .ok_or_else(|| c.err(format!("unknown symbol {id:?}")))?;
            let index: usize = chars.as_str().parse().map_err(|_| c.err(format!("bad index in {id:?}")))?;
            let dim = space
                .factors()
                .get(f)
                .ok_or_else(|| c.err(format!("{letter} refers to a missing factor")))?
                .dim();
            if index == 0 || index > dim {
                c.pos = start;
                return Err(c.err(format!("{id} out of range 1..={dim}")));
            }
            (f, Vector::unit(dim, index - 1))
        };
        if factor.is_some_and(|g| g != f) {
            c.pos = start;
            return Err(c.err("a root cannot mix factors"));
        }
        factor = Some(f);
        let term = v.scale(&(sign * coeff));
        acc = Some(match acc {
            Some(a) => &a + &term,
            None => term,
        });
        if c.peek() == Some(')') {
            break;
        }
    }
    let factor = factor.ok_or_else(|| c.err("empty root"))?;
    Ok(FactorRoot::new(factor, acc.unwrap()))
}

/// Inverse of [`parse_weight`] for concrete values (no ellipsis).
pub fn format_weight(w: &Weight) -> String {
    fn factor(v: &Vector) -> String {
        if v.is_zero() {
            "0".into()
        } else {
            v.to_string()
        }
    }
    if w.is_ss_zero() {
        return "0".into();
    }
    if w.factors.len() == 1 {
        return factor(&w.factors[0]);
    }
    format!("({})", w.factors.iter().map(factor).collect::<Vec<_>>().join(","))
}

/// Word cell for a word whose letters are integral combinations of basis vectors.
pub fn format_word(word: &WeylWord) -> String {
    if word.is_empty() {
        return "1".into();
    }
    word.letters()
        .iter()
        .map(|l| {
            let letter = FACTOR_LETTERS.get(l.factor).copied().unwrap_or('?');
            let mut s = String::new();
            for (i, x) in l.root.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let sign = if x.is_negative() { "-" } else if s.is_empty() { "" } else { "+" };
                let mag = x.abs();
                let coeff = if mag == Rational::one() { String::new() } else { mag.to_string() };
                s.push_str(&format!("{sign}{coeff}{letter}{}", i + 1));
            }
            format!("s({s})")
        })
        .collect()
}

const GREEK: &[&str] = &["alpha", "beta", "eta", "mu", "omega", "rho", "xi"];

/// LaTeX form of an ASCII cell: `...` becomes `\cdots`, basis vectors and
/// named roots get subscripts.
pub fn cell_to_latex(cell: &str) -> String {
    let mut out = String::new();
    let mut chars = cell.chars().peekable();
    while let Some(ch) = chars.next() {
        if ch == '.' && cell_rest_starts(&mut chars, "..") {
            out.push_str("\\cdots");
            continue;
        }
        if ch.is_ascii_alphabetic() && ch != 's' {
            let mut id = String::from(ch);
            while let Some(&n) = chars.peek() {
                if n.is_ascii_alphabetic() {
                    id.push(n);
                    chars.next();
                } else {
                    break;
                }
            }
            let mut digits = String::new();
            while let Some(&n) = chars.peek() {
                if n.is_ascii_alphanumeric() {
                    digits.push(n);
                    chars.next();
                } else {
                    break;
                }
            }
            let (head, digits) = if GREEK.contains(&id.as_str()) {
                (format!("\\{id}"), digits)
            } else {
                // `en`, `fm`: basis vector with a symbolic index.
                let (h, idx) = id.split_at(1);
                (h.to_string(), format!("{idx}{digits}"))
            };
            if digits.is_empty() {
                out.push_str(&head);
            } else {
                out.push_str(&format!("{head}_{{{digits}}}"));
            }
            continue;
        }
        out.push(ch);
    }
    format!("${out}$")
}

fn cell_rest_starts(chars: &mut std::iter::Peekable<std::str::Chars<'_>>, s: &str) -> bool {
    let probe: String = chars.clone().take(s.len()).collect();
    if probe == s {
        for _ in 0..s.len() {
            chars.next();
        }
        true
    } else {
        false
    }
}

/// Inverse of [`cell_to_latex`].
pub fn latex_to_cell(latex: &str) -> String {
    let s = latex.trim().trim_start_matches('$').trim_end_matches('$');
    let s = s.replace("\\cdots", "...");
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(ch) = chars.next() {
        match ch {
            '\\' => {}
            '_' => {
                if chars.peek() == Some(&'{') {
                    chars.next();
                    for n in chars.by_ref() {
                        if n == '}' {
                            break;
                        }
                        out.push(n);
                    }
                }
            }
            _ => out.push(ch),
        }
    }
    out
}
