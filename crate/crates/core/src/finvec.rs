//! Finite-support vectors indexed by columns, the Hamming metric, and left
//! and right scalar actions.
//!
//! Text format, one entry per line:
//!
//! ```text
//! # comment
//! (1, 0, 2) := 1
//! (0, 1, i) := -3/2+k
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::algebra::{Algebra, Scalar};
use crate::error::{Error, Result};

/// Dense length-m vector over the algebra (elements of `L = F^m`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DenseVec(pub Vec<Scalar>);

/// A column of the parity-check matrix, which doubles as a coordinate label.
///
/// Canonicity depends on the code's pivots and is checked by the code, not here.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Column(pub Vec<Scalar>);

impl DenseVec {
    pub fn zero(alg: &Algebra, m: usize) -> Self {
        DenseVec(vec![alg.zero(); m])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self, alg: &Algebra) -> bool {
        self.0.iter().all(|x| alg.is_zero(x))
    }

    pub fn add(&self, alg: &Algebra, other: &DenseVec) -> DenseVec {
        DenseVec(self.0.iter().zip(&other.0).map(|(a, b)| alg.add(a, b)).collect())
    }

    pub fn sub(&self, alg: &Algebra, other: &DenseVec) -> DenseVec {
        DenseVec(self.0.iter().zip(&other.0).map(|(a, b)| alg.sub(a, b)).collect())
    }

    /// Componentwise `α·v`.
    pub fn scale_left(&self, alg: &Algebra, alpha: &Scalar) -> DenseVec {
        DenseVec(self.0.iter().map(|x| alg.mul(alpha, x)).collect())
    }

    /// Componentwise `v·α`.
    pub fn scale_right(&self, alg: &Algebra, alpha: &Scalar) -> DenseVec {
        DenseVec(self.0.iter().map(|x| alg.mul(x, alpha)).collect())
    }

    pub fn render(&self, alg: &Algebra) -> String {
        render_tuple(alg, &self.0)
    }
}

impl Column {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.0
    }

    pub fn to_dense(&self) -> DenseVec {
        DenseVec(self.0.clone())
    }

    pub fn render(&self, alg: &Algebra) -> String {
        render_tuple(alg, &self.0)
    }

    /// Parses `(s1, s2, ...)`.
    pub fn parse(alg: &Algebra, text: &str) -> Result<Column> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::parse(format!("column `{t}`"), "expected parenthesised tuple"))?;
        let entries = inner
            .split(',')
            .map(|s| alg.parse_scalar(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Column(entries))
    }
}

fn render_tuple(alg: &Algebra, xs: &[Scalar]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| alg.format_scalar(x)).collect();
    format!("({})", parts.join(", "))
}

/// Finitely supported map from columns to nonzero scalars; zeros are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinVec {
    entries: BTreeMap<Column, Scalar>,
}

impl FinVec {
    pub fn new() -> Self {
        FinVec::default()
    }

    /// The vector `α·e_col` (empty when α = 0).
    pub fn unit(alg: &Algebra, col: Column, alpha: Scalar) -> Self {
        let mut v = FinVec::new();
        v.set(alg, col, alpha);
        v
    }

    /// Builds from entries, summing repeated columns.
    pub fn from_entries<I>(alg: &Algebra, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Column, Scalar)>,
    {
        let mut v = FinVec::new();
        for (c, x) in entries {
            alg.check(&x)?;
            for e in &c.0 {
                alg.check(e)?;
            }
            v.check_width(&c)?;
            v.accumulate(alg, c, &x);
        }
        Ok(v)
    }

    fn width(&self) -> Option<usize> {
        self.entries.keys().next().map(|c| c.len())
    }

    fn check_width(&self, c: &Column) -> Result<()> {
        match self.width() {
            Some(w) if w != c.len() => Err(Error::Domain(format!(
                "column of length {} in a vector over columns of length {w}",
                c.len()
            ))),
            _ => Ok(()),
        }
    }

    /// Sets coordinate `col` to `x`, removing it when `x` is zero.
    pub fn set(&mut self, alg: &Algebra, col: Column, x: Scalar) {
        if alg.is_zero(&x) {
            self.entries.remove(&col);
        } else {
            self.entries.insert(col, x);
        }
    }

    /// Adds `x` to coordinate `col`.
    pub fn accumulate(&mut self, alg: &Algebra, col: Column, x: &Scalar) {
        let new = match self.entries.get(&col) {
            Some(old) => alg.add(old, x),
            None => x.clone(),
        };
        self.set(alg, col, new);
    }

    pub fn get(&self, col: &Column) -> Option<&Scalar> {
        self.entries.get(col)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Column, &Scalar)> {
        self.entries.iter()
    }

    /// Support in lexicographic column order.
    pub fn support(&self) -> impl Iterator<Item = &Column> {
        self.entries.keys()
    }

    pub fn norm(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn check_compatible(&self, other: &FinVec) -> Result<()> {
        match (self.width(), other.width()) {
            (Some(a), Some(b)) if a != b => Err(Error::Domain(format!(
                "ambient mismatch: columns of length {a} and {b}"
            ))),
            _ => Ok(()),
        }
    }

    pub fn add(&self, alg: &Algebra, other: &FinVec) -> Result<FinVec> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (c, x) in &other.entries {
            out.accumulate(alg, c.clone(), x);
        }
        Ok(out)
    }

    pub fn neg(&self, alg: &Algebra) -> FinVec {
        FinVec {
            entries: self
                .entries
                .iter()
                .map(|(c, x)| (c.clone(), alg.neg(x)))
                .collect(),
        }
    }

    pub fn sub(&self, alg: &Algebra, other: &FinVec) -> Result<FinVec> {
        self.add(alg, &other.neg(alg))
    }

    /// `α·x`, coordinatewise left action.
    pub fn scale_left(&self, alg: &Algebra, alpha: &Scalar) -> FinVec {
        self.map_values(alg, |x| alg.mul(alpha, x))
    }

    /// `x·α`, coordinatewise right action.
    pub fn scale_right(&self, alg: &Algebra, alpha: &Scalar) -> FinVec {
        self.map_values(alg, |x| alg.mul(x, alpha))
    }

    /// Applies `f` to each stored value, dropping zeros.
    pub fn map_values(&self, alg: &Algebra, f: impl Fn(&Scalar) -> Scalar) -> FinVec {
        let mut out = FinVec::new();
        for (c, x) in &self.entries {
            out.set(alg, c.clone(), f(x));
        }
        out
    }

    pub fn to_text(&self, alg: &Algebra) -> String {
        let mut s = String::new();
        for (c, x) in &self.entries {
            let _ = writeln!(s, "{} := {}", c.render(alg), alg.format_scalar(x));
        }
        s
    }

    pub fn parse_text(alg: &Algebra, text: &str) -> Result<FinVec> {
        let mut entries = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let loc = || format!("line {}", lineno + 1);
            let (col, val) = line
                .split_once(":=")
                .ok_or_else(|| Error::parse(loc(), "expected `<column> := <scalar>`"))?;
            let col = Column::parse(alg, col).map_err(|e| Error::parse(loc(), e.to_string()))?;
            let val = alg
                .parse_scalar(val)
                .map_err(|e| Error::parse(loc(), e.to_string()))?;
            entries.push((col, val));
        }
        FinVec::from_entries(alg, entries)
    }
}

pub fn vec_add(alg: &Algebra, x: &FinVec, y: &FinVec) -> Result<FinVec> {
    x.add(alg, y)
}

pub fn scalar_mul_left(alg: &Algebra, alpha: &Scalar, x: &FinVec) -> FinVec {
    x.scale_left(alg, alpha)
}

pub fn scalar_mul_right(alg: &Algebra, x: &FinVec, alpha: &Scalar) -> FinVec {
    x.scale_right(alg, alpha)
}

pub fn hamming_norm(x: &FinVec) -> usize {
    x.norm()
}

pub fn hamming_distance(alg: &Algebra, x: &FinVec, y: &FinVec) -> Result<usize> {
    Ok(x.sub(alg, y)?.norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(alg: &Algebra, s: &str) -> Column {
        Column::parse(alg, s).unwrap()
    }

    #[test]
    fn add_examples() {
        let f2 = Algebra::preset("f2").unwrap();
        let e = FinVec::unit(&f2, col(&f2, "(1,0)"), Scalar::Residue(1));
        assert!(e.add(&f2, &e).unwrap().is_zero());
        assert_eq!(e.add(&f2, &FinVec::new()).unwrap(), e);
        let h = Algebra::quaternions();
        let x = FinVec::parse_text(&h, "(1, 0) := 1+i\n(0, 1) := j\n").unwrap();
        assert!(x.add(&h, &x.neg(&h)).unwrap().is_zero());
    }

    #[test]
    fn ambient_mismatch() {
        let f3 = Algebra::preset("f3").unwrap();
        let a = FinVec::unit(&f3, col(&f3, "(1,0)"), Scalar::Residue(1));
        let b = FinVec::unit(&f3, col(&f3, "(1,0,0)"), Scalar::Residue(1));
        assert!(matches!(a.add(&f3, &b), Err(Error::Domain(_))));
    }

    #[test]
    fn scalar_actions() {
        let h = Algebra::quaternions();
        let c = col(&h, "(1, i)");
        let x = FinVec::unit(&h, c.clone(), h.parse_scalar("j").unwrap());
        let i = h.parse_scalar("i").unwrap();
        assert_eq!(x.scale_left(&h, &i), FinVec::unit(&h, c.clone(), h.parse_scalar("k").unwrap()));
        assert_eq!(x.scale_right(&h, &i), FinVec::unit(&h, c, h.parse_scalar("-k").unwrap()));
        assert!(x.scale_left(&h, &h.zero()).is_zero());
        assert_eq!(x.scale_left(&h, &h.from_int(1)), x);
    }

    #[test]
    fn distance_example() {
        let f3 = Algebra::preset("f3").unwrap();
        let x = FinVec::parse_text(&f3, "(1,0) := 1\n(1,1) := 2").unwrap();
        let y = FinVec::parse_text(&f3, "(1,1) := 2\n(1,2) := 1").unwrap();
        assert_eq!(hamming_distance(&f3, &x, &y).unwrap(), 2);
        assert_eq!(hamming_distance(&f3, &x, &x).unwrap(), 0);
        assert_eq!(hamming_norm(&FinVec::new()), 0);
    }

    #[test]
    fn text_roundtrip_and_errors() {
        let o = Algebra::octonions();
        let text = "(1, e1) := 1/2-e7\n(0, 1) := e3\n";
        let v = FinVec::parse_text(&o, text).unwrap();
        assert_eq!(FinVec::parse_text(&o, &v.to_text(&o)).unwrap(), v);
        let err = FinVec::parse_text(&o, "(1, 0) := 1\n(1, 0) = 2").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        // stored zeros are dropped
        let f3 = Algebra::preset("f3").unwrap();
        let z = FinVec::parse_text(&f3, "(1,0) := 1\n(1,0) := 2").unwrap();
        assert!(z.is_zero());
    }
}
