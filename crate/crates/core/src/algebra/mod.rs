//! Exact scalar algebras: prime and Galois fields, rationals, rational
//! quaternions and octonions, and finite quasifields given by Cayley tables
//! (including isotopes of Galois fields).

mod audit;
pub mod galois;
pub mod hyper;
pub mod isotope;
pub(crate) mod literal;
mod scalar;
mod spec;
mod structure;
pub mod table;

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

pub use audit::{audit_with_jobs, axiom_audit, AuditMode, AxiomReport, Law, LawCheck};
pub use scalar::Scalar;
pub use spec::{AlgebraSpec, IsotopeSpec, SpecKind, TableSpec, PRESETS};
pub use structure::{expand_scalar, recombine, PrimeSubfield, SubfieldStructure};

use crate::error::{Error, Result};
use galois::GaloisField;
use isotope::IsotopeData;
use literal::{OCTONION_UNITS, QUATERNION_UNITS};
use table::CayleyTable;

/// Shared handle to an algebra.
pub type AlgebraRef = Arc<Algebra>;

#[derive(Clone, Debug)]
pub(crate) enum Kind {
    Prime(u64),
    Galois(GaloisField),
    Rationals,
    Quaternions,
    Octonions,
    Table(CayleyTable, Option<IsotopeData>),
}

/// A validated scalar algebra together with the spec it was built from.
#[derive(Debug)]
pub struct Algebra {
    spec: AlgebraSpec,
    name: String,
    pub(crate) kind: Kind,
    associative: OnceLock<bool>,
    commutative: OnceLock<bool>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Algebra {
    pub(crate) fn from_kind(spec: AlgebraSpec, kind: Kind) -> Self {
        let name = spec.label.clone().unwrap_or_else(|| spec.describe());
        Algebra {
            spec,
            name,
            kind,
            associative: OnceLock::new(),
            commutative: OnceLock::new(),
        }
    }

    /// Builds a built-in algebra by name (`f2`, `gf9`, `quaternions`, `gf9-isotope`, ...).
    pub fn preset(name: &str) -> Result<AlgebraRef> {
        AlgebraSpec::preset(name)?.build()
    }

    pub fn prime_field(p: u64) -> Result<AlgebraRef> {
        AlgebraSpec::prime_field(p).build()
    }

    pub fn galois_field(p: u64, poly: &[u64]) -> Result<AlgebraRef> {
        AlgebraSpec::galois_field(p, poly).build()
    }

    pub fn rationals() -> AlgebraRef {
        AlgebraSpec::simple(SpecKind::Rationals).build().expect("rationals")
    }

    pub fn quaternions() -> AlgebraRef {
        AlgebraSpec::simple(SpecKind::Quaternions).build().expect("quaternions")
    }

    pub fn octonions() -> AlgebraRef {
        AlgebraSpec::simple(SpecKind::Octonions).build().expect("octonions")
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Hex SHA-256 of the canonical JSON form of the spec.
    pub fn digest(&self) -> String {
        self.spec.digest()
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    /// Number of elements for finite algebras.
    pub fn order(&self) -> Option<u64> {
        match &self.kind {
            Kind::Prime(p) => Some(*p),
            Kind::Galois(f) => Some(f.order()),
            Kind::Table(t, _) => Some(t.order() as u64),
            _ => None,
        }
    }

    pub fn is_hypercomplex(&self) -> bool {
        matches!(self.kind, Kind::Quaternions | Kind::Octonions)
    }

    pub fn is_quaternions(&self) -> bool {
        matches!(self.kind, Kind::Quaternions)
    }

    /// All elements in index order (finite algebras only).
    pub fn elements(&self) -> Result<Vec<Scalar>> {
        let q = self
            .order()
            .ok_or_else(|| Error::Unsupported(format!("{} is infinite", self.name)))?;
        Ok((0..q as usize).map(|i| self.element(i)).collect())
    }

    pub fn nonzero_elements(&self) -> Result<Vec<Scalar>> {
        Ok(self
            .elements()?
            .into_iter()
            .filter(|x| !self.is_zero(x))
            .collect())
    }

    /// The element with index `i`; panics for infinite algebras.
    pub fn element(&self, i: usize) -> Scalar {
        match &self.kind {
            Kind::Prime(_) => Scalar::Residue(i as u64),
            Kind::Galois(f) => Scalar::Poly(f.element(i)),
            Kind::Table(..) => Scalar::Index(i),
            _ => panic!("element index on infinite algebra"),
        }
    }

    pub fn index_of(&self, x: &Scalar) -> Option<usize> {
        match (&self.kind, x) {
            (Kind::Prime(_), Scalar::Residue(r)) => Some(*r as usize),
            (Kind::Galois(f), Scalar::Poly(c)) => Some(f.index_of(c)),
            (Kind::Table(..), Scalar::Index(i)) => Some(*i),
            _ => None,
        }
    }

    /// Whether `x` is a well-formed element of this algebra.
    pub fn contains(&self, x: &Scalar) -> bool {
        match (&self.kind, x) {
            (Kind::Prime(p), Scalar::Residue(r)) => r < p,
            (Kind::Galois(f), Scalar::Poly(c)) => {
                c.len() == f.degree() && c.iter().all(|v| *v < f.p)
            }
            (Kind::Rationals, Scalar::Rational(_)) => true,
            (Kind::Quaternions, Scalar::Hyper(c)) => c.len() == 4,
            (Kind::Octonions, Scalar::Hyper(c)) => c.len() == 8,
            (Kind::Table(t, _), Scalar::Index(i)) => *i < t.order(),
            _ => false,
        }
    }

    pub fn check(&self, x: &Scalar) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::Domain(format!("{x:?} is not an element of {}", self.name)))
        }
    }

    pub fn zero(&self) -> Scalar {
        match &self.kind {
            Kind::Prime(_) => Scalar::Residue(0),
            Kind::Galois(f) => Scalar::Poly(f.zero()),
            Kind::Rationals => Scalar::Rational(BigRational::zero()),
            Kind::Quaternions => Scalar::Hyper(vec![BigRational::zero(); 4]),
            Kind::Octonions => Scalar::Hyper(vec![BigRational::zero(); 8]),
            Kind::Table(t, _) => Scalar::Index(t.zero),
        }
    }

    pub fn is_zero(&self, x: &Scalar) -> bool {
        match (&self.kind, x) {
            (Kind::Table(t, _), Scalar::Index(i)) => *i == t.zero,
            (_, Scalar::Residue(r)) => *r == 0,
            (_, Scalar::Poly(c)) => c.iter().all(|v| *v == 0),
            (_, Scalar::Rational(r)) => r.is_zero(),
            (_, Scalar::Hyper(c)) => hyper::is_zero(c),
            (_, Scalar::Index(_)) => false,
        }
    }

    /// A right unit (`x·e = x` for all x), when one exists.
    pub fn right_unit(&self) -> Option<Scalar> {
        match &self.kind {
            Kind::Table(t, _) => t.right_unit.map(Scalar::Index),
            _ => Some(self.one_unchecked()),
        }
    }

    /// A left unit (`e·x = x` for all x), when one exists.
    pub fn left_unit(&self) -> Option<Scalar> {
        match &self.kind {
            Kind::Table(t, _) => t.left_unit.map(Scalar::Index),
            _ => Some(self.one_unchecked()),
        }
    }

    /// The two-sided unit, when one exists.
    pub fn one(&self) -> Option<Scalar> {
        match (self.left_unit(), self.right_unit()) {
            (Some(l), Some(r)) if l == r => Some(l),
            _ => None,
        }
    }

    fn one_unchecked(&self) -> Scalar {
        match &self.kind {
            Kind::Prime(_) => Scalar::Residue(1),
            Kind::Galois(f) => Scalar::Poly(f.one()),
            Kind::Rationals => Scalar::Rational(BigRational::one()),
            Kind::Quaternions => Scalar::Hyper(unit_vec(4, 0)),
            Kind::Octonions => Scalar::Hyper(unit_vec(8, 0)),
            Kind::Table(..) => unreachable!(),
        }
    }

    /// Embeds an integer via repeated addition of the right unit (or the rational value).
    pub fn from_int(&self, n: i64) -> Scalar {
        match &self.kind {
            Kind::Prime(p) => Scalar::Residue(n.rem_euclid(*p as i64) as u64),
            Kind::Galois(f) => {
                let mut c = f.zero();
                c[0] = n.rem_euclid(f.p as i64) as u64;
                Scalar::Poly(c)
            }
            Kind::Rationals => Scalar::Rational(rat(n)),
            Kind::Quaternions | Kind::Octonions => {
                let mut c = vec![BigRational::zero(); if self.is_quaternions() { 4 } else { 8 }];
                c[0] = rat(n);
                Scalar::Hyper(c)
            }
            Kind::Table(..) => {
                let u = self.right_unit().unwrap_or_else(|| self.zero());
                let mut acc = self.zero();
                for _ in 0..n.unsigned_abs() {
                    acc = self.add(&acc, &u);
                }
                if n < 0 {
                    self.neg(&acc)
                } else {
                    acc
                }
            }
        }
    }

    /// Basis unit `idx` of a quaternion/octonion algebra (0 = real unit).
    pub fn basis_unit(&self, idx: usize) -> Result<Scalar> {
        let dim = match self.kind {
            Kind::Quaternions => 4,
            Kind::Octonions => 8,
            _ => {
                return Err(Error::Unsupported(format!(
                    "{} has no hypercomplex basis",
                    self.name
                )))
            }
        };
        if idx >= dim {
            return Err(Error::InvalidParameter(format!("basis index {idx} >= {dim}")));
        }
        Ok(Scalar::Hyper(unit_vec(dim, idx)))
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&self.kind, a, b) {
            (Kind::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(galois::add_mod(*x, *y, *p))
            }
            (Kind::Galois(f), Scalar::Poly(x), Scalar::Poly(y)) => Scalar::Poly(f.add(x, y)),
            (Kind::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Kind::Quaternions | Kind::Octonions, Scalar::Hyper(x), Scalar::Hyper(y)) => {
                Scalar::Hyper(hyper::add(x, y))
            }
            (Kind::Table(t, _), Scalar::Index(x), Scalar::Index(y)) => Scalar::Index(t.add[*x][*y]),
            _ => panic!("operands {a:?}, {b:?} do not belong to {}", self.name),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (&self.kind, a) {
            (Kind::Prime(p), Scalar::Residue(x)) => Scalar::Residue(galois::sub_mod(0, *x, *p)),
            (Kind::Galois(f), Scalar::Poly(x)) => Scalar::Poly(f.neg(x)),
            (Kind::Rationals, Scalar::Rational(x)) => Scalar::Rational(-x),
            (Kind::Quaternions | Kind::Octonions, Scalar::Hyper(x)) => Scalar::Hyper(hyper::neg(x)),
            (Kind::Table(t, _), Scalar::Index(x)) => Scalar::Index(t.neg(*x)),
            _ => panic!("operand {a:?} does not belong to {}", self.name),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&self.kind, a, b) {
            (Kind::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(galois::mul_mod(*x, *y, *p))
            }
            (Kind::Galois(f), Scalar::Poly(x), Scalar::Poly(y)) => Scalar::Poly(f.mul(x, y)),
            (Kind::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Kind::Quaternions | Kind::Octonions, Scalar::Hyper(x), Scalar::Hyper(y)) => {
                Scalar::Hyper(hyper::mul(x, y))
            }
            (Kind::Table(t, _), Scalar::Index(x), Scalar::Index(y)) => Scalar::Index(t.mul[*x][*y]),
            _ => panic!("operands {a:?}, {b:?} do not belong to {}", self.name),
        }
    }

    fn check_pair(&self, a: &Scalar, b: &Scalar) -> Result<()> {
        if self.contains(a) && self.contains(b) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "operands {a:?}, {b:?} are not both elements of {}",
                self.name
            )))
        }
    }

    pub fn checked_add(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        self.check_pair(a, b)?;
        Ok(self.add(a, b))
    }

    pub fn checked_mul(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        self.check_pair(a, b)?;
        Ok(self.mul(a, b))
    }

    /// The unique `x` with `a·x = c`.
    pub fn solve_left(&self, a: &Scalar, c: &Scalar) -> Result<Scalar> {
        self.check_pair(a, c)?;
        if self.is_zero(a) {
            return Err(Error::Domain("solve_left with zero coefficient".into()));
        }
        Ok(match (&self.kind, a, c) {
            (Kind::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(galois::mul_mod(galois::inv_mod(*x, *p), *y, *p))
            }
            (Kind::Galois(f), Scalar::Poly(x), Scalar::Poly(y)) => Scalar::Poly(f.mul(&f.inv(x), y)),
            (Kind::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(y / x),
            (Kind::Quaternions | Kind::Octonions, Scalar::Hyper(x), Scalar::Hyper(y)) => {
                Scalar::Hyper(hyper::mul(&hyper::inverse(x), y))
            }
            (Kind::Table(t, _), Scalar::Index(x), Scalar::Index(y)) => {
                Scalar::Index(t.solve_left(*x, *y))
            }
            _ => unreachable!(),
        })
    }

    /// The unique `x` with `x·b = c`.
    pub fn solve_right(&self, b: &Scalar, c: &Scalar) -> Result<Scalar> {
        self.check_pair(b, c)?;
        if self.is_zero(b) {
            return Err(Error::Domain("solve_right with zero coefficient".into()));
        }
        Ok(match (&self.kind, b, c) {
            (Kind::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(galois::mul_mod(*y, galois::inv_mod(*x, *p), *p))
            }
            (Kind::Galois(f), Scalar::Poly(x), Scalar::Poly(y)) => Scalar::Poly(f.mul(y, &f.inv(x))),
            (Kind::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(y / x),
            (Kind::Quaternions | Kind::Octonions, Scalar::Hyper(x), Scalar::Hyper(y)) => {
                Scalar::Hyper(hyper::mul(y, &hyper::inverse(x)))
            }
            (Kind::Table(t, _), Scalar::Index(x), Scalar::Index(y)) => {
                Scalar::Index(t.solve_right(*x, *y))
            }
            _ => unreachable!(),
        })
    }

    /// Quaternion/octonion conjugation (negates the imaginary part).
    pub fn conjugate(&self, q: &Scalar) -> Result<Scalar> {
        match (&self.kind, q) {
            (Kind::Quaternions | Kind::Octonions, Scalar::Hyper(c)) if self.contains(q) => {
                Ok(Scalar::Hyper(hyper::conj(c)))
            }
            (Kind::Quaternions | Kind::Octonions, _) => {
                Err(Error::Domain(format!("{q:?} is not an element of {}", self.name)))
            }
            _ => Err(Error::Unsupported(format!(
                "conjugation is defined only for quaternions and octonions, not {}",
                self.name
            ))),
        }
    }

    /// Whether multiplication is associative: structural for known families,
    /// exhaustive for tables.
    pub fn is_associative(&self) -> bool {
        *self.associative.get_or_init(|| match &self.kind {
            Kind::Octonions => false,
            Kind::Table(t, _) => {
                let q = t.order();
                (0..q).all(|a| {
                    (0..q).all(|b| (0..q).all(|c| t.mul[t.mul[a][b]][c] == t.mul[a][t.mul[b][c]]))
                })
            }
            _ => true,
        })
    }

    pub fn is_commutative(&self) -> bool {
        *self.commutative.get_or_init(|| match &self.kind {
            Kind::Quaternions | Kind::Octonions => false,
            Kind::Table(t, _) => {
                let q = t.order();
                (0..q).all(|a| (0..q).all(|b| t.mul[a][b] == t.mul[b][a]))
            }
            _ => true,
        })
    }

    /// Uniform element (finite) or element with numerators and denominators
    /// bounded by `height` (infinite).
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R, height: u32) -> Scalar {
        let h = height.max(1) as i64;
        let rand_rat = |rng: &mut R| {
            let n = rng.random_range(-h..=h);
            let d = rng.random_range(1..=h);
            BigRational::new(BigInt::from(n), BigInt::from(d))
        };
        match &self.kind {
            Kind::Rationals => Scalar::Rational(rand_rat(rng)),
            Kind::Quaternions => Scalar::Hyper((0..4).map(|_| rand_rat(rng)).collect()),
            Kind::Octonions => Scalar::Hyper((0..8).map(|_| rand_rat(rng)).collect()),
            _ => {
                let q = self.order().unwrap();
                self.element(rng.random_range(0..q) as usize)
            }
        }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R, height: u32) -> Scalar {
        loop {
            let x = self.random(rng, height);
            if !self.is_zero(&x) {
                return x;
            }
        }
    }

    /// Parses a scalar literal (see module docs of the literal grammar).
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let parsed = match &self.kind {
            Kind::Prime(p) => literal::parse_residue(s, *p).map(Scalar::Residue),
            Kind::Galois(f) => literal::parse_poly(s, f.p, f.degree()).map(Scalar::Poly),
            Kind::Rationals => literal::parse_rational(s).map(Scalar::Rational),
            Kind::Quaternions => literal::parse_hyper(s, &QUATERNION_UNITS).map(Scalar::Hyper),
            Kind::Octonions => literal::parse_hyper(s, &OCTONION_UNITS).map(Scalar::Hyper),
            Kind::Table(t, _) => t.parse(s).map(Scalar::Index),
        };
        parsed.ok_or_else(|| Error::parse(format!("scalar `{s}`"), format!("not a literal of {}", self.name)))
    }

    pub fn format_scalar(&self, x: &Scalar) -> String {
        match (&self.kind, x) {
            (Kind::Table(t, _), Scalar::Index(i)) => t.label(*i),
            (_, Scalar::Residue(r)) => r.to_string(),
            (_, Scalar::Poly(c)) => literal::format_poly(c),
            (_, Scalar::Rational(r)) => literal::format_rational(r),
            (Kind::Octonions, Scalar::Hyper(c)) => literal::format_hyper(c, &OCTONION_UNITS),
            (_, Scalar::Hyper(c)) => literal::format_hyper(c, &QUATERNION_UNITS),
            (_, Scalar::Index(i)) => i.to_string(),
        }
    }

    /// A `Display` adapter for a scalar of this algebra.
    pub fn show<'a>(&'a self, x: &'a Scalar) -> Shown<'a> {
        Shown { algebra: self, x }
    }
}

pub struct Shown<'a> {
    algebra: &'a Algebra,
    x: &'a Scalar,
}

impl fmt::Display for Shown<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.algebra.format_scalar(self.x))
    }
}

fn unit_vec(dim: usize, idx: usize) -> Vec<BigRational> {
    (0..dim)
        .map(|i| if i == idx { BigRational::one() } else { BigRational::zero() })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(alg: &Algebra, s: &str) -> Scalar {
        alg.parse_scalar(s).unwrap()
    }

    #[test]
    fn add_examples() {
        let f2 = Algebra::preset("f2").unwrap();
        assert_eq!(f2.add(&p(&f2, "1"), &p(&f2, "1")), f2.zero());
        let q = Algebra::rationals();
        assert_eq!(q.add(&p(&q, "1/2"), &p(&q, "1/3")), p(&q, "5/6"));
        let h = Algebra::quaternions();
        assert_eq!(h.add(&p(&h, "1+i"), &p(&h, "1-i")), p(&h, "2"));
    }

    #[test]
    fn mixed_operands_are_domain_errors() {
        let f3 = Algebra::preset("f3").unwrap();
        let h = Algebra::quaternions();
        let i = p(&h, "i");
        assert!(matches!(f3.checked_add(&i, &f3.zero()), Err(Error::Domain(_))));
        assert!(matches!(f3.checked_mul(&Scalar::Residue(7), &f3.zero()), Err(Error::Domain(_))));
    }

    #[test]
    fn quaternion_products_and_solves() {
        let h = Algebra::quaternions();
        let (i, j, k) = (p(&h, "i"), p(&h, "j"), p(&h, "k"));
        assert_eq!(h.mul(&i, &j), k);
        assert_eq!(h.mul(&j, &i), h.neg(&k));
        assert_eq!(h.solve_left(&i, &j).unwrap(), h.neg(&k));
        // x·i = j → x = j·i^-1 = j·(-i) = k
        let x = h.solve_right(&i, &j).unwrap();
        assert_eq!(x, k);
        assert_eq!(h.mul(&x, &i), j);
        assert_eq!(h.solve_left(&i, &h.zero()).unwrap(), h.zero());
        assert!(h.solve_left(&h.zero(), &i).is_err());
    }

    #[test]
    fn prime_field_solve_right_matches_brute_force() {
        let f5 = Algebra::preset("f5").unwrap();
        let (two, three) = (p(&f5, "2"), p(&f5, "3"));
        let brute: Vec<Scalar> = f5
            .elements()
            .unwrap()
            .into_iter()
            .filter(|x| f5.mul(x, &two) == three)
            .collect();
        assert_eq!(brute, vec![p(&f5, "4")]);
        assert_eq!(f5.solve_right(&two, &three).unwrap(), p(&f5, "4"));
        assert_eq!(f5.solve_right(&two, &f5.zero()).unwrap(), f5.zero());
    }

    #[test]
    fn octonion_nonassociative_triple() {
        let o = Algebra::octonions();
        let e = |n| o.basis_unit(n).unwrap();
        assert_eq!(o.mul(&o.mul(&e(1), &e(2)), &e(4)), e(7));
        assert_eq!(o.mul(&e(1), &o.mul(&e(2), &e(4))), o.neg(&e(7)));
    }

    #[test]
    fn isotope_one_circ_t() {
        let iso = Algebra::preset("gf9-isotope").unwrap();
        let r = iso.mul(&p(&iso, "1"), &p(&iso, "t"));
        assert_eq!(iso.format_scalar(&r), "2t");
        assert_eq!(iso.right_unit(), Some(p(&iso, "1")));
        assert_eq!(iso.left_unit(), None);
        assert!(!iso.is_associative());
    }

    #[test]
    fn conjugate_examples() {
        let h = Algebra::quaternions();
        let c = h.conjugate(&p(&h, "1+2i-j")).unwrap();
        assert_eq!(h.format_scalar(&c), "1-2i+j");
        let (i, j) = (p(&h, "i"), p(&h, "j"));
        let lhs = h.conjugate(&h.mul(&i, &j)).unwrap();
        let rhs = h.mul(&h.neg(&j), &h.neg(&i));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, p(&h, "-k"));
        let q = p(&h, "5/3");
        assert_eq!(h.conjugate(&q).unwrap(), q);
        let f3 = Algebra::preset("f3").unwrap();
        assert!(matches!(f3.conjugate(&f3.zero()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn format_parse_roundtrip_on_finite_algebras() {
        for name in ["f5", "gf8", "gf9", "gf25", "gf9-isotope"] {
            let alg = Algebra::preset(name).unwrap();
            for x in alg.elements().unwrap() {
                assert_eq!(alg.parse_scalar(&alg.format_scalar(&x)).unwrap(), x, "{name}");
            }
        }
    }
}
