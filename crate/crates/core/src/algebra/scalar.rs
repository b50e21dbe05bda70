use std::cmp::Ordering;

use num_rational::BigRational;

/// An exact element of some scalar algebra.
///
/// The payload shape identifies the algebra family; the owning
/// [`Algebra`](super::Algebra) interprets it. Scalars are plain values and
/// are freely shared between threads.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// Residue in `0..p` of a prime field.
    Residue(u64),
    /// Galois-field element: coefficients mod p, low degree first, length = extension degree.
    Poly(Vec<u64>),
    /// Reduced fraction with positive denominator.
    Rational(BigRational),
    /// Quaternion (4) or octonion (8) coefficients over the rationals, real part first.
    Hyper(Vec<BigRational>),
    /// Element index of a Cayley-table algebra.
    Index(usize),
}

impl Scalar {
    fn tag(&self) -> u8 {
        match self {
            Scalar::Residue(_) => 0,
            Scalar::Poly(_) => 1,
            Scalar::Rational(_) => 2,
            Scalar::Hyper(_) => 3,
            Scalar::Index(_) => 4,
        }
    }
}

fn cmp_rational(a: &BigRational, b: &BigRational) -> Ordering {
    a.numer()
        .cmp(b.numer())
        .then_with(|| a.denom().cmp(b.denom()))
}

// Rationals compare by (numerator, denominator), polynomials by their
// high-degree-first coefficient tuple, which matches the element index order.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Residue(a), Scalar::Residue(b)) => a.cmp(b),
            (Scalar::Poly(a), Scalar::Poly(b)) => a
                .len()
                .cmp(&b.len())
                .then_with(|| a.iter().rev().cmp(b.iter().rev())),
            (Scalar::Rational(a), Scalar::Rational(b)) => cmp_rational(a, b),
            (Scalar::Hyper(a), Scalar::Hyper(b)) => a.len().cmp(&b.len()).then_with(|| {
                a.iter()
                    .zip(b.iter())
                    .map(|(x, y)| cmp_rational(x, y))
                    .find(|o| *o != Ordering::Equal)
                    .unwrap_or(Ordering::Equal)
            }),
            (Scalar::Index(a), Scalar::Index(b)) => a.cmp(b),
            _ => self.tag().cmp(&other.tag()),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rationals_order_by_numerator_then_denominator() {
        // 1/3 < 1/2 numerically, but (1,2) < (1,3) as tuples.
        let a = Scalar::Rational(q(1, 2));
        let b = Scalar::Rational(q(1, 3));
        assert!(a < b);
        assert!(Scalar::Rational(q(-5, 1)) < Scalar::Rational(q(0, 1)));
    }

    #[test]
    fn polys_order_high_degree_first() {
        // t (= [0,1]) sorts after 2 (= [2,0]).
        assert!(Scalar::Poly(vec![2, 0]) < Scalar::Poly(vec![0, 1]));
    }

    #[test]
    fn reduced_storage_makes_equality_structural() {
        assert_eq!(Scalar::Rational(q(2, 4)), Scalar::Rational(q(-1, -2)));
    }
}
