//! Rational quaternions and octonions as coefficient vectors.
//!
//! Octonions are pairs of quaternions multiplied by the Cayley–Dickson rule
//! `(a,b)(c,d) = (ac - conj(d) b, d a + b conj(c))`, so `e4..e7` are
//! `(0,1), (0,i), (0,j), (0,k)`.

use num_rational::BigRational;
use num_traits::Zero;

pub type Coeffs = Vec<BigRational>;

pub fn add(a: &[BigRational], b: &[BigRational]) -> Coeffs {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[BigRational], b: &[BigRational]) -> Coeffs {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[BigRational]) -> Coeffs {
    a.iter().map(|x| -x).collect()
}

pub fn scale(a: &[BigRational], s: &BigRational) -> Coeffs {
    a.iter().map(|x| x * s).collect()
}

pub fn conj(a: &[BigRational]) -> Coeffs {
    a.iter()
        .enumerate()
        .map(|(i, x)| if i == 0 { x.clone() } else { -x })
        .collect()
}

/// Sum of squared coefficients, equal to `a * conj(a)`.
pub fn norm(a: &[BigRational]) -> BigRational {
    a.iter().fold(BigRational::zero(), |acc, x| acc + x * x)
}

fn quat_mul(a: &[BigRational], b: &[BigRational]) -> Coeffs {
    let (a0, a1, a2, a3) = (&a[0], &a[1], &a[2], &a[3]);
    let (b0, b1, b2, b3) = (&b[0], &b[1], &b[2], &b[3]);
    vec![
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ]
}

fn oct_mul(x: &[BigRational], y: &[BigRational]) -> Coeffs {
    let (a, b) = x.split_at(4);
    let (c, d) = y.split_at(4);
    let mut out = sub(&quat_mul(a, c), &quat_mul(&conj(d), b));
    out.extend(add(&quat_mul(d, a), &quat_mul(b, &conj(c))));
    out
}

pub fn mul(a: &[BigRational], b: &[BigRational]) -> Coeffs {
    match a.len() {
        4 => quat_mul(a, b),
        8 => oct_mul(a, b),
        n => unreachable!("hypercomplex dimension {n}"),
    }
}

/// `conj(a) / |a|^2`; valid two-sided inverse in both algebras.
pub fn inverse(a: &[BigRational]) -> Coeffs {
    let n = norm(a);
    conj(a).iter().map(|x| x / &n).collect()
}

pub fn is_zero(a: &[BigRational]) -> bool {
    a.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn unit(dim: usize, i: usize) -> Coeffs {
        (0..dim)
            .map(|j| BigRational::from_integer(BigInt::from((i == j) as i64)))
            .collect()
    }

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (unit(4, 1), unit(4, 2), unit(4, 3));
        assert_eq!(mul(&i, &j), k);
        assert_eq!(mul(&j, &i), neg(&k));
        assert_eq!(mul(&i, &i), neg(&unit(4, 0)));
    }

    #[test]
    fn octonion_basis_products_square_to_minus_one_and_anticommute() {
        let one = unit(8, 0);
        for a in 1..8 {
            let ea = unit(8, a);
            assert_eq!(mul(&ea, &ea), neg(&one));
            for b in (a + 1)..8 {
                let eb = unit(8, b);
                assert_eq!(mul(&ea, &eb), neg(&mul(&eb, &ea)));
            }
        }
    }

    #[test]
    fn octonion_triple_from_doubling() {
        let (e1, e2, e4, e7) = (unit(8, 1), unit(8, 2), unit(8, 4), unit(8, 7));
        assert_eq!(mul(&mul(&e1, &e2), &e4), e7);
        assert_eq!(mul(&e1, &mul(&e2, &e4)), neg(&e7));
    }
}
