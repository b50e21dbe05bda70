//! Exact homogeneous linear systems over the prime subfield: modular
//! Gauss–Jordan for F_p, fraction-free (Bareiss) elimination for Q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::galois::{inv_mod, mul_mod, sub_mod};
use crate::algebra::{PrimeSubfield, Scalar};
use crate::error::{Error, Result};

/// Basis of `{x : A x = 0}` with one vector per free column, in increasing
/// order of free column; each basis vector has a 1 at its free column.
pub fn nullspace(f0: PrimeSubfield, rows: &[Vec<Scalar>], ncols: usize) -> Result<Vec<Vec<Scalar>>> {
    if let Some(r) = rows.iter().position(|r| r.len() != ncols) {
        return Err(Error::Domain(format!("row {r} has wrong length")));
    }
    match f0 {
        PrimeSubfield::Modular(p) => {
            let m = rows
                .iter()
                .map(|r| r.iter().map(residue).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            Ok(nullspace_mod(m, ncols, p)
                .into_iter()
                .map(|v| v.into_iter().map(Scalar::Residue).collect())
                .collect())
        }
        PrimeSubfield::Rationals => {
            let m = rows
                .iter()
                .map(|r| r.iter().map(rational).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            Ok(nullspace_rat(&m, ncols)
                .into_iter()
                .map(|v| v.into_iter().map(Scalar::Rational).collect())
                .collect())
        }
    }
}

pub fn rank(f0: PrimeSubfield, rows: &[Vec<Scalar>], ncols: usize) -> Result<usize> {
    Ok(ncols - nullspace(f0, rows, ncols)?.len())
}

fn residue(s: &Scalar) -> Result<u64> {
    match s {
        Scalar::Residue(r) => Ok(*r),
        other => Err(Error::Domain(format!("expected a residue, got {other:?}"))),
    }
}

fn rational(s: &Scalar) -> Result<BigRational> {
    match s {
        Scalar::Rational(r) => Ok(r.clone()),
        other => Err(Error::Domain(format!("expected a rational, got {other:?}"))),
    }
}

fn nullspace_mod(mut a: Vec<Vec<u64>>, ncols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..a.len()).find(|&i| !a[i][c].is_multiple_of(p)) else {
            continue;
        };
        a.swap(r, piv);
        let inv = inv_mod(a[r][c] % p, p);
        for v in a[r].iter_mut() {
            *v = mul_mod(*v % p, inv, p);
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_multiple_of(p) {
                let f = a[i][c] % p;
                for j in 0..ncols {
                    let t = mul_mod(f, a[r][j], p);
                    a[i][j] = sub_mod(a[i][j] % p, t, p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    free_columns(&pivots, ncols)
        .map(|f| {
            let mut x = vec![0; ncols];
            x[f] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                x[pc] = sub_mod(0, a[row][f] % p, p);
            }
            x
        })
        .collect()
}

fn free_columns(pivots: &[usize], ncols: usize) -> impl Iterator<Item = usize> + '_ {
    (0..ncols).filter(move |c| !pivots.contains(c))
}

/// Clears denominators row by row, then runs Bareiss elimination to row
/// echelon form with integer entries.
fn bareiss_echelon(rows: &[Vec<BigRational>], ncols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, piv);
        for i in r + 1..a.len() {
            for j in c + 1..ncols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

fn nullspace_rat(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let (a, pivots) = bareiss_echelon(rows, ncols);
    free_columns(&pivots, ncols)
        .map(|f| {
            let mut x = vec![BigRational::zero(); ncols];
            x[f] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate().rev() {
                let mut s = BigRational::zero();
                for j in pc + 1..ncols {
                    if !a[row][j].is_zero() && !x[j].is_zero() {
                        s += BigRational::from_integer(a[row][j].clone()) * &x[j];
                    }
                }
                x[pc] = -s / BigRational::from_integer(a[row][pc].clone());
            }
            normalize_integral(x)
        })
        .collect()
}

/// Scales a rational vector to coprime integers with a positive leading entry.
fn normalize_integral(x: Vec<BigRational>) -> Vec<BigRational> {
    let l = x.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = x.iter().map(|v| v.numer() * (&l / v.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return x;
    }
    let lead_neg = ints.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative());
    ints.into_iter()
        .map(|v| {
            let v = v / &g;
            BigRational::from_integer(if lead_neg { -v } else { v })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::Rational(BigRational::new(n.into(), d.into()))
    }

    fn check(f0: PrimeSubfield, rows: &[Vec<Scalar>], x: &[Scalar]) {
        let alg = f0.algebra();
        for r in rows {
            let s = r
                .iter()
                .zip(x)
                .fold(alg.zero(), |acc, (a, b)| alg.add(&acc, &alg.mul(a, b)));
            assert!(alg.is_zero(&s));
        }
    }

    #[test]
    fn modular_nullspace() {
        let r = |v: &[u64]| v.iter().map(|x| Scalar::Residue(*x)).collect::<Vec<_>>();
        let rows = vec![r(&[1, 0, 1]), r(&[0, 1, 1])];
        let ns = nullspace(PrimeSubfield::Modular(2), &rows, 3).unwrap();
        assert_eq!(ns, vec![r(&[1, 1, 1])]);
        let rows = vec![r(&[1, 1, 2, 0]), r(&[2, 2, 1, 1])];
        let ns = nullspace(PrimeSubfield::Modular(3), &rows, 4).unwrap();
        assert_eq!(ns.len(), 2);
        for x in &ns {
            check(PrimeSubfield::Modular(3), &rows, x);
        }
        let id = vec![r(&[1, 0]), r(&[0, 1])];
        assert!(nullspace(PrimeSubfield::Modular(5), &id, 2).unwrap().is_empty());
    }

    #[test]
    fn rational_nullspace() {
        let rows = vec![
            vec![q(1, 2), q(1, 3), q(1, 1)],
            vec![q(2, 1), q(-1, 1), q(0, 1)],
        ];
        let ns = nullspace(PrimeSubfield::Rationals, &rows, 3).unwrap();
        assert_eq!(ns.len(), 1);
        check(PrimeSubfield::Rationals, &rows, &ns[0]);
        // y = 2x, z = -7x/6
        assert_eq!(ns[0], vec![q(6, 1), q(12, 1), q(-7, 1)]);
        assert_eq!(rank(PrimeSubfield::Rationals, &rows, 3).unwrap(), 2);
    }

    #[test]
    fn bareiss_handles_row_swaps_and_dependent_rows() {
        let rows = vec![
            vec![q(0, 1), q(1, 1), q(1, 1), q(0, 1)],
            vec![q(1, 1), q(2, 1), q(0, 1), q(1, 1)],
            vec![q(1, 1), q(3, 1), q(1, 1), q(1, 1)],
        ];
        let ns = nullspace(PrimeSubfield::Rationals, &rows, 4).unwrap();
        assert_eq!(ns.len(), 2);
        for x in &ns {
            check(PrimeSubfield::Rationals, &rows, x);
        }
    }
}
