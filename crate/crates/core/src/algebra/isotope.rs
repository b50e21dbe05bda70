//! Isotopes `x ∘ y = U⁻¹((Ux)(Vy))` of Galois fields, with `U` and `V`
//! linear over the prime subfield.

use super::galois::{inv_mod, mul_mod, sub_mod, add_mod, GaloisField};
use super::table::CayleyTable;
use crate::error::{Error, Result};

/// Square matrix over F_p acting on coefficient column vectors (low degree first).
pub type FpMatrix = Vec<Vec<u64>>;

pub fn identity(k: usize) -> FpMatrix {
    (0..k)
        .map(|i| (0..k).map(|j| (i == j) as u64).collect())
        .collect()
}

pub fn apply(m: &FpMatrix, x: &[u64], p: u64) -> Vec<u64> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(0, |acc, (a, b)| add_mod(acc, mul_mod(*a, *b, p), p))
        })
        .collect()
}

pub fn matmul(a: &FpMatrix, b: &FpMatrix, p: u64) -> FpMatrix {
    let k = b.len();
    a.iter()
        .map(|row| {
            (0..b[0].len())
                .map(|j| (0..k).fold(0, |acc, l| add_mod(acc, mul_mod(row[l], b[l][j], p), p)))
                .collect()
        })
        .collect()
}

/// Gauss–Jordan inverse; `None` when singular.
pub fn invert(m: &FpMatrix, p: u64) -> Option<FpMatrix> {
    let k = m.len();
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<u64> = row.iter().map(|v| v % p).collect();
            r.extend((0..k).map(|j| (i == j) as u64));
            r
        })
        .collect();
    for col in 0..k {
        let pivot = (col..k).find(|&r| a[r][col] != 0)?;
        a.swap(col, pivot);
        let inv = inv_mod(a[col][col], p);
        for v in a[col].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        for r in 0..k {
            if r != col && a[r][col] != 0 {
                let f = a[r][col];
                for c in 0..2 * k {
                    let sub = mul_mod(f, a[col][c], p);
                    a[r][c] = sub_mod(a[r][c], sub, p);
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[k..].to_vec()).collect())
}

fn rank(vectors: &[Vec<u64>], p: u64) -> usize {
    let mut rows: Vec<Vec<u64>> = vectors.to_vec();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inv_mod(rows[rank][col], p);
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = mul_mod(rows[r][col], inv, p);
                for c in 0..cols {
                    let sub = mul_mod(f, rows[rank][c], p);
                    rows[r][c] = sub_mod(rows[r][c], sub, p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Parameters and derived maps of an isotope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotopeData {
    pub base: GaloisField,
    pub a: Vec<u64>,
    pub u: FpMatrix,
    pub u_inv: FpMatrix,
    pub v: FpMatrix,
}

impl IsotopeData {
    pub fn product(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let p = self.base.p;
        let ux = apply(&self.u, x, p);
        let vy = apply(&self.v, y, p);
        apply(&self.u_inv, &self.base.mul(&ux, &vy), p)
    }
}

/// Builds `U` with `U(1) = a`, `U(a) = 1`, fixing the standard basis vectors
/// that complete `{1, a}` to a basis, and checks the constraints on `a` and `V`.
pub fn isotope_data(base: &GaloisField, a: &[u64], v: Option<FpMatrix>) -> Result<IsotopeData> {
    let p = base.p;
    let k = base.degree();
    if a.len() != k {
        return Err(Error::InvalidParameter(format!(
            "isotope element has {} coefficients, field degree is {k}",
            a.len()
        )));
    }
    if base.mul(a, a) == base.one() {
        return Err(Error::Degenerate(
            "a^2 = 1 in the base field; the isotope would keep a left unit".into(),
        ));
    }
    if a[1..].iter().all(|c| *c == 0) {
        return Err(Error::InvalidParameter(
            "isotope element lies in the prime subfield".into(),
        ));
    }
    let v = v.unwrap_or_else(|| identity(k));
    if v.len() != k || v.iter().any(|r| r.len() != k) {
        return Err(Error::InvalidParameter(format!("V must be a {k}x{k} matrix")));
    }
    if invert(&v, p).is_none() {
        return Err(Error::InvalidParameter("V is singular".into()));
    }
    let one = base.one();
    if apply(&v, &one, p) != one {
        return Err(Error::InvalidParameter("V(1) != 1".into()));
    }
    if apply(&v, a, p) != a {
        return Err(Error::InvalidParameter("V(a) != a".into()));
    }

    let mut basis = vec![one.clone(), a.to_vec()];
    for j in 1..k {
        if basis.len() == k {
            break;
        }
        let mut e = vec![0; k];
        e[j] = 1;
        let mut trial = basis.clone();
        trial.push(e);
        if rank(&trial, p) == trial.len() {
            basis = trial;
        }
    }
    debug_assert_eq!(basis.len(), k);
    // P has the basis as columns; U = P S P^-1 with S swapping the first two.
    let pm: FpMatrix = (0..k).map(|r| basis.iter().map(|b| b[r]).collect()).collect();
    let p_inv = invert(&pm, p).expect("basis is independent");
    let mut s = identity(k);
    s.swap(0, 1);
    let u = matmul(&matmul(&pm, &s, p), &p_inv, p);
    let u_inv = invert(&u, p).expect("U is invertible");
    Ok(IsotopeData {
        base: base.clone(),
        a: a.to_vec(),
        u,
        u_inv,
        v,
    })
}

/// Tabulates the isotope; element `i` is the base-field element with index `i`.
pub fn isotope_table(data: &IsotopeData, labels: Vec<String>) -> Result<CayleyTable> {
    let f = &data.base;
    let q = f.order() as usize;
    let elems: Vec<Vec<u64>> = (0..q).map(|i| f.element(i)).collect();
    let add = elems
        .iter()
        .map(|x| elems.iter().map(|y| f.index_of(&f.add(x, y))).collect())
        .collect();
    let mul = elems
        .iter()
        .map(|x| {
            elems
                .iter()
                .map(|y| f.index_of(&data.product(x, y)))
                .collect()
        })
        .collect();
    CayleyTable::new(add, mul, Some(labels))
}
