//! Prime-field and extension-field arithmetic on plain integer vectors.

use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    add_mod(a, p - b % p, p)
}

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue by Fermat's little theorem.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// GF(p^k) = F_p[t]/(f) with f monic irreducible of degree k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisField {
    pub p: u64,
    /// Monic modulus, low degree first, length k+1.
    pub modulus: Vec<u64>,
}

impl GaloisField {
    /// Validates primality of `p` and irreducibility of `poly` (made monic).
    pub fn new(p: u64, poly: &[u64]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("modulus {p} is not prime")));
        }
        let mut f: Vec<u64> = poly.iter().map(|c| c % p).collect();
        trim(&mut f);
        if f.len() < 2 {
            return Err(Error::InvalidParameter(
                "field polynomial must have degree at least 1".into(),
            ));
        }
        let lead_inv = inv_mod(*f.last().unwrap(), p);
        for c in f.iter_mut() {
            *c = mul_mod(*c, lead_inv, p);
        }
        if let Some(divisor) = find_factor(&f, p) {
            return Err(Error::InvalidParameter(format!(
                "polynomial {:?} is reducible over F_{p}: divisible by {:?}",
                poly, divisor
            )));
        }
        Ok(GaloisField { p, modulus: f })
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.degree() as u32)
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.degree()]
    }

    pub fn one(&self) -> Vec<u64> {
        let mut v = self.zero();
        v[0] = 1;
        v
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| add_mod(*x, *y, self.p)).collect()
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter().map(|x| sub_mod(0, *x, self.p)).collect()
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let k = self.degree();
        let p = self.p;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = add_mod(prod[i + j], mul_mod(*x, *y, p), p);
            }
        }
        // Reduce with the monic modulus from the top down.
        for d in (k..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (j, m) in self.modulus[..k].iter().enumerate() {
                let idx = d - k + j;
                prod[idx] = sub_mod(prod[idx], mul_mod(c, *m, p), p);
            }
        }
        prod.truncate(k);
        prod
    }

    pub fn pow(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let mut acc = self.one();
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &[u64]) -> Vec<u64> {
        self.pow(a, self.order() - 2)
    }

    /// Element index: coefficients read as base-p digits, constant term least significant.
    pub fn index_of(&self, a: &[u64]) -> usize {
        a.iter()
            .rev()
            .fold(0usize, |acc, c| acc * self.p as usize + *c as usize)
    }

    pub fn element(&self, mut index: usize) -> Vec<u64> {
        let mut v = self.zero();
        for c in v.iter_mut() {
            *c = (index % self.p as usize) as u64;
            index /= self.p as usize;
        }
        v
    }
}

fn trim(f: &mut Vec<u64>) {
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
    if f.len() == 1 && f[0] == 0 {
        f.clear();
    }
}

/// Remainder of `f` modulo monic `g` over F_p.
fn poly_rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        if c != 0 {
            for (j, gj) in g.iter().enumerate() {
                r[shift + j] = sub_mod(r[shift + j], mul_mod(c, *gj, p), p);
            }
        }
        r.pop();
    }
    trim(&mut r);
    r
}

/// Trial division by every monic polynomial of degree 1..=deg(f)/2.
fn find_factor(f: &[u64], p: u64) -> Option<Vec<u64>> {
    let n = f.len() - 1;
    for d in 1..=n / 2 {
        let count = p.pow(d as u32);
        for code in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                g.push(c % p);
                c /= p;
            }
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return Some(g);
            }
        }
    }
    None
}
