//! Finite-dimensional structure over the prime subfield: basis, structure
//! constants `i_p i_q = Σ_r c^r_{p,q} i_r`, and coordinate expansion.

use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Algebra, AlgebraRef, Kind, Scalar};
use crate::error::{Error, Result};

/// The prime subfield F₀ over which coordinates are taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimeSubfield {
    Modular(u64),
    Rationals,
}

impl PrimeSubfield {
    pub fn algebra(&self) -> AlgebraRef {
        match self {
            PrimeSubfield::Modular(p) => Algebra::prime_field(*p).expect("prime subfield"),
            PrimeSubfield::Rationals => Algebra::rationals(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SubfieldStructure {
    pub subfield: PrimeSubfield,
    pub f0: AlgebraRef,
    pub labels: Vec<String>,
    /// `constants[r][p][q]` is the `i_r` coefficient of `i_p i_q`.
    pub constants: Vec<Vec<Vec<Scalar>>>,
    /// Whether F₀ lies in the center (false for isotopes, which are only F₀-bilinear).
    pub central: bool,
}

impl SubfieldStructure {
    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    /// Coordinates of `x·y` computed purely from coordinates and structure constants.
    pub fn product_coords(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let s = self.dimension();
        let f0 = &self.f0;
        (0..s)
            .map(|r| {
                let mut acc = f0.zero();
                for (p, xp) in x.iter().enumerate() {
                    if f0.is_zero(xp) {
                        continue;
                    }
                    for (q, yq) in y.iter().enumerate() {
                        let c = &self.constants[r][p][q];
                        if f0.is_zero(yq) || f0.is_zero(c) {
                            continue;
                        }
                        acc = f0.add(&acc, &f0.mul(&f0.mul(xp, yq), c));
                    }
                }
                acc
            })
            .collect()
    }

    /// Exhaustive check of every basis product, plus sampled product and
    /// centrality checks on `samples` random pairs.
    pub fn verify(&self, alg: &Algebra, samples: usize, seed: u64) -> Result<bool> {
        let s = self.dimension();
        let basis: Vec<Scalar> = (0..s).map(|i| basis_element(alg, self, i)).collect::<Result<_>>()?;
        for p in 0..s {
            for q in 0..s {
                let direct = expand(alg, &alg.mul(&basis[p], &basis[q]))?;
                let coords: Vec<Scalar> = (0..s).map(|r| self.constants[r][p][q].clone()).collect();
                if direct != coords {
                    return Ok(false);
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let x = alg.random(&mut rng, 10);
            let y = alg.random(&mut rng, 10);
            let via = self.product_coords(&expand(alg, &x)?, &expand(alg, &y)?);
            if via != expand(alg, &alg.mul(&x, &y))? {
                return Ok(false);
            }
            if self.central {
                let n = alg.random(&mut rng, 10);
                let lambda = recombine(alg, &first_coordinate_only(self, &expand(alg, &n)?))?;
                if alg.mul(&lambda, &y) != alg.mul(&y, &lambda) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn first_coordinate_only(st: &SubfieldStructure, coords: &[Scalar]) -> Vec<Scalar> {
    let mut v = vec![st.f0.zero(); st.dimension()];
    v[0] = coords[0].clone();
    v
}

fn basis_element(alg: &Algebra, st: &SubfieldStructure, i: usize) -> Result<Scalar> {
    let mut coords = vec![st.f0.zero(); st.dimension()];
    coords[i] = st.f0.from_int(1);
    recombine(alg, &coords)
}

impl Algebra {
    /// Structure over the prime subfield, when the algebra is a known
    /// finite-dimensional F₀-algebra.
    pub fn subfield_structure(&self) -> Option<SubfieldStructure> {
        let (subfield, labels): (PrimeSubfield, Vec<String>) = match &self.kind {
            Kind::Prime(p) => (PrimeSubfield::Modular(*p), vec!["1".into()]),
            Kind::Galois(f) => (PrimeSubfield::Modular(f.p), poly_labels(f.degree())),
            Kind::Table(_, Some(iso)) => {
                (PrimeSubfield::Modular(iso.base.p), poly_labels(iso.base.degree()))
            }
            Kind::Table(_, None) => return None,
            Kind::Rationals => (PrimeSubfield::Rationals, vec!["1".into()]),
            Kind::Quaternions => (
                PrimeSubfield::Rationals,
                ["1", "i", "j", "k"].iter().map(|s| s.to_string()).collect(),
            ),
            Kind::Octonions => (
                PrimeSubfield::Rationals,
                ["1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"]
                    .iter()
                    .map(|s| s.to_string())
                    .collect(),
            ),
        };
        let f0 = subfield.algebra();
        let s = labels.len();
        let mut st = SubfieldStructure {
            subfield,
            f0: f0.clone(),
            labels,
            constants: Vec::new(),
            central: !matches!(self.kind, Kind::Table(..)),
        };
        let basis: Vec<Scalar> = (0..s)
            .map(|i| basis_element(self, &st, i).expect("basis element"))
            .collect();
        let mut constants = vec![vec![vec![f0.zero(); s]; s]; s];
        for p in 0..s {
            for q in 0..s {
                let coords = expand(self, &self.mul(&basis[p], &basis[q])).expect("expand");
                for (r, c) in coords.into_iter().enumerate() {
                    constants[r][p][q] = c;
                }
            }
        }
        st.constants = constants;
        Some(st)
    }
}

fn poly_labels(k: usize) -> Vec<String> {
    (0..k)
        .map(|j| match j {
            0 => "1".to_string(),
            1 => "t".to_string(),
            _ => format!("t^{j}"),
        })
        .collect()
}

/// Coordinates of `x` in the F₀-basis of `alg`.
fn expand(alg: &Algebra, x: &Scalar) -> Result<Vec<Scalar>> {
    alg.check(x)?;
    Ok(match (&alg.kind, x) {
        (Kind::Prime(_), Scalar::Residue(r)) => vec![Scalar::Residue(*r)],
        (Kind::Galois(_), Scalar::Poly(c)) => c.iter().map(|v| Scalar::Residue(*v)).collect(),
        (Kind::Table(_, Some(iso)), Scalar::Index(i)) => iso
            .base
            .element(*i)
            .into_iter()
            .map(Scalar::Residue)
            .collect(),
        (Kind::Rationals, Scalar::Rational(r)) => vec![Scalar::Rational(r.clone())],
        (Kind::Quaternions | Kind::Octonions, Scalar::Hyper(c)) => {
            c.iter().cloned().map(Scalar::Rational).collect()
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "{} has no registered subfield structure",
                alg.name()
            )))
        }
    })
}

/// Coefficient vector of `x` over F₀; `recombine` inverts it.
pub fn expand_scalar(alg: &Algebra, x: &Scalar, st: &SubfieldStructure) -> Result<Vec<Scalar>> {
    let v = expand(alg, x)?;
    debug_assert_eq!(v.len(), st.dimension());
    Ok(v)
}

pub fn recombine(alg: &Algebra, coords: &[Scalar]) -> Result<Scalar> {
    let residues = || -> Result<Vec<u64>> {
        coords
            .iter()
            .map(|c| match c {
                Scalar::Residue(r) => Ok(*r),
                other => Err(Error::Domain(format!("{other:?} is not a residue"))),
            })
            .collect()
    };
    let rationals = || -> Result<Vec<BigRational>> {
        coords
            .iter()
            .map(|c| match c {
                Scalar::Rational(r) => Ok(r.clone()),
                other => Err(Error::Domain(format!("{other:?} is not a rational"))),
            })
            .collect()
    };
    let out = match &alg.kind {
        Kind::Prime(_) => Scalar::Residue(residues()?[0]),
        Kind::Galois(_) => Scalar::Poly(residues()?),
        Kind::Table(_, Some(iso)) => Scalar::Index(iso.base.index_of(&residues()?)),
        Kind::Rationals => Scalar::Rational(rationals()?[0].clone()),
        Kind::Quaternions | Kind::Octonions => Scalar::Hyper(rationals()?),
        Kind::Table(_, None) => {
            return Err(Error::Unsupported(format!(
                "{} has no registered subfield structure",
                alg.name()
            )))
        }
    };
    alg.check(&out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansions() {
        let h = Algebra::quaternions();
        let st = h.subfield_structure().unwrap();
        let x = h.parse_scalar("1+2i").unwrap();
        let f0 = &st.f0;
        let want: Vec<Scalar> = ["1", "2", "0", "0"].iter().map(|s| f0.parse_scalar(s).unwrap()).collect();
        assert_eq!(expand_scalar(&h, &x, &st).unwrap(), want);

        let gf9 = Algebra::preset("gf9").unwrap();
        let st9 = gf9.subfield_structure().unwrap();
        let y = gf9.parse_scalar("2t+1").unwrap();
        assert_eq!(
            expand_scalar(&gf9, &y, &st9).unwrap(),
            vec![Scalar::Residue(1), Scalar::Residue(2)]
        );
    }

    #[test]
    fn structures_verify() {
        for name in ["f3", "gf9", "gf8", "rationals", "quaternions", "octonions", "gf9-isotope"] {
            let alg = Algebra::preset(name).unwrap();
            let st = alg.subfield_structure().unwrap();
            assert!(st.verify(&alg, 200, 7).unwrap(), "{name}");
        }
        let s = Algebra::preset("octonions").unwrap().subfield_structure().unwrap();
        assert_eq!(s.dimension(), 8);
    }

    #[test]
    fn roundtrip_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for name in ["quaternions", "octonions", "gf25", "gf9-isotope"] {
            let alg = Algebra::preset(name).unwrap();
            let st = alg.subfield_structure().unwrap();
            for _ in 0..1000 {
                let x = alg.random(&mut rng, 50);
                let c = expand_scalar(&alg, &x, &st).unwrap();
                assert_eq!(recombine(&alg, &c).unwrap(), x);
            }
        }
    }
}
