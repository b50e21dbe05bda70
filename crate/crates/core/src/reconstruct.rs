//! Rebuilding the coefficient module from a perfect-code decoder: elements
//! are pairs `(α, i)`, and `(α,i) + (β,j) = (−γ,k)` where
//! `αe_i + βe_j + γe_k` is the weight-3 codeword through the two coordinates.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, AuditMode, Scalar};
use crate::error::{Error, Result};
use crate::finvec::{Column, FinVec};
use crate::hamming::{HammingCode, SAMPLE_HEIGHT};
use crate::report::Report;

/// Anything that decodes to the nearest codeword of a perfect group code.
pub trait DecodeOracle {
    fn algebra(&self) -> &Algebra;
    fn decode(&self, y: &FinVec) -> Result<FinVec>;
}

impl DecodeOracle for HammingCode {
    fn algebra(&self) -> &Algebra {
        HammingCode::algebra(self)
    }

    fn decode(&self, y: &FinVec) -> Result<FinVec> {
        HammingCode::decode(self, y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairElement {
    Zero,
    Pair(Scalar, Column),
}

impl PairElement {
    /// `(α, i)`, collapsing to `Zero` when α = 0.
    pub fn new(alg: &Algebra, alpha: Scalar, i: Column) -> Self {
        if alg.is_zero(&alpha) {
            PairElement::Zero
        } else {
            PairElement::Pair(alpha, i)
        }
    }

    pub fn render(&self, alg: &Algebra) -> String {
        match self {
            PairElement::Zero => "0".into(),
            PairElement::Pair(a, i) => format!("({}, {})", alg.show(a), i.render(alg)),
        }
    }
}

pub fn pair_add<O: DecodeOracle + ?Sized>(code: &O, u: &PairElement, v: &PairElement) -> Result<PairElement> {
    let alg = code.algebra();
    let (PairElement::Pair(a, i), PairElement::Pair(b, j)) = (u, v) else {
        return Ok(if *u == PairElement::Zero { v.clone() } else { u.clone() });
    };
    if i == j {
        return Ok(PairElement::new(alg, alg.add(a, b), i.clone()));
    }
    let mut y = FinVec::unit(alg, i.clone(), a.clone());
    y.set(alg, j.clone(), b.clone());
    let c = code.decode(&y)?;
    let diff = c.sub(alg, &y)?;
    let mut it = diff.iter();
    match (it.next(), it.next()) {
        (Some((k, gamma)), None) if k != i && k != j => {
            Ok(PairElement::Pair(alg.neg(gamma), k.clone()))
        }
        _ => Err(Error::Inconsistency(format!(
            "decoding {} changed {} coordinates instead of one new coordinate",
            y.to_text(alg).trim().replace('\n', "; "),
            diff.norm()
        ))),
    }
}

pub fn pair_scalar_mul(alg: &Algebra, alpha: &Scalar, u: &PairElement) -> PairElement {
    match u {
        PairElement::Zero => PairElement::Zero,
        PairElement::Pair(b, i) => PairElement::new(alg, alg.mul(alpha, b), i.clone()),
    }
}

/// Reduces `x` by weight-3 codewords through its two smallest support
/// coordinates until at most one coordinate is left. Returns the membership
/// verdict and the support size after each step.
pub fn reduction_trace<O: DecodeOracle + ?Sized>(code: &O, x: &FinVec) -> Result<(bool, Vec<usize>)> {
    let alg = code.algebra();
    let mut cur = x.clone();
    let mut sizes = vec![cur.norm()];
    while cur.norm() >= 2 {
        let mut first: Vec<(Column, Scalar)> =
            cur.iter().take(2).map(|(c, v)| (c.clone(), v.clone())).collect();
        let (j, b) = first.pop().unwrap();
        let (i, a) = first.pop().unwrap();
        let sum = pair_add(code, &PairElement::Pair(a, i.clone()), &PairElement::Pair(b, j.clone()))?;
        cur.set(alg, i, alg.zero());
        cur.set(alg, j, alg.zero());
        if let PairElement::Pair(g, k) = sum {
            cur.accumulate(alg, k, &g);
        }
        let n = cur.norm();
        if n >= *sizes.last().unwrap() {
            return Err(Error::Inconsistency("reduction did not shrink the support".into()));
        }
        sizes.push(n);
    }
    Ok((cur.is_zero(), sizes))
}

pub fn membership_by_reduction<O: DecodeOracle + ?Sized>(code: &O, x: &FinVec) -> Result<bool> {
    Ok(reduction_trace(code, x)?.0)
}

/// Counts and first witness for one module axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomTally {
    pub name: &'static str,
    pub checked: u64,
    pub failures: u64,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleReport {
    pub mode: AuditMode,
    pub elements: u64,
    pub tallies: Vec<AxiomTally>,
}

impl ModuleReport {
    pub fn passed(&self) -> bool {
        self.tallies.iter().all(|t| t.failures == 0)
    }

    pub fn failures(&self) -> u64 {
        self.tallies.iter().map(|t| t.failures).sum()
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new("reconstructed pairs form a module");
        match self.mode {
            AuditMode::Exhaustive => r.field("sweep", "exhaustive"),
            AuditMode::Sampled { trials, seed } => r
                .field("sweep", "sampled")
                .field("trials", trials)
                .field("sample_seed", seed),
        };
        r.field("pair_elements", self.elements);
        for t in &self.tallies {
            r.field(&format!("{}.checked", t.name), t.checked);
            r.field(&format!("{}.failures", t.name), t.failures);
            if let Some(w) = &t.witness {
                r.witness(format!("{}: {w}", t.name));
            }
        }
        r.holds = self.passed();
        r
    }
}

struct Checker<'a> {
    code: &'a HammingCode,
    tallies: Vec<AxiomTally>,
}

impl<'a> Checker<'a> {
    const NAMES: [&'static str; 6] = [
        "commutativity",
        "associativity",
        "inverses",
        "left-distributivity",
        "scalar-distributivity",
        "scalar-associativity",
    ];

    fn new(code: &'a HammingCode) -> Self {
        let tallies = Self::NAMES
            .iter()
            .map(|name| AxiomTally {
                name,
                checked: 0,
                failures: 0,
                witness: None,
            })
            .collect();
        Checker { code, tallies }
    }

    fn alg(&self) -> &Algebra {
        self.code.algebra()
    }

    fn add(&self, u: &PairElement, v: &PairElement) -> Result<PairElement> {
        pair_add(self.code, u, v)
    }

    fn smul(&self, a: &Scalar, u: &PairElement) -> PairElement {
        pair_scalar_mul(self.alg(), a, u)
    }

    fn record(&mut self, idx: usize, ok: bool, witness: impl FnOnce() -> String) {
        let t = &mut self.tallies[idx];
        t.checked += 1;
        if !ok {
            t.failures += 1;
            if t.witness.is_none() {
                t.witness = Some(witness());
            }
        }
    }

    fn pair(&mut self, u: &PairElement, v: &PairElement) -> Result<()> {
        let (uv, vu) = (self.add(u, v)?, self.add(v, u)?);
        let alg = self.code.algebra().clone();
        self.record(0, uv == vu, || {
            format!("{} + {} differs by order", u.render(&alg), v.render(&alg))
        });
        Ok(())
    }

    fn triple(&mut self, u: &PairElement, v: &PairElement, w: &PairElement) -> Result<()> {
        let l = self.add(&self.add(u, v)?, w)?;
        let r = self.add(u, &self.add(v, w)?)?;
        let alg = self.code.algebra().clone();
        self.record(1, l == r, || {
            format!(
                "({} + {}) + {} = {} but {} + ({} + {}) = {}",
                u.render(&alg),
                v.render(&alg),
                w.render(&alg),
                l.render(&alg),
                u.render(&alg),
                v.render(&alg),
                w.render(&alg),
                r.render(&alg)
            )
        });
        Ok(())
    }

    fn inverse(&mut self, u: &PairElement) -> Result<()> {
        let alg = self.code.algebra().clone();
        let neg = match u {
            PairElement::Zero => PairElement::Zero,
            PairElement::Pair(a, i) => PairElement::Pair(alg.neg(a), i.clone()),
        };
        let s = self.add(u, &neg)?;
        let z = self.add(u, &PairElement::Zero)?;
        self.record(2, s == PairElement::Zero && z == *u, || {
            format!("{} has no additive inverse", u.render(&alg))
        });
        Ok(())
    }

    fn scalar_pair(&mut self, a: &Scalar, u: &PairElement, v: &PairElement) -> Result<()> {
        let l = self.smul(a, &self.add(u, v)?);
        let r = self.add(&self.smul(a, u), &self.smul(a, v))?;
        let alg = self.code.algebra().clone();
        self.record(3, l == r, || {
            format!("{}·({} + {}) is not distributive", alg.show(a), u.render(&alg), v.render(&alg))
        });
        Ok(())
    }

    fn scalars(&mut self, a: &Scalar, b: &Scalar, u: &PairElement, associative: bool) -> Result<()> {
        let alg = self.code.algebra().clone();
        let l = self.smul(&alg.add(a, b), u);
        let r = self.add(&self.smul(a, u), &self.smul(b, u))?;
        self.record(4, l == r, || {
            format!("({} + {})·{} is not distributive", alg.show(a), alg.show(b), u.render(&alg))
        });
        if associative {
            let l = self.smul(&alg.mul(a, b), u);
            let r = self.smul(a, &self.smul(b, u));
            self.record(5, l == r, || {
                format!("({}{})·{} != {}·({}·{})", alg.show(a), alg.show(b), u.render(&alg), alg.show(a), alg.show(b), u.render(&alg))
            });
        }
        Ok(())
    }
}

/// Checks commutativity, associativity and inverses of `pair_add` and both
/// distributive laws, plus `(αβ)u = α(βu)` over associative algebras.
pub fn module_axiom_check(code: &HammingCode, mode: AuditMode) -> Result<ModuleReport> {
    let alg = code.algebra().clone();
    let associative = alg.is_associative();
    let mut ck = Checker::new(code);
    let elements;
    match mode {
        AuditMode::Exhaustive => {
            let cols = code.enumerate_columns()?;
            let scalars = alg.elements()?;
            let mut elems = vec![PairElement::Zero];
            for c in &cols {
                for a in scalars.iter().filter(|a| !alg.is_zero(a)) {
                    elems.push(PairElement::Pair(a.clone(), c.clone()));
                }
            }
            elements = elems.len() as u64;
            for u in &elems {
                ck.inverse(u)?;
                for v in &elems {
                    ck.pair(u, v)?;
                    for w in &elems {
                        ck.triple(u, v, w)?;
                    }
                    for a in &scalars {
                        ck.scalar_pair(a, u, v)?;
                    }
                }
                for a in &scalars {
                    for b in &scalars {
                        ck.scalars(a, b, u, associative)?;
                    }
                }
            }
        }
        AuditMode::Sampled { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            elements = trials as u64;
            let draw = |rng: &mut ChaCha8Rng| {
                if rng.random_range(0..10) == 0 {
                    PairElement::Zero
                } else {
                    PairElement::Pair(alg.random_nonzero(rng, SAMPLE_HEIGHT), code.random_column(rng))
                }
            };
            for _ in 0..trials {
                let (u, v, w) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
                let a = alg.random(&mut rng, SAMPLE_HEIGHT);
                let b = alg.random(&mut rng, SAMPLE_HEIGHT);
                ck.inverse(&u)?;
                ck.pair(&u, &v)?;
                ck.triple(&u, &v, &w)?;
                ck.scalar_pair(&a, &u, &v)?;
                ck.scalars(&a, &b, &u, associative)?;
            }
        }
    }
    Ok(ModuleReport {
        mode,
        elements,
        tallies: ck.tallies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2_code() -> HammingCode {
        HammingCode::new(Algebra::preset("f2").unwrap(), 3).unwrap()
    }

    fn col(code: &HammingCode, s: &str) -> Column {
        Column::parse(code.algebra(), s).unwrap()
    }

    #[test]
    fn pair_add_examples() {
        let c = f2_code();
        let one = Scalar::Residue(1);
        let u = PairElement::Pair(one.clone(), col(&c, "(1,0,0)"));
        let v = PairElement::Pair(one.clone(), col(&c, "(0,1,0)"));
        assert_eq!(
            pair_add(&c, &u, &v).unwrap(),
            PairElement::Pair(one.clone(), col(&c, "(1,1,0)"))
        );
        assert_eq!(pair_add(&c, &u, &PairElement::Zero).unwrap(), u);
        assert_eq!(pair_add(&c, &u, &u).unwrap(), PairElement::Zero);
    }

    #[test]
    fn scalar_mul_examples() {
        let h = HammingCode::new(Algebra::quaternions(), 2).unwrap();
        let alg = h.algebra().clone();
        let c = col(&h, "(1, 0)");
        let u = PairElement::Pair(alg.parse_scalar("j").unwrap(), c.clone());
        let i = alg.parse_scalar("i").unwrap();
        assert_eq!(
            pair_scalar_mul(&alg, &i, &u),
            PairElement::Pair(alg.parse_scalar("k").unwrap(), c)
        );
        assert_eq!(pair_scalar_mul(&alg, &alg.zero(), &u), PairElement::Zero);
    }

    #[test]
    fn reduction_agrees_with_syndrome() {
        let c = f2_code();
        let alg = c.algebra().clone();
        assert!(membership_by_reduction(&c, &FinVec::new()).unwrap());
        let cols = c.enumerate_columns().unwrap();
        for mask in 0u32..128 {
            let x = FinVec::from_entries(
                &alg,
                cols.iter()
                    .enumerate()
                    .filter(|(j, _)| mask >> j & 1 == 1)
                    .map(|(_, c)| (c.clone(), Scalar::Residue(1))),
            )
            .unwrap();
            let (ok, sizes) = reduction_trace(&c, &x).unwrap();
            assert_eq!(ok, c.contains(&x).unwrap(), "mask {mask}");
            assert!(sizes.windows(2).all(|w| w[1] < w[0]));
        }
    }

    #[test]
    fn f3_module_axioms() {
        let c = HammingCode::new(Algebra::preset("f3").unwrap(), 2).unwrap();
        let r = module_axiom_check(&c, AuditMode::Exhaustive).unwrap();
        assert_eq!(r.elements, 9);
        assert!(r.passed(), "{}", r.to_report());
    }

    #[test]
    fn octonion_pairs_are_not_a_module() {
        // Left scalar associativity is skipped for nonassociative algebras, but
        // the left distributive law of the pair module fails.
        let c = HammingCode::new(Algebra::octonions(), 2).unwrap();
        let r = module_axiom_check(&c, AuditMode::Sampled { trials: 50, seed: 1 }).unwrap();
        let dist = r.tallies.iter().find(|t| t.name == "left-distributivity").unwrap();
        assert!(dist.failures > 0);
    }
}
