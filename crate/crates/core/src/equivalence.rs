//! Isometries of the ambient space and classification certificates:
//! choice-function and basis-change isomorphisms, the support invariant
//! separating codes with different row counts, and witnesses for
//! nonassociative, noncommutative and conjugated codes.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{expand_scalar, recombine, Algebra, AlgebraRef, Scalar};
use crate::error::{Error, Result};
use crate::finvec::{Column, DenseVec, FinVec};
use crate::hamming::{tuples, ChoiceFunction, HammingCode, DEFAULT_BUDGET, SAMPLE_HEIGHT};
use crate::linalg;
use crate::report::Report;

pub(crate) fn one_line(alg: &Algebra, x: &FinVec) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.iter()
        .map(|(c, v)| format!("{} := {}", c.render(alg), alg.show(v)))
        .join("; ")
}

/// How columns outside the explicit table are mapped.
#[derive(Clone, Debug)]
enum Rule {
    Identity,
    Basis(Box<HammingCode>, BasisChange),
    Conjugation,
}

/// `x ↦ Σ b(x_i)·α_i e_{π(i)}` with `b` the identity or conjugation.
#[derive(Clone, Debug)]
pub struct LinearIsometry {
    alg: AlgebraRef,
    explicit: BTreeMap<Column, (Column, Scalar)>,
    default_multiplier: Scalar,
    rule: Rule,
    conjugate_values: bool,
}

impl LinearIsometry {
    pub fn identity(alg: AlgebraRef) -> Result<Self> {
        let one = alg
            .right_unit()
            .ok_or_else(|| Error::Unsupported(format!("{} has no right unit", alg.name())))?;
        Ok(Self::uniform(alg, one))
    }

    /// `π` the identity and the same multiplier at every column.
    pub fn uniform(alg: AlgebraRef, alpha: Scalar) -> Self {
        LinearIsometry {
            alg,
            explicit: BTreeMap::new(),
            default_multiplier: alpha,
            rule: Rule::Identity,
            conjugate_values: false,
        }
    }

    /// Explicit `(π(i), α_i)` on finitely many columns, identity with unit multiplier elsewhere.
    pub fn explicit(alg: AlgebraRef, map: BTreeMap<Column, (Column, Scalar)>) -> Result<Self> {
        if map.values().any(|(_, a)| alg.is_zero(a)) {
            return Err(Error::InvalidIsometry("multipliers must be nonzero".into()));
        }
        let mut iso = Self::identity(alg)?;
        iso.explicit = map;
        Ok(iso)
    }

    /// A random coordinate permutation with random multipliers over a finite code.
    pub fn random_monomial<R: Rng + ?Sized>(code: &HammingCode, rng: &mut R) -> Result<Self> {
        let alg = code.algebra().clone();
        let cols = code.enumerate_columns()?;
        let mut targets = cols.clone();
        targets.shuffle(rng);
        let map = cols
            .into_iter()
            .zip(targets)
            .map(|(c, t)| (c, (t, alg.random_nonzero(rng, SAMPLE_HEIGHT))))
            .collect();
        Self::explicit(alg, map)
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.alg
    }

    /// `(π(i), α_i)`.
    pub fn image(&self, col: &Column) -> Result<(Column, Scalar)> {
        if let Some(v) = self.explicit.get(col) {
            return Ok(v.clone());
        }
        match &self.rule {
            Rule::Identity => Ok((col.clone(), self.default_multiplier.clone())),
            Rule::Basis(code, b) => basis_image(code, b, col),
            Rule::Conjugation => {
                let c = col
                    .entries()
                    .iter()
                    .map(|x| self.alg.conjugate(x))
                    .collect::<Result<Vec<_>>>()?;
                Ok((Column(c), self.default_multiplier.clone()))
            }
        }
    }

    pub fn apply(&self, x: &FinVec) -> Result<FinVec> {
        let alg = &self.alg;
        let mut out = FinVec::new();
        let mut seen = BTreeSet::new();
        for (c, v) in x.iter() {
            let (t, a) = self.image(c)?;
            if !seen.insert(t.clone()) {
                return Err(Error::InvalidIsometry(format!(
                    "two coordinates map to {}",
                    t.render(alg)
                )));
            }
            let v = if self.conjugate_values {
                alg.conjugate(v)?
            } else {
                v.clone()
            };
            out.set(alg, t, alg.mul(&v, &a));
        }
        Ok(out)
    }

    /// The explicit `(π(i), α_i)` table over `cols`, skipping identity entries.
    pub fn table(&self, cols: &[Column]) -> Result<Vec<(Column, Column, Scalar)>> {
        let one = self.alg.right_unit();
        let mut out = Vec::new();
        for c in cols {
            let (t, a) = self.image(c)?;
            if &t != c || Some(&a) != one.as_ref() {
                out.push((c.clone(), t, a));
            }
        }
        Ok(out)
    }
}

pub fn apply_isometry(iso: &LinearIsometry, x: &FinVec) -> Result<FinVec> {
    iso.apply(x)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementaryOp {
    Swap(usize, usize),
    /// Coordinate `i` of the image is `v_i·s`.
    Scale(usize, Scalar),
    /// Coordinate `target` of the image gains `v_source·factor`.
    AddMultiple {
        target: usize,
        source: usize,
        factor: Scalar,
    },
}

/// Right action `v ↦ vM` on row vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisChange {
    pub matrix: Vec<Vec<Scalar>>,
    pub ops: Vec<ElementaryOp>,
}

impl BasisChange {
    pub fn identity(alg: &Algebra, m: usize) -> Result<Self> {
        let one = alg
            .one()
            .ok_or_else(|| Error::Unsupported("basis changes need a two-sided unit".into()))?;
        let matrix = (0..m)
            .map(|r| (0..m).map(|c| if r == c { one.clone() } else { alg.zero() }).collect())
            .collect();
        Ok(BasisChange { matrix, ops: Vec::new() })
    }

    /// An arbitrary matrix; singularity surfaces when the isomorphism is built.
    pub fn from_matrix(matrix: Vec<Vec<Scalar>>) -> Self {
        BasisChange { matrix, ops: Vec::new() }
    }

    pub fn m(&self) -> usize {
        self.matrix.len()
    }

    /// `M ← M·E` for the elementary matrix `E` of `op`.
    pub fn then(mut self, alg: &Algebra, op: ElementaryOp) -> Result<Self> {
        let m = self.m();
        let bad = |msg: &str| Err(Error::InvalidBasisChange(msg.to_string()));
        match &op {
            ElementaryOp::Swap(i, j) => {
                if *i >= m || *j >= m {
                    return bad("swap index out of range");
                }
                for row in self.matrix.iter_mut() {
                    row.swap(*i, *j);
                }
            }
            ElementaryOp::Scale(i, s) => {
                if *i >= m {
                    return bad("scale index out of range");
                }
                if alg.is_zero(s) {
                    return bad("scale factor must be nonzero");
                }
                for row in self.matrix.iter_mut() {
                    row[*i] = alg.mul(&row[*i], s);
                }
            }
            ElementaryOp::AddMultiple { target, source, factor } => {
                if *target >= m || *source >= m || target == source {
                    return bad("add-multiple needs distinct in-range indices");
                }
                for row in self.matrix.iter_mut() {
                    let add = alg.mul(&row[*source], factor);
                    row[*target] = alg.add(&row[*target], &add);
                }
            }
        }
        self.ops.push(op);
        Ok(self)
    }

    /// A composition of `len` random elementary operations.
    pub fn random<R: Rng + ?Sized>(alg: &Algebra, m: usize, len: usize, rng: &mut R) -> Result<Self> {
        let mut b = Self::identity(alg, m)?;
        for _ in 0..len {
            let i = rng.random_range(0..m);
            let j = (i + rng.random_range(1..m)) % m;
            let op = match rng.random_range(0..3) {
                0 => ElementaryOp::Swap(i, j),
                1 => ElementaryOp::Scale(i, alg.random_nonzero(rng, SAMPLE_HEIGHT)),
                _ => ElementaryOp::AddMultiple {
                    target: i,
                    source: j,
                    factor: alg.random_nonzero(rng, SAMPLE_HEIGHT),
                },
            };
            b = b.then(alg, op)?;
        }
        Ok(b)
    }

    pub fn apply(&self, alg: &Algebra, v: &DenseVec) -> DenseVec {
        let m = self.m();
        DenseVec(
            (0..m)
                .map(|c| {
                    (0..m).fold(alg.zero(), |acc, r| alg.add(&acc, &alg.mul(&v.0[r], &self.matrix[r][c])))
                })
                .collect(),
        )
    }

    pub fn render(&self, alg: &Algebra) -> String {
        self.matrix
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| alg.format_scalar(x)).join(", ")))
            .join(" ")
    }
}

fn basis_image(code: &HammingCode, b: &BasisChange, col: &Column) -> Result<(Column, Scalar)> {
    let alg = code.algebra();
    let v = b.apply(alg, &col.to_dense());
    if v.is_zero(alg) {
        return Err(Error::InvalidBasisChange(format!(
            "{}·M = 0; the matrix is singular",
            col.render(alg)
        )));
    }
    let (alpha, a) = code.normalize(&v)?;
    Ok((a, alpha))
}

fn require_associative(alg: &Algebra, what: &str) -> Result<()> {
    if alg.is_associative() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "{what} needs an associative algebra; {} is not",
            alg.name()
        )))
    }
}

/// Isometry carrying the code with representatives `E1` onto the one with `E2`.
pub fn choice_isomorphism(code: &HammingCode, e1: &ChoiceFunction, e2: &ChoiceFunction) -> Result<LinearIsometry> {
    let alg = code.algebra().clone();
    require_associative(&alg, "choice isomorphism")?;
    let one = alg.one().ok_or_else(|| Error::Unsupported("no two-sided unit".into()))?;
    let keys: BTreeSet<&Column> = e1.iter().chain(e2.iter()).map(|(c, _)| c).collect();
    let mut map = BTreeMap::new();
    for c in keys {
        code.check_column(c)?;
        let c1 = e1.get(c).unwrap_or(&one);
        let c2 = e2.get(c).unwrap_or(&one);
        let alpha = alg.solve_right(c2, c1)?;
        if alpha != one {
            map.insert(c.clone(), (c.clone(), alpha));
        }
    }
    LinearIsometry::explicit(alg, map)
}

/// Isometry induced by `a ↦ aM`, normalized back to canonical columns.
pub fn basis_change_isomorphism(code: &HammingCode, b: &BasisChange) -> Result<LinearIsometry> {
    let alg = code.algebra().clone();
    require_associative(&alg, "basis change isomorphism")?;
    if b.m() != code.m() || b.matrix.iter().any(|r| r.len() != code.m()) {
        return Err(Error::InvalidBasisChange(format!("M must be {0}x{0}", code.m())));
    }
    if let Ok(cols) = code.enumerate_columns() {
        let mut seen = BTreeSet::new();
        for c in &cols {
            let (t, _) = basis_image(code, b, c)?;
            if !seen.insert(t) {
                return Err(Error::InvalidBasisChange(
                    "two columns span the same line after M; the matrix is singular".into(),
                ));
            }
        }
    }
    let mut iso = LinearIsometry::identity(alg)?;
    iso.rule = Rule::Basis(Box::new(code.clone()), b.clone());
    Ok(iso)
}

/// Column `a ↦ ā` with values conjugated (rational quaternions and octonions).
pub fn conjugation_isometry(code: &HammingCode) -> Result<LinearIsometry> {
    let alg = code.algebra().clone();
    if !alg.is_hypercomplex() {
        return Err(Error::Unsupported(format!("{} has no conjugation", alg.name())));
    }
    for p in code.pivots() {
        if &alg.conjugate(p)? != p {
            return Err(Error::Unsupported("pivots must be real".into()));
        }
    }
    let mut iso = LinearIsometry::identity(alg)?;
    iso.rule = Rule::Conjugation;
    iso.conjugate_values = true;
    Ok(iso)
}

/// The columns `(0,…,0,b_β,0,…,0)`.
pub fn identity_columns(code: &HammingCode) -> Vec<Column> {
    let alg = code.algebra();
    (0..code.m())
        .map(|b| {
            let mut v = vec![alg.zero(); code.m()];
            v[b] = code.pivots()[b].clone();
            Column(v)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SupportMethod {
    /// Linear system over F₀ with this many unknowns, equations and rank.
    Linearized { dimension: usize, unknowns: usize, equations: usize, rank: usize },
    BruteForce { searched: u64 },
}

#[derive(Clone, Debug)]
pub struct SupportResult {
    pub witness: Option<FinVec>,
    pub method: SupportMethod,
}

/// A nonzero codeword supported in `set`, or `None` when the columns are
/// left-independent.
pub fn support_witness(code: &HammingCode, set: &[Column]) -> Result<SupportResult> {
    let alg = code.algebra();
    for c in set {
        code.check_column(c)?;
    }
    let set: Vec<Column> = set.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    if let Some(st) = alg.subfield_structure() {
        let s = st.dimension();
        let f0 = &st.f0;
        let n = set.len();
        let unknowns = n * s;
        // equation (l, r): Σ_n Σ_p x_n^(p) [i_r coefficient of i_p·a_{l,n}]
        let mut rows = vec![vec![f0.zero(); unknowns]; code.m() * s];
        for (ni, col) in set.iter().enumerate() {
            let v = code.column_vector(col);
            for (l, entry) in v.0.iter().enumerate() {
                let coords = expand_scalar(alg, entry, &st)?;
                for p in 0..s {
                    let mut unit = vec![f0.zero(); s];
                    unit[p] = f0.from_int(1);
                    let prod = st.product_coords(&unit, &coords);
                    for (r, c) in prod.into_iter().enumerate() {
                        rows[l * s + r][ni * s + p] = c;
                    }
                }
            }
        }
        let ns = linalg::nullspace(st.subfield, &rows, unknowns)?;
        let method = SupportMethod::Linearized {
            dimension: s,
            unknowns,
            equations: rows.len(),
            rank: unknowns - ns.len(),
        };
        let witness = match ns.first() {
            None => None,
            Some(x) => {
                let mut w = FinVec::new();
                for (ni, col) in set.iter().enumerate() {
                    w.set(alg, col.clone(), recombine(alg, &x[ni * s..(ni + 1) * s])?);
                }
                if w.is_zero() || !code.contains(&w)? {
                    return Err(Error::Inconsistency(
                        "linearized solution is not a codeword".into(),
                    ));
                }
                Some(w)
            }
        };
        return Ok(SupportResult { witness, method });
    }
    let elems = alg.elements().map_err(|_| {
        Error::Unsupported(format!(
            "{} has no subfield structure and is infinite",
            alg.name()
        ))
    })?;
    let total = (elems.len() as u64)
        .checked_pow(set.len() as u32)
        .filter(|t| *t <= DEFAULT_BUDGET)
        .ok_or_else(|| Error::Unsupported("support set too large for brute force".into()))?;
    let mut searched = 0;
    for coeffs in tuples(&elems, set.len()) {
        searched += 1;
        let w = FinVec::from_entries(alg, set.iter().cloned().zip(coeffs))?;
        if !w.is_zero() && code.contains(&w)? {
            return Ok(SupportResult {
                witness: Some(w),
                method: SupportMethod::BruteForce { searched },
            });
        }
    }
    debug_assert_eq!(searched, total);
    Ok(SupportResult {
        witness: None,
        method: SupportMethod::BruteForce { searched },
    })
}

#[derive(Clone, Debug)]
pub struct DistinguishOptions {
    pub seed: u64,
    /// Random column sets drawn when the sets cannot all be enumerated.
    pub samples: usize,
    /// Largest number of column sets enumerated exhaustively.
    pub max_sets: usize,
}

impl Default for DistinguishOptions {
    fn default() -> Self {
        DistinguishOptions {
            seed: 0,
            samples: 100,
            max_sets: 10_000,
        }
    }
}

/// Certifies that no isometry maps the `m1`-row code onto the `m2`-row code:
/// the latter has `m2` columns supporting no codeword, the former has none.
pub fn distinguish_invariant(a: &HammingCode, b: &HammingCode, opts: &DistinguishOptions) -> Result<Report> {
    let alg = a.algebra().clone();
    if alg.digest() != b.algebra().digest() {
        return Err(Error::InvalidParameter("codes are over different algebras".into()));
    }
    let (m1, m2) = (a.m(), b.m());
    if m1 >= m2 {
        return Err(Error::InvalidParameter(format!("need m1 < m2, got {m1} and {m2}")));
    }
    let mut r = Report::new(format!("H^({m1}) and H^({m2}) are not equivalent"));
    r.field("m1", m1).field("m2", m2);

    let ident = identity_columns(b);
    let ind = support_witness(b, &ident)?;
    r.field("independent_set", ident.iter().map(|c| c.render(&alg)).join(" "));
    r.field("independent_method", method_name(&ind.method));
    r.require("independent_half", ind.witness.is_none());
    if let Some(w) = &ind.witness {
        r.witness(format!("identity columns of H^({m2}) support {}", one_line(&alg, w)));
    }

    let sets: Vec<Vec<Column>> = match a.enumerate_columns() {
        Ok(cols) if count_subsets(cols.len(), m2) <= opts.max_sets as u128 => {
            r.field("dependent_sweep", "exhaustive");
            cols.into_iter().combinations(m2).collect()
        }
        _ => {
            r.field("dependent_sweep", "sampled").field("sample_seed", opts.seed);
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            (0..opts.samples)
                .map(|_| {
                    let mut s = BTreeSet::new();
                    while s.len() < m2 {
                        s.insert(a.random_column(&mut rng));
                    }
                    s.into_iter().collect()
                })
                .collect()
        }
    };
    let mut dependent = 0;
    let mut first = None;
    for s in &sets {
        let res = support_witness(a, s)?;
        match res.witness {
            Some(w) if w.support().all(|c| s.contains(c)) && a.contains(&w)? => {
                dependent += 1;
                if first.is_none() {
                    first = Some(w);
                }
            }
            _ => {
                r.witness(format!(
                    "columns {} of H^({m1}) support no codeword",
                    s.iter().map(|c| c.render(&alg)).join(" ")
                ));
            }
        }
    }
    r.field("dependent_sets_checked", sets.len());
    r.field("dependent_sets_ok", dependent);
    if let Some(w) = first {
        r.field("first_dependency", one_line(&alg, &w));
    }
    r.require("dependent_half", dependent == sets.len());
    Ok(r)
}

fn method_name(m: &SupportMethod) -> String {
    match m {
        SupportMethod::Linearized { dimension, unknowns, equations, rank } => format!(
            "linearized s={dimension} unknowns={unknowns} equations={equations} rank={rank}"
        ),
        SupportMethod::BruteForce { searched } => format!("brute-force searched={searched}"),
    }
}

fn count_subsets(n: usize, k: usize) -> u128 {
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// Certificate that left scaling leaves the code.
#[derive(Clone, Debug)]
pub struct NonassocWitness {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub codeword: FinVec,
    pub violating: FinVec,
    /// Which of `b·y`, `a·(b·y)`, `(ab)·y` leaves the code first.
    pub escaping: &'static str,
}

impl NonassocWitness {
    pub fn verify(&self, code: &HammingCode) -> Result<bool> {
        let alg = code.algebra();
        Ok(code.contains(&self.codeword)?
            && !self.violating.is_zero()
            && self.violating.norm() <= 2
            && !code.contains(&self.violating)?
            && alg.mul(&self.a, &alg.mul(&self.b, &self.c)) != alg.mul(&alg.mul(&self.a, &self.b), &self.c))
    }
}

fn first_nonassociative_triple(alg: &Algebra) -> Result<Option<(Scalar, Scalar, Scalar)>> {
    let cands: Vec<Scalar> = if alg.is_hypercomplex() {
        let dim = if alg.is_quaternions() { 4 } else { 8 };
        (1..dim).map(|i| alg.basis_unit(i)).collect::<Result<_>>()?
    } else {
        alg.nonzero_elements()?
    };
    let n = cands.len();
    Ok((0..n * n * n).into_par_iter().find_map_first(|t| {
        let (a, b, c) = (&cands[t / (n * n)], &cands[t / n % n], &cands[t % n]);
        (alg.mul(a, &alg.mul(b, c)) != alg.mul(&alg.mul(a, b), c))
            .then(|| (a.clone(), b.clone(), c.clone()))
    }))
}

/// `None` for associative algebras; otherwise a vector of weight at most 2
/// obtained from left multiples of a codeword.
pub fn nonassoc_witness(code: &HammingCode) -> Result<Option<NonassocWitness>> {
    let alg = code.algebra();
    if alg.is_associative() {
        return Ok(None);
    }
    let one = alg
        .right_unit()
        .ok_or_else(|| Error::Unsupported("the witness needs a right unit".into()))?;
    let (a, b, c) = first_nonassociative_triple(alg)?
        .ok_or_else(|| Error::Inconsistency("no nonassociative triple found".into()))?;
    let cols = identity_columns(code);
    let y = code.weight3_through(&one, &cols[0], &c, &cols[1])?;
    let by = y.scale_left(alg, &b);
    let aby = by.scale_left(alg, &a);
    let ab_y = y.scale_left(alg, &alg.mul(&a, &b));
    let violating = aby.sub(alg, &ab_y)?;
    let escaping = if !code.contains(&by)? {
        "b·y"
    } else if !code.contains(&aby)? {
        "a·(b·y)"
    } else {
        "(ab)·y"
    };
    Ok(Some(NonassocWitness {
        a,
        b,
        c,
        codeword: y,
        violating,
        escaping,
    }))
}

pub fn nonassoc_report(code: &HammingCode) -> Result<Report> {
    let alg = code.algebra();
    let mut r = Report::new("no left-linear perfect code over a nonassociative quasifield with right unit");
    match nonassoc_witness(code)? {
        None => {
            r.field("outcome", "associative, no witness");
        }
        Some(w) => {
            let ok = w.verify(code)?;
            r.field("outcome", "witness");
            r.field("triple", format!("({}, {}, {})", alg.show(&w.a), alg.show(&w.b), alg.show(&w.c)));
            r.field("codeword", one_line(alg, &w.codeword));
            r.field("violating_vector", one_line(alg, &w.violating));
            r.field("violating_weight", w.violating.norm());
            r.field("escaping_multiple", w.escaping);
            r.require("verified", ok);
            r.witness(format!(
                "a(bc) = {} but (ab)c = {}",
                alg.show(&alg.mul(&w.a, &alg.mul(&w.b, &w.c))),
                alg.show(&alg.mul(&alg.mul(&w.a, &w.b), &w.c))
            ));
        }
    }
    Ok(r)
}

#[derive(Clone, Debug)]
pub enum RightLinearity {
    /// Commutative: every tested codeword stays in the code under right scaling.
    Confirmed { codewords: usize, scalars: usize },
    Witness { codeword: FinVec, alpha: Scalar },
}

/// Candidate columns for witness searches over infinite algebras: the
/// identity columns and pivot-0 columns with a basis-unit tail entry.
fn search_columns(code: &HammingCode) -> Result<Vec<Column>> {
    if let Ok(c) = code.enumerate_columns() {
        return Ok(c);
    }
    let alg = code.algebra();
    let mut cols = identity_columns(code);
    let units: Vec<Scalar> = if alg.is_hypercomplex() {
        let dim = if alg.is_quaternions() { 4 } else { 8 };
        (0..dim).map(|i| alg.basis_unit(i)).collect::<Result<_>>()?
    } else {
        vec![alg.from_int(1), alg.from_int(2)]
    };
    for u in &units {
        let mut v = identity_columns(code)[0].entries().to_vec();
        v[1] = u.clone();
        cols.push(Column(v));
    }
    Ok(cols.into_iter().unique().collect())
}

fn scaling_scalars(alg: &Algebra) -> Result<Vec<Scalar>> {
    if alg.is_hypercomplex() {
        let dim = if alg.is_quaternions() { 4 } else { 8 };
        (0..dim).map(|i| alg.basis_unit(i)).collect()
    } else if alg.is_finite() {
        alg.nonzero_elements()
    } else {
        Ok(vec![alg.from_int(1), alg.from_int(2), alg.from_int(-3)])
    }
}

pub fn right_linearity_witness(code: &HammingCode, seed: u64, samples: usize) -> Result<RightLinearity> {
    let alg = code.algebra();
    require_associative(alg, "right linearity check")?;
    let scalars = scaling_scalars(alg)?;
    let escapes = |c: &FinVec| -> Result<Option<Scalar>> {
        for s in &scalars {
            if !code.contains(&c.scale_right(alg, s))? {
                return Ok(Some(s.clone()));
            }
        }
        Ok(None)
    };
    if alg.is_commutative() {
        let words = match code.enumerate_codewords(DEFAULT_BUDGET) {
            Ok(w) => w,
            Err(_) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..samples).map(|_| code.random_codeword(&mut rng)).collect::<Result<_>>()?
            }
        };
        for c in &words {
            if code.contains_right(c)? != code.contains(c)? {
                return Err(Error::Inconsistency("left and right syndromes disagree over a commutative algebra".into()));
            }
            if let Some(alpha) = escapes(c)? {
                return Ok(RightLinearity::Witness { codeword: c.clone(), alpha });
            }
        }
        return Ok(RightLinearity::Confirmed {
            codewords: words.len(),
            scalars: scalars.len(),
        });
    }
    let cols = search_columns(code)?;
    let coeffs = scaling_scalars(alg)?;
    for [x, y] in cols.iter().array_combinations() {
        for alpha in &coeffs {
            let g = code.weight3_through(alpha, x, &alg.from_int(1), y)?;
            if let Some(s) = escapes(&g)? {
                return Ok(RightLinearity::Witness { codeword: g, alpha: s });
            }
        }
    }
    Err(Error::Inconsistency("noncommutative algebra but no right-scaling witness found".into()))
}

pub fn right_linearity_report(code: &HammingCode, seed: u64, samples: usize) -> Result<Report> {
    let alg = code.algebra();
    let mut r = Report::new("left Hamming code is right-linear iff the algebra is commutative");
    let commutative = alg.is_commutative();
    r.field("commutative", commutative);
    match right_linearity_witness(code, seed, samples)? {
        RightLinearity::Confirmed { codewords, scalars } => {
            r.field("outcome", "two-sided linear");
            r.field("codewords_checked", codewords).field("scalars_checked", scalars);
            r.require("consistent", commutative);
        }
        RightLinearity::Witness { codeword, alpha } => {
            let image = codeword.scale_right(alg, &alpha);
            let ok = code.contains(&codeword)? && !code.contains(&image)?;
            r.field("outcome", "right-scaling escape");
            r.field("codeword", one_line(alg, &codeword));
            r.field("alpha", alg.show(&alpha));
            r.field("image", one_line(alg, &image));
            r.require("verified", ok);
            r.require("consistent", !commutative);
            r.witness(format!(
                "{} · {} leaves the code (syndrome {})",
                one_line(alg, &codeword),
                alg.show(&alpha),
                code.syndrome(&image)?.render(alg)
            ));
        }
    }
    Ok(r)
}

/// Conjugates random left codewords and checks right-code membership.
pub fn conjugate_code_check(code: &HammingCode, samples: usize, seed: u64) -> Result<Report> {
    let alg = code.algebra();
    if !alg.is_quaternions() {
        return Err(Error::Unsupported(format!(
            "conjugate check needs rational quaternions, got {}",
            alg.name()
        )));
    }
    let iso = conjugation_isometry(code)?;
    let mut r = Report::new("conjugation maps the left code onto the right code");
    r.field("samples", samples).field("sample_seed", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pass = 0;
    let mut fail = 0;
    let zero_ok = code.contains_right(&iso.apply(&FinVec::new())?)?;
    for _ in 0..samples {
        let x = code.random_codeword(&mut rng)?;
        let img = iso.apply(&x)?;
        if code.contains_right(&img)? {
            pass += 1;
        } else {
            fail += 1;
            if r.witnesses.len() < 5 {
                r.witness(format!("{} maps outside the right code", one_line(alg, &x)));
            }
        }
    }
    r.require("zero_vector", zero_ok);
    r.field("passed", pass).field("failed", fail);
    r.holds &= fail == 0;
    Ok(r)
}
