//! Hamming codes over quasifields: the canonical column set, syndromes,
//! membership, single-error decoding, weight-3 generators and perfectness
//! verification.
//!
//! A column is canonical when it has leading zeros, then the pivot `b_β`,
//! then an arbitrary tail. Coordinates of the code are canonical columns.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, AlgebraRef, Scalar};
use crate::error::{Error, Result};
use crate::finvec::{Column, DenseVec, FinVec};
use crate::report::Report;

/// Default ambient-size budget for exhaustive verification.
pub const DEFAULT_BUDGET: u64 = 1 << 20;
/// Default number of random trials for structural checks on infinite algebras.
pub const DEFAULT_TRIALS: usize = 10_000;
/// Bound on numerators and denominators of random rational scalars.
pub const SAMPLE_HEIGHT: u32 = 10;

/// Chosen representative `c_a·a` for each line; unlisted columns use `a` itself.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChoiceFunction {
    reps: BTreeMap<Column, Scalar>,
}

impl ChoiceFunction {
    pub fn canonical() -> Self {
        Self::default()
    }

    pub fn set(&mut self, alg: &Algebra, col: Column, c: Scalar) -> Result<()> {
        alg.check(&c)?;
        if alg.is_zero(&c) {
            return Err(Error::InvalidParameter("choice scalar must be nonzero".into()));
        }
        self.reps.insert(col, c);
        Ok(())
    }

    pub fn get(&self, col: &Column) -> Option<&Scalar> {
        self.reps.get(col)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Column, &Scalar)> {
        self.reps.iter()
    }

    pub fn is_canonical(&self) -> bool {
        self.reps.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct HammingCode {
    alg: AlgebraRef,
    m: usize,
    pivots: Vec<Scalar>,
    choice: ChoiceFunction,
}

impl HammingCode {
    /// Code with every pivot equal to the right unit.
    pub fn new(alg: AlgebraRef, m: usize) -> Result<Self> {
        let unit = alg.right_unit().ok_or_else(|| {
            Error::InvalidParameter(format!(
                "{} has no right unit; pivots must be given explicitly",
                alg.name()
            ))
        })?;
        Self::with_pivots(alg, m, vec![unit; m])
    }

    pub fn with_pivots(alg: AlgebraRef, m: usize, pivots: Vec<Scalar>) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParameter(format!("m must be at least 2, got {m}")));
        }
        if pivots.len() != m {
            return Err(Error::InvalidParameter(format!(
                "{} pivots given for m = {m}",
                pivots.len()
            )));
        }
        for b in &pivots {
            alg.check(b)?;
            if alg.is_zero(b) {
                return Err(Error::InvalidParameter("pivots must be nonzero".into()));
            }
        }
        Ok(HammingCode {
            alg,
            m,
            pivots,
            choice: ChoiceFunction::canonical(),
        })
    }

    /// Replaces the canonical representatives by `choice`.
    pub fn with_choice(mut self, choice: ChoiceFunction) -> Result<Self> {
        for (c, _) in choice.iter() {
            self.check_column(c)?;
        }
        self.choice = choice;
        Ok(self)
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.alg
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn pivots(&self) -> &[Scalar] {
        &self.pivots
    }

    pub fn choice(&self) -> &ChoiceFunction {
        &self.choice
    }

    /// Code length `(q^m − 1)/(q − 1)` for finite algebras.
    pub fn length(&self) -> Option<u64> {
        let q = self.alg.order()?;
        Some((q.pow(self.m as u32) - 1) / (q - 1))
    }

    /// All canonical columns, pivot position ascending, tails in element order.
    pub fn enumerate_columns(&self) -> Result<Vec<Column>> {
        let elems = self.alg.elements().map_err(|_| {
            Error::Unsupported(format!(
                "{} is infinite; columns cannot be enumerated",
                self.alg.name()
            ))
        })?;
        let zero = self.alg.zero();
        let mut out = Vec::new();
        for beta in 0..self.m {
            let tail_len = self.m - beta - 1;
            for tail in tuples(&elems, tail_len) {
                let mut v = vec![zero.clone(); beta];
                v.push(self.pivots[beta].clone());
                v.extend(tail);
                out.push(Column(v));
            }
        }
        Ok(out)
    }

    pub fn is_canonical_column(&self, v: &[Scalar]) -> bool {
        if v.len() != self.m || !v.iter().all(|x| self.alg.contains(x)) {
            return false;
        }
        match v.iter().position(|x| !self.alg.is_zero(x)) {
            Some(beta) => v[beta] == self.pivots[beta],
            None => false,
        }
    }

    pub fn check_column(&self, c: &Column) -> Result<()> {
        if self.is_canonical_column(c.entries()) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "{} is not a canonical column of this code",
                c.render(&self.alg)
            )))
        }
    }

    fn pivot_index(v: &[Scalar], alg: &Algebra) -> Option<usize> {
        v.iter().position(|x| !alg.is_zero(x))
    }

    fn check_dense(&self, z: &DenseVec) -> Result<usize> {
        if z.len() != self.m {
            return Err(Error::Domain(format!(
                "vector of length {} for m = {}",
                z.len(),
                self.m
            )));
        }
        for x in &z.0 {
            self.alg.check(x)?;
        }
        Self::pivot_index(&z.0, &self.alg)
            .ok_or_else(|| Error::Domain("cannot normalize the zero vector".into()))
    }

    /// Writes `z = y·a` with `a` canonical (left scalar).
    pub fn normalize(&self, z: &DenseVec) -> Result<(Scalar, Column)> {
        let beta = self.check_dense(z)?;
        let alg = &self.alg;
        let y = alg.solve_right(&self.pivots[beta], &z.0[beta])?;
        let mut a = vec![alg.zero(); self.m];
        a[beta] = self.pivots[beta].clone();
        for g in beta + 1..self.m {
            a[g] = alg.solve_left(&y, &z.0[g])?;
        }
        Ok((y, Column(a)))
    }

    /// Writes `z = a·y` with `a` canonical (right scalar).
    pub fn normalize_right(&self, z: &DenseVec) -> Result<(Column, Scalar)> {
        let beta = self.check_dense(z)?;
        let alg = &self.alg;
        let y = alg.solve_left(&self.pivots[beta], &z.0[beta])?;
        let mut a = vec![alg.zero(); self.m];
        a[beta] = self.pivots[beta].clone();
        for g in beta + 1..self.m {
            a[g] = alg.solve_right(&y, &z.0[g])?;
        }
        Ok((Column(a), y))
    }

    /// The parity-check column at coordinate `a`: `c_a·a` under the choice function.
    pub fn column_vector(&self, a: &Column) -> DenseVec {
        match self.choice.get(a) {
            Some(c) => a.to_dense().scale_left(&self.alg, c),
            None => a.to_dense(),
        }
    }

    /// `Σ x_a·a` in F^m.
    pub fn syndrome(&self, x: &FinVec) -> Result<DenseVec> {
        let mut s = DenseVec::zero(&self.alg, self.m);
        for (a, v) in x.iter() {
            self.check_column(a)?;
            s = s.add(&self.alg, &self.column_vector(a).scale_left(&self.alg, v));
        }
        Ok(s)
    }

    pub fn contains(&self, x: &FinVec) -> Result<bool> {
        Ok(self.syndrome(x)?.is_zero(&self.alg))
    }

    /// `Σ a·x_a`, the right-module mirror.
    pub fn syndrome_right(&self, x: &FinVec) -> Result<DenseVec> {
        let mut s = DenseVec::zero(&self.alg, self.m);
        for (a, v) in x.iter() {
            self.check_column(a)?;
            s = s.add(&self.alg, &self.column_vector(a).scale_right(&self.alg, v));
        }
        Ok(s)
    }

    pub fn contains_right(&self, x: &FinVec) -> Result<bool> {
        Ok(self.syndrome_right(x)?.is_zero(&self.alg))
    }

    /// Nearest codeword; differs from `y` in at most one coordinate.
    pub fn decode(&self, y: &FinVec) -> Result<FinVec> {
        let z = self.syndrome(y)?;
        if z.is_zero(&self.alg) {
            return Ok(y.clone());
        }
        let (_, a0) = self.normalize(&z)?;
        let beta = Self::pivot_index(a0.entries(), &self.alg).expect("canonical");
        let v = self.column_vector(&a0);
        let alpha0 = self.alg.solve_right(&v.0[beta], &z.0[beta])?;
        let mut out = y.clone();
        out.accumulate(&self.alg, a0, &self.alg.neg(&alpha0));
        Ok(out)
    }

    /// The unique weight-3 codeword `αe_a + βe_b + γe_c`.
    pub fn weight3_through(&self, alpha: &Scalar, a: &Column, beta: &Scalar, b: &Column) -> Result<FinVec> {
        if a == b || self.alg.is_zero(alpha) || self.alg.is_zero(beta) {
            return Err(Error::InvalidParameter(
                "need distinct columns and nonzero scalars".into(),
            ));
        }
        let mut y = FinVec::unit(&self.alg, a.clone(), alpha.clone());
        y.set(&self.alg, b.clone(), beta.clone());
        let c = self.decode(&y)?;
        if c.norm() != 3 || c.get(a) != Some(alpha) || c.get(b) != Some(beta) {
            return Err(Error::Inconsistency(format!(
                "decoding a weight-2 vector gave a codeword of weight {}",
                c.norm()
            )));
        }
        Ok(c)
    }

    /// All distinct weight-3 codewords (finite algebras).
    pub fn weight3_generators(&self) -> Result<Vec<FinVec>> {
        let cols = self.enumerate_columns()?;
        self.weight3_generators_over(&cols)
    }

    /// Distinct weight-3 codewords through pairs of `cols` (all nonzero
    /// scalings for finite algebras, units only for infinite ones).
    pub fn weight3_generators_over(&self, cols: &[Column]) -> Result<Vec<FinVec>> {
        let scalars = match self.alg.nonzero_elements() {
            Ok(s) => s,
            Err(_) => vec![self.alg.right_unit().expect("infinite algebras are unital")],
        };
        let mut seen = BTreeSet::new();
        for (i, a) in cols.iter().enumerate() {
            for b in &cols[i + 1..] {
                for alpha in &scalars {
                    for beta in &scalars {
                        seen.insert(self.weight3_through(alpha, a, beta, b)?);
                    }
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Weight-3 codewords whose leading entry is the right unit: one per
    /// line of codewords over associative algebras.
    pub fn weight3_representatives(&self) -> Result<Vec<FinVec>> {
        let unit = self.alg.right_unit();
        Ok(self
            .weight3_generators()?
            .into_iter()
            .filter(|c| c.iter().next().map(|(_, v)| v.clone()) == unit)
            .collect())
    }

    pub fn random_column<R: Rng + ?Sized>(&self, rng: &mut R) -> Column {
        let beta = rng.random_range(0..self.m);
        let mut v = vec![self.alg.zero(); beta];
        v.push(self.pivots[beta].clone());
        v.extend((beta + 1..self.m).map(|_| self.alg.random(rng, SAMPLE_HEIGHT)));
        Column(v)
    }

    /// A random weight-3 codeword through two random distinct columns.
    pub fn random_generator<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<FinVec> {
        let a = self.random_column(rng);
        let b = loop {
            let b = self.random_column(rng);
            if b != a {
                break b;
            }
        };
        let alpha = self.alg.random_nonzero(rng, SAMPLE_HEIGHT);
        let beta = self.alg.random_nonzero(rng, SAMPLE_HEIGHT);
        self.weight3_through(&alpha, &a, &beta, &b)
    }

    /// Sum of one to three random weight-3 codewords.
    pub fn random_codeword<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<FinVec> {
        let k = rng.random_range(1..=3);
        let mut c = FinVec::new();
        for _ in 0..k {
            c = c.add(&self.alg, &self.random_generator(rng)?)?;
        }
        Ok(c)
    }

    /// Every codeword, by scanning the ambient space (finite, `q^n ≤ budget`).
    pub fn enumerate_codewords(&self, budget: u64) -> Result<Vec<FinVec>> {
        let amb = Ambient::new(self, budget)?;
        Ok(amb
            .codeword_indices()
            .into_iter()
            .map(|i| amb.vector(i))
            .collect())
    }

    pub fn verify_perfect(&self, opts: &PerfectOptions) -> Result<PerfectReport> {
        let mut notice = None;
        if opts.mode == PerfectMode::Exhaustive {
            match Ambient::new(self, opts.budget) {
                Ok(amb) => return Ok(self.verify_exhaustive(&amb, opts)),
                Err(e) => notice = Some(format!("{e}; falling back to structural mode")),
            }
        }
        let mut rep = self.verify_structural(opts)?;
        rep.notice = notice;
        Ok(rep)
    }

    fn verify_exhaustive(&self, amb: &Ambient, opts: &PerfectOptions) -> PerfectReport {
        let q = amb.q as u64;
        let n = amb.cols.len() as u64;
        let total = amb.total;
        let codewords = amb.codeword_indices();
        let mut cover = vec![0u8; total as usize];
        let mut overlap = None;
        for &c in &codewords {
            for v in amb.ball(c) {
                cover[v as usize] += 1;
                if cover[v as usize] > 1 && overlap.is_none() {
                    overlap = Some((c, v));
                }
            }
        }
        let covered = cover.iter().filter(|c| **c > 0).count() as u64;
        let c = codewords.len() as u64;
        let ball = 1 + n * (q - 1);
        let mut witnesses = Vec::new();
        if let Some((c, v)) = overlap {
            witnesses.push(format!(
                "radius-1 balls overlap at {} (codeword {})",
                amb.vector(v).to_text(&self.alg).trim().replace('\n', "; "),
                amb.vector(c).to_text(&self.alg).trim().replace('\n', "; ")
            ));
        }
        if covered < total {
            let v = cover.iter().position(|c| *c == 0).unwrap() as u64;
            witnesses.push(format!(
                "uncovered vector {}",
                amb.vector(v).to_text(&self.alg).trim().replace('\n', "; ")
            ));
        }
        PerfectReport {
            requested: opts.mode,
            ran: PerfectMode::Exhaustive,
            notice: None,
            m: self.m,
            q: Some(q),
            n: Some(n),
            ambient: Some(total),
            codewords: Some(c),
            ball_size: Some(ball),
            covering_identity: Some(c * ball == total && covered == total),
            min_distance_ok: Some(overlap.is_none()),
            disjoint_checked: 0,
            disjoint_failures: 0,
            normalize_checked: 0,
            normalize_failures: 0,
            bijection_ok: None,
            seed: None,
            witnesses,
        }
    }

    fn verify_structural(&self, opts: &PerfectOptions) -> Result<PerfectReport> {
        let alg = &self.alg;
        let mut witnesses = Vec::new();
        let (mut dchk, mut dfail, mut nchk, mut nfail) = (0u64, 0u64, 0u64, 0u64);
        let mut bijection_ok = None;
        let mut seed = None;

        let mut check_disjoint = |delta: &Scalar, a: &Column, w: &mut Vec<String>| -> DenseVec {
            dchk += 1;
            let z = a.to_dense().scale_left(alg, delta);
            let ok = matches!(self.normalize(&z), Ok((y, b)) if &y == delta && &b == a);
            if !ok {
                dfail += 1;
                if w.len() < 5 {
                    w.push(format!("{}·{} is not recovered by normalize", alg.show(delta), a.render(alg)));
                }
            }
            z
        };

        if alg.is_finite() {
            let cols = self.enumerate_columns()?;
            let nonzero = alg.nonzero_elements()?;
            let mut images = HashSet::new();
            for a in &cols {
                for d in &nonzero {
                    images.insert(check_disjoint(d, a, &mut witnesses));
                }
            }
            let q = alg.order().unwrap();
            let expected = q.pow(self.m as u32) - 1;
            bijection_ok = Some(images.len() as u64 == expected && dfail == 0);
            let elems = alg.elements()?;
            for z in tuples(&elems, self.m) {
                let z = DenseVec(z);
                if z.is_zero(alg) {
                    continue;
                }
                nchk += 1;
                if !self.normalize_ok(&z) {
                    nfail += 1;
                    if witnesses.len() < 10 {
                        witnesses.push(format!("{} does not normalize", z.render(alg)));
                    }
                }
            }
        } else {
            seed = Some(opts.seed);
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            for _ in 0..opts.trials {
                let a = self.random_column(&mut rng);
                let d = alg.random_nonzero(&mut rng, SAMPLE_HEIGHT);
                check_disjoint(&d, &a, &mut witnesses);
            }
            for _ in 0..opts.trials {
                let z = loop {
                    let z = DenseVec((0..self.m).map(|_| alg.random(&mut rng, SAMPLE_HEIGHT)).collect());
                    if !z.is_zero(alg) {
                        break z;
                    }
                };
                nchk += 1;
                if !self.normalize_ok(&z) {
                    nfail += 1;
                    if witnesses.len() < 10 {
                        witnesses.push(format!("{} does not normalize", z.render(alg)));
                    }
                }
            }
        }
        Ok(PerfectReport {
            requested: opts.mode,
            ran: PerfectMode::Structural,
            notice: None,
            m: self.m,
            q: alg.order(),
            n: self.length(),
            ambient: None,
            codewords: None,
            ball_size: None,
            covering_identity: None,
            min_distance_ok: None,
            disjoint_checked: dchk,
            disjoint_failures: dfail,
            normalize_checked: nchk,
            normalize_failures: nfail,
            bijection_ok,
            seed,
            witnesses,
        })
    }

    fn normalize_ok(&self, z: &DenseVec) -> bool {
        match self.normalize(z) {
            Ok((y, a)) => {
                self.is_canonical_column(a.entries()) && a.to_dense().scale_left(&self.alg, &y) == *z
            }
            Err(_) => false,
        }
    }
}

/// All tuples of length `k` over `elems`, first coordinate most significant.
pub(crate) fn tuples(elems: &[Scalar], k: usize) -> impl Iterator<Item = Vec<Scalar>> + '_ {
    let q = elems.len();
    let total = q.checked_pow(k as u32).expect("tuple count overflow");
    (0..total).map(move |mut i| {
        let mut v = vec![elems[0].clone(); k];
        for slot in v.iter_mut().rev() {
            *slot = elems[i % q].clone();
            i /= q;
        }
        v
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PerfectMode {
    Exhaustive,
    Structural,
}

impl PerfectMode {
    pub fn name(&self) -> &'static str {
        match self {
            PerfectMode::Exhaustive => "exhaustive",
            PerfectMode::Structural => "structural",
        }
    }
}

#[derive(Clone, Debug)]
pub struct PerfectOptions {
    pub mode: PerfectMode,
    pub budget: u64,
    pub seed: u64,
    pub trials: usize,
}

impl PerfectOptions {
    pub fn exhaustive() -> Self {
        PerfectOptions {
            mode: PerfectMode::Exhaustive,
            budget: DEFAULT_BUDGET,
            seed: 0,
            trials: DEFAULT_TRIALS,
        }
    }

    pub fn structural(seed: u64) -> Self {
        PerfectOptions {
            mode: PerfectMode::Structural,
            seed,
            ..Self::exhaustive()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectReport {
    pub requested: PerfectMode,
    pub ran: PerfectMode,
    pub notice: Option<String>,
    pub m: usize,
    pub q: Option<u64>,
    pub n: Option<u64>,
    pub ambient: Option<u64>,
    pub codewords: Option<u64>,
    pub ball_size: Option<u64>,
    pub covering_identity: Option<bool>,
    pub min_distance_ok: Option<bool>,
    pub disjoint_checked: u64,
    pub disjoint_failures: u64,
    pub normalize_checked: u64,
    pub normalize_failures: u64,
    /// Finite structural mode: `(δ, a) ↦ δ·a` hits all of F^m∖{0} exactly once.
    pub bijection_ok: Option<bool>,
    pub seed: Option<u64>,
    pub witnesses: Vec<String>,
}

impl PerfectReport {
    pub fn passed(&self) -> bool {
        match self.ran {
            PerfectMode::Exhaustive => {
                self.covering_identity == Some(true) && self.min_distance_ok == Some(true)
            }
            PerfectMode::Structural => {
                self.disjoint_failures == 0
                    && self.normalize_failures == 0
                    && self.bijection_ok != Some(false)
            }
        }
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new("perfect single-error-correcting code");
        r.field("ran", self.ran.name());
        let opt = |x: Option<u64>| x.map_or("infinite".to_string(), |v| v.to_string());
        r.field("m", self.m).field("q", opt(self.q)).field("n", opt(self.n));
        match self.ran {
            PerfectMode::Exhaustive => {
                let (c, b, t) = (
                    self.codewords.unwrap(),
                    self.ball_size.unwrap(),
                    self.ambient.unwrap(),
                );
                r.field("codewords", c)
                    .field("ball_size", b)
                    .field("ambient", t)
                    .field("covering_product", format!("{c}*{b}={}", c * b));
                r.require("covering_identity", self.covering_identity == Some(true));
                r.require("min_distance_ok", self.min_distance_ok == Some(true));
            }
            PerfectMode::Structural => {
                if let Some(s) = self.seed {
                    r.field("sample_seed", s);
                }
                r.field("disjoint_checked", self.disjoint_checked)
                    .field("disjoint_failures", self.disjoint_failures)
                    .field("normalize_checked", self.normalize_checked)
                    .field("normalize_failures", self.normalize_failures);
                if let Some(b) = self.bijection_ok {
                    r.field("bijection_ok", b);
                }
            }
        }
        r.holds = self.passed();
        if let Some(n) = &self.notice {
            r.notice(n.clone());
        }
        for w in &self.witnesses {
            r.witness(w.clone());
        }
        r
    }
}

/// Finite ambient space `F^n` encoded as base-q integers over element indices.
struct Ambient<'a> {
    code: &'a HammingCode,
    q: usize,
    total: u64,
    cols: Vec<Column>,
    elems: Vec<Scalar>,
    add: Vec<Vec<usize>>,
    /// `prod[d][j][r]`: index of `elems[d]·v_j[r]` for column vector `v_j`.
    prod: Vec<Vec<Vec<usize>>>,
}

impl<'a> Ambient<'a> {
    fn new(code: &'a HammingCode, budget: u64) -> Result<Self> {
        let alg = &code.alg;
        let cols = code.enumerate_columns()?;
        let q = alg.order().unwrap() as usize;
        let n = cols.len() as u32;
        let total = (q as u64)
            .checked_pow(n)
            .filter(|t| *t <= budget)
            .ok_or_else(|| {
                Error::Unsupported(format!("ambient space {q}^{n} exceeds budget {budget}"))
            })?;
        let elems = alg.elements()?;
        let idx = |x: &Scalar| alg.index_of(x).expect("finite element");
        let add = elems
            .iter()
            .map(|a| elems.iter().map(|b| idx(&alg.add(a, b))).collect())
            .collect();
        let vecs: Vec<DenseVec> = cols.iter().map(|c| code.column_vector(c)).collect();
        let prod = elems
            .iter()
            .map(|d| {
                vecs.iter()
                    .map(|v| v.0.iter().map(|x| idx(&alg.mul(d, x))).collect())
                    .collect()
            })
            .collect();
        Ok(Ambient {
            code,
            q,
            total,
            cols,
            elems,
            add,
            prod,
        })
    }

    fn digits(&self, mut v: u64) -> Vec<usize> {
        let mut d = vec![0; self.cols.len()];
        for slot in d.iter_mut() {
            *slot = (v % self.q as u64) as usize;
            v /= self.q as u64;
        }
        d
    }

    fn codeword_indices(&self) -> Vec<u64> {
        let zero = self.code.alg.index_of(&self.code.alg.zero()).unwrap();
        let m = self.code.m;
        (0..self.total)
            .filter(|&v| {
                let mut s = vec![zero; m];
                for (j, d) in self.digits(v).into_iter().enumerate() {
                    if d != zero {
                        for (r, slot) in s.iter_mut().enumerate() {
                            *slot = self.add[*slot][self.prod[d][j][r]];
                        }
                    }
                }
                s.iter().all(|x| *x == zero)
            })
            .collect()
    }

    /// `v` and every vector differing from it in exactly one coordinate.
    fn ball(&self, v: u64) -> Vec<u64> {
        let q = self.q as u64;
        let digits = self.digits(v);
        let mut out = vec![v];
        let mut place = 1u64;
        for d in digits {
            let base = v - d as u64 * place;
            for e in 0..q {
                if e != d as u64 {
                    out.push(base + e * place);
                }
            }
            place *= q;
        }
        out
    }

    fn vector(&self, v: u64) -> FinVec {
        let alg = &self.code.alg;
        let mut x = FinVec::new();
        for (j, d) in self.digits(v).into_iter().enumerate() {
            x.set(alg, self.cols[j].clone(), self.elems[d].clone());
        }
        x
    }
}
