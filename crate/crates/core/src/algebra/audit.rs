//! Axiom auditor: distributivity, unique solvability, associativity,
//! commutativity, units and alternativity, with re-checkable witnesses.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{Algebra, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuditMode {
    Exhaustive,
    Sampled { trials: usize, seed: u64 },
}

impl AuditMode {
    pub const DEFAULT_TRIALS: usize = 10_000;

    pub fn sampled(seed: u64) -> Self {
        AuditMode::Sampled {
            trials: Self::DEFAULT_TRIALS,
            seed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Law {
    LeftDistributive,
    RightDistributive,
    LeftSolvable,
    RightSolvable,
    Associative,
    Commutative,
    LeftUnit,
    RightUnit,
    TwoSidedUnit,
    Alternative,
}

impl Law {
    pub const ALL: [Law; 10] = [
        Law::LeftDistributive,
        Law::RightDistributive,
        Law::LeftSolvable,
        Law::RightSolvable,
        Law::Associative,
        Law::Commutative,
        Law::LeftUnit,
        Law::RightUnit,
        Law::TwoSidedUnit,
        Law::Alternative,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Law::LeftDistributive => "left-distributive",
            Law::RightDistributive => "right-distributive",
            Law::LeftSolvable => "left-solvable",
            Law::RightSolvable => "right-solvable",
            Law::Associative => "associative",
            Law::Commutative => "commutative",
            Law::LeftUnit => "left-unit",
            Law::RightUnit => "right-unit",
            Law::TwoSidedUnit => "two-sided-unit",
            Law::Alternative => "alternative",
        }
    }
}

/// Outcome for one law.
///
/// When `holds` is false, `witnesses` contains tuples that refute the law:
/// one tuple for identities, and one `(candidate, x)` pair per candidate
/// element for the nonexistence of a unit. When a unit law holds, the
/// single witness is the unit itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawCheck {
    pub law: Law,
    pub holds: bool,
    pub witnesses: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub algebra: String,
    pub mode: AuditMode,
    pub checks: Vec<LawCheck>,
}

impl AxiomReport {
    pub fn check(&self, law: Law) -> &LawCheck {
        self.checks.iter().find(|c| c.law == law).expect("all laws audited")
    }

    pub fn holds(&self, law: Law) -> bool {
        self.check(law).holds
    }

    pub fn is_quasifield(&self) -> bool {
        [
            Law::LeftDistributive,
            Law::RightDistributive,
            Law::LeftSolvable,
            Law::RightSolvable,
        ]
        .iter()
        .all(|l| self.holds(*l))
    }

    /// A finite associative algebra with two-sided unit must be commutative.
    pub fn wedderburn_consistent(&self) -> bool {
        !(matches!(self.mode, AuditMode::Exhaustive)
            && self.is_quasifield()
            && self.holds(Law::Associative)
            && self.holds(Law::TwoSidedUnit))
            || self.holds(Law::Commutative)
    }

    /// Re-evaluates every negative witness; true when all still fail.
    pub fn witnesses_refail(&self, alg: &Algebra) -> bool {
        self.checks
            .iter()
            .filter(|c| !c.holds)
            .all(|c| !c.witnesses.is_empty() && c.witnesses.iter().all(|w| violates(alg, c.law, w)))
    }

    pub fn render(&self, alg: &Algebra) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| {
                let status = if c.holds { "yes" } else { "no" };
                let shown = c.witnesses.first().map(|w| {
                    let parts: Vec<String> = w.iter().map(|x| alg.format_scalar(x)).collect();
                    format!(" ({})", parts.join(", "))
                });
                let extra = if c.witnesses.len() > 1 {
                    format!(" [+{} more]", c.witnesses.len() - 1)
                } else {
                    String::new()
                };
                format!("{}: {status}{}{extra}", c.law.name(), shown.unwrap_or_default())
            })
            .collect()
    }
}

/// True when `w` is a counterexample to `law` in `alg`.
fn violates(alg: &Algebra, law: Law, w: &[Scalar]) -> bool {
    match law {
        Law::LeftDistributive => {
            let (a, b, c) = (&w[0], &w[1], &w[2]);
            alg.mul(a, &alg.add(b, c)) != alg.add(&alg.mul(a, b), &alg.mul(a, c))
        }
        Law::RightDistributive => {
            let (a, b, c) = (&w[0], &w[1], &w[2]);
            alg.mul(&alg.add(a, b), c) != alg.add(&alg.mul(a, c), &alg.mul(b, c))
        }
        Law::Associative => {
            let (a, b, c) = (&w[0], &w[1], &w[2]);
            alg.mul(&alg.mul(a, b), c) != alg.mul(a, &alg.mul(b, c))
        }
        Law::Commutative => alg.mul(&w[0], &w[1]) != alg.mul(&w[1], &w[0]),
        Law::Alternative => {
            let (x, y) = (&w[0], &w[1]);
            let xx = alg.mul(x, x);
            alg.mul(x, &alg.mul(x, y)) != alg.mul(&xx, y)
                || alg.mul(&alg.mul(y, x), x) != alg.mul(y, &xx)
        }
        Law::LeftSolvable => solution_count(alg, &w[0], &w[1], true) != 1,
        Law::RightSolvable => solution_count(alg, &w[0], &w[1], false) != 1,
        Law::LeftUnit => alg.mul(&w[0], &w[1]) != w[1],
        Law::RightUnit => alg.mul(&w[1], &w[0]) != w[1],
        Law::TwoSidedUnit => alg.mul(&w[0], &w[1]) != w[1] || alg.mul(&w[1], &w[0]) != w[1],
    }
}

fn solution_count(alg: &Algebra, a: &Scalar, c: &Scalar, left: bool) -> usize {
    match alg.elements() {
        Ok(elems) => elems
            .iter()
            .filter(|x| {
                let prod = if left { alg.mul(a, x) } else { alg.mul(x, a) };
                &prod == c
            })
            .count(),
        Err(_) => {
            let x = if left { alg.solve_left(a, c) } else { alg.solve_right(a, c) };
            match x {
                Ok(x) => {
                    let prod = if left { alg.mul(a, &x) } else { alg.mul(&x, a) };
                    usize::from(&prod == c)
                }
                Err(_) => 0,
            }
        }
    }
}

fn law_arity(law: Law) -> usize {
    match law {
        Law::LeftDistributive | Law::RightDistributive | Law::Associative => 3,
        _ => 2,
    }
}

/// Audits `alg` sequentially.
pub fn axiom_audit(alg: &Algebra, mode: AuditMode) -> Result<AxiomReport> {
    audit_with_jobs(alg, mode, 1)
}

/// Audits `alg`, splitting exhaustive scans over `jobs` workers. The reported
/// witness is always the lexicographically smallest one, whatever `jobs` is.
pub fn audit_with_jobs(alg: &Algebra, mode: AuditMode, jobs: usize) -> Result<AxiomReport> {
    let checks = match mode {
        AuditMode::Exhaustive => {
            let elems = alg.elements().map_err(|_| {
                Error::Unsupported(format!("exhaustive audit of infinite algebra {}", alg.name()))
            })?;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.max(1))
                .build()
                .map_err(|e| Error::Unsupported(e.to_string()))?;
            pool.install(|| exhaustive(alg, &elems))
        }
        AuditMode::Sampled { trials, seed } => sampled(alg, trials, seed),
    };
    Ok(AxiomReport {
        algebra: alg.name().to_string(),
        mode,
        checks,
    })
}

fn first_violation(alg: &Algebra, law: Law, elems: &[Scalar]) -> Option<Vec<Scalar>> {
    let q = elems.len();
    let nonzero_first = matches!(law, Law::LeftSolvable | Law::RightSolvable);
    (0..q).into_par_iter().find_map_first(|i| {
        if nonzero_first && alg.is_zero(&elems[i]) {
            return None;
        }
        let mut w = vec![elems[i].clone()];
        search_rest(alg, law, elems, &mut w)
    })
}

fn search_rest(alg: &Algebra, law: Law, elems: &[Scalar], w: &mut Vec<Scalar>) -> Option<Vec<Scalar>> {
    if w.len() == law_arity(law) {
        return violates(alg, law, w).then(|| w.clone());
    }
    for e in elems {
        w.push(e.clone());
        if let Some(found) = search_rest(alg, law, elems, w) {
            return Some(found);
        }
        w.pop();
    }
    None
}

fn unit_check(alg: &Algebra, law: Law, candidates: &[Scalar], probes: &[Scalar]) -> LawCheck {
    let mut refutations = Vec::new();
    for e in candidates {
        match probes.iter().find(|x| violates(alg, law, &[e.clone(), (*x).clone()])) {
            None => {
                return LawCheck {
                    law,
                    holds: true,
                    witnesses: vec![vec![e.clone()]],
                }
            }
            Some(x) => refutations.push(vec![e.clone(), x.clone()]),
        }
    }
    LawCheck {
        law,
        holds: false,
        witnesses: refutations,
    }
}

fn identity_check(law: Law, found: Option<Vec<Scalar>>) -> LawCheck {
    LawCheck {
        law,
        holds: found.is_none(),
        witnesses: found.into_iter().collect(),
    }
}

fn exhaustive(alg: &Algebra, elems: &[Scalar]) -> Vec<LawCheck> {
    let mut nonzero: Vec<Scalar> = elems.iter().filter(|x| !alg.is_zero(x)).cloned().collect();
    // Try the known right unit first so a missing left unit is refuted at it first.
    if let Some(r) = alg.right_unit() {
        if let Some(pos) = nonzero.iter().position(|x| *x == r) {
            let r = nonzero.remove(pos);
            nonzero.insert(0, r);
        }
    }
    Law::ALL
        .iter()
        .map(|&law| match law {
            Law::LeftUnit | Law::RightUnit | Law::TwoSidedUnit => {
                unit_check(alg, law, &nonzero, elems)
            }
            _ => identity_check(law, first_violation(alg, law, elems)),
        })
        .collect()
}

fn sampled(alg: &Algebra, trials: usize, seed: u64) -> Vec<LawCheck> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tuples: Vec<Vec<Scalar>> = (0..trials)
        .map(|_| (0..3).map(|_| alg.random(&mut rng, 10)).collect())
        .collect();
    let candidate = alg.right_unit().or_else(|| alg.left_unit());
    Law::ALL
        .iter()
        .map(|&law| match law {
            Law::LeftUnit | Law::RightUnit | Law::TwoSidedUnit => {
                let probes: Vec<Scalar> = tuples.iter().map(|t| t[0].clone()).collect();
                match &candidate {
                    Some(e) => unit_check(alg, law, std::slice::from_ref(e), &probes),
                    None => LawCheck {
                        law,
                        holds: false,
                        witnesses: Vec::new(),
                    },
                }
            }
            _ => {
                let found = tuples.iter().find_map(|t| {
                    let mut w: Vec<Scalar> = t[..law_arity(law)].to_vec();
                    if matches!(law, Law::LeftSolvable | Law::RightSolvable) && alg.is_zero(&w[0]) {
                        w[0] = alg.right_unit().unwrap_or_else(|| alg.from_int(1));
                    }
                    violates(alg, law, &w).then_some(w)
                });
                identity_check(law, found)
            }
        })
        .collect()
}
