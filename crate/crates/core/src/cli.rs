//! The `qham` command-line front end.
//!
//! Exit status: 0 when the claimed statement is confirmed, 1 when a
//! counterexample or violation is reported, 2 on usage or input errors.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{audit_with_jobs, AlgebraRef, AlgebraSpec, AuditMode};
use crate::equivalence::{
    basis_change_isomorphism, choice_isomorphism, conjugate_code_check, distinguish_invariant,
    nonassoc_report, one_line, right_linearity_report, support_witness, BasisChange, DistinguishOptions,
    ElementaryOp, LinearIsometry,
};
use crate::error::{Error, Result};
use crate::finvec::{Column, FinVec};
use crate::hamming::{ChoiceFunction, HammingCode, PerfectMode, PerfectOptions, DEFAULT_BUDGET};
use crate::reconstruct::{module_axiom_check, reduction_trace};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Structural,
    Sampled,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Structural => "structural",
            Mode::Sampled => "sampled",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Audit the quasifield laws of the algebra.
    Audit,
    /// List the canonical columns (finite algebras).
    Columns,
    /// Syndrome of the vector in --in.
    Syndrome,
    /// Correct at most one error in the vector in --in.
    Decode,
    /// Verify that the code is perfect.
    VerifyPerfect,
    /// List weight-3 codewords (finite algebras).
    Generators,
    /// Check the module axioms of the pair construction.
    ReconstructCheck,
    /// Decide membership of --in by weight-3 reduction.
    MembershipReduce,
    /// Isometry between codes with two choice functions (from --in).
    ChoiceIso,
    /// Isometry induced by a basis change (ops from --in, or random).
    BasisIso,
    /// Find a codeword supported on the columns listed in --in.
    SupportWitness,
    /// Separate H^(m) from H^(m2) by the support invariant.
    Distinguish,
    /// Witness that left scaling leaves the code over a nonassociative algebra.
    NonassocWitness,
    /// Right linearity check or escape witness.
    RightLinearity,
    /// Conjugation maps left codewords into the right code.
    ConjugateCheck,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Audit => "audit",
            Command::Columns => "columns",
            Command::Syndrome => "syndrome",
            Command::Decode => "decode",
            Command::VerifyPerfect => "verify-perfect",
            Command::Generators => "generators",
            Command::ReconstructCheck => "reconstruct-check",
            Command::MembershipReduce => "membership-reduce",
            Command::ChoiceIso => "choice-iso",
            Command::BasisIso => "basis-iso",
            Command::SupportWitness => "support-witness",
            Command::Distinguish => "distinguish",
            Command::NonassocWitness => "nonassoc-witness",
            Command::RightLinearity => "right-linearity",
            Command::ConjugateCheck => "conjugate-check",
        }
    }
}

#[derive(Clone, Debug, Parser)]
#[command(name = "qham", version, about = "Perfect codes over quasifields")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Preset name or path to a JSON algebra spec.
    #[arg(long, global = true, default_value = "f2")]
    pub algebra: String,
    #[arg(long, global = true, default_value_t = 2)]
    pub m: usize,
    /// Comma-separated pivot literals b_0,...,b_{m-1}.
    #[arg(long, global = true)]
    pub pivots: Option<String>,
    #[arg(long, global = true, value_enum)]
    pub mode: Option<Mode>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Number of random trials for sampled checks.
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    /// Row count of the second code for `distinguish` (default m + 1).
    #[arg(long, global = true)]
    pub m2: Option<usize>,
    #[arg(long = "in", global = true)]
    pub input: Option<PathBuf>,
    #[arg(long = "out", global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
}

impl RunConfig {
    /// Configuration for `command` with default flags.
    pub fn new(command: Command, algebra: &str, m: usize) -> Self {
        RunConfig {
            command,
            algebra: algebra.into(),
            m,
            pivots: None,
            mode: None,
            seed: 0,
            budget: DEFAULT_BUDGET,
            trials: None,
            m2: None,
            input: None,
            output: None,
            jobs: 1,
        }
    }
}

pub fn parse_algebra_spec(arg: &str) -> Result<AlgebraSpec> {
    let spec = AlgebraSpec::load(arg)?;
    spec.build()?;
    Ok(spec)
}

fn build_code(cfg: &RunConfig, alg: &AlgebraRef, m: usize) -> Result<HammingCode> {
    match &cfg.pivots {
        None => HammingCode::new(alg.clone(), m),
        Some(list) => {
            let pivots = list
                .split(',')
                .map(|s| alg.parse_scalar(s))
                .collect::<Result<Vec<_>>>()?;
            HammingCode::with_pivots(alg.clone(), m, pivots)
        }
    }
}

fn read_input(cfg: &RunConfig) -> Result<String> {
    let path = cfg
        .input
        .as_ref()
        .ok_or_else(|| Error::InvalidParameter(format!("{} needs --in <path>", cfg.command.name())))?;
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// Runs one command and returns its report (header fields included).
pub fn run(cfg: &RunConfig) -> Result<Report> {
    let spec = parse_algebra_spec(&cfg.algebra)?;
    let alg = spec.build()?;
    let finite = alg.is_finite();
    let trials = |default: usize| cfg.trials.unwrap_or(default);
    let mode = cfg.mode;
    let mut rep = match cfg.command {
        Command::Audit => {
            let am = match mode {
                Some(Mode::Exhaustive) => AuditMode::Exhaustive,
                Some(Mode::Sampled) => AuditMode::Sampled { trials: trials(AuditMode::DEFAULT_TRIALS), seed: cfg.seed },
                Some(Mode::Structural) => return Err(Error::InvalidParameter("audit supports exhaustive or sampled".into())),
                None if finite => AuditMode::Exhaustive,
                None => AuditMode::Sampled { trials: trials(AuditMode::DEFAULT_TRIALS), seed: cfg.seed },
            };
            let a = audit_with_jobs(&alg, am, cfg.jobs.max(1))?;
            let mut r = Report::new("algebra is a quasifield");
            for line in a.render(&alg) {
                let (k, v) = line.split_once(": ").unwrap_or((&line, ""));
                r.field(k, v);
            }
            r.require("quasifield", a.is_quasifield());
            r.require("wedderburn_consistent", a.wedderburn_consistent());
            r.require("witnesses_refail", a.witnesses_refail(&alg));
            r
        }
        Command::Columns => {
            let code = build_code(cfg, &alg, cfg.m)?;
            let cols = code.enumerate_columns()?;
            let mut r = Report::new("canonical column set");
            r.field("count", cols.len());
            r.require("count_matches", Some(cols.len() as u64) == code.length());
            r.attachment = Some(cols.iter().map(|c| c.render(&alg) + "\n").collect());
            r
        }
        Command::Syndrome => {
            let code = build_code(cfg, &alg, cfg.m)?;
            let x = FinVec::parse_text(&alg, &read_input(cfg)?)?;
            let s = code.syndrome(&x)?;
            let mut r = Report::new("syndrome computed");
            r.field("weight", x.norm());
            r.field("syndrome", s.render(&alg));
            r.field("in_code", s.is_zero(&alg));
            r
        }
        Command::Decode => {
            let code = build_code(cfg, &alg, cfg.m)?;
            let y = FinVec::parse_text(&alg, &read_input(cfg)?)?;
            let c = code.decode(&y)?;
            let mut r = Report::new("decoded to a codeword within distance 1");
            let d = c.sub(&alg, &y)?;
            r.field("corrections", d.norm());
            if let Some((col, v)) = d.iter().next() {
                r.field("corrected_coordinate", col.render(&alg));
                r.field("correction", alg.show(v));
            }
            r.require("in_code", code.contains(&c)?);
            r.require("within_distance_1", d.norm() <= 1);
            r.attachment = Some(c.to_text(&alg));
            r
        }
        Command::VerifyPerfect => {
            let code = build_code(cfg, &alg, cfg.m)?;
            let pm = match mode {
                Some(Mode::Structural) | Some(Mode::Sampled) => PerfectMode::Structural,
                Some(Mode::Exhaustive) => PerfectMode::Exhaustive,
                None if finite => PerfectMode::Exhaustive,
                None => PerfectMode::Structural,
            };
            let opts = PerfectOptions {
                mode: pm,
                budget: cfg.budget,
                seed: cfg.seed,
                trials: trials(crate::hamming::DEFAULT_TRIALS),
            };
            code.verify_perfect(&opts)?.to_report()
        }
        Command::Generators => {
            let code = build_code(cfg, &alg, cfg.m)?;
            let gens = code.weight3_generators()?;
            let reps = code.weight3_representatives()?;
            let mut r = Report::new("weight-3 codewords");
            r.field("generators", gens.len());
            r.field("representatives", reps.len());
            let mut ok = true;
            for g in &gens {
                ok &= g.norm() == 3 && code.contains(g)?;
            }
            r.require("all_weight3_codewords", ok);
            r.attachment = Some(reps.iter().map(|g| one_line(&alg, g) + "\n").collect());
            r
        }
        Command::ReconstructCheck => {
            let code = build_code(cfg, &alg, cfg.m)?;
            let am = match mode {
                Some(Mode::Exhaustive) => AuditMode::Exhaustive,
                None if finite => AuditMode::Exhaustive,
                _ => AuditMode::Sampled { trials: trials(1000), seed: cfg.seed },
            };
            module_axiom_check(&code, am)?.to_report()
        }
        Command::MembershipReduce => {
            let code = build_code(cfg, &alg, cfg.m)?;
            let x = FinVec::parse_text(&alg, &read_input(cfg)?)?;
            let (by_reduction, sizes) = reduction_trace(&code, &x)?;
            let by_syndrome = code.contains(&x)?;
            let mut r = Report::new("reduction agrees with the syndrome");
            r.field("support_sizes", sizes.iter().join(" "));
            r.field("by_reduction", by_reduction);
            r.field("by_syndrome", by_syndrome);
            r.require("agree", by_reduction == by_syndrome);
            r
        }
        Command::ChoiceIso => choice_iso(cfg, &alg)?,
        Command::BasisIso => basis_iso(cfg, &alg)?,
        Command::SupportWitness => {
            let code = build_code(cfg, &alg, cfg.m)?;
            let text = read_input(cfg)?;
            let set = content_lines(&text)
                .map(|(n, l)| Column::parse(&alg, l).map_err(|e| Error::parse(format!("line {n}"), e.to_string())))
                .collect::<Result<Vec<_>>>()?;
            let res = support_witness(&code, &set)?;
            let mut r = Report::new("support witness search");
            r.field("columns", set.len());
            r.field("method", format!("{:?}", res.method));
            match &res.witness {
                Some(w) => {
                    r.field("outcome", "dependent");
                    r.require("witness_in_code", code.contains(w)?);
                    r.attachment = Some(w.to_text(&alg));
                }
                None => {
                    r.field("outcome", "independent");
                }
            }
            r
        }
        Command::Distinguish => {
            let m2 = cfg.m2.unwrap_or(cfg.m + 1);
            let a = build_code(cfg, &alg, cfg.m)?;
            let b = build_code(cfg, &alg, m2)?;
            let opts = DistinguishOptions {
                seed: cfg.seed,
                samples: trials(100),
                ..DistinguishOptions::default()
            };
            distinguish_invariant(&a, &b, &opts)?
        }
        Command::NonassocWitness => nonassoc_report(&build_code(cfg, &alg, cfg.m)?)?,
        Command::RightLinearity => {
            right_linearity_report(&build_code(cfg, &alg, cfg.m)?, cfg.seed, trials(1000))?
        }
        Command::ConjugateCheck => {
            conjugate_code_check(&build_code(cfg, &alg, cfg.m)?, trials(1000), cfg.seed)?
        }
    };
    let mode_name = mode.map_or("default", Mode::name);
    rep.prepend(vec![
        ("command".into(), cfg.command.name().into()),
        ("algebra".into(), alg.name().into()),
        ("digest".into(), spec.digest()),
        ("m".into(), cfg.m.to_string()),
        ("mode".into(), mode_name.into()),
        ("seed".into(), cfg.seed.to_string()),
        ("budget".into(), cfg.budget.to_string()),
    ]);
    Ok(rep)
}

/// Checks an isometry against the target code: exact image equality of all
/// codewords when they can be enumerated, random codewords otherwise.
fn check_image(
    r: &mut Report,
    iso: &LinearIsometry,
    from: &HammingCode,
    to: &HammingCode,
    cfg: &RunConfig,
) -> Result<()> {
    let alg = from.algebra();
    match (from.enumerate_codewords(cfg.budget), to.enumerate_codewords(cfg.budget)) {
        (Ok(src), Ok(dst)) => {
            let image = src.iter().map(|c| iso.apply(c)).collect::<Result<BTreeSet<_>>>()?;
            let dst: BTreeSet<FinVec> = dst.into_iter().collect();
            r.field("verification", "exact image equality");
            r.field("codewords", src.len());
            r.require("image_equals_code", image == dst);
            if let Some(x) = image.difference(&dst).next() {
                r.witness(format!("image {} is not a codeword", one_line(alg, x)));
            }
        }
        _ => {
            let n = cfg.trials.unwrap_or(1000);
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let mut bad = 0;
            for _ in 0..n {
                let c = from.random_codeword(&mut rng)?;
                let img = iso.apply(&c)?;
                if !to.contains(&img)? || img.norm() != c.norm() {
                    bad += 1;
                    if r.witnesses.len() < 5 {
                        r.witness(format!("{} maps outside the target code", one_line(alg, &c)));
                    }
                }
            }
            r.field("verification", "sampled").field("samples", n).field("failures", bad);
            r.holds &= bad == 0;
        }
    }
    Ok(())
}

/// Input lines: `e1 <column> := <scalar>` or `e2 <column> := <scalar>`.
fn choice_iso(cfg: &RunConfig, alg: &AlgebraRef) -> Result<Report> {
    let code = build_code(cfg, alg, cfg.m)?;
    let text = read_input(cfg)?;
    let mut e = [ChoiceFunction::canonical(), ChoiceFunction::canonical()];
    for (n, line) in content_lines(&text) {
        let err = |msg: String| Error::parse(format!("line {n}"), msg);
        let (tag, rest) = line.split_once(char::is_whitespace).ok_or_else(|| err("expected `e1|e2 <column> := <scalar>`".into()))?;
        let idx = match tag {
            "e1" => 0,
            "e2" => 1,
            other => return Err(err(format!("unknown choice function `{other}`"))),
        };
        let (c, v) = rest.split_once(":=").ok_or_else(|| err("missing `:=`".into()))?;
        let col = Column::parse(alg, c).map_err(|e| err(e.to_string()))?;
        let val = alg.parse_scalar(v).map_err(|e| err(e.to_string()))?;
        code.check_column(&col).map_err(|e| err(e.to_string()))?;
        e[idx].set(alg, col, val)?;
    }
    let iso = choice_isomorphism(&code, &e[0], &e[1])?;
    let c1 = code.clone().with_choice(e[0].clone())?;
    let c2 = code.clone().with_choice(e[1].clone())?;
    let mut r = Report::new("codes with different choice functions are linearly isomorphic");
    let table = iso.table(&e[0].iter().chain(e[1].iter()).map(|(c, _)| c.clone()).collect::<Vec<_>>())?;
    r.field("nontrivial_multipliers", table.len());
    for (c, _, a) in &table {
        r.field(&format!("alpha{}", c.render(alg)), alg.show(a));
    }
    check_image(&mut r, &iso, &c1, &c2, cfg)?;
    Ok(r)
}

/// Input lines: `swap i j`, `scale i s`, `add target source factor`.
fn parse_ops(alg: &AlgebraRef, m: usize, text: &str) -> Result<BasisChange> {
    let mut b = BasisChange::identity(alg, m)?;
    for (n, line) in content_lines(text) {
        let err = |msg: &str| Error::parse(format!("line {n}"), msg.to_string());
        let parts: Vec<&str> = line.split_whitespace().collect();
        let idx = |s: &str| s.parse::<usize>().map_err(|_| err("expected an index"));
        let op = match parts.as_slice() {
            ["swap", i, j] => ElementaryOp::Swap(idx(i)?, idx(j)?),
            ["scale", i, s] => ElementaryOp::Scale(idx(i)?, alg.parse_scalar(s)?),
            ["add", t, s, f] => ElementaryOp::AddMultiple {
                target: idx(t)?,
                source: idx(s)?,
                factor: alg.parse_scalar(f)?,
            },
            _ => return Err(err("expected `swap i j`, `scale i s` or `add target source factor`")),
        };
        b = b.then(alg, op)?;
    }
    Ok(b)
}

fn basis_iso(cfg: &RunConfig, alg: &AlgebraRef) -> Result<Report> {
    let code = build_code(cfg, alg, cfg.m)?;
    let b = match &cfg.input {
        Some(_) => parse_ops(alg, cfg.m, &read_input(cfg)?)?,
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            BasisChange::random(alg, cfg.m, 2 * cfg.m, &mut rng)?
        }
    };
    let iso = basis_change_isomorphism(&code, &b)?;
    let mut r = Report::new("basis change maps the code onto itself");
    r.field("matrix", b.render(alg));
    r.field("elementary_ops", b.ops.len());
    if let Ok(cols) = code.enumerate_columns() {
        for (c, t, a) in iso.table(&cols)? {
            r.field(&format!("pi{}", c.render(alg)), format!("{} * {}", t.render(alg), alg.show(&a)));
        }
    }
    check_image(&mut r, &iso, &code, &code, cfg)?;
    Ok(r)
}

/// Parses `args`, runs, writes the report, and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cfg) {
        Ok(rep) => {
            let text = rep.to_string();
            match &cfg.output {
                Some(p) => {
                    if let Err(e) = std::fs::write(p, &text) {
                        eprintln!("error: {}: {e}", p.display());
                        return 2;
                    }
                }
                None => print!("{text}"),
            }
            rep.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_perfect_f2() {
        let mut cfg = RunConfig::new(Command::VerifyPerfect, "f2", 3);
        cfg.mode = Some(Mode::Exhaustive);
        let r = run(&cfg).unwrap();
        assert_eq!(r.get("covering_product"), Some("16*8=128"));
        assert_eq!(r.exit_code(), 0);
        assert!(r.to_string().contains("digest: "));
    }

    #[test]
    fn flags_parse() {
        let cfg = RunConfig::try_parse_from([
            "qham", "verify-perfect", "--algebra", "f3", "--m", "2", "--mode", "exhaustive", "--seed", "4",
        ])
        .unwrap();
        assert_eq!(cfg.command, Command::VerifyPerfect);
        assert_eq!((cfg.m, cfg.seed, cfg.mode), (2, 4, Some(Mode::Exhaustive)));
        assert!(RunConfig::try_parse_from(["qham", "frobnicate"]).is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(main_with_args(["qham", "decode", "--algebra", "f2"]), 2);
        assert_eq!(main_with_args(["qham", "audit", "--algebra", "nope"]), 2);
        assert_eq!(main_with_args(["qham", "bogus"]), 2);
    }

    #[test]
    fn nonassoc_isotope() {
        let r = run(&RunConfig::new(Command::NonassocWitness, "gf9-isotope", 2)).unwrap();
        assert_eq!(r.get("outcome"), Some("witness"));
        assert_eq!(r.exit_code(), 0);
    }
}
