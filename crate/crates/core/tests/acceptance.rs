//! Acceptance suite. Runs without the libtest harness so that every criterion
//! prints exactly one PASS/FAIL line; the process fails if any criterion does.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use itertools::Itertools;
use quasihamming::algebra::{AuditMode, PRESETS};
use quasihamming::cli::{run, Command, Mode, RunConfig};
use quasihamming::equivalence::{
    basis_change_isomorphism, choice_isomorphism, conjugate_code_check, distinguish_invariant,
    nonassoc_witness, right_linearity_witness, BasisChange, DistinguishOptions, RightLinearity,
};
use quasihamming::reconstruct::{membership_by_reduction, module_axiom_check};
use quasihamming::{Algebra, ChoiceFunction, FinVec, HammingCode, PerfectOptions, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(bool, String)>;

fn code(name: &str, m: usize) -> Result<HammingCode> {
    HammingCode::new(Algebra::preset(name)?, m)
}

fn within(t: Instant, limit: u64) -> (bool, String) {
    let e = t.elapsed();
    (e < Duration::from_secs(limit), format!("{:.2}s < {limit}s", e.as_secs_f64()))
}

fn sphere_packing() -> Outcome {
    let t = Instant::now();
    let cases = [("f2", 2, 2, 4, 8), ("f2", 3, 16, 8, 128), ("f3", 2, 9, 9, 81), ("gf4", 2, 64, 16, 1024)];
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, m, words, ball, total) in cases {
        let r = code(name, m)?.verify_perfect(&PerfectOptions::exhaustive())?;
        ok &= r.passed()
            && r.codewords == Some(words)
            && r.ball_size == Some(ball)
            && r.ambient == Some(total)
            && words * ball == total;
        parts.push(format!("{name}/m={m}: {}*{}={}", r.codewords.unwrap_or(0), r.ball_size.unwrap_or(0), r.ambient.unwrap_or(0)));
    }
    let (fast, time) = within(t, 5);
    Ok((ok && fast, format!("{}; {time}", parts.join(", "))))
}

fn structural() -> Outcome {
    let t = Instant::now();
    let cases = [
        ("gf9-isotope", 2),
        ("rationals", 2),
        ("rationals", 3),
        ("rationals", 4),
        ("quaternions", 2),
        ("quaternions", 3),
        ("octonions", 2),
    ];
    let mut ok = true;
    let mut checks = 0;
    for (name, m) in cases {
        let r = code(name, m)?.verify_perfect(&PerfectOptions::structural(2024))?;
        let enough = if r.q.is_some() { r.bijection_ok == Some(true) } else { r.disjoint_checked >= 10_000 && r.normalize_checked >= 10_000 };
        ok &= r.passed() && enough && r.disjoint_failures == 0 && r.normalize_failures == 0;
        checks += r.disjoint_checked + r.normalize_checked;
    }
    let (fast, time) = within(t, 30);
    Ok((ok && fast, format!("{} codes, {checks} checks, 0 failures required; {time}", cases.len())))
}

fn decoder_round_trip() -> Outcome {
    let mut ok = true;
    let mut trials = 0;
    for (k, name) in PRESETS.iter().enumerate() {
        let c = code(name, 2)?;
        let alg = c.algebra().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(k as u64);
        for _ in 0..1000 {
            let w = c.random_codeword(&mut rng)?;
            let e = FinVec::unit(&alg, c.random_column(&mut rng), alg.random_nonzero(&mut rng, 6));
            ok &= c.decode(&w.add(&alg, &e)?)? == w;
            trials += 1;
        }
    }
    let c = code("f2", 3)?;
    let alg = c.algebra().clone();
    let words = c.enumerate_codewords(1 << 20)?;
    let cols = c.enumerate_columns()?;
    let one = alg.from_int(1);
    for w in &words {
        for col in &cols {
            let y = w.add(&alg, &FinVec::unit(&alg, col.clone(), one.clone()))?;
            ok &= c.decode(&y)? == *w;
            trials += 1;
        }
    }
    ok &= words.len() == 16 && cols.len() == 7;
    Ok((ok, format!("{trials} trials ({} presets x 1000 + 16x7 exhaustive)", PRESETS.len())))
}

fn module_axioms() -> Outcome {
    let mut ok = true;
    for (name, m) in [("f2", 3), ("f3", 2)] {
        ok &= module_axiom_check(&code(name, m)?, AuditMode::Exhaustive)?.passed();
    }
    let h = code("quaternions", 2)?;
    ok &= module_axiom_check(&h, AuditMode::Sampled { trials: 1000, seed: 4 })?.passed();

    let c = code("f2", 3)?;
    let alg = c.algebra().clone();
    let cols = c.enumerate_columns()?;
    let mut small = 0;
    for k in 0..=4 {
        for set in cols.iter().combinations(k) {
            let x = FinVec::from_entries(&alg, set.into_iter().map(|col| (col.clone(), alg.from_int(1))))?;
            ok &= membership_by_reduction(&c, &x)? == c.contains(&x)?;
            small += 1;
        }
    }
    let alg = h.algebra().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut members = 0;
    for i in 0..1000 {
        let mut x = h.random_codeword(&mut rng)?;
        if i % 2 == 1 {
            x = x.add(&alg, &FinVec::unit(&alg, h.random_column(&mut rng), alg.random_nonzero(&mut rng, 4)))?;
        }
        let member = h.contains(&x)?;
        members += member as usize;
        ok &= membership_by_reduction(&h, &x)? == member;
    }
    Ok((ok, format!("exhaustive f2/m=3, f3/m=2; 1000 quaternion triples; {small} small vectors; 1000 quaternion vectors ({members} members)")))
}

fn nonassociative() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for name in ["gf9-isotope", "octonions"] {
        let c = code(name, 2)?;
        match nonassoc_witness(&c)? {
            Some(w) => {
                let good = w.verify(&c)? && w.violating.norm() <= 2 && !w.violating.is_zero();
                ok &= good;
                parts.push(format!("{name}: weight {} witness", w.violating.norm()));
            }
            None => {
                ok = false;
                parts.push(format!("{name}: missing witness"));
            }
        }
    }
    for name in ["f2", "f3", "f5", "quaternions"] {
        ok &= nonassoc_witness(&code(name, 2)?)?.is_none();
    }
    parts.push("f2, f3, f5, quaternions: associative, no witness".into());
    Ok((ok, parts.join("; ")))
}

fn distinguish() -> Outcome {
    let t = Instant::now();
    let mut ok = true;
    for name in ["f2", "f3", "quaternions"] {
        let opts = DistinguishOptions { seed: 6, samples: 100, ..DistinguishOptions::default() };
        let r = distinguish_invariant(&code(name, 2)?, &code(name, 3)?, &opts)?;
        ok &= r.holds && r.get("independent_half") == Some("true") && r.get("dependent_half") == Some("true");
        if name == "quaternions" {
            ok &= r.get("dependent_sets_checked") == Some("100") && r.get("dependent_sets_ok") == Some("100");
        }
    }
    let (fast, time) = within(t, 60);
    Ok((ok && fast, format!("H^(2) vs H^(3) over f2, f3, quaternions; {time}")))
}

fn isomorphisms() -> Outcome {
    let c = code("f3", 2)?;
    let alg = c.algebra().clone();
    let cols = c.enumerate_columns()?;
    let mut choices = Vec::new();
    for vals in (0..cols.len()).map(|_| 1..=2i64).multi_cartesian_product() {
        let mut e = ChoiceFunction::canonical();
        for (col, v) in cols.iter().zip(vals) {
            e.set(&alg, col.clone(), alg.from_int(v))?;
        }
        choices.push(e);
    }
    let words: Vec<BTreeSet<FinVec>> = choices
        .iter()
        .map(|e| Ok(c.clone().with_choice(e.clone())?.enumerate_codewords(1 << 20)?.into_iter().collect()))
        .collect::<Result<_>>()?;
    let mut ok = choices.len() == 16;
    let mut pairs = 0;
    for (i, e1) in choices.iter().enumerate() {
        for (j, e2) in choices.iter().enumerate() {
            let iso = choice_isomorphism(&c, e1, e2)?;
            let image = words[i].iter().map(|w| iso.apply(w)).collect::<Result<BTreeSet<_>>>()?;
            ok &= words[i].len() == 9 && image == words[j];
            pairs += 1;
        }
    }
    let f2 = code("f2", 3)?;
    let a2 = f2.algebra().clone();
    let all: BTreeSet<FinVec> = f2.enumerate_codewords(1 << 20)?.into_iter().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let len = rng.random_range(1..=8);
        let b = BasisChange::random(&a2, 3, len, &mut rng)?;
        let iso = basis_change_isomorphism(&f2, &b)?;
        let image = all.iter().map(|w| iso.apply(w)).collect::<Result<BTreeSet<_>>>()?;
        ok &= image == all;
    }
    Ok((ok, format!("{pairs} choice pairs over f3/m=2; 20 basis changes over f2/m=3")))
}

fn right_linearity() -> Outcome {
    let mut ok = true;
    for name in ["f3", "f5"] {
        ok &= matches!(right_linearity_witness(&code(name, 2)?, 8, 1000)?, RightLinearity::Confirmed { .. });
    }
    let h = code("quaternions", 2)?;
    let alg = h.algebra().clone();
    match right_linearity_witness(&h, 8, 1000)? {
        RightLinearity::Witness { codeword, alpha } => {
            ok &= h.contains(&codeword)? && !h.contains(&codeword.scale_right(&alg, &alpha))?;
        }
        RightLinearity::Confirmed { .. } => ok = false,
    }
    Ok((ok, "f3, f5 two-sided linear; quaternion escape witness verified".into()))
}

fn conjugation() -> Outcome {
    let r = conjugate_code_check(&code("quaternions", 2)?, 1000, 9)?;
    let ok = r.holds && r.get("passed") == Some("1000") && r.get("failed") == Some("0");
    Ok((ok, format!("{}/1000 conjugated codewords in the right code", r.get("passed").unwrap_or("?"))))
}

fn determinism() -> Outcome {
    let mut cases = Vec::new();
    let mut add = |cmd, alg: &str, m, mode: Option<Mode>, trials: Option<usize>| {
        let mut c = RunConfig::new(cmd, alg, m);
        c.mode = mode;
        c.trials = trials;
        c.seed = 42;
        cases.push(c);
    };
    add(Command::VerifyPerfect, "f3", 2, Some(Mode::Exhaustive), None);
    add(Command::VerifyPerfect, "quaternions", 2, Some(Mode::Structural), Some(500));
    add(Command::ReconstructCheck, "quaternions", 2, Some(Mode::Sampled), Some(200));
    add(Command::Distinguish, "quaternions", 2, None, Some(20));
    add(Command::NonassocWitness, "octonions", 2, None, None);
    add(Command::RightLinearity, "quaternions", 2, None, Some(100));
    add(Command::ConjugateCheck, "quaternions", 2, None, Some(200));
    add(Command::BasisIso, "f2", 3, None, None);
    add(Command::Audit, "octonions", 2, Some(Mode::Sampled), Some(300));
    let mut ok = true;
    for c in &cases {
        ok &= run(c)?.to_string() == run(c)?.to_string();
    }
    Ok((ok, format!("{} report kinds rerun with seed 42", cases.len())))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("sphere-packing identities", sphere_packing),
        ("structural perfectness", structural),
        ("decoder round trip", decoder_round_trip),
        ("module axioms and reduction", module_axioms),
        ("nonassociative witnesses", nonassociative),
        ("distinguishing invariant", distinguish),
        ("choice and basis isomorphisms", isomorphisms),
        ("right linearity", right_linearity),
        ("quaternion conjugation", conjugation),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let (ok, detail) = match f() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        failed += !ok as usize;
        println!("criterion {:2} {}: {name}: {detail}", i + 1, if ok { "PASS" } else { "FAIL" });
    }
    println!("acceptance: {}/{} passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
