use quasihamming::algebra::{axiom_audit, AuditMode};
use quasihamming::equivalence::{support_witness, SupportMethod};
use quasihamming::reconstruct::{pair_add, pair_scalar_mul, PairElement};
use quasihamming::{Algebra, AlgebraSpec, Column, FinVec, HammingCode, PerfectOptions};

#[test]
fn spec_file_round_trip() {
    let spec = AlgebraSpec::load("gf9-isotope").unwrap();
    let path = std::env::temp_dir().join(format!("qham-spec-{}.json", std::process::id()));
    std::fs::write(&path, spec.to_json()).unwrap();
    let loaded = AlgebraSpec::load(path.to_str().unwrap()).unwrap();
    assert_eq!(loaded.digest(), spec.digest());
    let alg = loaded.build().unwrap();
    assert!(axiom_audit(&alg, AuditMode::Exhaustive).unwrap().is_quasifield());
}

#[test]
fn isotope_code_is_perfect() {
    let code = HammingCode::new(Algebra::preset("gf9-isotope").unwrap(), 2).unwrap();
    assert_eq!(code.length(), Some(10));
    let r = code.verify_perfect(&PerfectOptions::structural(1)).unwrap();
    assert!(r.passed());
    assert_eq!(r.bijection_ok, Some(true));
}

#[test]
fn pairs_over_gf4_form_a_module() {
    let alg = Algebra::preset("gf4").unwrap();
    let code = HammingCode::new(alg.clone(), 2).unwrap();
    let cols = code.enumerate_columns().unwrap();
    let elems: Vec<PairElement> = alg
        .nonzero_elements()
        .unwrap()
        .into_iter()
        .flat_map(|a| cols.iter().map(move |c| (a.clone(), c.clone())))
        .map(|(a, c)| PairElement::new(&alg, a, c))
        .collect();
    for u in elems.iter().step_by(7) {
        for v in elems.iter().step_by(5) {
            let uv = pair_add(&code, u, v).unwrap();
            assert_eq!(uv, pair_add(&code, v, u).unwrap());
            for a in alg.nonzero_elements().unwrap() {
                let lhs = pair_scalar_mul(&alg, &a, &uv);
                let rhs = pair_add(&code, &pair_scalar_mul(&alg, &a, u), &pair_scalar_mul(&alg, &a, v)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn quaternion_support_witness_is_a_codeword() {
    let alg = Algebra::quaternions();
    let code = HammingCode::new(alg.clone(), 2).unwrap();
    let set: Vec<Column> = ["(1, 0)", "(0, 1)", "(1, i)"].iter().map(|s| Column::parse(&alg, s).unwrap()).collect();
    let res = support_witness(&code, &set).unwrap();
    assert!(matches!(res.method, SupportMethod::Linearized { .. }));
    let w: FinVec = res.witness.unwrap();
    assert!(code.contains(&w).unwrap());
    assert!(w.support().all(|c| set.contains(c)));
}
