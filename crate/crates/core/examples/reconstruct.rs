//! The pair construction: module operations recovered from the decoder alone.
use quasihamming::algebra::AuditMode;
use quasihamming::reconstruct::{module_axiom_check, pair_add, reduction_trace, PairElement};
use quasihamming::{Algebra, Column, FinVec, HammingCode};

fn main() -> quasihamming::Result<()> {
    let alg = Algebra::prime_field(3)?;
    let code = HammingCode::new(alg.clone(), 2)?;
    let s = |x: &str| alg.parse_scalar(x);
    let col = |x: &str| Column::parse(&alg, x);
    let u = PairElement::new(&alg, s("1")?, col("(1, 0)")?);
    let v = PairElement::new(&alg, s("1")?, col("(0, 1)")?);
    println!("{} + {} = {}", u.render(&alg), v.render(&alg), pair_add(&code, &u, &v)?.render(&alg));

    let x = FinVec::from_entries(&alg, [(col("(1, 0)")?, s("1")?), (col("(0, 1)")?, s("2")?), (col("(1, 1)")?, s("1")?)])?;
    let (member, sizes) = reduction_trace(&code, &x)?;
    println!("reduction: sizes {sizes:?}, member={member}, syndrome says {}", code.contains(&x)?);

    print!("{}", module_axiom_check(&code, AuditMode::Exhaustive)?.to_report());
    Ok(())
}
