//! Choice-function and basis-change isomorphisms over small fields.
use quasihamming::equivalence::{basis_change_isomorphism, choice_isomorphism, BasisChange, ElementaryOp};
use quasihamming::{Algebra, ChoiceFunction, Column, HammingCode};
use std::collections::BTreeSet;

fn main() -> quasihamming::Result<()> {
    let alg = Algebra::prime_field(3)?;
    let code = HammingCode::new(alg.clone(), 2)?;
    let mut e2 = ChoiceFunction::canonical();
    e2.set(&alg, Column::parse(&alg, "(1, 2)")?, alg.parse_scalar("2")?)?;
    let iso = choice_isomorphism(&code, &ChoiceFunction::canonical(), &e2)?;
    let target = code.clone().with_choice(e2)?;
    let image: BTreeSet<_> = code.enumerate_codewords(1 << 20)?.iter().map(|c| iso.apply(c)).collect::<Result<_, _>>()?;
    let expected: BTreeSet<_> = target.enumerate_codewords(1 << 20)?.into_iter().collect();
    println!("choice isometry maps C onto C': {}", image == expected);

    let f2 = Algebra::prime_field(2)?;
    let code = HammingCode::new(f2.clone(), 3)?;
    let b = BasisChange::identity(&f2, 3)?
        .then(&f2, ElementaryOp::Swap(0, 2))?
        .then(&f2, ElementaryOp::AddMultiple { target: 1, source: 0, factor: f2.from_int(1) })?;
    let iso = basis_change_isomorphism(&code, &b)?;
    println!("basis change {}", b.render(&f2));
    for (from, to, alpha) in iso.table(&code.enumerate_columns()?)? {
        println!("  {} -> {} * {}", from.render(&f2), to.render(&f2), f2.show(&alpha));
    }
    let words = code.enumerate_codewords(1 << 20)?;
    let all_in = words.iter().all(|c| iso.apply(c).and_then(|x| code.contains(&x)).unwrap_or(false));
    println!("A(C) = C: {all_in}");
    Ok(())
}
