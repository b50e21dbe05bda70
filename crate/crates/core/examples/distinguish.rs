//! Codes with different row counts are not isometric: a support invariant.
use quasihamming::equivalence::{distinguish_invariant, DistinguishOptions};
use quasihamming::{Algebra, HammingCode};

fn main() -> quasihamming::Result<()> {
    for name in ["f2", "quaternions"] {
        let alg = Algebra::preset(name)?;
        let a = HammingCode::new(alg.clone(), 2)?;
        let b = HammingCode::new(alg, 3)?;
        print!("{}", distinguish_invariant(&a, &b, &DistinguishOptions::default())?);
        println!();
    }
    Ok(())
}
