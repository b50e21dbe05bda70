//! Left scaling of a codeword escapes the code when multiplication is not
//! associative.
use quasihamming::equivalence::nonassoc_witness;
use quasihamming::{Algebra, HammingCode};

fn main() -> quasihamming::Result<()> {
    for name in ["f5", "quaternions", "gf9-isotope", "octonions"] {
        let alg = Algebra::preset(name)?;
        let code = HammingCode::new(alg.clone(), 2)?;
        match nonassoc_witness(&code)? {
            None => println!("{name}: associative, no witness"),
            Some(w) => println!(
                "{name}: ({}, {}, {}) makes {} leave the code; violating weight {} verified={}",
                alg.show(&w.a),
                alg.show(&w.b),
                alg.show(&w.c),
                w.escaping,
                w.violating.norm(),
                w.verify(&code)?
            ),
        }
    }
    Ok(())
}
