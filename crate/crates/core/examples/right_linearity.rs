//! Right scaling preserves codes over commutative fields but not over the
//! quaternions.
use quasihamming::equivalence::{right_linearity_witness, RightLinearity};
use quasihamming::{Algebra, HammingCode};

fn main() -> quasihamming::Result<()> {
    for name in ["f3", "f5", "quaternions"] {
        let alg = Algebra::preset(name)?;
        let code = HammingCode::new(alg.clone(), 2)?;
        match right_linearity_witness(&code, 0, 200)? {
            RightLinearity::Confirmed { codewords, scalars } => {
                println!("{name}: two-sided linear ({codewords} codewords x {scalars} scalars)")
            }
            RightLinearity::Witness { codeword, alpha } => {
                let img = codeword.scale_right(&alg, &alpha);
                println!("{name}: c * {} has syndrome {}", alg.show(&alpha), code.syndrome(&img)?.render(&alg));
            }
        }
    }
    Ok(())
}
