//! Conjugating the coordinates of a left quaternion code gives the right code.
use quasihamming::equivalence::conjugate_code_check;
use quasihamming::{Algebra, HammingCode};

fn main() -> quasihamming::Result<()> {
    let code = HammingCode::new(Algebra::quaternions(), 2)?;
    print!("{}", conjugate_code_check(&code, 300, 11)?);
    Ok(())
}
