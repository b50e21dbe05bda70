//! Corrupt one coordinate of a quaternion codeword and decode it back.
use quasihamming::{Algebra, FinVec, HammingCode};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> quasihamming::Result<()> {
    let alg = Algebra::quaternions();
    let code = HammingCode::new(alg.clone(), 2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let c = code.random_codeword(&mut rng)?;
    let col = code.random_column(&mut rng);
    let err = FinVec::unit(&alg, col, alg.random_nonzero(&mut rng, 5));
    let y = c.add(&alg, &err)?;
    println!("codeword:\n{}", c.to_text(&alg));
    println!("received (syndrome {}):\n{}", code.syndrome(&y)?.render(&alg), y.to_text(&alg));
    let d = code.decode(&y)?;
    println!("decoded equals codeword: {}", d == c);
    Ok(())
}
