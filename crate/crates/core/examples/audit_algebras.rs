//! Quasifield law audit for every built-in algebra.
use quasihamming::algebra::{axiom_audit, AuditMode};
use quasihamming::Algebra;

fn main() -> quasihamming::Result<()> {
    for name in ["f2", "f3", "gf4", "gf9", "gf9-isotope", "rationals", "quaternions", "octonions"] {
        let alg = Algebra::preset(name)?;
        let mode = if alg.is_finite() {
            AuditMode::Exhaustive
        } else {
            AuditMode::Sampled { trials: 500, seed: 1 }
        };
        let rep = axiom_audit(&alg, mode)?;
        println!(
            "{name:12} quasifield={} associative={} commutative={}",
            rep.is_quasifield(),
            alg.is_associative(),
            alg.is_commutative()
        );
    }
    Ok(())
}
