//! Sphere-packing counts for small finite codes and structural checks for
//! the infinite ones.
use quasihamming::{Algebra, HammingCode, PerfectOptions};

fn main() -> quasihamming::Result<()> {
    for (name, m) in [("f2", 3), ("f3", 2), ("gf4", 2)] {
        let code = HammingCode::new(Algebra::preset(name)?, m)?;
        let rep = code.verify_perfect(&PerfectOptions::exhaustive())?.to_report();
        println!("{name} m={m}: {} perfect={}", rep.get("covering_product").unwrap_or("?"), rep.holds);
    }
    for (name, m) in [("rationals", 3), ("quaternions", 2), ("octonions", 2)] {
        let code = HammingCode::new(Algebra::preset(name)?, m)?;
        let mut opts = PerfectOptions::structural(7);
        opts.trials = 500;
        let rep = code.verify_perfect(&opts)?;
        println!("{name} m={m}: structural checks passed={}", rep.passed());
    }
    Ok(())
}
