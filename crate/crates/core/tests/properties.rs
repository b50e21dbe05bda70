use std::collections::BTreeMap;

use proptest::prelude::*;
use quasihamming::equivalence::LinearIsometry;
use quasihamming::finvec::hamming_distance;
use quasihamming::{Algebra, AlgebraRef, FinVec, HammingCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ALGEBRAS: &[&str] = &["f2", "f3", "gf4", "gf9-isotope", "rationals", "quaternions", "octonions"];

fn setup(idx: usize, m: usize) -> (AlgebraRef, HammingCode) {
    let alg = Algebra::preset(ALGEBRAS[idx % ALGEBRAS.len()]).unwrap();
    let code = HammingCode::new(alg.clone(), m).unwrap();
    (alg, code)
}

fn random_vec(code: &HammingCode, rng: &mut ChaCha8Rng, max_weight: usize) -> FinVec {
    let alg = code.algebra();
    let mut x = FinVec::new();
    for _ in 0..rng.random_range(0..=max_weight) {
        x.set(alg, code.random_column(rng), alg.random(rng, 5));
    }
    x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn triangle_inequality(idx in 0usize..7, seed in any::<u64>()) {
        let (alg, code) = setup(idx, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y, z) = (random_vec(&code, &mut rng, 4), random_vec(&code, &mut rng, 4), random_vec(&code, &mut rng, 4));
        let d = |a: &FinVec, b: &FinVec| hamming_distance(&alg, a, b).unwrap();
        prop_assert!(d(&x, &z) <= d(&x, &y) + d(&y, &z));
        prop_assert_eq!(d(&x, &y), d(&y, &x));
        prop_assert_eq!(d(&x, &x), 0);
    }

    #[test]
    fn left_scaling_distributes(idx in 0usize..7, seed in any::<u64>()) {
        let (alg, code) = setup(idx, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (random_vec(&code, &mut rng, 4), random_vec(&code, &mut rng, 4));
        let a = alg.random(&mut rng, 5);
        let lhs = x.add(&alg, &y).unwrap().scale_left(&alg, &a);
        let rhs = x.scale_left(&alg, &a).add(&alg, &y.scale_left(&alg, &a)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn syndrome_is_additive(idx in 0usize..7, seed in any::<u64>()) {
        let (alg, code) = setup(idx, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (random_vec(&code, &mut rng, 4), random_vec(&code, &mut rng, 4));
        let s = code.syndrome(&x.add(&alg, &y).unwrap()).unwrap();
        prop_assert_eq!(s, code.syndrome(&x).unwrap().add(&alg, &code.syndrome(&y).unwrap()));
    }

    #[test]
    fn decoder_corrects_one_error(idx in 0usize..7, m in 2usize..4, seed in any::<u64>()) {
        let (alg, code) = setup(idx, m);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = code.random_codeword(&mut rng).unwrap();
        prop_assert!(code.contains(&c).unwrap());
        prop_assert_eq!(code.decode(&c).unwrap(), c.clone());
        let e = FinVec::unit(&alg, code.random_column(&mut rng), alg.random_nonzero(&mut rng, 5));
        prop_assert_eq!(code.decode(&c.add(&alg, &e).unwrap()).unwrap(), c);
    }

    #[test]
    fn isometries_preserve_support_and_distance(idx in 0usize..4, seed in any::<u64>()) {
        let (alg, code) = setup(idx, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let iso = LinearIsometry::random_monomial(&code, &mut rng).unwrap();
        let (x, y) = (random_vec(&code, &mut rng, 5), random_vec(&code, &mut rng, 5));
        let (fx, fy) = (iso.apply(&x).unwrap(), iso.apply(&y).unwrap());
        prop_assert_eq!(fx.norm(), x.norm());
        prop_assert_eq!(
            hamming_distance(&alg, &fx, &fy).unwrap(),
            hamming_distance(&alg, &x, &y).unwrap()
        );
    }
}

fn weight_distribution(words: &[FinVec]) -> BTreeMap<usize, usize> {
    let mut d = BTreeMap::new();
    for w in words {
        *d.entry(w.norm()).or_insert(0) += 1;
    }
    d
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // The weight distribution separates H^(m) from H^(m+1) when both fit the
    // budget, and stays put under any monomial isometry.
    #[test]
    fn invariants_survive_monomial_isometries((p, m) in prop::sample::select(vec![("f2", 2), ("f2", 3), ("f3", 2)]), seed in any::<u64>()) {
        let alg = Algebra::preset(p).unwrap();
        let code = HammingCode::new(alg, m).unwrap();
        let words = code.enumerate_codewords(1 << 20).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let iso = LinearIsometry::random_monomial(&code, &mut rng).unwrap();
        let image: Vec<FinVec> = words.iter().map(|w| iso.apply(w).unwrap()).collect();
        prop_assert_eq!(weight_distribution(&image), weight_distribution(&words));
        let other = HammingCode::new(code.algebra().clone(), m + 1).unwrap();
        if let Ok(other_words) = other.enumerate_codewords(1 << 20) {
            prop_assert_ne!(weight_distribution(&image), weight_distribution(&other_words));
        }
    }
}
