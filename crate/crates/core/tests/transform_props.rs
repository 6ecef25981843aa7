use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tforge_core::covariants::{compute_s4, hermite_covariant};
use tforge_core::gf::{is_irreducible, PrimeField};
use tforge_core::transform::{
    hermite_form, image_polynomial, joubert_image_by_roots, joubert_map, normalize, scale_tail, QuotientField,
    ResultantMethod,
};
use tforge_core::{Integers, MultiPoly, Rationals, Ring, UniPoly};

fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(0x5eed), failure_persistence: None, ..Config::default() }
}

fn irreducible(k: &PrimeField, n: usize, seed: u64) -> UniPoly<PrimeField> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut c: Vec<u64> = (0..n).map(|_| rng.gen_range(0..k.p())).collect();
        c.push(1);
        let f = UniPoly::new(k, c);
        if is_irreducible(&f) {
            return f;
        }
    }
}

fn s4() -> &'static MultiPoly<Integers> {
    static S4: OnceLock<MultiPoly<Integers>> = OnceLock::new();
    S4.get_or_init(|| compute_s4().unwrap().0)
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn resultant_paths_agree(p in prop::sample::select(vec![5u64, 7, 13, 101, 65_537]), n in 3usize..=6, seed in any::<u64>()) {
        let k = PrimeField::new(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut fc: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
        fc.push(1);
        let f = UniPoly::new(&k, fc);
        let g = UniPoly::new(&k, (0..n).map(|_| rng.gen_range(0..p)).collect());
        let oracle = image_polynomial(&f, &g, ResultantMethod::CharPoly).unwrap();
        for m in [ResultantMethod::Auto, ResultantMethod::Sylvester, ResultantMethod::Subresultant] {
            prop_assert_eq!(image_polynomial(&f, &g, m).unwrap(), oracle.clone());
        }
    }

    #[test]
    fn hermite_image_vanishes_at_the_transformed_root(p in prop::sample::select(vec![7u64, 11, 41, 97, 1009]), seed in any::<u64>()) {
        let k = PrimeField::new(p).unwrap();
        let f = irreducible(&k, 5, seed);
        let g = hermite_form().for_poly(&f).unwrap();
        let image = image_polynomial(&f, &g, ResultantMethod::Auto).unwrap();
        let l = QuotientField::new(&f);
        let eta = l.eval(&g, &l.theta());
        let lifted = image.map(&l, |c| l.embed(c));
        prop_assert!(l.is_zero(&lifted.eval(&eta)));
        prop_assert_eq!(image, l.char_poly(&eta));
    }

    #[test]
    fn hermite_roundtrip(p in 3u64..1_000_000, x in prop::collection::vec(any::<u64>(), 5)) {
        prop_assume!(tforge_core::gf::is_prime(p));
        let k = PrimeField::new(p).unwrap();
        let cov = hermite_covariant().map_ring(&k, |c| k.from_int(c));
        let x: Vec<u64> = x.iter().map(|v| v % p).collect();
        prop_assert!(hermite_form().roundtrip_holds(&cov, &x).unwrap());
    }

    #[test]
    fn pure_quintics_collapse(a in 1i64..1000, p in prop::sample::select(vec![3u64, 7, 11, 31, 101])) {
        let y5 = |f: &UniPoly<Rationals>| UniPoly::monomial(f.ring(), Rationals.one(), 5);
        let f = UniPoly::from_i64(&Rationals, &[-a, 0, 0, 0, 0, 1]);
        let g = hermite_form().for_poly(&f).unwrap();
        prop_assert_eq!(image_polynomial(&f, &g, ResultantMethod::Auto).unwrap(), y5(&f));
        let k = PrimeField::new(p).unwrap();
        prop_assume!(a % p as i64 != 0);
        let f = UniPoly::new(&k, vec![k.reduce_i64(-a), 0, 0, 0, 0, 1]);
        let g = hermite_form().for_poly(&f).unwrap();
        prop_assert_eq!(image_polynomial(&f, &g, ResultantMethod::Auto).unwrap(), UniPoly::monomial(&k, 1, 5));
    }

    #[test]
    fn scale_tail_rescales(p in prop::sample::select(vec![7u64, 13, 101]), n in 3usize..=6, seed in any::<u64>()) {
        let k = PrimeField::new(p).unwrap();
        let f = irreducible(&k, n, seed);
        prop_assume!(f.coeff(1) != 0);
        let (h, lambda) = scale_tail(&f).unwrap();
        prop_assert_eq!(h.coeff(0), h.coeff(1));
        let stretched = f.compose(&UniPoly::new(&k, vec![0, lambda]));
        prop_assert_eq!(h.scale(&k.pow(&lambda, n as u64)), stretched);
    }
}

proptest! {
    #![proptest_config(config(40))]

    #[test]
    fn normalizer_outputs_verify(n in 3usize..=6, i in 0usize..4, seed in any::<u64>()) {
        let p = match n {
            5 => [41u64, 43, 47, 101][i],
            _ => [5u64, 7, 11, 13][i],
        };
        let k = PrimeField::new(p).unwrap();
        let f = irreducible(&k, n, seed);
        let out = normalize(&f).unwrap();
        let v = out.verify();
        prop_assert!(v.passed(), "{:?} {:?}", out.to_json(), v);
        prop_assert!(out.shape.matches(&out.transformed));
        if let Some(d) = v.element_degree {
            prop_assert_eq!(d, n);
            prop_assert_eq!(v.element_ok, Some(true));
        }
    }

    #[test]
    fn joubert_map_matches_roots(p in prop::sample::select(vec![3u64, 5, 7, 11, 13]), seed in any::<u64>()) {
        let k = PrimeField::new(p).unwrap();
        let f = irreducible(&k, 6, seed);
        prop_assert_eq!(Some(joubert_map().apply(&f).unwrap()), joubert_image_by_roots(&f));
    }
}

proptest! {
    #![proptest_config(config(20))]

    #[test]
    fn nonvanishing_s4_forces_irreducibility(p in prop::sample::select(vec![11u64, 13, 17, 41, 43]), seed in any::<u64>()) {
        let k = PrimeField::new(p).unwrap();
        let f = irreducible(&k, 5, seed);
        let l = QuotientField::new(&f);
        let roots = l.conjugates(&l.theta()).unwrap();
        let value = s4().map_ring(&l, |c| l.from_int(c)).eval(&roots).unwrap();
        let g = hermite_form().for_poly(&f).unwrap();
        let image = image_polynomial(&f, &g, ResultantMethod::Auto).unwrap();
        if !l.is_zero(&value) {
            prop_assert!(is_irreducible(&image), "{}", image.format_with("y"));
        }
    }
}
