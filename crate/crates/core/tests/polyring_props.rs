use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use num_bigint::BigInt;
use tforge_core::gf::{FqField, PrimeField};
use tforge_core::polyring::parse_poly;
use tforge_core::{Field, Integers, MultiPoly, Rationals, Ring};

fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(0x5eed), failure_persistence: None, ..Config::default() }
}

const NAMES: [&str; 3] = ["x", "y", "z"];

fn int_terms() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..4, 3), -20i64..=20), 0..8)
}

fn int_poly(terms: &[(Vec<u32>, i64)]) -> MultiPoly<Integers> {
    MultiPoly::from_terms(&Integers, 3, terms.iter().map(|(e, c)| (e.clone(), BigInt::from(*c)))).unwrap()
}

fn map_to<R: Ring>(p: &MultiPoly<Integers>, ring: &R) -> MultiPoly<R> {
    p.map_ring(ring, |c| ring.from_int(c))
}

fn canonical<R: Ring>(p: &MultiPoly<R>) -> bool {
    p.terms().all(|(_, c)| !p.ring().is_zero(c))
}

fn axioms<R: Ring>(a: &MultiPoly<R>, b: &MultiPoly<R>, c: &MultiPoly<R>) {
    assert_eq!(a + b, b + a);
    assert_eq!(a * b, b * a);
    assert_eq!(&(a + b) + c, a + &(b + c));
    assert_eq!(&(a * b) * c, a * &(b * c));
    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    assert_eq!(&(a - b) + b, a.clone());
    for p in [a + b, a * b, a - b, a.neg()] {
        assert!(canonical(&p));
    }
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn ring_axioms_per_domain(a in int_terms(), b in int_terms(), c in int_terms()) {
        let (a, b, c) = (int_poly(&a), int_poly(&b), int_poly(&c));
        axioms(&a, &b, &c);
        axioms(&map_to(&a, &Rationals), &map_to(&b, &Rationals), &map_to(&c, &Rationals));
        let f7 = PrimeField::new(7).unwrap();
        axioms(&map_to(&a, &f7), &map_to(&b, &f7), &map_to(&c, &f7));
        let f9 = FqField::with_default_modulus(3, 2).unwrap();
        axioms(&map_to(&a, &f9), &map_to(&b, &f9), &map_to(&c, &f9));
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in int_terms(), b in int_terms(), pts in prop::collection::vec(prop::collection::vec(-50i64..50, 3), 5)) {
        let (a, b) = (int_poly(&a), int_poly(&b));
        let f101 = PrimeField::new(101).unwrap();
        let (ap, bp) = (map_to(&a, &f101), map_to(&b, &f101));
        for pt in pts {
            let z: Vec<BigInt> = pt.iter().map(|&v| BigInt::from(v)).collect();
            prop_assert_eq!((&a * &b).eval(&z).unwrap(), a.eval(&z).unwrap() * b.eval(&z).unwrap());
            let m: Vec<u64> = pt.iter().map(|&v| f101.reduce_i64(v)).collect();
            let lhs = (&ap * &bp).eval(&m).unwrap();
            prop_assert_eq!(lhs, f101.mul(&ap.eval(&m).unwrap(), &bp.eval(&m).unwrap()));
        }
    }

    #[test]
    fn reduction_commutes_with_arithmetic(a in int_terms(), b in int_terms()) {
        let (a, b) = (int_poly(&a), int_poly(&b));
        for p in [2u64, 3, 5, 7, 11] {
            let k = PrimeField::new(p).unwrap();
            prop_assert_eq!(map_to(&(&a + &b), &k), &map_to(&a, &k) + &map_to(&b, &k));
            prop_assert_eq!(map_to(&(&a * &b), &k), &map_to(&a, &k) * &map_to(&b, &k));
        }
    }

    #[test]
    fn exact_division_roundtrip(a in int_terms(), b in int_terms()) {
        let (a, b) = (int_poly(&a), int_poly(&b));
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.divide_exact(&b).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(config(500))]

    #[test]
    fn parse_inverts_format(a in int_terms()) {
        let p = int_poly(&a);
        prop_assert_eq!(parse_poly(&p.format_with(&NAMES), &Integers, &NAMES).unwrap(), p.clone());
        let q = map_to(&p, &Rationals).scale(&Rationals.div(&Rationals.one(), &Rationals.from_i64(6)).unwrap());
        prop_assert_eq!(parse_poly(&q.format_with(&NAMES), &Rationals, &NAMES).unwrap(), q);
        let f8 = FqField::with_default_modulus(2, 3).unwrap();
        let r = map_to(&p, &f8).scale(&f8.generator());
        prop_assert_eq!(parse_poly(&r.format_with(&NAMES), &f8, &NAMES).unwrap(), r);
    }

    #[test]
    fn json_roundtrip(a in int_terms()) {
        let p = int_poly(&a);
        let (back, names) = MultiPoly::from_json(&p.to_json(&NAMES), &Integers).unwrap();
        prop_assert_eq!(back, p);
        prop_assert_eq!(names, NAMES.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    }
}
