use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use tforge_core::gf::{
    is_irreducible, is_irreducible_by_trial_division, minimal_polynomial_over_prime, FqField, PrimeField,
};
use tforge_core::{Field, Ring, UniPoly};

fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(0x5eed), failure_persistence: None, ..Config::default() }
}

fn fields() -> Vec<FqField> {
    [(2, 3), (2, 8), (3, 2), (3, 5), (5, 3), (7, 2)]
        .into_iter()
        .map(|(p, k)| FqField::with_default_modulus(p, k).unwrap())
        .collect()
}

fn in_prime_field(f: &FqField, a: u64) -> bool {
    f.coords(a)[1..].iter().all(|&c| c == 0)
}

#[test]
fn frobenius_fixes_exactly_the_prime_field() {
    for f in fields() {
        let q = f.order().unwrap();
        for a in 0..q {
            assert_eq!(f.frobenius(a) == a, in_prime_field(&f, a), "{} a = {a}", f.descriptor());
        }
    }
}

#[test]
fn absolute_trace_is_linear_and_onto() {
    for f in fields().into_iter().filter(|f| f.order().unwrap() <= 1 << 12) {
        let q = f.order().unwrap();
        let mut hit = vec![false; f.p() as usize];
        for a in 0..q {
            let t = f.trace_to(a, 1);
            assert!(in_prime_field(&f, t));
            hit[f.coords(t)[0] as usize] = true;
            let b = (a * 7 + 3) % q;
            assert_eq!(f.trace_to(f.add(&a, &b), 1), f.add(&t, &f.trace_to(b, 1)));
            let c = f.from_prime(2 % f.p());
            assert_eq!(f.trace_to(f.mul(&c, &a), 1), f.mul(&c, &t));
        }
        assert!(hit.iter().all(|&h| h), "{}", f.descriptor());
    }
}

proptest! {
    #![proptest_config(config(1000))]

    #[test]
    fn frobenius_is_a_ring_map(i in 0usize..6, a in any::<u64>(), b in any::<u64>()) {
        let f = &fields()[i];
        let q = f.order().unwrap();
        let (a, b) = (a % q, b % q);
        prop_assert_eq!(f.frobenius(f.add(&a, &b)), f.add(&f.frobenius(a), &f.frobenius(b)));
        prop_assert_eq!(f.frobenius(f.mul(&a, &b)), f.mul(&f.frobenius(a), &f.frobenius(b)));
        if a != 0 {
            prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
        }
    }

    #[test]
    fn minimal_polynomials(i in 0usize..6, a in any::<u64>()) {
        let f = &fields()[i];
        let a = a % f.order().unwrap();
        let m = minimal_polynomial_over_prime(f, a);
        let d = m.degree().unwrap();
        prop_assert!(m.is_monic());
        prop_assert_eq!(f.k() as usize % d, 0);
        prop_assert!(is_irreducible(&m));
        let lifted = m.map(f, |&c| f.from_prime(c));
        prop_assert_eq!(lifted.eval(&a), 0);
        let x = UniPoly::x(m.ring());
        prop_assert_eq!(x.pow_mod(f.order().unwrap() as u128, &m), x.rem(&m));
    }

    #[test]
    fn irreducibility_matches_trial_division(p in prop::sample::select(vec![2u64, 3, 5, 7]), coeffs in prop::collection::vec(any::<u64>(), 2..=7)) {
        let k = PrimeField::new(p).unwrap();
        let mut c: Vec<u64> = coeffs.iter().map(|v| v % p).collect();
        c.push(1);
        let f = UniPoly::new(&k, c);
        prop_assume!(p.pow(f.degree().unwrap() as u32) <= 1 << 16);
        prop_assert_eq!(is_irreducible(&f), is_irreducible_by_trial_division(&f));
    }

    #[test]
    fn irreducibility_over_extensions(coeffs in prop::collection::vec(0u64..9, 2..=4)) {
        let k = FqField::with_default_modulus(3, 2).unwrap();
        let mut c = coeffs;
        c.push(1);
        let f = UniPoly::new(&k, c);
        prop_assert_eq!(is_irreducible(&f), is_irreducible_by_trial_division(&f));
    }
}
