//! Irreducibility over `Q` for small-degree outputs: the rational root test
//! plus degree patterns modulo primes. Undecided cases return `None`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::gf::{distinct_degree_factorization, is_prime, PrimeField};
use crate::polyring::UniPoly;
use crate::ring::{Rationals, Ring};

const SIEVE_PRIMES: usize = 60;
const TRIAL_LIMIT: u64 = 1 << 40;

/// Primitive integer polynomial with the same roots.
pub fn primitive_part(f: &UniPoly<Rationals>) -> Vec<BigInt> {
    let den = f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> =
        f.coeffs().iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &g).collect()
}

fn reduce_mod(ints: &[BigInt], field: &PrimeField) -> UniPoly<PrimeField> {
    UniPoly::new(field, ints.iter().map(|c| field.from_int(c)).collect())
}

fn subset_sums(parts: &[usize]) -> BTreeSet<usize> {
    let mut sums = BTreeSet::from([0]);
    for &p in parts {
        let shifted: Vec<usize> = sums.iter().map(|s| s + p).collect();
        sums.extend(shifted);
    }
    sums
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("coefficients too large for trial division")]
pub struct TooLarge;

/// Some rational root, or `Ok(None)` when there is none.
pub fn rational_root(ints: &[BigInt]) -> Result<Option<BigRational>, TooLarge> {
    let Some(lead) = ints.last() else {
        return Ok(None);
    };
    let k = ints.iter().position(|c| !c.is_zero()).expect("nonzero polynomial");
    if k > 0 {
        return Ok(Some(BigRational::zero()));
    }
    let a0 = ints[0].abs().to_u64().filter(|&v| v <= TRIAL_LIMIT).ok_or(TooLarge)?;
    let an = lead.abs().to_u64().filter(|&v| v <= TRIAL_LIMIT).ok_or(TooLarge)?;
    let q = UniPoly::new(&Rationals, ints.iter().map(|c| BigRational::from_integer(c.clone())).collect());
    for num in divisors(a0) {
        for den in divisors(an) {
            for s in [1i64, -1] {
                let r = BigRational::new(BigInt::from(num) * s, BigInt::from(den));
                if q.eval(&r).is_zero() {
                    return Ok(Some(r));
                }
            }
        }
    }
    Ok(None)
}

/// `Some(true)` when irreducibility is proved, `Some(false)` when a
/// rational root or a repeated factor is found, `None` otherwise.
pub fn irreducible_over_q(f: &UniPoly<Rationals>) -> Option<bool> {
    let n = match f.degree() {
        None | Some(0) => return Some(false),
        Some(1) => return Some(true),
        Some(n) => n,
    };
    if !f.is_separable() {
        return Some(false);
    }
    let ints = primitive_part(f);
    let root = rational_root(&ints);
    if let Ok(Some(_)) = root {
        return Some(false);
    }
    let mut possible: BTreeSet<usize> = (0..=n).collect();
    let mut used = 0;
    let mut p = 2u64;
    while used < SIEVE_PRIMES {
        p += 1;
        if !is_prime(p) {
            continue;
        }
        let field = PrimeField::new(p).expect("prime");
        let fp = reduce_mod(&ints, &field);
        if fp.degree() != Some(n) || !fp.is_separable() {
            continue;
        }
        used += 1;
        let parts: Vec<usize> = distinct_degree_factorization(&fp)
            .into_iter()
            .flat_map(|(d, g)| std::iter::repeat_n(d, g.degree().expect("nonzero") / d))
            .collect();
        let sums = subset_sums(&parts);
        possible.retain(|d| sums.contains(d));
        let proper: Vec<usize> = possible.iter().copied().filter(|&d| d > 0 && d < n).collect();
        if proper.is_empty() {
            return Some(true);
        }
        // Only a linear factor (or its cofactor) is left open.
        if root.is_ok() && proper.iter().all(|&d| d == 1 || d == n - 1) {
            return Some(true);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(t: &str) -> UniPoly<Rationals> {
        UniPoly::parse(t, &Rationals, "x").unwrap()
    }

    #[test]
    fn decides_small_cases() {
        assert_eq!(irreducible_over_q(&q("x^5 - 2")), Some(true));
        assert_eq!(irreducible_over_q(&q("x^3 - 6*x - 6")), Some(true));
        assert_eq!(irreducible_over_q(&q("x^3 - 8")), Some(false));
        assert_eq!(irreducible_over_q(&q("x^4 + 1")), None);
        assert_eq!(irreducible_over_q(&q("x^5 - x - 1")), Some(true));
        assert_eq!(irreducible_over_q(&q("(x^2 + 1)*(x^3 + x + 1)")), None);
        assert_eq!(irreducible_over_q(&q("x^2/4 - 1/9")), Some(false));
    }

    #[test]
    fn primitive_parts() {
        let v = primitive_part(&q("x^2/2 + x/3 + 1"));
        assert_eq!(v, vec![BigInt::from(6), BigInt::from(2), BigInt::from(3)]);
    }
}
