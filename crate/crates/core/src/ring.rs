//! Coefficient domains.
//!
//! A [`Ring`] is a value (not a type-level marker) so that runtime-chosen
//! fields such as `GF(7)` or `GF(3^2;modulus=x^2+1)` share one code path with
//! the integers and rationals.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashMap;
use serde_json::Value;

/// A packed monomial together with its coefficient.
pub type Term<E> = (u128, E);

pub trait Ring: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + Eq + Hash + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_int(&self, n: &BigInt) -> Self::Elem;

    /// `a / b` when the quotient exists in the ring.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    /// 0 for the integers and rationals.
    fn characteristic(&self) -> u64;

    /// Descriptor string: `Z`, `Q`, `GF(7)`, `GF(3^2;modulus=x^2+1)`.
    fn descriptor(&self) -> String;

    /// Prints `a` as it would appear in polynomial text.
    fn format_elem(&self, a: &Self::Elem) -> String;

    /// Whether `format_elem(a)` can sit next to `*` without parentheses.
    fn is_atomic(&self, _a: &Self::Elem) -> bool {
        true
    }

    /// Splits `a` into a sign and a magnitude for printing `x - 3` rather
    /// than `x + -3`.
    fn split_sign(&self, a: &Self::Elem) -> (bool, Self::Elem) {
        (false, a.clone())
    }

    fn elem_to_json(&self, a: &Self::Elem) -> Value;
    fn elem_from_json(&self, v: &Value) -> Option<Self::Elem>;

    /// A named constant in polynomial text, e.g. the generator of an
    /// extension field.
    fn named_constant(&self, _name: &str) -> Option<Self::Elem> {
        None
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// All pairwise products `lhs[i] * rhs[j]` with equal monomials merged.
    /// Output is unsorted and free of zero coefficients. Monomial addition is
    /// plain `u128` addition; overflow checks are the caller's job.
    fn mul_terms(&self, lhs: &[Term<Self::Elem>], rhs: &[Term<Self::Elem>]) -> Vec<Term<Self::Elem>> {
        let mut acc: FxHashMap<u128, Self::Elem> = FxHashMap::default();
        acc.reserve(lhs.len().max(rhs.len()) * 2);
        for (ma, ca) in lhs {
            for (mb, cb) in rhs {
                let prod = self.mul(ca, cb);
                match acc.entry(ma + mb) {
                    std::collections::hash_map::Entry::Occupied(mut o) => {
                        let s = self.add(o.get(), &prod);
                        *o.get_mut() = s;
                    }
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(prod);
                    }
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !self.is_zero(c)).collect()
    }
}

/// A field. Finite fields additionally enumerate their elements.
pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|i| self.mul(a, &i))
    }

    /// Number of elements, `None` when infinite.
    fn order(&self) -> Option<u64>;

    /// Deterministic enumeration. Finite fields list coordinate vectors in
    /// base-`p` counting order (constant coordinate least significant);
    /// the rationals list `0, 1, -1, 2, -2, ...`.
    fn element(&self, index: u64) -> Self::Elem;

    /// `a^(1/p)` in characteristic `p`; `None` in characteristic 0.
    fn pth_root(&self, _a: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    /// Degree over the prime field (1 for `Q` and `GF(p)`).
    fn prime_degree(&self) -> u32 {
        1
    }
}

/// The integers, with a machine-word fast path for products.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn from_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn div_exact(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        if b.is_zero() {
            return None;
        }
        let (q, r) = a.div_rem(b);
        r.is_zero().then_some(q)
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn descriptor(&self) -> String {
        "Z".into()
    }
    fn format_elem(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn split_sign(&self, a: &BigInt) -> (bool, BigInt) {
        (a.is_negative(), a.abs())
    }
    fn elem_to_json(&self, a: &BigInt) -> Value {
        Value::String(a.to_string())
    }
    fn elem_from_json(&self, v: &Value) -> Option<BigInt> {
        v.as_str()?.parse().ok()
    }

    fn mul_terms(&self, lhs: &[Term<BigInt>], rhs: &[Term<BigInt>]) -> Vec<Term<BigInt>> {
        if let (Some(a), Some(b)) = (small_terms(lhs), small_terms(rhs)) {
            if let Some(out) = mul_terms_i128(&a, &b) {
                return out.into_iter().filter(|(_, c)| *c != 0).map(|(m, c)| (m, BigInt::from(c))).collect();
            }
            log::debug!("i128 accumulator overflowed; escalating to BigInt");
        }
        let mut acc: FxHashMap<u128, BigInt> = FxHashMap::default();
        for (ma, ca) in lhs {
            for (mb, cb) in rhs {
                *acc.entry(ma + mb).or_default() += ca * cb;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

fn small_terms(terms: &[Term<BigInt>]) -> Option<Vec<(u128, i64)>> {
    terms.iter().map(|(m, c)| Some((*m, c.to_i64()?))).collect()
}

/// Returns `None` as soon as any accumulator leaves the `i128` range.
fn mul_terms_i128(lhs: &[(u128, i64)], rhs: &[(u128, i64)]) -> Option<Vec<(u128, i128)>> {
    let mut acc: FxHashMap<u128, i128> = FxHashMap::default();
    acc.reserve(lhs.len().max(rhs.len()) * 2);
    for &(ma, ca) in lhs {
        let ca = ca as i128;
        for &(mb, cb) in rhs {
            let slot = acc.entry(ma + mb).or_insert(0);
            *slot = slot.checked_add(ca * cb as i128)?;
        }
    }
    Some(acc.into_iter().collect())
}

/// The rationals, always in lowest terms with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn from_int(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn div_exact(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        (!b.is_zero()).then(|| a / b)
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn descriptor(&self) -> String {
        "Q".into()
    }
    fn format_elem(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn split_sign(&self, a: &BigRational) -> (bool, BigRational) {
        (a.is_negative(), a.abs())
    }
    fn elem_to_json(&self, a: &BigRational) -> Value {
        Value::String(self.format_elem(a))
    }
    fn elem_from_json(&self, v: &Value) -> Option<BigRational> {
        parse_rational(v.as_str()?)
    }
}

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn order(&self) -> Option<u64> {
        None
    }
    fn element(&self, index: u64) -> BigRational {
        let k = BigInt::from(index.div_ceil(2));
        let v = if index % 2 == 1 { k } else { -k };
        BigRational::from_integer(v)
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.trim().parse().ok()?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_fast_path_matches_bigint() {
        let big = BigInt::from(i64::MAX);
        let lhs = vec![(3u128, big.clone()), (1, BigInt::from(-5))];
        let rhs = vec![(2u128, big.clone()), (4, big.clone())];
        let mut fast = Integers.mul_terms(&lhs, &rhs);
        fast.sort_by_key(|t| t.0);
        let sq = &big * &big;
        let five = BigInt::from(-5) * &big;
        assert_eq!(fast, vec![(3, five.clone()), (5, &sq + &five), (7, sq)]);
    }

    #[test]
    fn i128_overflow_escalates() {
        let big = BigInt::from(i64::MIN);
        let lhs: Vec<_> = (0..4).map(|_| (0u128, big.clone())).collect();
        let rhs = vec![(0u128, big.clone())];
        let out = Integers.mul_terms(&lhs, &rhs);
        assert_eq!(out, vec![(0, BigInt::from(4) * &big * &big)]);
    }

    #[test]
    fn rationals_normalize_sign() {
        let q = parse_rational("3/-6").unwrap();
        assert_eq!(Rationals.format_elem(&q), "-1/2");
        assert!(parse_rational("1/0").is_none());
    }

    #[test]
    fn rational_enumeration() {
        let first: Vec<String> = (0..5).map(|i| Rationals.format_elem(&Rationals.element(i))).collect();
        assert_eq!(first, ["0", "1", "-1", "2", "-2"]);
    }
}
