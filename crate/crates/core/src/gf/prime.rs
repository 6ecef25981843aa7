use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rustc_hash::FxHashMap;
use serde_json::Value;

use super::GfError;
use crate::ring::{Field, Ring, Term};

/// The prime field `GF(p)` for `p < 2^32`, elements stored as canonical
/// residues `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, GfError> {
        if p >= 1 << 32 {
            return Err(GfError::UnsupportedSize(format!("prime {p} exceeds 2^32")));
        }
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn signed(&self, a: u64) -> i64 {
        if self.p > 2 && a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factors of `n` without multiplicity, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn from_int(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue fits")
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }
    fn div_exact(&self, a: &u64, b: &u64) -> Option<u64> {
        self.div(a, b)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn descriptor(&self) -> String {
        format!("GF({})", self.p)
    }
    fn format_elem(&self, a: &u64) -> String {
        self.signed(*a).to_string()
    }
    fn split_sign(&self, a: &u64) -> (bool, u64) {
        let s = self.signed(*a);
        (s < 0, s.unsigned_abs())
    }
    fn elem_to_json(&self, a: &u64) -> Value {
        Value::String(a.to_string())
    }
    fn elem_from_json(&self, v: &Value) -> Option<u64> {
        let n: BigInt = v.as_str()?.parse().ok()?;
        Some(self.from_int(&n))
    }

    fn pow(&self, a: &u64, mut e: u64) -> u64 {
        let mut base = *a;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }

    fn mul_terms(&self, lhs: &[Term<u64>], rhs: &[Term<u64>]) -> Vec<Term<u64>> {
        // Products are below 2^64, so up to 2^64 of them fit a u128 sum.
        let mut acc: FxHashMap<u128, u128> = FxHashMap::default();
        acc.reserve(lhs.len().max(rhs.len()) * 2);
        for &(ma, ca) in lhs {
            for &(mb, cb) in rhs {
                *acc.entry(ma + mb).or_insert(0) += (ca * cb) as u128;
            }
        }
        let p = self.p as u128;
        acc.into_iter().map(|(m, c)| (m, (c % p) as u64)).filter(|(_, c)| *c != 0).collect()
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.p as i128, *a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(t0.rem_euclid(self.p as i128) as u64)
    }
    fn order(&self) -> Option<u64> {
        Some(self.p)
    }
    fn element(&self, index: u64) -> u64 {
        index % self.p
    }
    fn pth_root(&self, a: &u64) -> Option<u64> {
        Some(*a)
    }
}
