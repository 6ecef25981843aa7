use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use serde_json::Value;

use super::{is_irreducible, prime_factors, GfError, PrimeField};
use crate::polyring::UniPoly;
use crate::ring::{Field, Ring};

const TABLE_LIMIT: u64 = 1 << 16;

/// `GF(p^k) = GF(p)[t]/(modulus)`. Elements are coordinate vectors over
/// `GF(p)` packed as base-`p` integers with the constant coordinate least
/// significant, so the packed value doubles as the enumeration index.
#[derive(Clone)]
pub struct FqField(Arc<Inner>);

struct Inner {
    base: PrimeField,
    k: u32,
    order: u64,
    modulus: Vec<u64>,
    name: String,
    pw: Vec<u64>,
    tables: Option<Tables>,
}

struct Tables {
    log: Vec<u32>,
    exp: Vec<u64>,
}

impl PartialEq for FqField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.base == other.0.base && self.0.modulus == other.0.modulus && self.0.name == other.0.name)
    }
}

impl Eq for FqField {}

impl fmt::Debug for FqField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

impl FqField {
    /// `modulus` is given low-to-high and must be monic and irreducible.
    pub fn new(p: u64, modulus: &[u64], name: &str) -> Result<Self, GfError> {
        let base = PrimeField::new(p)?;
        let k = modulus
            .len()
            .checked_sub(1)
            .filter(|&k| k >= 1)
            .ok_or_else(|| GfError::BadModulus("modulus must have degree at least 1".into()))? as u32;
        if modulus.iter().any(|&c| c >= p) || modulus[k as usize] != 1 {
            return Err(GfError::BadModulus("modulus must be monic with reduced coefficients".into()));
        }
        let order = p
            .checked_pow(k)
            .filter(|&q| q <= 1 << 62)
            .ok_or_else(|| GfError::UnsupportedSize(format!("{p}^{k} is too large")))?;
        let poly = UniPoly::new(&base, modulus.to_vec());
        if !is_irreducible(&poly) {
            return Err(GfError::BadModulus(format!("{} is reducible over GF({p})", poly.format_with(name))));
        }
        if name.is_empty()
            || !name.chars().next().unwrap().is_ascii_alphabetic()
            || !name.chars().all(|c| c.is_ascii_alphanumeric())
        {
            return Err(GfError::BadModulus(format!("invalid generator name `{name}`")));
        }
        let pw = (0..=k).map(|i| p.pow(i)).collect();
        let mut inner = Inner { base, k, order, modulus: modulus.to_vec(), name: name.to_string(), pw, tables: None };
        if order <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(FqField(Arc::new(inner)))
    }

    /// Default modulus: `b^3+b^2+1` for `GF(8)`, `c^5+c^4+c^3+c^2+1` for
    /// `GF(32)`, otherwise the lexicographically least monic irreducible
    /// polynomial comparing `(c_{k-1}, ..., c_0)`.
    pub fn with_default_modulus(p: u64, k: u32) -> Result<Self, GfError> {
        match (p, k) {
            (2, 3) => Self::new(2, &[1, 0, 1, 1], "b"),
            (2, 5) => Self::new(2, &[1, 0, 1, 1, 1, 1], "c"),
            _ => {
                let base = PrimeField::new(p)?;
                let m = lex_least_irreducible(&base, k)
                    .ok_or_else(|| GfError::UnsupportedSize(format!("{p}^{k} is too large")))?;
                Self::new(p, m.coeffs(), "a")
            }
        }
    }

    pub fn p(&self) -> u64 {
        self.0.base.p()
    }

    pub fn k(&self) -> u32 {
        self.0.k
    }

    pub fn base(&self) -> &PrimeField {
        &self.0.base
    }

    pub fn generator_name(&self) -> &str {
        &self.0.name
    }

    pub fn modulus(&self) -> UniPoly<PrimeField> {
        UniPoly::new(&self.0.base, self.0.modulus.clone())
    }

    /// The class of `t`.
    pub fn generator(&self) -> u64 {
        if self.0.k == 1 {
            self.0.base.neg(&self.0.modulus[0])
        } else {
            self.p()
        }
    }

    pub fn coords(&self, a: u64) -> Vec<u64> {
        let p = self.p();
        let mut v = Vec::with_capacity(self.0.k as usize);
        let mut a = a;
        for _ in 0..self.0.k {
            v.push(a % p);
            a /= p;
        }
        v
    }

    pub fn from_coords(&self, c: &[u64]) -> u64 {
        let p = self.p();
        c.iter().take(self.0.k as usize).rev().fold(0, |acc, &d| acc * p + d % p)
    }

    pub fn from_prime(&self, c: u64) -> u64 {
        c % self.p()
    }

    /// `a^p`.
    pub fn frobenius(&self, a: u64) -> u64 {
        self.pow(&a, self.p())
    }

    /// Trace down to the subfield of order `p^d` (`d | k`).
    pub fn trace_to(&self, a: u64, d: u32) -> u64 {
        assert!(self.0.k.is_multiple_of(d), "subfield degree must divide k");
        let step = self.p().pow(d);
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.0.k / d {
            acc = self.add(&acc, &x);
            x = self.pow(&x, step);
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: u64) -> u64 {
        assert!(a != 0);
        let mut n = self.0.order - 1;
        for l in prime_factors(n) {
            while n.is_multiple_of(l) && self.pow(&a, n / l) == 1 {
                n /= l;
            }
        }
        n
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        mul_coords(&self.0, a, b)
    }
}

fn build_tables(inner: &Inner) -> Tables {
    let q = inner.order;
    let pow_slow = |a: u64, mut e: u64| {
        let (mut acc, mut base) = (1u64, a);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_coords(inner, acc, base);
            }
            base = mul_coords(inner, base, base);
            e >>= 1;
        }
        acc
    };
    let factors = prime_factors(q - 1);
    let g = (1..q)
        .find(|&g| factors.iter().all(|&l| pow_slow(g, (q - 1) / l) != 1))
        .expect("finite field has a primitive element");
    let mut exp = Vec::with_capacity(2 * (q as usize - 1));
    let mut log = vec![0u32; q as usize];
    let mut x = 1u64;
    for i in 0..q - 1 {
        exp.push(x);
        log[x as usize] = i as u32;
        x = mul_coords(inner, x, g);
    }
    let first = exp.clone();
    exp.extend(first);
    Tables { log, exp }
}

fn mul_coords(inner: &Inner, a: u64, b: u64) -> u64 {
    let p = inner.base.p();
    let k = inner.k as usize;
    let digits = |mut v: u64| {
        let mut d = vec![0u64; k];
        for slot in d.iter_mut() {
            *slot = v % p;
            v /= p;
        }
        d
    };
    let (da, db) = (digits(a), digits(b));
    let mut prod = vec![0u64; 2 * k - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for top in (k..prod.len()).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        for (j, &m) in inner.modulus[..k].iter().enumerate() {
            let idx = top - k + j;
            prod[idx] = (prod[idx] + (p - c) * m) % p;
        }
        prod[top] = 0;
    }
    prod[..k].iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Lex-least monic irreducible of degree `k` over a finite field, or `None`
/// when the search space does not fit in 64 bits.
pub fn lex_least_irreducible<F: Field>(field: &F, k: u32) -> Option<UniPoly<F>> {
    let q = field.order()?;
    let total = q.checked_pow(k)?;
    (0..total).find_map(|i| {
        let mut coeffs: Vec<F::Elem> = (0..k).map(|j| field.element(i / q.pow(j) % q)).collect();
        coeffs.push(field.one());
        let f = UniPoly::new(field, coeffs);
        is_irreducible(&f).then_some(f)
    })
}

impl Ring for FqField {
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
        let p = self.p();
        if p == 2 {
            return a ^ b;
        }
        let (mut a, mut b, mut out) = (*a, *b, 0);
        for &w in &self.0.pw[..self.0.k as usize] {
            if a == 0 && b == 0 {
                break;
            }
            let d = (a % p + b % p) % p;
            out += d * w;
            a /= p;
            b /= p;
        }
        out
    }
    fn neg(&self, a: &u64) -> u64 {
        let p = self.p();
        if p == 2 {
            return *a;
        }
        let (mut a, mut out) = (*a, 0);
        for &w in &self.0.pw[..self.0.k as usize] {
            if a == 0 {
                break;
            }
            out += (p - a % p) % p * w;
            a /= p;
        }
        out
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.add(a, &self.neg(b))
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        if *a == 0 || *b == 0 {
            return 0;
        }
        match &self.0.tables {
            Some(t) => t.exp[(t.log[*a as usize] + t.log[*b as usize]) as usize],
            None => self.mul_slow(*a, *b),
        }
    }
    fn from_int(&self, n: &BigInt) -> u64 {
        self.0.base.from_int(n)
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.0.base.reduce_i64(n)
    }
    fn div_exact(&self, a: &u64, b: &u64) -> Option<u64> {
        self.div(a, b)
    }
    fn characteristic(&self) -> u64 {
        self.p()
    }
    fn descriptor(&self) -> String {
        format!("GF({}^{};modulus={})", self.p(), self.0.k, self.modulus().format_with(&self.0.name))
    }
    fn format_elem(&self, a: &u64) -> String {
        UniPoly::new(&self.0.base, self.coords(*a)).format_with(&self.0.name)
    }
    fn is_atomic(&self, a: &u64) -> bool {
        self.coords(*a).iter().filter(|&&c| c != 0).count() <= 1 && !self.format_elem(a).starts_with('-')
    }
    fn split_sign(&self, a: &u64) -> (bool, u64) {
        let top = self.coords(*a).into_iter().rev().find(|&c| c != 0);
        match top {
            Some(c) if self.0.base.signed(c) < 0 => (true, self.neg(a)),
            _ => (false, *a),
        }
    }
    fn elem_to_json(&self, a: &u64) -> Value {
        Value::Array(self.coords(*a).iter().map(|c| Value::String(c.to_string())).collect())
    }
    fn elem_from_json(&self, v: &Value) -> Option<u64> {
        let arr = v.as_array()?;
        if arr.len() != self.0.k as usize {
            return None;
        }
        let mut coords = Vec::with_capacity(arr.len());
        for c in arr {
            let n: BigInt = c.as_str()?.parse().ok()?;
            coords.push(self.0.base.from_int(&n));
        }
        Some(self.from_coords(&coords))
    }
    fn named_constant(&self, name: &str) -> Option<u64> {
        (name == self.0.name).then(|| self.generator())
    }

    fn pow(&self, a: &u64, e: u64) -> u64 {
        if *a == 0 {
            return u64::from(e == 0);
        }
        match &self.0.tables {
            Some(t) => {
                let l = t.log[*a as usize] as u128 * e as u128 % (self.0.order - 1) as u128;
                t.exp[l as usize]
            }
            None => {
                let e = e % (self.0.order - 1);
                let (mut acc, mut base, mut e) = (1u64, *a, e);
                while e > 0 {
                    if e & 1 == 1 {
                        acc = self.mul_slow(acc, base);
                    }
                    base = self.mul_slow(base, base);
                    e >>= 1;
                }
                acc
            }
        }
    }
}

impl Field for FqField {
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        match &self.0.tables {
            Some(t) => {
                let l = t.log[*a as usize] as u64;
                Some(t.exp[((self.0.order - 1 - l) % (self.0.order - 1)) as usize])
            }
            None => Some(self.pow(a, self.0.order - 2)),
        }
    }
    fn order(&self) -> Option<u64> {
        Some(self.0.order)
    }
    fn element(&self, index: u64) -> u64 {
        index % self.0.order
    }
    fn pth_root(&self, a: &u64) -> Option<u64> {
        Some(self.pow(a, self.0.order / self.p()))
    }
    fn prime_degree(&self) -> u32 {
        self.0.k
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_moduli() {
        let f8 = FqField::with_default_modulus(2, 3).unwrap();
        assert_eq!(f8.descriptor(), "GF(2^3;modulus=b^3 + b^2 + 1)");
        let f9 = FqField::with_default_modulus(3, 2).unwrap();
        assert_eq!(f9.modulus().format_with("a"), "a^2 + 1");
        let f49 = FqField::with_default_modulus(7, 2).unwrap();
        assert_eq!(f49.modulus().format_with("a"), "a^2 + 1");
        let f16 = FqField::with_default_modulus(2, 4).unwrap();
        assert_eq!(f16.modulus().format_with("a"), "a^4 + a + 1");
    }

    #[test]
    fn table_and_slow_paths_agree() {
        let f = FqField::with_default_modulus(3, 4).unwrap();
        for a in (0..81).step_by(7) {
            for b in 0..81 {
                assert_eq!(f.mul(&a, &b), f.mul_slow(a, b));
            }
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert!(FqField::new(5, &[1, 0, 1], "a").is_err());
        assert!(FqField::new(3, &[1, 0, 2], "a").is_err());
    }

    #[test]
    fn inverse_without_tables() {
        let f = FqField::with_default_modulus(2, 20).unwrap();
        let g = f.generator();
        let x = f.add(&f.pow(&g, 77), &1);
        assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), 1);
    }

    #[test]
    fn formatting_and_signs() {
        let f = FqField::with_default_modulus(7, 2).unwrap();
        let g = f.generator();
        let minus_g = f.neg(&g);
        assert_eq!(f.format_elem(&minus_g), "-a");
        assert_eq!(f.split_sign(&minus_g), (true, g));
        assert!(!f.is_atomic(&f.add(&g, &1)));
    }
}
