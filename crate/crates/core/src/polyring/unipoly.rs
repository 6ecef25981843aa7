//! Dense univariate polynomials.

use std::fmt;
use std::hash::{Hash, Hasher};

use super::{parse_poly, MultiPoly, PolyError};
use crate::ring::{Field, Ring};

/// Coefficients low-to-high; the last stored coefficient is nonzero.
#[derive(Clone)]
pub struct UniPoly<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

/// Equality compares coefficients only; both sides are assumed to share a
/// coefficient ring.
impl<R: Ring> PartialEq for UniPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<R: Ring> Eq for UniPoly<R> {}

impl<R: Ring> Hash for UniPoly<R> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl<R: Ring> UniPoly<R> {
    pub fn new(ring: &R, mut coeffs: Vec<R::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { ring: ring.clone(), coeffs }
    }

    pub fn from_i64(ring: &R, coeffs: &[i64]) -> Self {
        Self::new(ring, coeffs.iter().map(|&c| ring.from_i64(c)).collect())
    }

    pub fn zero(ring: &R) -> Self {
        UniPoly { ring: ring.clone(), coeffs: Vec::new() }
    }

    pub fn one(ring: &R) -> Self {
        Self::constant(ring, ring.one())
    }

    pub fn constant(ring: &R, c: R::Elem) -> Self {
        Self::new(ring, vec![c])
    }

    /// `c * x^d`.
    pub fn monomial(ring: &R, c: R::Elem, d: usize) -> Self {
        let mut coeffs = vec![ring.zero(); d + 1];
        coeffs[d] = c;
        Self::new(ring, coeffs)
    }

    pub fn x(ring: &R) -> Self {
        Self::monomial(ring, ring.one(), 1)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to `-1`.
    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn lc(&self) -> R::Elem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| self.ring.is_one(c))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let r = &self.ring;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| r.add(&self.coeff(i), &other.coeff(i))).collect();
        Self::new(r, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let r = &self.ring;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| r.sub(&self.coeff(i), &other.coeff(i))).collect();
        Self::new(r, coeffs)
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.ring.neg(c)).collect();
        Self::new(&self.ring, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let r = &self.ring;
        let mut out = vec![r.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if r.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = r.add(&out[i + j], &r.mul(a, b));
            }
        }
        Self::new(r, out)
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect();
        Self::new(&self.ring, coeffs)
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.ring.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(&self.ring, coeffs)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval(&self, x: &R::Elem) -> R::Elem {
        let r = &self.ring;
        self.coeffs.iter().rev().fold(r.zero(), |acc, c| r.add(&r.mul(&acc, x), c))
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        let r = &self.ring;
        self.coeffs.iter().rev().fold(Self::zero(r), |acc, c| acc.mul(g).add(&Self::constant(r, c.clone())))
    }

    pub fn derivative(&self) -> Self {
        let r = &self.ring;
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| r.mul(c, &r.from_i64(i as i64))).collect();
        Self::new(r, coeffs)
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`, computed
    /// without divisions.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let r = &self.ring;
        let db = b.degree().expect("pseudo-remainder by zero");
        let Some(da) = self.degree() else {
            return self.clone();
        };
        if da < db {
            return self.clone();
        }
        let lb = b.lc();
        let mut rem = self.coeffs.clone();
        let mut e = da - db + 1;
        for k in (db..=da).rev() {
            let lead = rem[k].clone();
            for c in rem.iter_mut().take(k + 1) {
                *c = r.mul(c, &lb);
            }
            if !r.is_zero(&lead) {
                for (j, bc) in b.coeffs.iter().enumerate() {
                    let idx = k - db + j;
                    rem[idx] = r.sub(&rem[idx], &r.mul(&lead, bc));
                }
            }
            e -= 1;
            rem.truncate(k);
        }
        debug_assert_eq!(e, 0);
        Self::new(r, rem)
    }

    /// Maps every coefficient through `f` into another ring.
    pub fn map<S: Ring>(&self, target: &S, f: impl Fn(&R::Elem) -> S::Elem) -> UniPoly<S> {
        UniPoly::new(target, self.coeffs.iter().map(f).collect())
    }

    /// Reads a one-variable [`MultiPoly`].
    pub fn from_multipoly(p: &MultiPoly<R>) -> Option<Self> {
        if p.nvars() != 1 {
            return None;
        }
        let ring = p.ring();
        let deg = p.total_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![ring.zero(); deg + 1];
        for (e, c) in p.terms() {
            coeffs[e[0] as usize] = c.clone();
        }
        Some(Self::new(ring, coeffs))
    }

    pub fn to_multipoly(&self) -> MultiPoly<R> {
        let terms = self.coeffs.iter().enumerate().map(|(i, c)| (vec![i as u32], c.clone()));
        MultiPoly::from_terms(&self.ring, 1, terms).expect("univariate exponents fit")
    }

    /// Parses text in the polynomial grammar with the single variable `var`.
    pub fn parse(text: &str, ring: &R, var: &str) -> Result<Self, PolyError> {
        let p = parse_poly(text, ring, &[var])?;
        Ok(Self::from_multipoly(&p).expect("one variable"))
    }

    /// Prints in the polynomial grammar with variable `var`.
    pub fn format_with(&self, var: &str) -> String {
        let r = &self.ring;
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if r.is_zero(c) {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            crate::polyring::push_term(r, &mut out, c, &mono);
        }
        out
    }
}

impl<F: Field> UniPoly<F> {
    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.ring.inv(&self.lc()).expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    pub fn div_rem(&self, b: &Self) -> (Self, Self) {
        let r = &self.ring;
        let db = b.degree().expect("division by zero polynomial");
        let Some(da) = self.degree() else {
            return (self.clone(), self.clone());
        };
        if da < db {
            return (Self::zero(r), self.clone());
        }
        let inv = r.inv(&b.lc()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![r.zero(); da - db + 1];
        for k in (db..=da).rev() {
            let q = r.mul(&rem[k], &inv);
            if !r.is_zero(&q) {
                for (j, bc) in b.coeffs.iter().enumerate() {
                    let idx = k - db + j;
                    rem[idx] = r.sub(&rem[idx], &r.mul(&q, bc));
                }
            }
            quot[k - db] = q;
        }
        rem.truncate(db);
        (Self::new(r, quot), Self::new(r, rem))
    }

    pub fn rem(&self, b: &Self) -> Self {
        self.div_rem(b).1
    }

    /// Exact quotient, `None` when `b` does not divide `self`.
    pub fn div_exact(&self, b: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(b);
        r.is_zero().then_some(q)
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*other = g` and `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let ring = &self.ring;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(ring), Self::zero(ring));
        let (mut t0, mut t1) = (Self::zero(ring), Self::one(ring));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = ring.inv(&r0.lc()).expect("nonzero");
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Inverse of `self` modulo `m`, if it exists.
    pub fn inv_mod(&self, m: &Self) -> Option<Self> {
        let (g, s, _) = self.rem(m).ext_gcd(m);
        (g.degree() == Some(0)).then(|| s.rem(m))
    }

    pub fn mul_mod(&self, other: &Self, m: &Self) -> Self {
        self.mul(other).rem(m)
    }

    /// `self^e mod m` for exponents up to 128 bits.
    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(&self.ring).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, m);
            }
        }
        acc
    }

    /// `gcd(f, f') = 1`. A vanishing derivative counts as inseparable.
    pub fn is_separable(&self) -> bool {
        let d = self.derivative();
        !d.is_zero() && self.gcd(&d).degree() == Some(0)
    }
}

impl<R: Ring> fmt::Debug for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly[{}]({})", self.ring.descriptor(), self.format_with("x"))
    }
}

impl<R: Ring> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::PrimeField;
    use crate::ring::{Integers, Rationals};

    #[test]
    fn division_roundtrip() {
        let f = PrimeField::new(7).unwrap();
        let a = UniPoly::from_i64(&f, &[1, 2, 3, 4, 5, 6]);
        let b = UniPoly::from_i64(&f, &[3, 0, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.deg() < 2);
    }

    #[test]
    fn pseudo_remainder_over_integers() {
        let a = UniPoly::from_i64(&Integers, &[1, 0, 0, 1]);
        let b = UniPoly::from_i64(&Integers, &[1, 2]);
        // 8 * (x^3 + 1) mod (2x + 1) = 8 * (1 - 1/8) = 7.
        assert_eq!(a.pseudo_rem(&b), UniPoly::from_i64(&Integers, &[7]));
    }

    #[test]
    fn gcd_and_inverse() {
        let q = Rationals;
        let a = UniPoly::from_i64(&q, &[-1, 0, 1]);
        let b = UniPoly::from_i64(&q, &[1, 1]);
        assert_eq!(a.gcd(&b), b);
        let m = UniPoly::from_i64(&q, &[-2, 0, 0, 1]);
        let x1 = UniPoly::from_i64(&q, &[1, 1]);
        let inv = x1.inv_mod(&m).unwrap();
        assert_eq!(inv.mul_mod(&x1, &m), UniPoly::one(&q));
    }

    #[test]
    fn formatting() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(UniPoly::from_i64(&f, &[-1, -1, 0, 0, 0, 1]).format_with("x"), "x^5 - x - 1");
        assert_eq!(UniPoly::<Integers>::zero(&Integers).format_with("y"), "0");
        assert_eq!(UniPoly::from_i64(&Integers, &[0, -3, 2]).format_with("y"), "2*y^2 - 3*y");
    }

    #[test]
    fn separability() {
        let f = PrimeField::new(5).unwrap();
        assert!(!UniPoly::from_i64(&f, &[1, 0, 0, 0, 0, 1]).is_separable());
        assert!(UniPoly::from_i64(&f, &[1, 1, 0, 0, 0, 1]).is_separable());
    }
}
