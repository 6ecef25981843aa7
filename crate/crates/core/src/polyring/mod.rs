//! Sparse multivariate polynomials over a [`Ring`].
//!
//! Monomials are packed into a `u128`, variable `x1` in the most significant
//! field, so integer comparison of packed monomials is pure lexicographic
//! order with `x1 > x2 > ... > xn`. Each field carries a guard bit that
//! catches exponent overflow.

mod domain;
mod json;
mod parse;
mod unipoly;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::ring::Ring;

pub use domain::Domain;
pub use parse::parse_poly;
pub use unipoly::UniPoly;

/// Exponent vector, one entry per variable.
pub type Monomial = Vec<u32>;

pub const MAX_VARS: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("coefficient domains differ: {0} vs {1}")]
    DomainMismatch(String, String),
    #[error("variable counts differ: {0} vs {1}")]
    VarCountMismatch(usize, usize),
    #[error("expected {expected} values, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("exponent overflow (limit {0} per variable)")]
    ExponentOverflow(u32),
    #[error("at most {MAX_VARS} variables are supported, got {0}")]
    TooManyVariables(usize),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("coefficient not in domain at position {pos}: {msg}")]
    CoefficientNotInDomain { pos: usize, msg: String },
    #[error("inexact division: term {witness} of the remainder is not divisible")]
    InexactDivision { witness: String },
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
    #[error("malformed field descriptor `{0}`")]
    Descriptor(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Layout {
    nvars: usize,
    bits: u32,
}

impl Layout {
    pub(crate) fn new(nvars: usize) -> Result<Self, PolyError> {
        if nvars > MAX_VARS {
            return Err(PolyError::TooManyVariables(nvars));
        }
        let bits = if nvars == 0 { 32 } else { (128 / nvars as u32).min(32) };
        Ok(Layout { nvars, bits })
    }

    fn shift(&self, i: usize) -> u32 {
        (self.nvars - 1 - i) as u32 * self.bits
    }

    pub(crate) fn max_exp(&self) -> u32 {
        ((1u64 << (self.bits - 1)) - 1) as u32
    }

    fn guard(&self) -> u128 {
        (0..self.nvars).fold(0, |g, i| g | 1u128 << (self.shift(i) + self.bits - 1))
    }

    fn field_mask(&self) -> u128 {
        (1u128 << self.bits) - 1
    }

    pub(crate) fn pack(&self, exps: &[u32]) -> Result<u128, PolyError> {
        if exps.len() != self.nvars {
            return Err(PolyError::LengthMismatch { expected: self.nvars, found: exps.len() });
        }
        let mut m = 0u128;
        for (i, &e) in exps.iter().enumerate() {
            if e > self.max_exp() {
                return Err(PolyError::ExponentOverflow(self.max_exp()));
            }
            m |= (e as u128) << self.shift(i);
        }
        Ok(m)
    }

    pub(crate) fn exp(&self, m: u128, i: usize) -> u32 {
        ((m >> self.shift(i)) & self.field_mask()) as u32
    }

    pub(crate) fn unpack(&self, m: u128) -> Monomial {
        (0..self.nvars).map(|i| self.exp(m, i)).collect()
    }

    pub(crate) fn degree(&self, m: u128) -> u32 {
        (0..self.nvars).map(|i| self.exp(m, i)).sum()
    }

    /// `a + b` with overflow detection.
    pub(crate) fn checked_add(&self, a: u128, b: u128) -> Option<u128> {
        let s = a + b;
        (s & self.guard() == 0).then_some(s)
    }

    /// `a / b` for monomials, `None` unless `b` divides `a`.
    pub(crate) fn checked_div(&self, a: u128, b: u128) -> Option<u128> {
        let g = self.guard();
        let d = (a | g) - b;
        (d & g == g).then_some(d & !g)
    }
}

/// Sparse polynomial in `nvars` variables; terms sorted by descending lex
/// order, no zero coefficients.
#[derive(Clone)]
pub struct MultiPoly<R: Ring> {
    ring: R,
    layout: Layout,
    terms: Vec<(u128, R::Elem)>,
}

impl<R: Ring> PartialEq for MultiPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.layout == other.layout && self.terms == other.terms
    }
}

impl<R: Ring> Eq for MultiPoly<R> {}

impl<R: Ring> MultiPoly<R> {
    pub fn zero(ring: &R, nvars: usize) -> Self {
        let layout = Layout::new(nvars).expect("variable count within limit");
        MultiPoly { ring: ring.clone(), layout, terms: Vec::new() }
    }

    pub fn constant(ring: &R, nvars: usize, c: R::Elem) -> Self {
        let mut p = Self::zero(ring, nvars);
        if !ring.is_zero(&c) {
            p.terms.push((0, c));
        }
        p
    }

    pub fn one(ring: &R, nvars: usize) -> Self {
        Self::constant(ring, nvars, ring.one())
    }

    pub fn from_int(ring: &R, nvars: usize, c: i64) -> Self {
        Self::constant(ring, nvars, ring.from_i64(c))
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(ring: &R, nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self::monomial(ring, &exps, ring.one()).expect("valid monomial")
    }

    pub fn monomial(ring: &R, exps: &[u32], c: R::Elem) -> Result<Self, PolyError> {
        let mut p = Self::zero(ring, exps.len());
        let m = p.layout.pack(exps)?;
        if !ring.is_zero(&c) {
            p.terms.push((m, c));
        }
        Ok(p)
    }

    /// Builds a canonical polynomial from arbitrary terms (merging duplicates
    /// and dropping zeros).
    pub fn from_terms<I>(ring: &R, nvars: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Monomial, R::Elem)>,
    {
        let layout = Layout::new(nvars)?;
        let mut raw = Vec::new();
        for (exps, c) in terms {
            raw.push((layout.pack(&exps)?, c));
        }
        Ok(Self::from_raw(ring, layout, raw))
    }

    pub(crate) fn from_raw(ring: &R, layout: Layout, mut raw: Vec<(u128, R::Elem)>) -> Self {
        raw.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut terms: Vec<(u128, R::Elem)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = ring.add(lc, &c),
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|(_, c)| !ring.is_zero(c));
        MultiPoly { ring: ring.clone(), layout, terms }
    }

    pub(crate) fn from_sorted(ring: &R, layout: Layout, terms: Vec<(u128, R::Elem)>) -> Self {
        let p = MultiPoly { ring: ring.clone(), layout, terms };
        p.debug_check();
        p
    }

    fn debug_check(&self) {
        debug_assert!(self.terms.windows(2).all(|w| w[0].0 > w[1].0), "terms out of order");
        debug_assert!(self.terms.iter().all(|(_, c)| !self.ring.is_zero(c)), "stored zero");
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.layout.nvars
    }

    pub(crate) fn layout(&self) -> Layout {
        self.layout
    }

    pub(crate) fn raw_terms(&self) -> &[(u128, R::Elem)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending lex order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &R::Elem)> + '_ {
        self.terms.iter().map(|(m, c)| (self.layout.unpack(*m), c))
    }

    pub fn coefficient(&self, exps: &[u32]) -> R::Elem {
        let Ok(m) = self.layout.pack(exps) else {
            return self.ring.zero();
        };
        match self.terms.binary_search_by(|t| m.cmp(&t.0)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.ring.zero(),
        }
    }

    /// The constant term.
    pub fn constant_term(&self) -> R::Elem {
        match self.terms.last() {
            Some((0, c)) => c.clone(),
            _ => self.ring.zero(),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| *m == 0)
    }

    pub fn leading_term(&self) -> Result<(Monomial, R::Elem), PolyError> {
        let (m, c) = self.terms.first().ok_or(PolyError::ZeroPolynomial)?;
        Ok((self.layout.unpack(*m), c.clone()))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| self.layout.degree(*m)).max()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| self.layout.exp(*m, i)).max()
    }

    /// Largest exponent of each variable.
    pub fn degrees(&self) -> Vec<u32> {
        let mut out = vec![0; self.nvars()];
        for (m, _) in &self.terms {
            for (i, d) in out.iter_mut().enumerate() {
                *d = (*d).max(self.layout.exp(*m, i));
            }
        }
        out
    }

    /// `Some(d)` when every term has total degree `d` (zero is homogeneous
    /// of every degree and reports `None`).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.total_degree()?;
        self.terms.iter().all(|(m, _)| self.layout.degree(*m) == d).then_some(d)
    }

    fn compatible(&self, other: &Self) -> Result<(), PolyError> {
        if self.ring != other.ring {
            return Err(PolyError::DomainMismatch(self.ring.descriptor(), other.ring.descriptor()));
        }
        if self.nvars() != other.nvars() {
            return Err(PolyError::VarCountMismatch(self.nvars(), other.nvars()));
        }
        Ok(())
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let r = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let conv = |c: &R::Elem| if negate_other { r.neg(c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0, conv(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other { r.sub(&a[i].1, &b[j].1) } else { r.add(&a[i].1, &b[j].1) };
                    if !r.is_zero(&c) {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, conv(c))));
        Self::from_sorted(r, self.layout, out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.compatible(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.compatible(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring, self.nvars()));
        }
        let (da, db) = (self.degrees(), other.degrees());
        if da.iter().zip(&db).any(|(a, b)| a + b > self.layout.max_exp()) {
            return Err(PolyError::ExponentOverflow(self.layout.max_exp()));
        }
        if self.terms.len() == 1 || other.terms.len() == 1 {
            return Ok(self.mul_single(other));
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let raw = self.ring.mul_terms(&small.terms, &big.terms);
        let mut raw = raw;
        raw.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Ok(Self::from_sorted(&self.ring, self.layout, raw))
    }

    /// Product when one factor is a single term; order is preserved.
    fn mul_single(&self, other: &Self) -> Self {
        let (single, many) = if self.terms.len() == 1 { (self, other) } else { (other, self) };
        let (sm, sc) = &single.terms[0];
        let r = &self.ring;
        let terms = many.terms.iter().map(|(m, c)| (m + sm, r.mul(c, sc))).filter(|(_, c)| !r.is_zero(c)).collect();
        Self::from_sorted(r, self.layout, terms)
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (*m, self.ring.neg(c))).collect();
        Self::from_sorted(&self.ring, self.layout, terms)
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let r = &self.ring;
        let terms = self.terms.iter().map(|(m, a)| (*m, r.mul(a, c))).filter(|(_, a)| !r.is_zero(a)).collect();
        Self::from_sorted(r, self.layout, terms)
    }

    pub fn try_pow(&self, mut e: u32) -> Result<Self, PolyError> {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring, self.nvars());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> Self {
        self.try_pow(e).expect("exponent overflow in pow")
    }

    pub fn eval(&self, point: &[R::Elem]) -> Result<R::Elem, PolyError> {
        if point.len() != self.nvars() {
            return Err(PolyError::LengthMismatch { expected: self.nvars(), found: point.len() });
        }
        let r = &self.ring;
        let degs = self.degrees();
        let powers: Vec<Vec<R::Elem>> = point
            .iter()
            .zip(&degs)
            .map(|(x, &d)| {
                let mut pw = vec![r.one()];
                for k in 0..d as usize {
                    let next = r.mul(&pw[k], x);
                    pw.push(next);
                }
                pw
            })
            .collect();
        let mut acc = r.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, pw) in powers.iter().enumerate() {
                let e = self.layout.exp(*m, i) as usize;
                if e > 0 {
                    t = r.mul(&t, &pw[e]);
                }
            }
            acc = r.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Replaces variable `i` by `images[i]`; all images share one variable
    /// count, which becomes the result's.
    pub fn substitute(&self, images: &[MultiPoly<R>]) -> Result<Self, PolyError> {
        if images.len() != self.nvars() {
            return Err(PolyError::LengthMismatch { expected: self.nvars(), found: images.len() });
        }
        let target = images.first().map_or(0, |p| p.nvars());
        for img in images {
            if img.ring != self.ring {
                return Err(PolyError::DomainMismatch(self.ring.descriptor(), img.ring.descriptor()));
            }
            if img.nvars() != target {
                return Err(PolyError::VarCountMismatch(target, img.nvars()));
            }
        }
        let degs = self.degrees();
        let mut powers: Vec<Vec<MultiPoly<R>>> = Vec::with_capacity(images.len());
        for (img, &d) in images.iter().zip(&degs) {
            let mut pw = vec![MultiPoly::one(&self.ring, target)];
            for k in 0..d as usize {
                let next = pw[k].try_mul(img)?;
                pw.push(next);
            }
            powers.push(pw);
        }
        let mut acc = MultiPoly::zero(&self.ring, target);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(&self.ring, target, c.clone());
            for (i, pw) in powers.iter().enumerate() {
                let e = self.layout.exp(*m, i) as usize;
                if e > 0 {
                    t = t.try_mul(&pw[e])?;
                }
            }
            acc = acc.try_add(&t)?;
        }
        Ok(acc)
    }

    /// Re-indexes variables: old variable `i` becomes variable `map[i]` of a
    /// polynomial in `nvars` variables. `map` need not be injective.
    pub fn remap_vars(&self, map: &[usize], nvars: usize) -> Result<Self, PolyError> {
        if map.len() != self.nvars() {
            return Err(PolyError::LengthMismatch { expected: self.nvars(), found: map.len() });
        }
        let layout = Layout::new(nvars)?;
        let mut raw = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; nvars];
            for (i, &j) in map.iter().enumerate() {
                exps[j] += self.layout.exp(*m, i);
            }
            raw.push((layout.pack(&exps)?, c.clone()));
        }
        Ok(Self::from_raw(&self.ring, layout, raw))
    }

    /// Maps coefficients into another ring.
    pub fn map_ring<S: Ring>(&self, target: &S, f: impl Fn(&R::Elem) -> S::Elem) -> MultiPoly<S> {
        let terms = self.terms.iter().map(|(m, c)| (*m, f(c))).filter(|(_, c)| !target.is_zero(c)).collect();
        MultiPoly::from_sorted(target, self.layout, terms)
    }

    /// Exact quotient by lex leading-term long division. The quotient is
    /// re-multiplied and compared before returning.
    pub fn divide_exact(&self, den: &Self) -> Result<Self, PolyError> {
        self.compatible(den)?;
        let r = &self.ring;
        let (bm, bc) = den.terms.first().cloned().ok_or(PolyError::ZeroPolynomial)?;
        let mut rem: BTreeMap<u128, R::Elem> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        let witness = |m: u128, c: &R::Elem| {
            format!("{} * {}", r.format_elem(c), format_monomial(&self.layout.unpack(m), &default_names(self.nvars())))
        };
        while let Some((&m, c)) = rem.last_key_value() {
            let qm =
                self.layout.checked_div(m, bm).ok_or_else(|| PolyError::InexactDivision { witness: witness(m, c) })?;
            let qc = r.div_exact(c, &bc).ok_or_else(|| PolyError::InexactDivision { witness: witness(m, c) })?;
            rem.pop_last();
            for (dm, dc) in &den.terms[1..] {
                let key = self.layout.checked_add(qm, *dm).ok_or(PolyError::ExponentOverflow(self.layout.max_exp()))?;
                let delta = r.mul(&qc, dc);
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        let v = r.sub(o.get(), &delta);
                        if r.is_zero(&v) {
                            o.remove();
                        } else {
                            *o.get_mut() = v;
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(r.neg(&delta));
                    }
                }
            }
            quot.push((qm, qc));
        }
        let q = Self::from_sorted(r, self.layout, quot);
        assert!(q.try_mul(den)? == *self, "exact division failed its roundtrip check");
        Ok(q)
    }

    /// Splits into homogeneous components keyed by degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<u32, Self> {
        let mut parts: BTreeMap<u32, Vec<(u128, R::Elem)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts.entry(self.layout.degree(*m)).or_default().push((*m, c.clone()));
        }
        parts.into_iter().map(|(d, t)| (d, Self::from_sorted(&self.ring, self.layout, t))).collect()
    }

    /// Prints with the given variable names.
    pub fn format_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (m, c) in &self.terms {
            let mono = format_monomial(&self.layout.unpack(*m), names);
            push_term(&self.ring, &mut out, c, &mono);
        }
        out
    }
}

pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn format_monomial<S: AsRef<str>>(exps: &[u32], names: &[S]) -> String {
    let mut parts = Vec::new();
    for (e, name) in exps.iter().zip(names) {
        match e {
            0 => {}
            1 => parts.push(name.as_ref().to_string()),
            _ => parts.push(format!("{}^{e}", name.as_ref())),
        }
    }
    parts.join("*")
}

/// Appends `± c*mono` to a polynomial being printed.
pub(crate) fn push_term<R: Ring>(ring: &R, out: &mut String, c: &R::Elem, mono: &str) {
    let (negative, mag) = ring.split_sign(c);
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    let is_one = ring.is_one(&mag);
    if mono.is_empty() {
        out.push_str(&ring.format_elem(&mag));
    } else if is_one {
        out.push_str(mono);
    } else if ring.is_atomic(&mag) {
        out.push_str(&ring.format_elem(&mag));
        out.push('*');
        out.push_str(mono);
    } else {
        out.push('(');
        out.push_str(&ring.format_elem(&mag));
        out.push_str(")*");
        out.push_str(mono);
    }
}

impl<R: Ring> fmt::Display for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.nvars());
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.format_with(&refs))
    }
}

impl<R: Ring> fmt::Debug for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}; {}]({})", self.ring.descriptor(), self.nvars(), self)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $call:ident) => {
        impl<R: Ring> std::ops::$tr<&MultiPoly<R>> for &MultiPoly<R> {
            type Output = MultiPoly<R>;
            fn $method(self, rhs: &MultiPoly<R>) -> MultiPoly<R> {
                self.$call(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<R: Ring> std::ops::$tr<MultiPoly<R>> for MultiPoly<R> {
            type Output = MultiPoly<R>;
            fn $method(self, rhs: MultiPoly<R>) -> MultiPoly<R> {
                self.$call(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl<R: Ring> std::ops::Neg for &MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn neg(self) -> MultiPoly<R> {
        MultiPoly::neg(self)
    }
}

impl<R: Ring> std::ops::Neg for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn neg(self) -> MultiPoly<R> {
        MultiPoly::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::ring::Integers;

    fn xs(n: usize) -> Vec<MultiPoly<Integers>> {
        (0..n).map(|i| MultiPoly::var(&Integers, n, i)).collect()
    }

    #[test]
    fn difference_of_squares() {
        let x = xs(2);
        let p = (&x[0] - &x[1]) * (&x[0] + &x[1]);
        assert_eq!(p.to_string(), "x1^2 - x2^2");
    }

    #[test]
    fn lex_leading_term() {
        let x = xs(2);
        let p = &x[1].pow(5) + &x[0];
        assert_eq!(p.leading_term().unwrap(), (vec![1, 0], BigInt::from(1)));
        let d3 = (&x[0] - &x[1]) * MultiPoly::one(&Integers, 2);
        assert_eq!(d3.leading_term().unwrap().0, vec![1, 0]);
        assert_eq!(MultiPoly::zero(&Integers, 2).leading_term(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn delta3_leading_term_and_value() {
        let x = xs(3);
        let d = (&x[0] - &x[1]) * (&x[0] - &x[2]) * (&x[1] - &x[2]);
        assert_eq!(d.leading_term().unwrap(), (vec![2, 1, 0], BigInt::from(1)));
        let pt: Vec<BigInt> = [1, 2, 3].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(d.eval(&pt).unwrap(), BigInt::from(-2));
    }

    #[test]
    fn exact_division() {
        let x = xs(2);
        let num = &x[0].pow(2) - &x[1].pow(2);
        let den = &x[0] - &x[1];
        assert_eq!(num.divide_exact(&den).unwrap(), &x[0] + &x[1]);
        let err = (&x[0].pow(2) + &x[1]).divide_exact(&den).unwrap_err();
        assert!(matches!(err, PolyError::InexactDivision { .. }));
        let two = MultiPoly::from_int(&Integers, 2, 2);
        assert!(x[0].divide_exact(&two).is_err());
    }

    #[test]
    fn overflow_detected() {
        let x = xs(16);
        let big = x[0].pow(100);
        assert!(matches!(big.try_mul(&big), Err(PolyError::ExponentOverflow(127))));
    }

    #[test]
    fn mismatches_reported() {
        let a = MultiPoly::var(&Integers, 2, 0);
        let b = MultiPoly::var(&Integers, 3, 0);
        assert_eq!(a.try_add(&b), Err(PolyError::VarCountMismatch(2, 3)));
        let err = a.eval(&[BigInt::from(1)]).unwrap_err();
        assert_eq!(err, PolyError::LengthMismatch { expected: 2, found: 1 });
    }

    #[test]
    fn substitution_binomial() {
        // x1^2 + x2 with x_i -> x_i + t in variables (x1, x2, t).
        let x = xs(3);
        let p = MultiPoly::from_terms(&Integers, 2, [(vec![2, 0], BigInt::from(1)), (vec![0, 1], BigInt::from(1))])
            .unwrap()
            .substitute(&[&x[0] + &x[2], &x[1] + &x[2]])
            .unwrap();
        assert_eq!(p.to_string(), "x1^2 + 2*x1*x3 + x2 + x3^2 + x3");
    }

    #[test]
    fn checked_monomial_division() {
        let l = Layout::new(3).unwrap();
        let a = l.pack(&[3, 1, 2]).unwrap();
        let b = l.pack(&[1, 1, 0]).unwrap();
        assert_eq!(l.checked_div(a, b).map(|m| l.unpack(m)), Some(vec![2, 0, 2]));
        assert_eq!(l.checked_div(b, a), None);
    }
}
