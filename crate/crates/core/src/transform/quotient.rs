//! `K[t]/(f)` for a monic irreducible `f`, as a field in its own right.

use num_bigint::BigInt;
use serde_json::Value;

use crate::linalg::{char_poly, rank, Matrix};
use crate::polyring::UniPoly;
use crate::ring::{Field, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct QuotientField<F: Field> {
    base: F,
    modulus: UniPoly<F>,
}

impl<F: Field> QuotientField<F> {
    /// `modulus` is made monic; irreducibility is the caller's promise.
    pub fn new(modulus: &UniPoly<F>) -> Self {
        assert!(modulus.degree().unwrap_or(0) >= 1, "modulus must have positive degree");
        QuotientField { base: modulus.ring().clone(), modulus: modulus.monic() }
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn modulus(&self) -> &UniPoly<F> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("nonzero modulus")
    }

    /// The class of `t`.
    pub fn theta(&self) -> UniPoly<F> {
        UniPoly::x(&self.base).rem(&self.modulus)
    }

    pub fn embed(&self, c: &F::Elem) -> UniPoly<F> {
        UniPoly::constant(&self.base, c.clone())
    }

    pub fn reduce(&self, p: &UniPoly<F>) -> UniPoly<F> {
        p.rem(&self.modulus)
    }

    /// Coordinates on the power basis, padded to the degree.
    pub fn coords(&self, a: &UniPoly<F>) -> Vec<F::Elem> {
        (0..self.degree()).map(|i| a.coeff(i)).collect()
    }

    /// Matrix of multiplication by `a` on the power basis; column `j` holds
    /// the coordinates of `a t^j`.
    pub fn mult_matrix(&self, a: &UniPoly<F>) -> Matrix<F::Elem> {
        let n = self.degree();
        let theta = self.theta();
        let mut col = self.reduce(a);
        let mut cols = Vec::with_capacity(n);
        for _ in 0..n {
            cols.push(self.coords(&col));
            col = self.mul(&col, &theta);
        }
        (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
    }

    /// Characteristic polynomial of multiplication by `a`.
    pub fn char_poly(&self, a: &UniPoly<F>) -> UniPoly<F> {
        char_poly(&self.base, &self.mult_matrix(a))
    }

    pub fn trace(&self, a: &UniPoly<F>) -> F::Elem {
        let m = self.mult_matrix(a);
        (0..m.len()).fold(self.base.zero(), |acc, i| self.base.add(&acc, &m[i][i]))
    }

    /// Degree of `K(a)` over `K`: the rank of `1, a, ..., a^(n-1)`.
    pub fn element_degree(&self, a: &UniPoly<F>) -> usize {
        let n = self.degree();
        let mut pw = self.one();
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            rows.push(self.coords(&pw));
            pw = self.mul(&pw, a);
        }
        rank(&self.base, &rows)
    }

    pub fn is_generator(&self, a: &UniPoly<F>) -> bool {
        self.element_degree(a) == self.degree()
    }

    /// `a^q` for the order `q` of the base field.
    pub fn frobenius(&self, a: &UniPoly<F>) -> Option<UniPoly<F>> {
        let q = self.base.order()?;
        Some(a.pow_mod(q as u128, &self.modulus))
    }

    /// `a, a^q, a^(q^2), ...`: the conjugates over a finite base.
    pub fn conjugates(&self, a: &UniPoly<F>) -> Option<Vec<UniPoly<F>>> {
        let mut out = vec![self.reduce(a)];
        for _ in 1..self.degree() {
            let next = self.frobenius(out.last().expect("nonempty"))?;
            out.push(next);
        }
        Some(out)
    }

    /// Evaluates `p` (coefficients in `K`) at `a`.
    pub fn eval(&self, p: &UniPoly<F>, a: &UniPoly<F>) -> UniPoly<F> {
        p.coeffs().iter().rev().fold(self.zero(), |acc, c| self.add(&self.mul(&acc, a), &self.embed(c)))
    }
}

impl<F: Field> Ring for QuotientField<F> {
    type Elem = UniPoly<F>;

    fn zero(&self) -> UniPoly<F> {
        UniPoly::zero(&self.base)
    }
    fn one(&self) -> UniPoly<F> {
        UniPoly::one(&self.base).rem(&self.modulus)
    }
    fn is_zero(&self, a: &UniPoly<F>) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &UniPoly<F>, b: &UniPoly<F>) -> UniPoly<F> {
        a.add(b)
    }
    fn sub(&self, a: &UniPoly<F>, b: &UniPoly<F>) -> UniPoly<F> {
        a.sub(b)
    }
    fn neg(&self, a: &UniPoly<F>) -> UniPoly<F> {
        a.neg()
    }
    fn mul(&self, a: &UniPoly<F>, b: &UniPoly<F>) -> UniPoly<F> {
        a.mul_mod(b, &self.modulus)
    }
    fn from_int(&self, n: &BigInt) -> UniPoly<F> {
        UniPoly::constant(&self.base, self.base.from_int(n)).rem(&self.modulus)
    }
    fn div_exact(&self, a: &UniPoly<F>, b: &UniPoly<F>) -> Option<UniPoly<F>> {
        self.div(a, b)
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn descriptor(&self) -> String {
        format!("{}[t]/({})", self.base.descriptor(), self.modulus.format_with("t"))
    }
    fn format_elem(&self, a: &UniPoly<F>) -> String {
        a.format_with("t")
    }
    fn is_atomic(&self, a: &UniPoly<F>) -> bool {
        a.degree().unwrap_or(0) == 0 && self.base.is_atomic(&a.coeff(0))
    }
    fn elem_to_json(&self, a: &UniPoly<F>) -> Value {
        Value::Array(self.coords(a).iter().map(|c| self.base.elem_to_json(c)).collect())
    }
    fn elem_from_json(&self, v: &Value) -> Option<UniPoly<F>> {
        let coeffs = v.as_array()?.iter().map(|c| self.base.elem_from_json(c)).collect::<Option<Vec<_>>>()?;
        Some(UniPoly::new(&self.base, coeffs).rem(&self.modulus))
    }
}

impl<F: Field> Field for QuotientField<F> {
    fn inv(&self, a: &UniPoly<F>) -> Option<UniPoly<F>> {
        a.inv_mod(&self.modulus)
    }

    fn order(&self) -> Option<u64> {
        self.base.order()?.checked_pow(self.degree() as u32)
    }

    /// Base-`q` digits of `index` are the coordinates, constant first, so the
    /// top coordinate varies slowest.
    fn element(&self, index: u64) -> UniPoly<F> {
        match self.base.order() {
            Some(q) => {
                let mut i = index;
                let coeffs = (0..self.degree())
                    .map(|_| {
                        let c = self.base.element(i % q);
                        i /= q;
                        c
                    })
                    .collect();
                UniPoly::new(&self.base, coeffs)
            }
            None => self.embed(&self.base.element(index)),
        }
    }

    fn pth_root(&self, a: &UniPoly<F>) -> Option<UniPoly<F>> {
        let order = self.order()?;
        Some(self.pow(a, order / self.characteristic()))
    }

    fn prime_degree(&self) -> u32 {
        self.base.prime_degree() * self.degree() as u32
    }
}
