use serde::Serialize;

use super::{prime_factors, FqField, GfError, PrimeField};
use crate::linalg::{rank, row_reduce};
use crate::ring::{Field, Ring};

const SPAN_LIMIT: u64 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubfieldInfo {
    pub ell: u64,
    pub order: u64,
    pub dim: usize,
    /// Rank of the averaging projection onto this subfield, when `ell` is
    /// invertible mod `p`.
    pub projection_rank: Option<usize>,
    pub projection_idempotent: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanReport {
    pub p: u64,
    pub n: u32,
    pub subfields: Vec<SubfieldInfo>,
    pub span_dim: usize,
    pub codim: usize,
    pub formula: usize,
}

impl SpanReport {
    pub fn matches(&self) -> bool {
        self.codim == self.formula
    }
}

/// `(n / (l1 ... lk)) * (l1 - 1) ... (lk - 1)` over the distinct primes `li | n`.
pub fn subfield_span_codim_formula(n: u32) -> usize {
    let ls = prime_factors(n as u64);
    let prod: u64 = ls.iter().product();
    (n as u64 / prod * ls.iter().map(|l| l - 1).product::<u64>()) as usize
}

/// Codimension of the `GF(p)`-span of all maximal proper subfields of
/// `GF(p^n)`, by enumerating their elements.
pub fn subfield_span_codim(p: u64, n: u32) -> Result<SpanReport, GfError> {
    if n < 2 {
        return Err(GfError::Guard("n must be at least 2".into()));
    }
    let order =
        p.checked_pow(n).filter(|&q| q <= SPAN_LIMIT).ok_or_else(|| GfError::Guard(format!("{p}^{n} exceeds 2^24")))?;
    let field = FqField::with_default_modulus(p, n)?;
    let base = PrimeField::new(p)?;
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut subfields = Vec::new();
    for ell in prime_factors(n as u64) {
        let sub_order = p.pow(n / ell as u32);
        let elems: Vec<u64> = (0..order).filter(|&a| field.pow(&a, sub_order) == a).collect();
        debug_assert_eq!(elems.len() as u64, sub_order);
        let vecs: Vec<Vec<u64>> = elems.iter().map(|&a| field.coords(a)).collect();
        let dim = rank(&base, &vecs);
        for v in vecs {
            insert_vector(&base, &mut basis, v);
        }
        let (projection_rank, projection_idempotent) = if ell % p != 0 {
            let (r, idem) = projection_check(&field, &base, ell, n);
            (Some(r), Some(idem))
        } else {
            (None, None)
        };
        subfields.push(SubfieldInfo { ell, order: sub_order, dim, projection_rank, projection_idempotent });
    }
    let span_dim = basis.len();
    Ok(SpanReport { p, n, subfields, span_dim, codim: n as usize - span_dim, formula: subfield_span_codim_formula(n) })
}

fn insert_vector(base: &PrimeField, basis: &mut Vec<Vec<u64>>, v: Vec<u64>) {
    let mut m = basis.clone();
    m.push(v);
    let r = {
        let mut t = m.clone();
        row_reduce(base, &mut t).len()
    };
    if r > basis.len() {
        let mut t = m;
        row_reduce(base, &mut t);
        t.truncate(r);
        *basis = t;
    }
}

/// Matrix of `H = (1/l) * sum_{i<l} F^(i n / l)` on the power basis, where
/// `F` is Frobenius; returns its rank and whether `H^2 = H`.
fn projection_check(field: &FqField, base: &PrimeField, ell: u64, n: u32) -> (usize, bool) {
    let step = field.p().pow(n / ell as u32);
    let inv_l = base.inv(&base.from_i64(ell as i64)).expect("l invertible mod p");
    let apply = |a: u64| {
        let mut acc = 0;
        let mut x = a;
        for _ in 0..ell {
            acc = field.add(&acc, &x);
            x = field.pow(&x, step);
        }
        field.mul(&acc, &field.from_prime(inv_l))
    };
    let basis: Vec<u64> = (0..n).map(|i| field.pow(&field.generator(), i as u64)).collect();
    let cols: Vec<Vec<u64>> = basis.iter().map(|&b| field.coords(apply(b))).collect();
    let idempotent = basis.iter().all(|&b| apply(apply(b)) == apply(b));
    (rank(base, &cols), idempotent)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_values() {
        assert_eq!(subfield_span_codim_formula(4), 2);
        assert_eq!(subfield_span_codim_formula(6), 2);
        assert_eq!(subfield_span_codim_formula(10), 4);
        assert_eq!(subfield_span_codim_formula(12), 4);
    }

    #[test]
    fn small_case_and_projection() {
        let r = subfield_span_codim(2, 6).unwrap();
        assert_eq!((r.span_dim, r.codim), (4, 2));
        let cubic = r.subfields.iter().find(|s| s.ell == 3).unwrap();
        assert_eq!(cubic.projection_rank, Some(2));
        assert_eq!(cubic.projection_idempotent, Some(true));
        assert!(r.subfields.iter().find(|s| s.ell == 2).unwrap().projection_rank.is_none());
    }

    #[test]
    fn guard() {
        assert!(subfield_span_codim(2, 25).is_err());
        assert!(subfield_span_codim(5, 1).is_err());
    }
}
