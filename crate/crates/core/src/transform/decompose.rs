//! Square-free decomposition and the `g = h^m` test for image polynomials.

use super::normalize::{small_quintic_ext, small_quintic_prime};
use super::rational::irreducible_over_q;
use super::TransformError;
use crate::gf::{is_irreducible, FqField, PrimeField};
use crate::polyring::UniPoly;
use crate::ring::{Field, Rationals};

/// Fields the normalizers run over: the rationals and finite fields.
pub trait NormalizeField: Field {
    /// `None` when the available tests cannot decide.
    fn irreducibility(f: &UniPoly<Self>) -> Option<bool>;

    /// The tabulated quintic for fields too small for the Hermite search.
    fn small_quintic(&self) -> Option<UniPoly<Self>> {
        None
    }
}

impl NormalizeField for PrimeField {
    fn irreducibility(f: &UniPoly<Self>) -> Option<bool> {
        Some(is_irreducible(f))
    }
    fn small_quintic(&self) -> Option<UniPoly<Self>> {
        small_quintic_prime(self)
    }
}

impl NormalizeField for FqField {
    fn irreducibility(f: &UniPoly<Self>) -> Option<bool> {
        Some(is_irreducible(f))
    }
    fn small_quintic(&self) -> Option<UniPoly<Self>> {
        small_quintic_ext(self)
    }
}

impl NormalizeField for Rationals {
    fn irreducibility(f: &UniPoly<Self>) -> Option<bool> {
        irreducible_over_q(f)
    }
}

fn pth_root_poly<F: Field>(f: &UniPoly<F>, p: usize) -> UniPoly<F> {
    let field = f.ring();
    let coeffs = f
        .coeffs()
        .iter()
        .step_by(p)
        .map(|c| field.pth_root(c).expect("perfect field of positive characteristic"))
        .collect();
    UniPoly::new(field, coeffs)
}

/// Monic square-free factors with multiplicities, `f = lc * ∏ s_i^(m_i)`.
pub fn squarefree_decomposition<F: Field>(f: &UniPoly<F>) -> Vec<(UniPoly<F>, usize)> {
    let one = UniPoly::one(f.ring());
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let f = f.monic();
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_exact(&c).expect("gcd divides");
    let mut i = 1;
    while w != one {
        let y = w.gcd(&c);
        let factor = w.div_exact(&y).expect("gcd divides");
        if factor != one {
            out.push((factor, i));
        }
        c = c.div_exact(&y).expect("gcd divides");
        w = y;
        i += 1;
    }
    if c != one {
        let p = f.ring().characteristic() as usize;
        for (g, m) in squarefree_decomposition(&pth_root_poly(&c, p)) {
            out.push((g, m * p));
        }
    }
    out.sort_by_key(|(g, m)| (*m, g.degree()));
    out
}

/// `(h, m)` with `g = h^m` and `h` irreducible, or `None` when `g` is not a
/// power of an irreducible.
pub fn power_of_irreducible_decompose<F: NormalizeField>(
    g: &UniPoly<F>,
) -> Result<Option<(UniPoly<F>, usize)>, TransformError> {
    if g.degree().unwrap_or(0) == 0 {
        return Err(TransformError::DegreeMismatch { expected: 1, found: 0 });
    }
    if !g.is_monic() {
        return Err(TransformError::NotMonic);
    }
    let parts = squarefree_decomposition(g);
    let [(h, m)] = parts.as_slice() else {
        return Ok(None);
    };
    match F::irreducibility(h) {
        Some(true) => Ok(Some((h.clone(), *m))),
        Some(false) => Ok(None),
        None => Err(TransformError::IrreducibilityUnknown),
    }
}
