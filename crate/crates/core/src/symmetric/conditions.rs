use super::SymError;
use crate::polyring::{Monomial, MultiPoly};
use crate::ring::Ring;

/// Translation invariance: `q(x_1 + t, ..., x_n + t) = q` with `t` a fresh
/// variable.
pub fn check_condition_t<R: Ring>(q: &MultiPoly<R>) -> Result<bool, SymError> {
    let n = q.nvars();
    let ring = q.ring();
    let t = MultiPoly::var(ring, n + 1, n);
    let images: Vec<MultiPoly<R>> = (0..n).map(|i| &MultiPoly::var(ring, n + 1, i) + &t).collect();
    let shifted = q.substitute(&images)?;
    let lifted = q.remap_vars(&(0..n).collect::<Vec<_>>(), n + 1)?;
    Ok(shifted == lifted)
}

/// `x_1^d1 ... x_n^dn · q(1/x_1, ..., 1/x_n)`; fails if some exponent of
/// `x_i` exceeds `d_i`.
pub fn laurent_reflect<R: Ring>(q: &MultiPoly<R>, d: &[u32]) -> Result<MultiPoly<R>, SymError> {
    if d.len() != q.nvars() {
        return Err(SymError::LengthMismatch { expected: q.nvars(), found: d.len() });
    }
    let mut terms: Vec<(Monomial, R::Elem)> = Vec::with_capacity(q.len());
    for (e, c) in q.terms() {
        let r: Option<Monomial> = e.iter().zip(d).map(|(&a, &b)| b.checked_sub(a)).collect();
        terms.push((r.ok_or(SymError::DegreeBound { bound: d.to_vec(), found: e })?, c.clone()));
    }
    Ok(MultiPoly::from_terms(q.ring(), q.nvars(), terms)?)
}

/// `n d` even and `(x_1 ... x_n)^d q(1/x) = (-1)^(nd/2) q`, with `d` the
/// per-variable degree chosen by the caller.
pub fn check_condition_r<R: Ring>(q: &MultiPoly<R>, d: u32) -> Result<bool, SymError> {
    let n = q.nvars() as u32;
    if (n * d) % 2 == 1 {
        return Ok(false);
    }
    let reflected = laurent_reflect(q, &vec![d; n as usize])?;
    let expected = if (n * d / 2).is_multiple_of(2) { q.clone() } else { q.neg() };
    Ok(reflected == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integers;
    use crate::symmetric::vandermonde_delta;

    #[test]
    fn discriminant_satisfies_both() {
        let d = vandermonde_delta(&Integers, 5);
        let d2 = &d * &d;
        assert!(check_condition_t(&d2).unwrap());
        assert!(check_condition_r(&d2, 8).unwrap());
        assert!(!check_condition_r(&d2, 9).unwrap());
    }

    #[test]
    fn translation_breaks_non_differences() {
        let x = MultiPoly::var(&Integers, 3, 0);
        assert!(!check_condition_t(&x).unwrap());
        assert!(check_condition_t(&vandermonde_delta(&Integers, 3)).unwrap());
    }

    #[test]
    fn reflect_reports_degree_overflow() {
        let x = MultiPoly::var(&Integers, 2, 0).pow(3);
        assert!(matches!(laurent_reflect(&x, &[2, 2]), Err(SymError::DegreeBound { .. })));
    }
}
