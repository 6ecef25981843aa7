use rustc_hash::FxHashMap;

use super::{elementary_symmetric, is_symmetric, SymError};
use crate::polyring::{Monomial, MultiPoly};
use crate::ring::Ring;

/// Memoized products `e_1^m1 ... e_n^mn` in `n` variables.
pub struct ElementaryProducts<R: Ring> {
    e: Vec<MultiPoly<R>>,
    cache: FxHashMap<Vec<u32>, MultiPoly<R>>,
}

impl<R: Ring> ElementaryProducts<R> {
    pub fn new(ring: &R, n: usize) -> Self {
        let e = (0..=n).map(|k| elementary_symmetric(ring, n, k).expect("k <= n")).collect();
        ElementaryProducts { e, cache: FxHashMap::default() }
    }

    pub fn get(&mut self, mu: &[u32]) -> MultiPoly<R> {
        if let Some(p) = self.cache.get(mu) {
            return p.clone();
        }
        let Some(k) = mu.iter().position(|&m| m > 0) else {
            return self.e[0].clone();
        };
        let mut rest = mu.to_vec();
        rest[k] -= 1;
        let p = &self.get(&rest) * &self.e[k + 1];
        self.cache.insert(mu.to_vec(), p.clone());
        p
    }
}

fn is_dominant(e: &[u32]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1])
}

/// Keeps only the terms whose exponents are non-increasing; for a symmetric
/// polynomial these determine the rest.
fn dominant_part<R: Ring>(p: &MultiPoly<R>) -> MultiPoly<R> {
    let terms: Vec<(Monomial, R::Elem)> =
        p.terms().filter(|(e, _)| is_dominant(e)).map(|(e, c)| (e, c.clone())).collect();
    MultiPoly::from_terms(p.ring(), p.nvars(), terms).expect("exponents already valid")
}

/// Writes a symmetric polynomial in the coefficient symbols `a_1..a_n` of
/// `∏ (X - x_i) = X^n + a_1 X^(n-1) + ... + a_n`, so that `a_k = (-1)^k e_k`.
pub fn symmetrize_to_elementary<R: Ring>(p: &MultiPoly<R>) -> Result<MultiPoly<R>, SymError> {
    if !is_symmetric(p) {
        return Err(SymError::NotSymmetric);
    }
    let ring = p.ring();
    let n = p.nvars();
    let mut products = ElementaryProducts::new(ring, n);
    let mut rest = dominant_part(p);
    let mut out: Vec<(Monomial, R::Elem)> = Vec::new();
    while let Ok((lam, c)) = rest.leading_term() {
        let mu: Vec<u32> = (0..n).map(|k| lam[k] - lam.get(k + 1).copied().unwrap_or(0)).collect();
        let weight: u32 = mu.iter().enumerate().map(|(k, m)| (k as u32 + 1) * m).sum();
        let coeff = if weight.is_multiple_of(2) { c.clone() } else { ring.neg(&c) };
        out.push((mu.clone(), coeff));
        let prod = dominant_part(&products.get(&mu));
        rest = rest.try_sub(&prod.scale(&c))?;
    }
    Ok(MultiPoly::from_terms(ring, n, out)?)
}

/// Substitutes `a_k = (-1)^k e_k(x_1..x_n)` into a polynomial in `a_1..a_n`.
pub fn expand_elementary<R: Ring>(q: &MultiPoly<R>) -> Result<MultiPoly<R>, SymError> {
    let ring = q.ring();
    let n = q.nvars();
    let images: Vec<MultiPoly<R>> = (1..=n)
        .map(|k| {
            let e = elementary_symmetric(ring, n, k).expect("k <= n");
            if k % 2 == 0 {
                e
            } else {
                e.neg()
            }
        })
        .collect();
    if n == 0 {
        return Ok(q.clone());
    }
    Ok(q.substitute(&images)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{default_names, parse_poly};
    use crate::ring::Integers;

    fn poly(text: &str, n: usize) -> MultiPoly<Integers> {
        let names = default_names(n);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        parse_poly(text, &Integers, &refs).unwrap()
    }

    fn in_a(q: &MultiPoly<Integers>) -> String {
        let names: Vec<String> = (1..=q.nvars()).map(|k| format!("a{k}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        q.format_with(&refs)
    }

    #[test]
    fn newton_cases() {
        assert_eq!(in_a(&symmetrize_to_elementary(&poly("x1^2 + x2^2", 2)).unwrap()), "a1^2 - 2*a2");
        assert_eq!(in_a(&symmetrize_to_elementary(&poly("(x1 - x2)^2", 2)).unwrap()), "a1^2 - 4*a2");
        assert_eq!(in_a(&symmetrize_to_elementary(&poly("x1^3 + x2^3 + x3^3", 3)).unwrap()), "-a1^3 + 3*a1*a2 - 3*a3");
    }

    #[test]
    fn rejects_asymmetric() {
        assert!(matches!(symmetrize_to_elementary(&poly("x1", 2)), Err(SymError::NotSymmetric)));
    }

    #[test]
    fn roundtrip_discriminant_n4() {
        let d = crate::symmetric::vandermonde_delta(&Integers, 4);
        let d2 = &d * &d;
        let q = symmetrize_to_elementary(&d2).unwrap();
        assert_eq!(expand_elementary(&q).unwrap(), d2);
        assert_eq!(q.len(), 16);
    }
}
