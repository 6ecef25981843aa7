//! The coefficient map `f ↦ ∏ (Y - φ_k(ξ))` of the Joubert covariant.
//!
//! With `φ_k = Δ ψ_k`, `e_k(φ) = Δ^k e_k(ψ)`; the odd `e_k(ψ)` vanish
//! except `e_5(ψ) = -32 Δ`, and the even ones are symmetric. Writing
//! `E_k(a)` for `e_k(ψ)` in the coefficients and `D = Δ^2 = disc f`,
//!
//! `f̄ = Y^6 + E_2 D Y^4 + E_4 D^2 Y^2 + 32 D^3 Y + E_6 D^3`.

use std::sync::OnceLock;

use super::tschirnhaus::coefficient_vector;
use super::{discriminant, QuotientField, TransformError};
use crate::covariants::joubert_covariant;
use crate::polyring::{MultiPoly, UniPoly};
use crate::ring::{Field, Integers, Ring};
use crate::symmetric::{elem_sym_all, symmetrize_to_elementary};

pub struct JoubertMap {
    /// `E_2, E_4, E_6` in `a_1..a_6`.
    pub even: [MultiPoly<Integers>; 3],
}

pub fn joubert_map() -> &'static JoubertMap {
    static MAP: OnceLock<JoubertMap> = OnceLock::new();
    MAP.get_or_init(|| {
        let psi = crate::covariants::joubert_psi();
        let e = elem_sym_all(&psi.components, 6).expect("six components");
        let even = [2, 4, 6].map(|k| symmetrize_to_elementary(&e[k]).expect("even e_k(ψ) are symmetric"));
        log::debug!("joubert map: E2, E4, E6 have {}, {}, {} terms", even[0].len(), even[1].len(), even[2].len());
        JoubertMap { even }
    })
}

impl JoubertMap {
    /// `f̄` for a monic sextic `f`.
    pub fn apply<F: Field>(&self, f: &UniPoly<F>) -> Result<UniPoly<F>, TransformError> {
        let found = f.degree().unwrap_or(0);
        if found != 6 {
            return Err(TransformError::DegreeMismatch { expected: 6, found });
        }
        if !f.is_monic() {
            return Err(TransformError::NotMonic);
        }
        let field = f.ring();
        let a = coefficient_vector(f);
        let ev = |p: &MultiPoly<Integers>| p.map_ring(field, |c| field.from_int(c)).eval(&a);
        let [e2, e4, e6] = [ev(&self.even[0])?, ev(&self.even[1])?, ev(&self.even[2])?];
        let d = discriminant(f);
        let d2 = field.mul(&d, &d);
        let d3 = field.mul(&d2, &d);
        let zero = field.zero();
        Ok(UniPoly::new(
            field,
            vec![
                field.mul(&e6, &d3),
                field.mul(&field.from_i64(32), &d3),
                field.mul(&e4, &d2),
                zero.clone(),
                field.mul(&e2, &d),
                zero,
                field.one(),
            ],
        ))
    }
}

/// Oracle: expands `∏ (Y - φ_k(θ_1, ..., θ_6))` at the Frobenius conjugates
/// of a root of an irreducible sextic over a finite field.
pub fn joubert_image_by_roots<F: Field>(f: &UniPoly<F>) -> Option<UniPoly<F>> {
    let field = f.ring();
    let l = QuotientField::new(f);
    let roots = l.conjugates(&l.theta())?;
    let cov = joubert_covariant().map_ring(&l, |c| l.from_int(c));
    let mut prod = UniPoly::one(&l);
    for c in &cov.components {
        let v = c.eval(&roots).ok()?;
        prod = prod.mul(&UniPoly::new(&l, vec![l.neg(&v), l.one()]));
    }
    let coeffs = prod.coeffs().iter().map(|c| (c.degree().unwrap_or(0) == 0).then(|| c.coeff(0)));
    Some(UniPoly::new(field, coeffs.collect::<Option<Vec<_>>>()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{is_irreducible, PrimeField};

    #[test]
    fn matches_root_oracle() {
        for p in [3u64, 5, 7] {
            let k = PrimeField::new(p).unwrap();
            let f = crate::gf::lex_least_irreducible(&k, 6).unwrap();
            assert!(is_irreducible(&f));
            let fast = joubert_map().apply(&f).unwrap();
            assert_eq!(Some(fast), joubert_image_by_roots(&f), "p = {p}");
        }
    }
}
