//! The sextic covariant built from the cubic `ψ_1`. Variables `x1..x6`
//! stand for the points `∞, 0, 1, 2, 3, 4` of the projective line.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{build_covariant, build_semi_covariant, eta, CovError, Covariant, Twist};
use crate::polyring::MultiPoly;
use crate::ring::Integers;
use crate::symmetric::{apply_permutation, vandermonde_delta};

fn label(p: &str) -> usize {
    match p {
        "inf" => 0,
        v => v.parse::<usize>().expect("label 0..4") + 1,
    }
}

/// `h = (x_∞ - x_4)(x_1 - x_3)(x_2 - x_0) + (x_0 - x_1)(x_4 - x_2)(x_3 - x_∞)`.
pub fn joubert_h() -> MultiPoly<Integers> {
    let x = |p: &str| MultiPoly::var(&Integers, 6, label(p));
    let d = |a: &str, b: &str| &x(a) - &x(b);
    let t1 = &(&d("inf", "4") * &d("1", "3")) * &d("2", "0");
    let t2 = &(&d("0", "1") * &d("4", "2")) * &d("3", "inf");
    &t1 + &t2
}

/// `h + η h + ... + η^4 h`.
pub fn joubert_orbit_sum() -> MultiPoly<Integers> {
    let h = joubert_h();
    let e = eta();
    (0..5).fold(MultiPoly::zero(&Integers, 6), |acc, i| &acc + &apply_permutation(&h, &e.pow(i)).expect("arity 6"))
}

/// One third of the orbit sum, after checking every coefficient is `±3`.
pub fn joubert_psi1() -> Result<MultiPoly<Integers>, CovError> {
    let sum = joubert_orbit_sum();
    let three = BigInt::from(3);
    let mut terms = Vec::with_capacity(sum.len());
    for (m, c) in sum.terms() {
        if c.abs() != three {
            return Err(CovError::OrbitSum(format!("coefficient {c} at {m:?}")));
        }
        terms.push((m, c / &three));
    }
    Ok(MultiPoly::from_terms(&Integers, 6, terms)?)
}

/// `(ψ_1, ..., ψ_6)` with `ψ_k = -τ((1 k)) ψ_1`.
pub fn joubert_psi() -> Covariant<Integers> {
    build_semi_covariant(&joubert_psi1().expect("orbit sum is divisible by 3"), Twist::Tau)
        .expect("ψ_1 is H-semi-invariant")
}

/// `φ_1 = Δ ψ_1`, degree 18.
pub fn joubert_phi1() -> MultiPoly<Integers> {
    &vandermonde_delta(&Integers, 6) * &joubert_psi1().expect("orbit sum is divisible by 3")
}

pub fn joubert_covariant() -> Covariant<Integers> {
    build_covariant(&joubert_phi1(), Twist::Tau).expect("φ_1 is H-invariant")
}

/// Whether every coefficient is `±1`.
pub fn unit_coefficients(p: &MultiPoly<Integers>) -> bool {
    p.terms().all(|(_, c)| c.abs().is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covariants::{pairing_normalizer, rho};
    use crate::gf::PrimeField;
    use crate::ring::Ring;
    use crate::symmetric::{elementary_symmetric, is_skew, is_symmetric, Perm};

    #[test]
    fn h_is_semi_invariant_under_the_normalizer() {
        let h = joubert_h();
        assert_eq!(h.homogeneous_degree(), Some(3));
        for s in pairing_normalizer() {
            let sign = rho(&s).unwrap().sign();
            let expected = if sign == 1 { h.clone() } else { h.neg() };
            assert_eq!(apply_permutation(&h, &s).unwrap(), expected, "{s}");
        }
        assert_eq!(apply_permutation(&h, &Perm::transposition(6, 0, 1)).unwrap(), h);
        assert!(!is_symmetric(&h));
    }

    #[test]
    fn psi1_is_signed_sum_of_squarefree_cubics() {
        let p = joubert_psi1().unwrap();
        assert_eq!(p.len(), 20);
        assert!(unit_coefficients(&p));
        assert!(p.terms().all(|(m, _)| m.iter().all(|&e| e <= 1)));
        let f2 = PrimeField::new(2).unwrap();
        let e3 = elementary_symmetric(&f2, 6, 3).unwrap();
        assert_eq!(p.map_ring(&f2, |c| f2.from_int(c)), e3);
        assert!(!is_symmetric(&p) && !is_skew(&p));
    }

    #[test]
    fn phi_has_degree_18() {
        let c = joubert_covariant();
        assert_eq!(c.components[0].homogeneous_degree(), Some(18));
        assert!(c.equivariance_violation().is_none());
    }
}
