//! The quintic covariant built from the degree-9 polynomial `ψ_1`.

use num_bigint::BigInt;
use serde::Serialize;

use super::{build_covariant, build_semi_covariant, Covariant, Twist};
use crate::polyring::MultiPoly;
use crate::ring::{Integers, Ring};
use crate::symmetric::vandermonde_delta;

fn xs(n: usize) -> Vec<MultiPoly<Integers>> {
    (0..n).map(|i| MultiPoly::var(&Integers, n, i)).collect()
}

/// `ψ_1`, the product of three bracket sums; degree 9, symmetric in
/// `x_2..x_5`.
pub fn hermite_psi1() -> MultiPoly<Integers> {
    let x = xs(5);
    let d = |i: usize, j: usize| &x[i - 1] - &x[j - 1];
    let bracket = |a: [(usize, usize); 3], b: [(usize, usize); 3]| {
        let prod = |t: [(usize, usize); 3]| &(&d(t[0].0, t[0].1) * &d(t[1].0, t[1].1)) * &d(t[2].0, t[2].1);
        &prod(a) + &prod(b)
    };
    let b1 = bracket([(1, 2), (1, 5), (4, 3)], [(1, 3), (1, 4), (2, 5)]);
    let b2 = bracket([(1, 2), (1, 3), (5, 4)], [(1, 4), (1, 5), (2, 3)]);
    let b3 = bracket([(1, 2), (1, 4), (5, 3)], [(1, 3), (1, 5), (4, 2)]);
    &(&b1 * &b2) * &b3
}

/// `ω_1 = ∏_{1<i<j} (x_i - x_j)`.
pub fn omega1<R: Ring>(ring: &R, n: usize) -> MultiPoly<R> {
    let x: Vec<MultiPoly<R>> = (0..n).map(|i| MultiPoly::var(ring, n, i)).collect();
    let mut acc = MultiPoly::one(ring, n);
    for i in 1..n {
        for j in i + 1..n {
            acc = &acc * &(&x[i] - &x[j]);
        }
    }
    acc
}

/// `ψ̃_1 = ψ_1 ω_1`, degree 15.
pub fn hermite_psi_tilde1() -> MultiPoly<Integers> {
    &hermite_psi1() * &omega1(&Integers, 5)
}

/// `φ_1 = ψ_1 ω_1 Δ`, degree 25.
pub fn hermite_phi1() -> MultiPoly<Integers> {
    &hermite_psi_tilde1() * &vandermonde_delta(&Integers, 5)
}

/// `(ψ̃_1, ..., ψ̃_5)` with `ψ̃_k = -(1 k) ψ̃_1`, so that `φ_k = Δ ψ̃_k`.
pub fn hermite_psi_tilde() -> Covariant<Integers> {
    build_semi_covariant(&hermite_psi_tilde1(), Twist::None).expect("ψ̃_1 is S_4-semi-invariant")
}

pub fn hermite_covariant() -> Covariant<Integers> {
    build_covariant(&hermite_phi1(), Twist::None).expect("φ_1 is S_4-invariant")
}

#[derive(Clone, Debug, Serialize)]
pub struct TSubstitution {
    pub psi_tilde3_vanishes: bool,
    pub product_degree: u32,
    /// Coefficient of the leading power of `t` in `ψ̃_1 ψ̃_2 ψ̃_4 ψ̃_5`.
    pub leading_coefficient: String,
    /// Lex-leading monomials of `ψ̃_1, ..., ψ̃_5` (each up to sign).
    pub leading_monomials: Vec<Vec<u32>>,
}

impl TSubstitution {
    pub fn passed(&self) -> bool {
        let lc = self.leading_coefficient.as_str();
        self.psi_tilde3_vanishes && self.product_degree == 188 && (lc == "1" || lc == "-1")
    }
}

/// Specializes the `ψ̃_k` at `(t^4, t^3, t^2, t, 1)`.
pub fn t_substitution(psi_tilde: &Covariant<Integers>) -> TSubstitution {
    let t = MultiPoly::var(&Integers, 1, 0);
    let images: Vec<MultiPoly<Integers>> = (0..5).map(|i| t.pow(4 - i as u32)).collect();
    let spec: Vec<MultiPoly<Integers>> =
        psi_tilde.components.iter().map(|c| c.substitute(&images).expect("univariate images")).collect();
    let prod = [0, 1, 3, 4].iter().fold(MultiPoly::one(&Integers, 1), |acc, &k| &acc * &spec[k]);
    let (deg, lc) = match prod.leading_term() {
        Ok((m, c)) => (m[0], c),
        Err(_) => (0, BigInt::from(0)),
    };
    TSubstitution {
        psi_tilde3_vanishes: spec[2].is_zero(),
        product_degree: deg,
        leading_coefficient: lc.to_string(),
        leading_monomials: psi_tilde.components.iter().map(|c| c.leading_term().expect("nonzero").0).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::PrimeField;
    use crate::symmetric::{check_condition_t, laurent_reflect};

    #[test]
    fn psi1_shape() {
        let p = hermite_psi1();
        assert_eq!(p.homogeneous_degree(), Some(9));
        assert_eq!(p.leading_term().unwrap(), (vec![6, 3, 0, 0, 0], BigInt::from(-1)));
    }

    #[test]
    fn psi1_vanishes_at_fifth_roots_of_unity() {
        let f11 = PrimeField::new(11).unwrap();
        let p = hermite_psi1().map_ring(&f11, |c| f11.from_int(c));
        let pt: Vec<u64> = (0..5).map(|i| f11.pow(&3, i)).collect();
        assert_eq!(f11.pow(&3, 5), 1);
        assert_eq!(p.eval(&pt).unwrap(), 0);
    }

    #[test]
    fn reflection_identity() {
        let p = hermite_psi1();
        assert!(check_condition_t(&p).unwrap());
        assert_eq!(laurent_reflect(&p, &[6, 3, 3, 3, 3]).unwrap(), p.neg());
    }

    #[test]
    fn omega_small() {
        assert_eq!(omega1(&Integers, 3).to_string(), "x2 - x3");
        assert_eq!(omega1(&Integers, 5).homogeneous_degree(), Some(6));
        // ω_1 · ∏_{j>1} (x_1 - x_j) = Δ at n = 4.
        let x = xs(4);
        let lin = (1..4).fold(MultiPoly::one(&Integers, 4), |acc, j| &acc * &(&x[0] - &x[j]));
        assert_eq!(&omega1(&Integers, 4) * &lin, vandermonde_delta(&Integers, 4));
    }

    #[test]
    fn phi1_degrees() {
        let phi = hermite_phi1();
        assert_eq!(phi.homogeneous_degree(), Some(25));
        assert_eq!(phi.degrees(), vec![10; 5]);
        let lc = phi.leading_term().unwrap().1;
        assert!(lc == BigInt::from(1) || lc == BigInt::from(-1));
    }
}
