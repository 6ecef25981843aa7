use serde::{Deserialize, Serialize};

use super::{CovError, OuterAutomorphism};
use crate::polyring::MultiPoly;
use crate::ring::Ring;
use crate::symmetric::{adjacent_transpositions, apply_permutation, Perm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Twist {
    None,
    Tau,
}

/// Character by which the stabilizer acts on the seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Character {
    Trivial,
    Sign,
}

impl Character {
    fn value(self, sigma: &Perm) -> i64 {
        match self {
            Character::Trivial => 1,
            Character::Sign => sigma.sign(),
        }
    }
}

/// Components `c_k = χ(g_k) g_k · c_1`, with `g_k = (1 k)` or `τ((1 k))`.
#[derive(Clone, Debug, PartialEq)]
pub struct Covariant<R: Ring> {
    pub n: usize,
    pub components: Vec<MultiPoly<R>>,
    pub twist: Twist,
    pub character: Character,
}

fn twist_of(twist: Twist, sigma: &Perm) -> Perm {
    match twist {
        Twist::None => sigma.clone(),
        Twist::Tau => OuterAutomorphism::get().apply(sigma),
    }
}

fn untwist(twist: Twist, sigma: &Perm) -> Perm {
    match twist {
        Twist::None => sigma.clone(),
        Twist::Tau => OuterAutomorphism::get().apply_inverse(sigma),
    }
}

fn times_sign<R: Ring>(p: &MultiPoly<R>, s: i64) -> MultiPoly<R> {
    if s == 1 {
        p.clone()
    } else {
        p.neg()
    }
}

/// Generators of the stabilizer of the first point, after twisting.
fn stabilizer_generators(n: usize, twist: Twist) -> Vec<Perm> {
    (1..n.saturating_sub(1)).map(|i| twist_of(twist, &Perm::transposition(n, i, i + 1))).collect()
}

/// Builds the covariant determined by a seed invariant under the
/// (twisted) stabilizer of the first point.
pub fn build_covariant<R: Ring>(seed: &MultiPoly<R>, twist: Twist) -> Result<Covariant<R>, CovError> {
    build(seed, twist, Character::Trivial)
}

/// Same, for a seed on which the stabilizer acts by the sign.
pub fn build_semi_covariant<R: Ring>(seed: &MultiPoly<R>, twist: Twist) -> Result<Covariant<R>, CovError> {
    build(seed, twist, Character::Sign)
}

fn build<R: Ring>(seed: &MultiPoly<R>, twist: Twist, character: Character) -> Result<Covariant<R>, CovError> {
    let n = seed.nvars();
    if twist == Twist::Tau && n != 6 {
        return Err(CovError::TwistArity(n));
    }
    for g in stabilizer_generators(n, twist) {
        let moved = apply_permutation(seed, &g)?;
        if moved != times_sign(seed, character.value(&g)) {
            return Err(CovError::NotInvariant { perm: g.to_string() });
        }
    }
    let mut components = vec![seed.clone()];
    for k in 1..n {
        let g = twist_of(twist, &Perm::transposition(n, 0, k));
        components.push(times_sign(&apply_permutation(seed, &g)?, character.value(&g)));
    }
    Ok(Covariant { n, components, twist, character })
}

impl<R: Ring> Covariant<R> {
    /// First generator `σ` and index `k` with `σ·c_k ≠ χ(σ) c_π(k)`, where
    /// `π = σ` untwisted and `π = τ^{-1}(σ)` twisted.
    pub fn equivariance_violation(&self) -> Option<(Perm, usize)> {
        for sigma in adjacent_transpositions(self.n) {
            let pi = untwist(self.twist, &sigma);
            let s = self.character.value(&sigma);
            for k in 0..self.n {
                let lhs = apply_permutation(&self.components[k], &sigma).expect("matching arity");
                if lhs != times_sign(&self.components[pi.image(k)], s) {
                    return Some((sigma, k));
                }
            }
        }
        None
    }

    pub fn map_ring<S: Ring>(&self, target: &S, f: impl Fn(&R::Elem) -> S::Elem) -> Covariant<S> {
        Covariant {
            n: self.n,
            components: self.components.iter().map(|c| c.map_ring(target, &f)).collect(),
            twist: self.twist,
            character: self.character,
        }
    }

    /// Whether the components are pairwise distinct.
    pub fn pairwise_distinct(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.components[i] != self.components[j]))
    }

    /// Multiplies every component by `p`; used to pass from `Ψ` to `ΔΨ`.
    pub fn times(&self, p: &MultiPoly<R>, character: Character) -> Covariant<R> {
        Covariant {
            n: self.n,
            components: self.components.iter().map(|c| c * p).collect(),
            twist: self.twist,
            character,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integers;
    use crate::symmetric::vandermonde_delta;

    #[test]
    fn identity_covariant() {
        let seed = MultiPoly::var(&Integers, 3, 0);
        let c = build_covariant(&seed, Twist::None).unwrap();
        let xs: Vec<_> = (0..3).map(|i| MultiPoly::var(&Integers, 3, i)).collect();
        assert_eq!(c.components, xs);
        assert!(c.equivariance_violation().is_none());
        assert!(c.pairwise_distinct());
    }

    #[test]
    fn rejects_non_invariant_seed() {
        let seed = MultiPoly::var(&Integers, 3, 1);
        let err = build_covariant(&seed, Twist::None).unwrap_err();
        assert_eq!(err, CovError::NotInvariant { perm: "(2 3)".into() });
    }

    #[test]
    fn trace_zero_covariant_sums_to_zero() {
        for n in 4..=6 {
            let seed = super::super::omega1(&Integers, n);
            let c = build_semi_covariant(&seed, Twist::None).unwrap();
            assert!(c.equivariance_violation().is_none());
            let sum = c.components.iter().fold(MultiPoly::zero(&Integers, n), |acc, p| &acc + p);
            assert!(sum.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn delta_times_semi_covariant_is_covariant() {
        let seed = super::super::omega1(&Integers, 4);
        let d = vandermonde_delta(&Integers, 4);
        let c = build_semi_covariant(&seed, Twist::None).unwrap().times(&d, Character::Trivial);
        assert!(c.equivariance_violation().is_none());
        assert_eq!(build_covariant(&(&seed * &d), Twist::None).unwrap(), c);
    }
}
