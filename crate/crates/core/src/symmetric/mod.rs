//! Symmetric-group actions, elementary symmetric functions and the
//! discriminant square root `Δ`.

mod basis;
mod conditions;
mod perm;
mod symmetrize;

use thiserror::Error;

use crate::polyring::{Monomial, PolyError};

pub use basis::{elem_sym_all, elem_sym_of, elementary_symmetric, is_skew, is_symmetric, vandermonde_delta};
pub use conditions::{check_condition_r, check_condition_t, laurent_reflect};
pub use perm::{adjacent_transpositions, all_perms, apply_permutation, Perm};
pub use symmetrize::{expand_elementary, symmetrize_to_elementary, ElementaryProducts};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SymError {
    #[error("not a bijection: {0:?}")]
    NotBijection(Vec<usize>),
    #[error("expected {expected} points, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("e_{k} undefined for {n} arguments")]
    DegreeOutOfRange { k: usize, n: usize },
    #[error("no polynomials given")]
    Empty,
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("monomial {found:?} exceeds the degree bound {bound:?}")]
    DegreeBound { bound: Vec<u32>, found: Monomial },
    #[error(transparent)]
    Poly(#[from] PolyError),
}
