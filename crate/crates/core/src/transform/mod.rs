//! Tschirnhaus transformations from covariants, image polynomials, and the
//! normalizers for degrees 3 to 6.

mod decompose;
mod joubert_map;
mod normalize;
mod quotient;
mod rational;
mod resultant;
mod shape;
mod tschirnhaus;

use thiserror::Error;

use crate::covariants::CovError;
use crate::polyring::PolyError;
use crate::symmetric::SymError;

pub use decompose::{power_of_irreducible_decompose, squarefree_decomposition, NormalizeField};
pub use joubert_map::{joubert_image_by_roots, joubert_map, JoubertMap};
pub use normalize::{
    biquadratic_shift, candidates, default_polynomial, hermite_form, normalize, normalize_cubic, normalize_quartic,
    normalize_quintic, normalize_sextic, root_in, scale_tail, trace_zero_generator, NormalizedEquation, Route,
    Verification, Q_SEARCH_BOUND, TABLE_LIMIT,
};
pub use quotient::QuotientField;
pub use rational::{irreducible_over_q, primitive_part, rational_root, TooLarge};
pub use resultant::{
    discriminant, image_polynomial, interpolate, resultant, resultant_subresultant, sylvester_matrix, ResultantMethod,
    UniPolyRing,
};
pub use shape::Shape;
pub use tschirnhaus::{coefficient_vector, coefficients_from_roots, tschirnhaus_extract, TschirnhausForm};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TransformError {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not separable")]
    NotSeparable,
    #[error("expected degree {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("polynomial is reducible")]
    Reducible,
    #[error("irreducibility could not be decided")]
    IrreducibilityUnknown,
    #[error("first component is not invariant under {perm}{}", if *.twisted { " (twisted covariant)" } else { "" })]
    NotStabilizerInvariant { perm: String, twisted: bool },
    #[error("reduction left terms of X-degree >= n")]
    ReductionLeftover,
    #[error("{code}: {reason}")]
    Unsupported { code: &'static str, reason: String },
    #[error("search exhausted after {tried} candidates: {what}")]
    SearchExhausted { tried: u64, what: String },
    #[error("linear or constant coefficient is zero")]
    ZeroTail,
    #[error(transparent)]
    Cov(#[from] CovError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub const CHAR2_UNSUPPORTED: &str = "CHAR2_UNSUPPORTED";
pub const CHAR_DIVIDES_DEGREE: &str = "CHAR_DIVIDES_DEGREE";
