//! Finite fields, irreducibility and the brute-force checks behind the
//! degree-5 table and the finite-field lemmas.

mod ext;
mod irreducible;
mod minpoly;
mod prime;
mod subfield;
mod table;
mod vanishing;

use thiserror::Error;

pub use ext::{lex_least_irreducible, FqField};
pub use irreducible::{
    distinct_degree_factorization, is_irreducible, is_irreducible_by_trial_division, roots, roots_by_search,
};
pub use minpoly::{minimal_polynomial, minimal_polynomial_over_prime, Embedding};
pub use prime::{is_prime, prime_factors, PrimeField};
pub use subfield::{subfield_span_codim, subfield_span_codim_formula, SpanReport};
pub use table::{table_entries, verify_table, TableEntry, TableEntryReport, TableReport};
pub use vanishing::{vanishing_bound_witness, VanishingReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("unsupported field size: {0}")]
    UnsupportedSize(String),
    #[error("not a subfield: {0}")]
    NotSubfield(String),
    #[error("outside the exhaustive regime: {0}")]
    Guard(String),
}
