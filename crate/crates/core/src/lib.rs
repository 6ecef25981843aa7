//! Exact covariants of the symmetric groups S5 and S6, the Tschirnhaus
//! transformations they induce, and normal forms for equations of degree
//! three to six over the rationals and finite fields.

pub mod cache;
pub mod covariants;
pub mod gf;
pub mod linalg;
pub mod polyring;
pub mod ring;
pub mod symmetric;
pub mod transform;

pub use polyring::{Domain, MultiPoly, UniPoly};
pub use ring::{Field, Integers, Rationals, Ring};
