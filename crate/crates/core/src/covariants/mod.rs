//! The explicit covariants of `S_5` and `S_6`, the outer automorphism of
//! `S_6`, and their verification suites.

mod covariant;
mod group;
mod hermite;
mod joubert;
mod s4;
mod verify;

use serde::Serialize;
use thiserror::Error;

use crate::polyring::PolyError;
use crate::symmetric::SymError;

pub use covariant::{build_covariant, build_semi_covariant, Character, Covariant, Twist};
pub use group::{
    eta, format_points, group_facts, n0, pairing, pairing_normalizer, pgl2_f5, rho, GroupFacts, OuterAutomorphism,
};
pub use hermite::{
    hermite_covariant, hermite_phi1, hermite_psi1, hermite_psi_tilde, hermite_psi_tilde1, omega1, t_substitution,
    TSubstitution,
};
pub use joubert::{
    joubert_covariant, joubert_h, joubert_orbit_sum, joubert_phi1, joubert_psi, joubert_psi1, unit_coefficients,
};
pub use s4::{archive_record, compute_s4, s4_fixture, S4Report, CACHE_NAME as S4_CACHE_NAME};
pub use verify::{verify_conditions, verify_group_facts, verify_hermite, verify_joubert};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CovError {
    #[error("seed is not invariant under {perm}")]
    NotInvariant { perm: String },
    #[error("the twist by τ needs six variables, got {0}")]
    TwistArity(usize),
    #[error("orbit sum not divisible by 3: {0}")]
    OrbitSum(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Sym(#[from] SymError),
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(suite: &str) -> Self {
        SuiteReport { suite: suite.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, name: &str, passed: bool, detail: String) {
        if !passed {
            log::warn!("{}: {name} failed {detail}", self.suite);
        }
        self.checks.push(Check { name: name.into(), passed, detail });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}
