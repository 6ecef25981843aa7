//! `S_4 = s_4(φ_1, ..., φ_5) / Δ^6`, computed as `e_4(ψ̃) / Δ^2` since
//! `s_4(φ) = Δ^4 e_4(ψ̃)`.

use std::time::Instant;

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use super::{hermite_covariant, hermite_psi_tilde, CovError};
use crate::cache::{sha256_hex, Cache};
use crate::gf::PrimeField;
use crate::polyring::{default_names, MultiPoly};
use crate::ring::{Integers, Ring};
use crate::symmetric::{elem_sym_of, is_symmetric, vandermonde_delta};

pub const CACHE_NAME: &str = "hermite-s4";

#[derive(Clone, Debug, Serialize)]
pub struct S4Report {
    pub terms: usize,
    pub degree: Option<u32>,
    pub homogeneous_degree_40: bool,
    pub symmetric: bool,
    pub e4_terms: usize,
    /// `s_4(φ)(x) = Δ(x)^6 S_4(x)` at random points mod `2^31 - 1`.
    pub pointwise_checks: usize,
    pub pointwise_ok: bool,
    pub sha256: String,
    pub from_cache: bool,
    #[serde(skip)]
    pub seconds: f64,
}

impl S4Report {
    pub fn passed(&self) -> bool {
        self.homogeneous_degree_40 && self.symmetric && self.pointwise_ok
    }
}

fn names() -> Vec<String> {
    default_names(5)
}

fn to_json(p: &MultiPoly<Integers>) -> serde_json::Value {
    let n = names();
    let refs: Vec<&str> = n.iter().map(String::as_str).collect();
    p.to_json(&refs)
}

/// Computes `S_4` from scratch; the two exact divisions by `Δ` are each
/// verified by re-multiplication.
pub fn compute_s4() -> Result<(MultiPoly<Integers>, usize), CovError> {
    let psi = hermite_psi_tilde();
    log::info!("s4: e4 of the five degree-15 components");
    let e4 = elem_sym_of(&psi.components, 4)?;
    log::info!("s4: e4 has {} terms; dividing by delta twice", e4.len());
    let delta = vandermonde_delta(&Integers, 5);
    let q = e4.divide_exact(&delta)?;
    let s4 = q.divide_exact(&delta)?;
    log::info!("s4: quotient has {} terms", s4.len());
    Ok((s4, e4.len()))
}

fn pointwise(s4: &MultiPoly<Integers>, count: usize) -> bool {
    let f = PrimeField::new(2_147_483_647).expect("prime");
    let phi = hermite_covariant().map_ring(&f, |c| f.from_int(c));
    let s4p = s4.map_ring(&f, |c| f.from_int(c));
    let delta = vandermonde_delta(&f, 5);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    (0..count).all(|_| {
        let pt: Vec<u64> = (0..5).map(|_| rng.gen_range(0..f.p())).collect();
        let vals: Vec<u64> = phi.components.iter().map(|c| c.eval(&pt).expect("arity")).collect();
        let mut e = [1u64, 0, 0, 0, 0, 0];
        for v in vals {
            for j in (1..=5).rev() {
                e[j] = f.add(&e[j], &f.mul(&e[j - 1], &v));
            }
        }
        let d = delta.eval(&pt).expect("arity");
        e[4] == f.mul(&f.pow(&d, 6), &s4p.eval(&pt).expect("arity"))
    })
}

/// `S_4`, loaded from the fixture cache when present and stored there
/// after a fresh computation.
pub fn s4_fixture(cache: Option<&Cache>) -> Result<(MultiPoly<Integers>, S4Report), CovError> {
    let start = Instant::now();
    let cached = cache.and_then(|c| match c.get(CACHE_NAME) {
        Ok(v) => v,
        Err(e) => {
            log::warn!("ignoring cached S4: {e}");
            None
        }
    });
    let (s4, e4_terms, from_cache) = match cached.and_then(|(v, _)| MultiPoly::from_json(&v, &Integers).ok()) {
        Some((p, _)) => (p, 0, true),
        None => {
            let (p, n) = compute_s4()?;
            (p, n, false)
        }
    };
    let value = to_json(&s4);
    let sha = sha256_hex(&serde_json::to_vec(&value).expect("serializable"));
    if let (Some(c), false) = (cache, from_cache) {
        if let Err(e) = c.put(CACHE_NAME, &value) {
            log::warn!("could not archive S4: {e}");
        }
    }
    let checks = 10;
    let report = S4Report {
        terms: s4.len(),
        degree: s4.total_degree(),
        homogeneous_degree_40: s4.homogeneous_degree() == Some(40),
        symmetric: is_symmetric(&s4),
        e4_terms,
        pointwise_checks: checks,
        pointwise_ok: pointwise(&s4, checks),
        sha256: sha,
        from_cache,
        seconds: start.elapsed().as_secs_f64(),
    };
    Ok((s4, report))
}

/// Metadata stored next to the polynomial when archiving to a directory.
pub fn archive_record(report: &S4Report) -> serde_json::Value {
    json!({ "terms": report.terms, "degree": report.degree, "sha256": report.sha256 })
}
