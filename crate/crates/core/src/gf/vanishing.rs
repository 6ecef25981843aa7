use serde::Serialize;

use super::GfError;
use crate::linalg::{kernel, rank, Matrix};
use crate::polyring::{Domain, MultiPoly};
use crate::ring::Field;
use crate::with_field;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    pub q: u64,
    pub m: usize,
    pub d: u32,
    pub hyperplanes: usize,
    pub points_off_hyperplane: usize,
    pub monomials: usize,
    pub min_rank: usize,
    pub full_rank_everywhere: bool,
    /// A nonzero form vanishing off some hyperplane, when one exists.
    pub counterexample: Option<String>,
    pub hyperplane: Option<Vec<String>>,
}

impl VanishingReport {
    /// No nonzero form of degree `d < q` vanishes off a proper subspace.
    pub fn bound_respected(&self) -> bool {
        self.d >= self.q as u32 || self.full_rank_everywhere
    }
}

fn monomials(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    if nvars == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .rev()
        .flat_map(|e| {
            monomials(nvars - 1, d - e).into_iter().map(move |mut rest| {
                rest.insert(0, e);
                rest
            })
        })
        .collect()
}

fn run<F: Field>(field: &F, q: u64, m: usize, d: u32) -> VanishingReport {
    let nv = m + 1;
    let points: Vec<Vec<F::Elem>> =
        (0..q.pow(nv as u32)).map(|i| (0..nv).map(|j| field.element(i / q.pow(j as u32) % q)).collect()).collect();
    let monos = monomials(nv, d);
    // Every proper subspace lies in a hyperplane, so hyperplanes suffice.
    // Normals are normalized to have first nonzero coordinate 1.
    let normals: Vec<Vec<F::Elem>> = points
        .iter()
        .filter(|v| v.iter().find(|c| !field.is_zero(c)).is_some_and(|c| field.is_one(c)))
        .cloned()
        .collect();
    let mut min_rank = usize::MAX;
    let mut counterexample = None;
    let mut hyperplane = None;
    let mut off_count = 0;
    for nrm in &normals {
        let off: Vec<&Vec<F::Elem>> = points
            .iter()
            .filter(|pt| {
                let s = pt.iter().zip(nrm).fold(field.zero(), |acc, (a, b)| field.add(&acc, &field.mul(a, b)));
                !field.is_zero(&s)
            })
            .collect();
        off_count = off.len();
        let mat: Matrix<F::Elem> = off
            .iter()
            .map(|pt| {
                monos
                    .iter()
                    .map(|e| {
                        e.iter()
                            .zip(pt.iter())
                            .fold(field.one(), |acc, (&k, x)| field.mul(&acc, &field.pow(x, k as u64)))
                    })
                    .collect()
            })
            .collect();
        let r = rank(field, &mat);
        min_rank = min_rank.min(r);
        if r < monos.len() && counterexample.is_none() {
            let v = kernel(field, &mat, monos.len()).swap_remove(0);
            let poly = MultiPoly::from_terms(field, nv, monos.iter().cloned().zip(v)).expect("small exponents");
            let names: Vec<String> = (0..nv).map(|i| format!("x{i}")).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            counterexample = Some(poly.format_with(&refs));
            hyperplane = Some(nrm.iter().map(|c| field.format_elem(c)).collect());
        }
    }
    VanishingReport {
        q,
        m,
        d,
        hyperplanes: normals.len(),
        points_off_hyperplane: off_count,
        monomials: monos.len(),
        min_rank,
        full_rank_everywhere: min_rank == monos.len(),
        counterexample,
        hyperplane,
    }
}

/// Exhaustive check over `GF(q)^(m+1)` that no nonzero homogeneous form of
/// degree `d` vanishes on the complement of a hyperplane unless `d >= q`,
/// via the rank of the evaluation matrix.
pub fn vanishing_bound_witness(q: u64, m: usize, d: u32) -> Result<VanishingReport, GfError> {
    if q > 9 || m > 2 || d as u64 > q || d == 0 {
        return Err(GfError::Guard(format!("need q <= 9, m <= 2, 1 <= d <= q; got q={q}, m={m}, d={d}")));
    }
    let domain = Domain::parse(&format!("GF({q})")).map_err(|e| GfError::Guard(e.to_string()))?;
    Ok(with_field!(domain, f => run(f, q, m, d), unreachable!()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn below_the_bound() {
        for (q, m, d) in [(3, 1, 2), (5, 1, 4), (4, 2, 3), (2, 2, 1)] {
            let r = vanishing_bound_witness(q, m, d).unwrap();
            assert!(r.full_rank_everywhere && r.counterexample.is_none(), "{r:?}");
        }
    }

    #[test]
    fn at_the_bound() {
        let r = vanishing_bound_witness(2, 1, 2).unwrap();
        assert!(!r.full_rank_everywhere);
        assert!(r.counterexample.is_some());
        assert!(r.bound_respected());
    }

    #[test]
    fn monomial_count() {
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(2, 4)[0], vec![4, 0]);
    }
}
