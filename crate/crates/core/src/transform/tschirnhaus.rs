//! Tschirnhaus forms: the polynomial `φ(a, X)` of `X`-degree below `n` with
//! `φ(a(x), x_i) = φ_i(x)`, where `a_k = (-1)^k e_k(x)`.

use serde::Serialize;

use super::TransformError;
use crate::covariants::{Covariant, Twist};
use crate::polyring::{MultiPoly, UniPoly};
use crate::ring::{Field, Integers, Ring};
use crate::symmetric::{adjacent_transpositions, apply_permutation, symmetrize_to_elementary, Perm};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TschirnhausForm {
    pub n: usize,
    /// Coefficients of `X^0 .. X^(n-1)` as polynomials in `a_1..a_n`.
    #[serde(serialize_with = "serialize_pj")]
    pub pj: Vec<MultiPoly<Integers>>,
    pub twist: Twist,
}

fn a_names(n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("a{k}")).collect()
}

fn serialize_pj<S: serde::Serializer>(pj: &[MultiPoly<Integers>], s: S) -> Result<S::Ok, S::Error> {
    let names = a_names(pj.first().map_or(0, MultiPoly::nvars));
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    s.collect_seq(pj.iter().map(|p| p.format_with(&refs)))
}

/// Coefficient symbols `a_1..a_n` of a monic `f` of degree `n`.
pub fn coefficient_vector<F: Field>(f: &UniPoly<F>) -> Vec<F::Elem> {
    let n = f.degree().unwrap_or(0);
    (1..=n).map(|k| f.coeff(n - k)).collect()
}

/// `a_k = (-1)^k e_k(x)`, i.e. the coefficients of `∏ (X - x_i)`.
pub fn coefficients_from_roots<F: Ring>(field: &F, x: &[F::Elem]) -> Vec<F::Elem> {
    let mut c = vec![field.one()];
    for xi in x {
        let mut next = vec![field.zero(); c.len() + 1];
        for (k, ck) in c.iter().enumerate() {
            next[k] = field.add(&next[k], ck);
            next[k + 1] = field.sub(&next[k + 1], &field.mul(ck, xi));
        }
        c = next;
    }
    c.remove(0);
    c
}

impl TschirnhausForm {
    /// `φ(a, X)` as a polynomial in `X` once numeric `a` are substituted.
    pub fn eval_at<F: Field>(&self, field: &F, a: &[F::Elem]) -> Result<UniPoly<F>, TransformError> {
        let coeffs =
            self.pj.iter().map(|p| p.map_ring(field, |c| field.from_int(c)).eval(a)).collect::<Result<Vec<_>, _>>()?;
        Ok(UniPoly::new(field, coeffs))
    }

    /// `φ(f, X)` for a monic `f` of the right degree.
    pub fn for_poly<F: Field>(&self, f: &UniPoly<F>) -> Result<UniPoly<F>, TransformError> {
        let found = f.degree().unwrap_or(0);
        if found != self.n {
            return Err(TransformError::DegreeMismatch { expected: self.n, found });
        }
        if !f.is_monic() {
            return Err(TransformError::NotMonic);
        }
        self.eval_at(f.ring(), &coefficient_vector(f))
    }

    /// `φ(a, X)` written out with variables `a1..an` and `X`.
    pub fn format(&self) -> String {
        let mut names = a_names(self.n);
        names.push("X".into());
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let mut total = MultiPoly::zero(&Integers, self.n + 1);
        for (j, p) in self.pj.iter().enumerate() {
            let lifted = p.remap_vars(&(0..self.n).collect::<Vec<_>>(), self.n + 1).expect("widening");
            let xj = MultiPoly::var(&Integers, self.n + 1, self.n).pow(j as u32);
            total = &total + &(&lifted * &xj);
        }
        total.format_with(&refs)
    }

    /// Checks `φ(a(x), x_i) = φ_i(x)` at one root tuple, with the
    /// covariant already mapped into `F`.
    pub fn roundtrip_holds<F: Field>(&self, cov: &Covariant<F>, x: &[F::Elem]) -> Result<bool, TransformError> {
        let field = cov.components[0].ring();
        let g = self.eval_at(field, &coefficients_from_roots(field, x))?;
        for (i, c) in cov.components.iter().enumerate() {
            if g.eval(&x[i]) != c.eval(x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Reads off `φ(a, X)` from an untwisted covariant: `φ_1` is expanded in
/// `x_1` with coefficients symmetric in `x_2..x_n`, those are rewritten in
/// the coefficients of `f(T)/(T - x_1)`, and powers `X^m` with `m >= n` are
/// reduced by `f`.
pub fn tschirnhaus_extract(cov: &Covariant<Integers>) -> Result<TschirnhausForm, TransformError> {
    let n = cov.n;
    let phi1 = &cov.components[0];
    if let Some(p) = stabilizer_violation(phi1) {
        return Err(TransformError::NotStabilizerInvariant { perm: p.to_string(), twisted: cov.twist != Twist::None });
    }
    let z = &Integers;
    let top = phi1.degree_in(0).unwrap_or(0) as usize;
    let mut slices: Vec<Vec<(Vec<u32>, num_bigint::BigInt)>> = vec![Vec::new(); top + 1];
    for (e, c) in phi1.terms() {
        slices[e[0] as usize].push((e[1..].to_vec(), c.clone()));
    }
    // a'_k = sum_{i<=k} a_{k-i} X^i in the variables a_1..a_n, X.
    let nv = n + 1;
    let a = |k: usize| if k == 0 { MultiPoly::one(z, nv) } else { MultiPoly::var(z, nv, k - 1) };
    let x = MultiPoly::var(z, nv, n);
    let a_prime: Vec<MultiPoly<Integers>> =
        (1..n).map(|k| (0..=k).fold(MultiPoly::zero(z, nv), |acc, i| &acc + &(&a(k - i) * &x.pow(i as u32)))).collect();
    let mut total = MultiPoly::zero(z, nv);
    for (m, terms) in slices.into_iter().enumerate() {
        if terms.is_empty() {
            continue;
        }
        let cm = MultiPoly::from_terms(z, n - 1, terms)?;
        let q = symmetrize_to_elementary(&cm)?;
        let sub = q.substitute(&a_prime)?;
        total = &total + &(&sub * &x.pow(m as u32));
        log::debug!("tschirnhaus: folded x1^{m} slice");
    }
    let pj = reduce_mod_generic(&total, n)?;
    Ok(TschirnhausForm { n, pj, twist: cov.twist })
}

fn stabilizer_violation(p: &MultiPoly<Integers>) -> Option<Perm> {
    adjacent_transpositions(p.nvars())
        .into_iter()
        .skip(1)
        .find(|s| apply_permutation(p, s).expect("matching length") != *p)
}

/// Splits `total(a, X)` by powers of `X` and reduces with
/// `X^n = -a_1 X^(n-1) - ... - a_n`.
fn reduce_mod_generic(total: &MultiPoly<Integers>, n: usize) -> Result<Vec<MultiPoly<Integers>>, TransformError> {
    let z = &Integers;
    let top = total.degree_in(n).unwrap_or(0) as usize;
    let mut by_power: Vec<Vec<(Vec<u32>, num_bigint::BigInt)>> = vec![Vec::new(); top.max(n - 1) + 1];
    for (e, c) in total.terms() {
        by_power[e[n] as usize].push((e[..n].to_vec(), c.clone()));
    }
    let mut coeffs = by_power.into_iter().map(|t| MultiPoly::from_terms(z, n, t)).collect::<Result<Vec<_>, _>>()?;
    for e in (n..coeffs.len()).rev() {
        let c = std::mem::replace(&mut coeffs[e], MultiPoly::zero(z, n));
        if c.is_zero() {
            continue;
        }
        for k in 1..=n {
            let ak = MultiPoly::var(z, n, k - 1);
            coeffs[e - k] = &coeffs[e - k] - &(&ak * &c);
        }
    }
    if coeffs[n..].iter().any(|c| !c.is_zero()) {
        return Err(TransformError::ReductionLeftover);
    }
    coeffs.truncate(n);
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covariants::build_covariant;
    use crate::gf::PrimeField;
    use crate::symmetric::elementary_symmetric;

    fn form_of(seed: MultiPoly<Integers>) -> TschirnhausForm {
        tschirnhaus_extract(&build_covariant(&seed, Twist::None).unwrap()).unwrap()
    }

    #[test]
    fn trivial_forms() {
        let n = 4;
        let f = form_of(MultiPoly::var(&Integers, n, 0));
        assert_eq!(f.format(), "X");
        let f = form_of(elementary_symmetric(&Integers, n, 1).unwrap());
        assert_eq!(f.format(), "-a1");
        let f = form_of(MultiPoly::var(&Integers, n, 0).pow(n as u32));
        assert_eq!(f.format(), "-a1*X^3 - a2*X^2 - a3*X - a4");
    }

    #[test]
    fn square_of_first_root() {
        let f = form_of(MultiPoly::var(&Integers, 3, 0).pow(5));
        let p = PrimeField::new(10007).unwrap();
        let cov = build_covariant(&MultiPoly::var(&Integers, 3, 0).pow(5), Twist::None).unwrap();
        let cov = cov.map_ring(&p, |c| p.from_int(c));
        for x in [[1u64, 2, 3], [5, 77, 1000], [0, 0, 9]] {
            assert!(f.roundtrip_holds(&cov, &x).unwrap());
        }
    }

    #[test]
    fn coefficients_of_roots() {
        let p = PrimeField::new(7).unwrap();
        // (X - 1)(X - 2) = X^2 - 3X + 2
        assert_eq!(coefficients_from_roots(&p, &[1, 2]), vec![4, 2]);
    }
}
