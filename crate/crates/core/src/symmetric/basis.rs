use super::{adjacent_transpositions, apply_permutation, SymError};
use crate::polyring::MultiPoly;
use crate::ring::Ring;

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// `e_k(x_1, ..., x_n)`.
pub fn elementary_symmetric<R: Ring>(ring: &R, n: usize, k: usize) -> Result<MultiPoly<R>, SymError> {
    if k > n {
        return Err(SymError::DegreeOutOfRange { k, n });
    }
    let terms = subsets(n, k).into_iter().map(|s| {
        let mut e = vec![0u32; n];
        for i in s {
            e[i] = 1;
        }
        (e, ring.one())
    });
    Ok(MultiPoly::from_terms(ring, n, terms)?)
}

/// `e_0, ..., e_k` of the given polynomials, via
/// `E_j <- E_j + p * E_{j-1}` one polynomial at a time.
pub fn elem_sym_all<R: Ring>(polys: &[MultiPoly<R>], k: usize) -> Result<Vec<MultiPoly<R>>, SymError> {
    fold(polys, k, false)
}

fn fold<R: Ring>(polys: &[MultiPoly<R>], k: usize, top_only: bool) -> Result<Vec<MultiPoly<R>>, SymError> {
    let first = polys.first().ok_or(SymError::Empty)?;
    let (ring, nv) = (first.ring().clone(), first.nvars());
    let mut e = vec![MultiPoly::one(&ring, nv)];
    e.extend((0..k).map(|_| MultiPoly::zero(&ring, nv)));
    for (i, p) in polys.iter().enumerate() {
        for j in (1..=k.min(i + 1)).rev() {
            // E_j can no longer reach E_k with the polynomials left.
            if top_only && j + (polys.len() - 1 - i) < k {
                break;
            }
            let add = p.try_mul(&e[j - 1])?;
            e[j] = e[j].try_add(&add)?;
        }
        log::debug!("elementary symmetric: folded {}/{} components", i + 1, polys.len());
    }
    Ok(e)
}

/// `e_k(p_1, ..., p_m)` for polynomials `p_i`.
pub fn elem_sym_of<R: Ring>(polys: &[MultiPoly<R>], k: usize) -> Result<MultiPoly<R>, SymError> {
    if k > polys.len() {
        return Err(SymError::DegreeOutOfRange { k, n: polys.len() });
    }
    if k == 0 {
        let first = polys.first().ok_or(SymError::Empty)?;
        return Ok(MultiPoly::one(first.ring(), first.nvars()));
    }
    Ok(fold(polys, k, true)?.swap_remove(k))
}

/// `Δ = ∏_{i<j} (x_i - x_j)`.
pub fn vandermonde_delta<R: Ring>(ring: &R, n: usize) -> MultiPoly<R> {
    let x: Vec<MultiPoly<R>> = (0..n).map(|i| MultiPoly::var(ring, n, i)).collect();
    let mut acc = MultiPoly::one(ring, n);
    for i in 0..n {
        for j in i + 1..n {
            acc = &acc * &(&x[i] - &x[j]);
        }
    }
    acc
}

/// Invariance under the adjacent transpositions, which generate `S_n`.
pub fn is_symmetric<R: Ring>(p: &MultiPoly<R>) -> bool {
    adjacent_transpositions(p.nvars()).iter().all(|s| apply_permutation(p, s).expect("matching length") == *p)
}

pub fn is_skew<R: Ring>(p: &MultiPoly<R>) -> bool {
    let minus = p.neg();
    adjacent_transpositions(p.nvars()).iter().all(|s| apply_permutation(p, s).expect("matching length") == minus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integers;
    use num_bigint::BigInt;

    #[test]
    fn small_elementary() {
        assert_eq!(elementary_symmetric(&Integers, 3, 2).unwrap().to_string(), "x1*x2 + x1*x3 + x2*x3");
        assert_eq!(elementary_symmetric(&Integers, 5, 0).unwrap(), MultiPoly::one(&Integers, 5));
        assert_eq!(elementary_symmetric(&Integers, 6, 3).unwrap().len(), 20);
        assert!(elementary_symmetric(&Integers, 3, 4).is_err());
        let pt: Vec<BigInt> = [1, 2, 3].map(BigInt::from).to_vec();
        assert_eq!(elementary_symmetric(&Integers, 3, 2).unwrap().eval(&pt).unwrap(), BigInt::from(11));
    }

    #[test]
    fn elem_sym_of_variables() {
        let xs: Vec<_> = (0..4).map(|i| MultiPoly::var(&Integers, 4, i)).collect();
        let all = elem_sym_all(&xs, 4).unwrap();
        for k in 0..=4 {
            assert_eq!(elem_sym_of(&xs, k).unwrap(), elementary_symmetric(&Integers, 4, k).unwrap());
            assert_eq!(all[k], elementary_symmetric(&Integers, 4, k).unwrap());
        }
    }

    #[test]
    fn delta_shapes() {
        assert_eq!(vandermonde_delta(&Integers, 2).to_string(), "x1 - x2");
        let pt: Vec<BigInt> = [1, 2, 3].map(BigInt::from).to_vec();
        assert_eq!(vandermonde_delta(&Integers, 3).eval(&pt).unwrap(), BigInt::from(-2));
        let d5 = vandermonde_delta(&Integers, 5);
        assert_eq!(d5.homogeneous_degree(), Some(10));
        assert_eq!(d5.leading_term().unwrap(), (vec![4, 3, 2, 1, 0], BigInt::from(1)));
        assert!(is_skew(&d5) && !is_symmetric(&d5));
        assert_eq!(vandermonde_delta(&Integers, 6).homogeneous_degree(), Some(15));
        assert!(is_symmetric(&(&d5 * &d5)));
        assert!(is_symmetric(&elementary_symmetric(&Integers, 6, 3).unwrap()));
    }
}
