//! Irreducibility, distinct-degree factorization and root finding over
//! finite fields. Every routine here assumes `field.order()` is `Some`.

use super::prime_factors;
use crate::polyring::UniPoly;
use crate::ring::Field;

fn order_of<F: Field>(f: &UniPoly<F>) -> u128 {
    f.ring().order().expect("finite field required") as u128
}

/// `x^(q^i) mod f` for `i = 0..=n`.
fn frobenius_powers<F: Field>(f: &UniPoly<F>, n: usize) -> Vec<UniPoly<F>> {
    let q = order_of(f);
    let mut out = vec![UniPoly::x(f.ring()).rem(f)];
    for i in 0..n {
        let next = out[i].pow_mod(q, f);
        out.push(next);
    }
    out
}

/// Rabin's test: `x^(q^n) = x mod f` and `gcd(x^(q^(n/l)) - x, f) = 1` for
/// every prime `l | n`.
pub fn is_irreducible<F: Field>(f: &UniPoly<F>) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let fm = f.monic();
    let fp = frobenius_powers(&fm, n);
    if fp[n] != fp[0] {
        return false;
    }
    prime_factors(n as u64).into_iter().all(|l| fp[n / l as usize].sub(&fp[0]).gcd(&fm).degree() == Some(0))
}

/// Reference test by trial division with every monic polynomial of degree
/// at most `deg f / 2`. Exponential; meant for cross-checking.
pub fn is_irreducible_by_trial_division<F: Field>(f: &UniPoly<F>) -> bool {
    let field = f.ring();
    let q = field.order().expect("finite field");
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(n) => n,
    };
    for d in 1..=n / 2 {
        for i in 0..q.pow(d as u32) {
            let mut coeffs: Vec<F::Elem> = (0..d).map(|j| field.element(i / q.pow(j as u32) % q)).collect();
            coeffs.push(field.one());
            if f.rem(&UniPoly::new(field, coeffs)).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// `(d, g)` where `g` is the product of all irreducible factors of degree `d`.
pub fn distinct_degree_factorization<F: Field>(f: &UniPoly<F>) -> Vec<(usize, UniPoly<F>)> {
    let q = order_of(f);
    let field = f.ring();
    let mut rest = f.monic();
    let x = UniPoly::x(field);
    let mut h = x.rem(&rest);
    let mut out = Vec::new();
    let mut d = 0;
    while let Some(deg) = rest.degree() {
        if deg < 2 * (d + 1) {
            if deg > 0 {
                out.push((deg, rest.clone()));
            }
            break;
        }
        d += 1;
        h = h.pow_mod(q, &rest);
        let g = h.sub(&x).gcd(&rest);
        if g.degree().is_some_and(|e| e > 0) {
            rest = rest.div_exact(&g).expect("gcd divides");
            h = h.rem(&rest);
            out.push((d, g));
        }
    }
    out
}

/// Product of the distinct linear factors of `g`.
fn linear_part<F: Field>(g: &UniPoly<F>) -> UniPoly<F> {
    let gm = g.monic();
    let x = UniPoly::x(g.ring());
    let xq = x.pow_mod(order_of(g), &gm);
    xq.sub(&x).gcd(&gm)
}

/// Splits a monic product of distinct linear factors by deterministic
/// equal-degree splitting and collects the roots.
fn split_linear<F: Field>(h: &UniPoly<F>, out: &mut Vec<F::Elem>) {
    let field = h.ring();
    match h.degree() {
        None | Some(0) => return,
        Some(1) => {
            out.push(field.neg(&field.div(&h.coeff(0), &h.coeff(1)).expect("nonzero")));
            return;
        }
        _ => {}
    }
    let q = order_of(h);
    let x = UniPoly::x(field);
    for i in 1..q as u64 {
        let delta = field.element(i);
        let w = if q % 2 == 1 {
            x.add(&UniPoly::constant(field, delta)).pow_mod((q - 1) / 2, h).sub(&UniPoly::one(field))
        } else {
            // Absolute trace of delta*x, q = 2^k.
            let k = q.trailing_zeros();
            let mut t = UniPoly::monomial(field, delta, 1).rem(h);
            let mut acc = t.clone();
            for _ in 1..k {
                t = t.mul_mod(&t, h);
                acc = acc.add(&t);
            }
            acc
        };
        let g = w.gcd(h);
        if let Some(d) = g.degree() {
            if d > 0 && Some(d) < h.degree() {
                split_linear(&g, out);
                split_linear(&h.div_exact(&g).expect("factor divides"), out);
                return;
            }
        }
    }
    unreachable!("equal-degree splitting exhausted the field");
}

/// Distinct roots of `g` in its coefficient field, in enumeration-index
/// order of the splitting steps (deterministic).
pub fn roots<F: Field>(g: &UniPoly<F>) -> Vec<F::Elem> {
    if g.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    split_linear(&linear_part(g), &mut out);
    out
}

/// Roots by exhaustive evaluation; for small fields and test oracles.
pub fn roots_by_search<F: Field>(g: &UniPoly<F>) -> Vec<F::Elem> {
    let field = g.ring();
    let q = field.order().expect("finite field");
    (0..q).map(|i| field.element(i)).filter(|a| field.is_zero(&g.eval(a))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{FqField, PrimeField};

    #[test]
    fn small_cases() {
        let f3 = PrimeField::new(3).unwrap();
        let f5 = PrimeField::new(5).unwrap();
        assert!(is_irreducible(&UniPoly::from_i64(&f3, &[1, 0, 1])));
        assert!(!is_irreducible(&UniPoly::from_i64(&f5, &[1, 0, 1])));
        assert!(is_irreducible(&UniPoly::from_i64(&f3, &[-1, -1, 0, 0, 0, 1])));
        // Square of an irreducible is rejected.
        let q = UniPoly::from_i64(&f3, &[1, 0, 1]);
        assert!(!is_irreducible(&q.mul(&q)));
    }

    #[test]
    fn agrees_with_trial_division_over_gf2_degree_6() {
        let f2 = PrimeField::new(2).unwrap();
        for bits in 0..64u64 {
            let mut coeffs: Vec<u64> = (0..6).map(|j| bits >> j & 1).collect();
            coeffs.push(1);
            let f = UniPoly::new(&f2, coeffs);
            assert_eq!(is_irreducible(&f), is_irreducible_by_trial_division(&f), "{f}");
        }
    }

    #[test]
    fn ddf_counts() {
        let f7 = PrimeField::new(7).unwrap();
        // (x-1)(x-2)(x^2+1)
        let lin = UniPoly::from_i64(&f7, &[-1, 1]).mul(&UniPoly::from_i64(&f7, &[-2, 1]));
        let quad = UniPoly::from_i64(&f7, &[1, 0, 1]);
        let f = lin.mul(&quad);
        let parts = distinct_degree_factorization(&f);
        assert_eq!(parts.iter().map(|(d, g)| (*d, g.degree().unwrap())).collect::<Vec<_>>(), vec![(1, 2), (2, 2)]);
    }

    #[test]
    fn root_finding_matches_search() {
        let f4 = FqField::with_default_modulus(2, 4).unwrap();
        let f13 = PrimeField::new(13).unwrap();
        let g = UniPoly::from_i64(&f13, &[-1, 0, 0, 0, 0, 0, 1]);
        let mut r = roots(&g);
        r.sort();
        assert_eq!(r, roots_by_search(&g));
        let h = UniPoly::new(&f4, vec![1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        let mut r = roots(&h);
        r.sort();
        assert_eq!(r, roots_by_search(&h));
    }
}
