//! Dense exact linear algebra over fields, plus fraction-free determinants
//! over integral domains.

use crate::polyring::UniPoly;
use crate::ring::{Field, Ring};

pub type Matrix<E> = Vec<Vec<E>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn row_reduce<F: Field>(field: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !field.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, p);
        let inv = field.inv(&m[r][c]).expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        for i in 0..rows {
            if i != r && !field.is_zero(&m[i][c]) {
                let f = m[i][c].clone();
                for j in c..cols {
                    let v = field.mul(&f, &m[r][j]);
                    m[i][j] = field.sub(&m[i][j], &v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut a = m.clone();
    row_reduce(field, &mut a).len()
}

/// Basis of the right kernel `{v : M v = 0}`.
pub fn kernel<F: Field>(field: &F, m: &Matrix<F::Elem>, cols: usize) -> Vec<Vec<F::Elem>> {
    let mut a = m.clone();
    let pivots = row_reduce(field, &mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); cols];
            v[f] = field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(&a[r][f]);
            }
            v
        })
        .collect()
}

/// Determinant by Gaussian elimination.
pub fn det<F: Field>(field: &F, m: &Matrix<F::Elem>) -> F::Elem {
    let n = m.len();
    let mut a = m.clone();
    let mut d = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !field.is_zero(&a[i][c])) else {
            return field.zero();
        };
        if p != c {
            a.swap(p, c);
            d = field.neg(&d);
        }
        d = field.mul(&d, &a[c][c]);
        let inv = field.inv(&a[c][c]).expect("nonzero pivot");
        for i in c + 1..n {
            if field.is_zero(&a[i][c]) {
                continue;
            }
            let f = field.mul(&a[i][c], &inv);
            for j in c..n {
                let v = field.mul(&f, &a[c][j]);
                a[i][j] = field.sub(&a[i][j], &v);
            }
        }
    }
    d
}

/// Fraction-free (Bareiss) determinant over an integral domain whose
/// `div_exact` is exact division.
pub fn det_bareiss<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> R::Elem {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    let mut a = m.clone();
    let mut sign = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        if ring.is_zero(&a[k][k]) {
            let Some(p) = (k + 1..n).find(|&i| !ring.is_zero(&a[i][k])) else {
                return ring.zero();
            };
            a.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = ring.sub(&ring.mul(&a[k][k], &a[i][j]), &ring.mul(&a[i][k], &a[k][j]));
                a[i][j] = ring.div_exact(&num, &prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        ring.neg(&d)
    } else {
        d
    }
}

/// Characteristic polynomial `det(x I - M)` via reduction to Hessenberg form.
pub fn char_poly<F: Field>(field: &F, m: &Matrix<F::Elem>) -> UniPoly<F> {
    let n = m.len();
    let mut h = m.clone();
    for c in 1..n.saturating_sub(1) {
        let Some(i) = (c..n).find(|&i| !field.is_zero(&h[i][c - 1])) else {
            continue;
        };
        if i != c {
            h.swap(i, c);
            for row in h.iter_mut() {
                row.swap(i, c);
            }
        }
        let inv = field.inv(&h[c][c - 1]).expect("nonzero");
        for i in c + 1..n {
            let u = field.mul(&h[i][c - 1], &inv);
            if field.is_zero(&u) {
                continue;
            }
            for j in 0..n {
                let v = field.mul(&u, &h[c][j]);
                h[i][j] = field.sub(&h[i][j], &v);
            }
            for row in h.iter_mut() {
                let v = field.mul(&u, &row[i]);
                row[c] = field.add(&row[c], &v);
            }
        }
    }
    let x = UniPoly::x(field);
    let mut p = vec![UniPoly::one(field)];
    for k in 1..=n {
        let mut next = x.sub(&UniPoly::constant(field, h[k - 1][k - 1].clone())).mul(&p[k - 1]);
        let mut t = field.one();
        for i in (1..k).rev() {
            t = field.mul(&t, &h[i][i - 1]);
            let coef = field.mul(&h[i - 1][k - 1], &t);
            next = next.sub(&p[i - 1].scale(&coef));
        }
        p.push(next);
    }
    p.pop().expect("nonempty")
}
