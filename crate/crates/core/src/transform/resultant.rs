//! Resultants and the image polynomial `∏ (Y - g(ξ_i))` over the roots of
//! a monic `f`, by several independent routes.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::QuotientField;
use crate::linalg::{det_bareiss, Matrix};
use crate::polyring::UniPoly;
use crate::ring::{Field, Ring};

/// `F[Y]` as a coefficient ring, so that bivariate work can reuse the
/// univariate and matrix code.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPolyRing<F: Field> {
    base: F,
}

impl<F: Field> UniPolyRing<F> {
    pub fn new(base: &F) -> Self {
        UniPolyRing { base: base.clone() }
    }
}

impl<F: Field> Ring for UniPolyRing<F> {
    type Elem = UniPoly<F>;

    fn zero(&self) -> UniPoly<F> {
        UniPoly::zero(&self.base)
    }
    fn one(&self) -> UniPoly<F> {
        UniPoly::one(&self.base)
    }
    fn is_zero(&self, a: &UniPoly<F>) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &UniPoly<F>, b: &UniPoly<F>) -> UniPoly<F> {
        a.add(b)
    }
    fn sub(&self, a: &UniPoly<F>, b: &UniPoly<F>) -> UniPoly<F> {
        a.sub(b)
    }
    fn neg(&self, a: &UniPoly<F>) -> UniPoly<F> {
        a.neg()
    }
    fn mul(&self, a: &UniPoly<F>, b: &UniPoly<F>) -> UniPoly<F> {
        a.mul(b)
    }
    fn from_int(&self, n: &BigInt) -> UniPoly<F> {
        UniPoly::constant(&self.base, self.base.from_int(n))
    }
    fn div_exact(&self, a: &UniPoly<F>, b: &UniPoly<F>) -> Option<UniPoly<F>> {
        if b.is_zero() {
            return None;
        }
        a.div_exact(b)
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn descriptor(&self) -> String {
        format!("{}[y]", self.base.descriptor())
    }
    fn format_elem(&self, a: &UniPoly<F>) -> String {
        a.format_with("y")
    }
    fn is_atomic(&self, a: &UniPoly<F>) -> bool {
        a.degree().unwrap_or(0) == 0
    }
    fn elem_to_json(&self, a: &UniPoly<F>) -> Value {
        Value::Array(a.coeffs().iter().map(|c| self.base.elem_to_json(c)).collect())
    }
    fn elem_from_json(&self, v: &Value) -> Option<UniPoly<F>> {
        let c = v.as_array()?.iter().map(|c| self.base.elem_from_json(c)).collect::<Option<Vec<_>>>()?;
        Some(UniPoly::new(&self.base, c))
    }
}

/// `Res(a, b) = lc(a)^deg(b) ∏_{a(α)=0} b(α)` by the Euclidean algorithm.
pub fn resultant<F: Field>(a: &UniPoly<F>, b: &UniPoly<F>) -> F::Elem {
    let field = a.ring();
    let (Some(m), Some(n)) = (a.degree(), b.degree()) else {
        return field.zero();
    };
    if n == 0 {
        return field.pow(&b.lc(), m as u64);
    }
    let r = a.rem(b);
    let Some(dr) = r.degree() else {
        return field.zero();
    };
    let sign = if m * n % 2 == 1 { field.neg(&field.one()) } else { field.one() };
    let scale = field.mul(&sign, &field.pow(&b.lc(), (m - dr) as u64));
    field.mul(&scale, &resultant(b, &r))
}

/// The same resultant over an integral domain by the subresultant chain,
/// which keeps every division exact.
pub fn resultant_subresultant<R: Ring>(a: &UniPoly<R>, b: &UniPoly<R>) -> R::Elem {
    let ring = a.ring().clone();
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return ring.zero();
    };
    let (mut a, mut b, mut negate) =
        if da < db { (b.clone(), a.clone(), da % 2 == 1 && db % 2 == 1) } else { (a.clone(), b.clone(), false) };
    if b.degree() == Some(0) {
        let r = ring.pow(&b.lc(), a.degree().expect("nonzero") as u64);
        return if negate { ring.neg(&r) } else { r };
    }
    let (mut g, mut h) = (ring.one(), ring.one());
    loop {
        let (dega, degb) = (a.degree().expect("nonzero"), b.degree().expect("nonzero"));
        let delta = (dega - degb) as u64;
        if dega % 2 == 1 && degb % 2 == 1 {
            negate = !negate;
        }
        let rem = a.pseudo_rem(&b);
        a = b;
        if rem.is_zero() {
            return ring.zero();
        }
        let den = ring.mul(&g, &ring.pow(&h, delta));
        let coeffs = rem.coeffs().iter().map(|c| ring.div_exact(c, &den).expect("subresultant division is exact"));
        b = UniPoly::new(&ring, coeffs.collect());
        g = a.lc();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => ring.div_exact(&ring.pow(&g, d), &ring.pow(&h, d - 1)).expect("exact"),
        };
        if b.degree() == Some(0) {
            break;
        }
    }
    let dega = a.degree().expect("nonzero") as u64;
    let r = ring.div_exact(&ring.pow(&b.lc(), dega), &ring.pow(&h, dega - 1)).expect("exact");
    if negate {
        ring.neg(&r)
    } else {
        r
    }
}

/// Sylvester matrix of `a` (`deg b` rows) stacked over `b` (`deg a` rows).
pub fn sylvester_matrix<R: Ring>(a: &UniPoly<R>, b: &UniPoly<R>) -> Matrix<R::Elem> {
    let ring = a.ring();
    let (m, n) = (a.deg().max(0) as usize, b.deg().max(0) as usize);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (p, count, deg) in [(a, n, m), (b, m, n)] {
        for i in 0..count {
            let mut row = vec![ring.zero(); size];
            for k in 0..=deg {
                row[i + deg - k] = p.coeff(k);
            }
            rows.push(row);
        }
    }
    rows
}

/// How to compute `∏ (Y - g(ξ_i))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ResultantMethod {
    /// Evaluation-interpolation on finite fields with enough points,
    /// Sylvester elimination on smaller ones, subresultants otherwise.
    Auto,
    EvalInterp,
    Sylvester,
    Subresultant,
    /// Characteristic polynomial of multiplication by `g(t)` on `K[t]/(f)`.
    CharPoly,
}

/// `Res_X(f(X), Y - g(X))` for monic `f`, which is `∏ (Y - g(ξ_i))`.
pub fn image_polynomial<F: Field>(f: &UniPoly<F>, g: &UniPoly<F>, method: ResultantMethod) -> Option<UniPoly<F>> {
    let field = f.ring();
    let n = f.degree()?;
    if !f.is_monic() {
        return None;
    }
    let g = g.rem(f);
    if g.degree().unwrap_or(0) == 0 {
        let c = g.coeff(0);
        return Some(UniPoly::new(field, vec![field.neg(&c), field.one()]).pow(n as u64));
    }
    let m = g.degree().expect("nonconstant");
    let points = n * m + 1;
    let method = match method {
        ResultantMethod::Auto => match field.order() {
            Some(q) if q >= points as u64 => ResultantMethod::EvalInterp,
            Some(_) => ResultantMethod::Sylvester,
            None => ResultantMethod::Subresultant,
        },
        other => other,
    };
    let ry = UniPolyRing::new(field);
    let lift = |p: &UniPoly<F>| p.map(&ry, |c| UniPoly::constant(field, c.clone()));
    let h = || {
        let mut c: Vec<UniPoly<F>> = g.coeffs().iter().map(|c| UniPoly::constant(field, field.neg(c))).collect();
        c[0] = c[0].add(&UniPoly::x(field));
        UniPoly::new(&ry, c)
    };
    let out = match method {
        ResultantMethod::EvalInterp => {
            if field.order().is_some_and(|q| q < points as u64) {
                return None;
            }
            let xs: Vec<F::Elem> = (0..points as u64).map(|i| field.element(i)).collect();
            let ys: Vec<F::Elem> =
                xs.iter().map(|y| resultant(f, &UniPoly::constant(field, y.clone()).sub(&g))).collect();
            interpolate(field, &xs, &ys)
        }
        ResultantMethod::Sylvester => det_bareiss(&ry, &sylvester_matrix(&lift(f), &h())),
        ResultantMethod::Subresultant => resultant_subresultant(&lift(f), &h()),
        ResultantMethod::CharPoly => QuotientField::new(f).char_poly(&g),
        ResultantMethod::Auto => unreachable!("resolved above"),
    };
    Some(out)
}

/// Newton interpolation through `(xs[i], ys[i])` with distinct `xs`.
pub fn interpolate<F: Field>(field: &F, xs: &[F::Elem], ys: &[F::Elem]) -> UniPoly<F> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = field.sub(&dd[i], &dd[i - 1]);
            let den = field.sub(&xs[i], &xs[i - j]);
            dd[i] = field.div(&num, &den).expect("distinct nodes");
        }
    }
    let mut p = UniPoly::zero(field);
    for i in (0..n).rev() {
        let lin = UniPoly::new(field, vec![field.neg(&xs[i]), field.one()]);
        p = p.mul(&lin).add(&UniPoly::constant(field, dd[i].clone()));
    }
    p
}

/// `disc(f) = (-1)^(n(n-1)/2) Res(f, f')` for monic `f`.
pub fn discriminant<F: Field>(f: &UniPoly<F>) -> F::Elem {
    let field = f.ring();
    let n = f.degree().unwrap_or(0);
    let r = resultant(f, &f.derivative());
    if (n * n.saturating_sub(1) / 2) % 2 == 1 {
        field.neg(&r)
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::PrimeField;
    use crate::ring::Rationals;
    use num_rational::BigRational;

    fn q(text: &str) -> UniPoly<Rationals> {
        UniPoly::parse(text, &Rationals, "x").unwrap()
    }

    #[test]
    fn small_resultants() {
        // Res(x^2 - 1, x - 2) = (1 - 2)(-1 - 2) = 3
        let r = resultant(&q("x^2 - 1"), &q("x - 2"));
        assert_eq!(r, BigRational::from_integer(3.into()));
        assert_eq!(resultant_subresultant(&q("x^2 - 1"), &q("x - 2")), r);
        assert_eq!(discriminant(&q("x^2 + x + 1")), BigRational::from_integer((-3).into()));
        assert_eq!(discriminant(&q("x^3 - 2")), BigRational::from_integer((-108).into()));
        assert!(resultant(&q("x^2 - 1"), &q("x^2 + x")).eq(&BigRational::from_integer(0.into())));
    }

    #[test]
    fn toy_square_map() {
        let f = q("(x - 1)*(x - 2)");
        let g = q("x^2");
        let expect = UniPoly::parse("(y - 1)*(y - 4)", &Rationals, "y").unwrap();
        for m in [
            ResultantMethod::Auto,
            ResultantMethod::Sylvester,
            ResultantMethod::Subresultant,
            ResultantMethod::CharPoly,
        ] {
            assert_eq!(image_polynomial(&f, &g, m).unwrap(), expect, "{m:?}");
        }
    }

    #[test]
    fn paths_agree_mod_p() {
        let p = PrimeField::new(101).unwrap();
        let f = UniPoly::parse("x^5 + 3*x^3 - x + 7", &p, "x").unwrap();
        let g = UniPoly::parse("2*x^4 + x^2 - 5*x + 1", &p, "x").unwrap();
        let reference = image_polynomial(&f, &g, ResultantMethod::CharPoly).unwrap();
        assert!(reference.is_monic() && reference.degree() == Some(5));
        for m in [ResultantMethod::EvalInterp, ResultantMethod::Sylvester, ResultantMethod::Subresultant] {
            assert_eq!(image_polynomial(&f, &g, m).unwrap(), reference, "{m:?}");
        }
    }
}
