//! Normal forms `x^3 + a x + a`, `x^4 + a x^2 + b x + b`,
//! `x^5 + b x^3 + c x + c` and `x^6 + b x^4 + c x^2 + d x + d`.

use std::sync::OnceLock;

use serde::Serialize;
use serde_json::{json, Value};

use super::decompose::NormalizeField;
use super::{
    image_polynomial, joubert_map, tschirnhaus_extract, QuotientField, ResultantMethod, Shape, TransformError,
    TschirnhausForm, CHAR2_UNSUPPORTED, CHAR_DIVIDES_DEGREE,
};
use crate::covariants::hermite_covariant;
use crate::gf::{lex_least_irreducible, roots, table_entries, Embedding, FqField, PrimeField};
use crate::polyring::{Domain, UniPoly};
use crate::ring::{Field, Ring};

/// Largest sup-norm of integer generator coordinates tried over `Q`.
pub const Q_SEARCH_BOUND: i64 = 5;

/// Fields below this size take the quintic from the table.
pub const TABLE_LIMIT: u64 = 41;

/// The Hermite Tschirnhaus form, extracted once.
pub fn hermite_form() -> &'static TschirnhausForm {
    static FORM: OnceLock<TschirnhausForm> = OnceLock::new();
    FORM.get_or_init(|| tschirnhaus_extract(&hermite_covariant()).expect("the Hermite covariant is untwisted"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// Already in trace-zero form or shifted by `Tr/n`.
    TraceShift,
    /// Trace-zero generator found by enumeration.
    TraceSearch,
    /// Through `y = x + x^2` (cubic) or `y = b/2 + x + x^2` (quartic).
    SquareShift,
    HermiteSearch,
    Table,
    ExceptionF2,
    JoubertTwice,
    JoubertTwiceSearch,
}

#[derive(Clone, Debug)]
pub struct NormalizedEquation<F: Field> {
    pub original: UniPoly<F>,
    pub transformed: UniPoly<F>,
    pub shape: Shape,
    pub lambda: F::Elem,
    /// Element of `K[x]/(original)` whose characteristic polynomial is
    /// `transformed`; absent when no root was located.
    pub element: Option<UniPoly<F>>,
    /// The generator the covariant or substitution was applied to.
    pub generator: UniPoly<F>,
    pub route: Route,
    pub tried: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub monic: bool,
    pub shape_ok: bool,
    pub irreducible: Option<bool>,
    /// `char_poly(element) = transformed`, so the element generates a
    /// degree-n extension isomorphic to `K[x]/(original)`.
    pub element_ok: Option<bool>,
    pub element_degree: Option<usize>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.monic && self.shape_ok && self.irreducible == Some(true) && self.element_ok != Some(false)
    }
}

impl<F: NormalizeField> NormalizedEquation<F> {
    pub fn verify(&self) -> Verification {
        let l = QuotientField::new(&self.original);
        let element_ok = self.element.as_ref().map(|e| l.char_poly(e) == self.transformed);
        Verification {
            monic: self.transformed.is_monic(),
            shape_ok: self.shape.matches(&self.transformed),
            irreducible: F::irreducibility(&self.transformed),
            element_ok,
            element_degree: self.element.as_ref().map(|e| l.element_degree(e)),
        }
    }

    pub fn to_json(&self) -> Value {
        let field = self.original.ring();
        json!({
            "field": field.descriptor(),
            "original": self.original.format_with("x"),
            "transformed": self.transformed.format_with("y"),
            "shape": self.shape,
            "lambda": field.format_elem(&self.lambda),
            "generator": self.generator.format_with("x"),
            "element": self.element.as_ref().map(|e| e.format_with("x")),
            "route": self.route,
            "candidates_tried": self.tried,
        })
    }
}

/// `λ^(-n) f(λ x)` with `λ = d/c`, which makes the linear and constant
/// coefficients equal. Returns the new polynomial and `λ`.
pub fn scale_tail<F: Field>(f: &UniPoly<F>) -> Result<(UniPoly<F>, F::Elem), TransformError> {
    let field = f.ring();
    let n = f.degree().unwrap_or(0);
    let (c, d) = (f.coeff(1), f.coeff(0));
    if n < 2 || field.is_zero(&c) || field.is_zero(&d) {
        return Err(TransformError::ZeroTail);
    }
    let lambda = field.div(&d, &c).expect("c is nonzero");
    let mu = field.inv(&lambda).expect("λ is nonzero");
    let lead = field.inv(&f.lc()).ok_or(TransformError::NotMonic)?;
    let coeffs = (0..=n).map(|k| field.mul(&field.mul(&f.coeff(k), &lead), &field.pow(&mu, (n - k) as u64)));
    Ok((UniPoly::new(field, coeffs.collect()), lambda))
}

fn prepare<F: NormalizeField>(f: &UniPoly<F>, n: usize) -> Result<UniPoly<F>, TransformError> {
    let found = f.degree().unwrap_or(0);
    if found != n {
        return Err(TransformError::DegreeMismatch { expected: n, found });
    }
    let f = f.monic();
    if !f.is_separable() {
        return Err(TransformError::NotSeparable);
    }
    match F::irreducibility(&f) {
        Some(true) => Ok(f),
        Some(false) => Err(TransformError::Reducible),
        None => Err(TransformError::IrreducibilityUnknown),
    }
}

/// Elements of `K[x]/(f)` in the search order: base-`q` counting with the
/// top coordinate slowest over finite fields; over `Q`, integer vectors by
/// growing sup-norm up to [`Q_SEARCH_BOUND`], each shell in the same
/// lexicographic order with digits `0, 1, -1, 2, -2, ...`.
pub fn candidates<F: Field>(l: &QuotientField<F>) -> Box<dyn Iterator<Item = UniPoly<F>> + '_> {
    let n = l.degree() as u32;
    let base = l.base();
    match l.order() {
        Some(q) => Box::new((0..q).map(move |i| l.element(i))),
        None => Box::new((1..=Q_SEARCH_BOUND as u64).flat_map(move |s| {
            let width = 2 * s + 1;
            (0..width.pow(n)).filter_map(move |i| {
                let digits: Vec<u64> = (0..n).map(|j| i / width.pow(j) % width).collect();
                if digits.iter().all(|&d| d + 1 < 2 * s) {
                    return None;
                }
                Some(UniPoly::new(base, digits.iter().map(|&d| base.element(d)).collect()))
            })
        })),
    }
}

fn finish<F: NormalizeField>(
    original: &UniPoly<F>,
    poly: UniPoly<F>,
    element: Option<UniPoly<F>>,
    generator: UniPoly<F>,
    shape: Shape,
    route: Route,
    tried: u64,
) -> Result<NormalizedEquation<F>, TransformError> {
    let field = original.ring();
    let l = QuotientField::new(original);
    let (transformed, lambda) = scale_tail(&poly)?;
    let mu = field.inv(&lambda).expect("λ is nonzero");
    let element = element.map(|e| l.mul(&e, &l.embed(&mu)));
    let out =
        NormalizedEquation { original: original.clone(), transformed, shape, lambda, element, generator, route, tried };
    if !shape.matches(&out.transformed) {
        return Err(TransformError::Unsupported { code: "SHAPE", reason: "output lost its shape".into() });
    }
    Ok(out)
}

/// A root of `g` inside `K[x]/(f)` for finite `K`.
pub fn root_in<F: Field>(l: &QuotientField<F>, g: &UniPoly<F>) -> Option<UniPoly<F>> {
    l.order()?;
    let lifted = g.map(l, |c| l.embed(c));
    roots(&lifted).into_iter().next()
}

/// A generator of `K[x]/(f)` with trace zero.
pub fn trace_zero_generator<F: Field>(l: &QuotientField<F>) -> Result<(UniPoly<F>, Route, u64), TransformError> {
    let field = l.base();
    let n = l.degree();
    let nk = field.from_i64(n as i64);
    if !field.is_zero(&nk) {
        let shift = field.div(&l.trace(&l.theta()), &nk).expect("n is invertible");
        let xi = l.sub(&l.theta(), &l.embed(&shift));
        return Ok((xi, Route::TraceShift, 1));
    }
    let Some(q) = l.order() else {
        return Err(TransformError::Unsupported {
            code: CHAR_DIVIDES_DEGREE,
            reason: "infinite field whose characteristic divides the degree".into(),
        });
    };
    let mut tried = 0;
    for i in 0..q {
        let xi = l.element(i);
        if field.is_zero(&l.trace(&xi)) && l.is_generator(&xi) {
            return Ok((xi, Route::TraceSearch, tried + 1));
        }
        tried += 1;
    }
    Err(TransformError::Unsupported {
        code: CHAR_DIVIDES_DEGREE,
        reason: format!("no trace-zero generator among {tried} elements"),
    })
}

pub fn normalize_cubic<F: NormalizeField>(f: &UniPoly<F>) -> Result<NormalizedEquation<F>, TransformError> {
    let f = prepare(f, 3)?;
    let field = f.ring();
    let l = QuotientField::new(&f);
    let (xi, route, tried) = trace_zero_generator(&l)?;
    let g = l.char_poly(&xi);
    let (b, c) = (g.coeff(1), g.coeff(0));
    if !field.is_zero(&b) {
        return finish(&f, g, Some(xi.clone()), xi, Shape::CubicAa, route, tried);
    }
    if field.characteristic() == 3 {
        return Err(TransformError::NotSeparable);
    }
    // x^3 + c  ->  y = x + x^2:  y^3 + 3c y + c - c^2
    let eta = l.add(&xi, &l.mul(&xi, &xi));
    let h = UniPoly::new(
        field,
        vec![field.sub(&c, &field.mul(&c, &c)), field.mul(&field.from_i64(3), &c), field.zero(), field.one()],
    );
    finish(&f, h, Some(eta), xi, Shape::CubicAa, Route::SquareShift, tried)
}

/// `y = b/2 + x + x^2` applied to `x^4 + b x^2 + d`, with `D = b^2 - 4d`:
/// `y^4 + (b - D/2) y^2 - D y + (D + 2b)^2/16 - D/4`.
pub fn biquadratic_shift<F: Field>(field: &F, b: &F::Elem, d: &F::Elem) -> Option<UniPoly<F>> {
    let two = field.from_i64(2);
    let disc = field.sub(&field.mul(b, b), &field.mul(&field.from_i64(4), d));
    let half_d = field.div(&disc, &two)?;
    let s = field.add(&disc, &field.mul(&two, b));
    let c0 = field.sub(&field.div(&field.mul(&s, &s), &field.from_i64(16))?, &field.div(&disc, &field.from_i64(4))?);
    Some(UniPoly::new(field, vec![c0, field.neg(&disc), field.sub(b, &half_d), field.zero(), field.one()]))
}

pub fn normalize_quartic<F: NormalizeField>(f: &UniPoly<F>) -> Result<NormalizedEquation<F>, TransformError> {
    let f = prepare(f, 4)?;
    let field = f.ring();
    let l = QuotientField::new(&f);
    let (xi0, route, first_tried) = trace_zero_generator(&l)?;
    let scaled = (2..64u64).map(|i| l.mul(&xi0, &l.embed(&field.element(i))));
    let searched = candidates(&l).filter(|x| field.is_zero(&l.trace(x)));
    let mut tried = first_tried - 1;
    for xi in std::iter::once(xi0.clone()).chain(scaled).chain(searched) {
        tried += 1;
        if !l.is_generator(&xi) {
            continue;
        }
        let g = l.char_poly(&xi);
        let (b, c, d) = (g.coeff(2), g.coeff(1), g.coeff(0));
        let route = if xi == xi0 { route } else { Route::TraceSearch };
        if !field.is_zero(&c) {
            return finish(&f, g, Some(xi.clone()), xi, Shape::QuarticAbb, route, tried);
        }
        if field.characteristic() == 2 {
            return Err(TransformError::NotSeparable);
        }
        let h = biquadratic_shift(field, &b, &d).expect("characteristic is not 2");
        if F::irreducibility(&h) == Some(true) {
            let half_b = field.div(&b, &field.from_i64(2)).expect("characteristic is not 2");
            let eta = l.add(&l.add(&l.embed(&half_b), &xi), &l.mul(&xi, &xi));
            return finish(&f, h, Some(eta), xi, Shape::QuarticAbb, Route::SquareShift, tried);
        }
    }
    Err(TransformError::SearchExhausted { tried, what: "quartic generator with irreducible image".into() })
}

pub fn normalize_quintic<F: NormalizeField>(f: &UniPoly<F>) -> Result<NormalizedEquation<F>, TransformError> {
    let f = prepare(f, 5)?;
    let field = f.ring();
    let l = QuotientField::new(&f);
    if field.order() == Some(2) {
        let g = UniPoly::new(field, [1, 0, 0, 1, 0, 1].map(|c| field.from_i64(c)).to_vec());
        let element = root_in(&l, &g);
        let out = NormalizedEquation {
            original: f.clone(),
            transformed: g,
            shape: Shape::TraceZero,
            lambda: field.one(),
            element,
            generator: l.theta(),
            route: Route::ExceptionF2,
            tried: 0,
        };
        return Ok(out);
    }
    if let Some(g) = field.small_quintic() {
        let element = root_in(&l, &g);
        let out = NormalizedEquation {
            original: f.clone(),
            transformed: g,
            shape: Shape::QuinticBcc,
            lambda: field.one(),
            element,
            generator: l.theta(),
            route: Route::Table,
            tried: 0,
        };
        if F::irreducibility(&out.transformed) != Some(true) {
            return Err(TransformError::Reducible);
        }
        return Ok(out);
    }
    let form = hermite_form();
    let mut tried = 0;
    for xi in candidates(&l) {
        if !l.is_generator(&xi) {
            continue;
        }
        tried += 1;
        let fx = l.char_poly(&xi);
        let g = form.for_poly(&fx)?;
        let image = image_polynomial(&fx, &g, ResultantMethod::Auto).expect("monic input");
        if field.is_zero(&image.coeff(1)) || F::irreducibility(&image) != Some(true) {
            log::debug!("quintic search: candidate {tried} rejected");
            continue;
        }
        let element = l.eval(&g, &xi);
        return finish(&f, image, Some(element), xi, Shape::QuinticBcc, Route::HermiteSearch, tried);
    }
    Err(TransformError::SearchExhausted { tried, what: "generator with irreducible Hermite image".into() })
}

pub fn normalize_sextic<F: NormalizeField>(f: &UniPoly<F>) -> Result<NormalizedEquation<F>, TransformError> {
    let field = f.ring();
    if field.characteristic() == 2 {
        return Err(TransformError::Unsupported {
            code: CHAR2_UNSUPPORTED,
            reason: "the Joubert form is not known to exist in characteristic 2".into(),
        });
    }
    let f = prepare(f, 6)?;
    let l = QuotientField::new(&f);
    let map = joubert_map();
    let first = std::iter::once(l.theta());
    let mut tried = 0;
    for xi in first.chain(candidates(&l).filter(|x| *x != l.theta())) {
        if !l.is_generator(&xi) {
            continue;
        }
        tried += 1;
        let fx = l.char_poly(&xi);
        let once = map.apply(&fx)?;
        if !once.is_separable() {
            continue;
        }
        let twice = map.apply(&once)?;
        match F::irreducibility(&twice) {
            Some(true) => {}
            Some(false) => continue,
            None => return Err(TransformError::IrreducibilityUnknown),
        }
        let route = if tried == 1 { Route::JoubertTwice } else { Route::JoubertTwiceSearch };
        let element = root_in(&l, &twice);
        return finish(&f, twice, element, xi, Shape::SexticBcdd, route, tried);
    }
    Err(TransformError::SearchExhausted { tried, what: "generator with separable Joubert image".into() })
}

/// Dispatches on the degree.
pub fn normalize<F: NormalizeField>(f: &UniPoly<F>) -> Result<NormalizedEquation<F>, TransformError> {
    match f.degree().unwrap_or(0) {
        3 => normalize_cubic(f),
        4 => normalize_quartic(f),
        5 => normalize_quintic(f),
        6 => normalize_sextic(f),
        found => Err(TransformError::DegreeMismatch { expected: 5, found }),
    }
}

/// A fixed irreducible polynomial of degree `n`: the lexicographically
/// least one over a finite field, `x^n - 2` over `Q`.
pub fn default_polynomial<F: Field>(field: &F, n: usize) -> Option<UniPoly<F>> {
    match field.order() {
        Some(_) => lex_least_irreducible(field, n as u32),
        None => {
            let mut c = vec![field.zero(); n + 1];
            c[0] = field.from_i64(-2);
            c[n] = field.one();
            Some(UniPoly::new(field, c))
        }
    }
}

fn table_poly_for_prime(p: u64) -> Option<String> {
    table_entries().into_iter().find(|e| e.field == format!("GF({p})")).map(|e| e.polynomials[0].clone())
}

pub(super) fn small_quintic_prime(field: &PrimeField) -> Option<UniPoly<PrimeField>> {
    if field.p() >= TABLE_LIMIT {
        return None;
    }
    UniPoly::parse(&table_poly_for_prime(field.p())?, field, "x").ok()
}

/// The table quintic of the largest listed subfield, carried into `field`.
pub(super) fn small_quintic_ext(field: &FqField) -> Option<UniPoly<FqField>> {
    if field.order()? >= TABLE_LIMIT {
        return None;
    }
    let k = field.k();
    for entry in table_entries().into_iter().rev() {
        let Ok(domain) = Domain::parse(&entry.field) else { continue };
        let text = &entry.polynomials[0];
        match domain {
            Domain::Prime(p) if p.p() == field.p() && !k.is_multiple_of(5) => {
                let g = UniPoly::parse(text, &p, "x").ok()?;
                return Some(g.map(field, |c| field.from_prime(*c)));
            }
            Domain::Ext(sub)
                if sub.p() == field.p() && k.is_multiple_of(sub.k()) && !(k / sub.k()).is_multiple_of(5) =>
            {
                let g = UniPoly::parse(text, &sub, "x").ok()?;
                let emb = Embedding::new(&sub, field).ok()?;
                return Some(g.map(field, |c| emb.map(*c)));
            }
            _ => {}
        }
    }
    None
}
