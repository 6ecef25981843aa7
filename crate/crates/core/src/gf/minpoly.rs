use rustc_hash::FxHashMap;

use super::{roots, FqField, GfError, PrimeField};
use crate::polyring::UniPoly;
use crate::ring::{Field, Ring};

/// `prod (X - c)` over the orbit of `a` under `x -> x^q`, as a polynomial
/// with coefficients in `field`.
fn orbit_product(field: &FqField, a: u64, q: u64) -> UniPoly<FqField> {
    let mut h = UniPoly::one(field);
    let mut c = a;
    loop {
        h = h.mul(&UniPoly::new(field, vec![field.neg(&c), 1]));
        c = field.pow(&c, q);
        if c == a {
            return h;
        }
    }
}

/// Minimal polynomial of `a` over the prime field.
pub fn minimal_polynomial_over_prime(field: &FqField, a: u64) -> UniPoly<PrimeField> {
    let h = orbit_product(field, a, field.p());
    let base = field.base();
    let coeffs = h
        .coeffs()
        .iter()
        .map(|&c| {
            let v = field.coords(c);
            debug_assert!(v[1..].iter().all(|&x| x == 0), "orbit coefficients lie in the prime field");
            v[0]
        })
        .collect();
    UniPoly::new(base, coeffs)
}

/// Minimal polynomial of `a` over a subfield `sub` embedded into `field`.
pub fn minimal_polynomial(field: &FqField, a: u64, sub: &FqField) -> Result<UniPoly<FqField>, GfError> {
    let emb = Embedding::new(sub, field)?;
    let h = orbit_product(field, a, sub.order().expect("finite"));
    let coeffs = h
        .coeffs()
        .iter()
        .map(|c| emb.preimage(*c).ok_or_else(|| GfError::NotSubfield("coefficient outside the subfield".into())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(UniPoly::new(sub, coeffs))
}

/// Field embedding `sub -> sup`, fixed by sending the generator of `sub` to
/// the first root of its modulus found in `sup`.
#[derive(Clone, Debug)]
pub struct Embedding {
    sub: FqField,
    sup: FqField,
    gen_image: u64,
    inverse: FxHashMap<u64, u64>,
}

const EMBED_LIMIT: u64 = 1 << 22;

impl Embedding {
    pub fn new(sub: &FqField, sup: &FqField) -> Result<Self, GfError> {
        if sub.p() != sup.p() || !sup.k().is_multiple_of(sub.k()) {
            return Err(GfError::NotSubfield(format!("{} into {}", sub.descriptor(), sup.descriptor())));
        }
        let q = sub.order().expect("finite");
        if q > EMBED_LIMIT {
            return Err(GfError::Guard(format!("subfield of order {q} is too large to tabulate")));
        }
        let m = sub.modulus().map(sup, |&c| sup.from_prime(c));
        let gen_image = roots(&m)
            .into_iter()
            .min()
            .ok_or_else(|| GfError::NotSubfield(format!("{} has no root in {}", sub.modulus(), sup.descriptor())))?;
        let mut emb = Embedding { sub: sub.clone(), sup: sup.clone(), gen_image, inverse: FxHashMap::default() };
        emb.inverse = (0..q).map(|a| (emb.map(a), a)).collect();
        Ok(emb)
    }

    pub fn map(&self, a: u64) -> u64 {
        let coords = self.sub.coords(a);
        let sup = &self.sup;
        coords.iter().rev().fold(0, |acc, &c| sup.add(&sup.mul(&acc, &self.gen_image), &sup.from_prime(c)))
    }

    pub fn preimage(&self, b: u64) -> Option<u64> {
        self.inverse.get(&b).copied()
    }

    pub fn generator_image(&self) -> u64 {
        self.gen_image
    }
}
