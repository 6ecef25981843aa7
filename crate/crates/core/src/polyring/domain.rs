//! Runtime selection of a coefficient domain from its descriptor string.

use super::{parse_poly, PolyError};
use crate::gf::{is_prime, FqField, PrimeField};

/// A coefficient domain chosen at runtime.
#[derive(Clone, Debug, PartialEq)]
pub enum Domain {
    Integers,
    Rationals,
    Prime(PrimeField),
    Ext(FqField),
}

/// Runs `$body` with `$f` bound to the concrete field behind a [`Domain`];
/// `$ints` handles the integers, which are not a field.
#[macro_export]
macro_rules! with_field {
    ($dom:expr, $f:ident => $body:expr, $ints:expr) => {
        match $dom {
            $crate::polyring::Domain::Rationals => {
                let $f = &$crate::ring::Rationals;
                $body
            }
            $crate::polyring::Domain::Prime(ref p) => {
                let $f = p;
                $body
            }
            $crate::polyring::Domain::Ext(ref e) => {
                let $f = e;
                $body
            }
            $crate::polyring::Domain::Integers => $ints,
        }
    };
}

impl Domain {
    /// Accepts `Z`, `Q`, `GF(q)`, `GF(p^k)` and `GF(p^k;modulus=<poly>)`
    /// (also `GF(q;modulus=...)`). The modulus variable names the generator.
    pub fn parse(text: &str) -> Result<Domain, PolyError> {
        let bad = |why: &str| PolyError::Descriptor(format!("{text}: {why}"));
        let t = text.trim();
        match t {
            "Z" | "ZZ" => return Ok(Domain::Integers),
            "Q" | "QQ" => return Ok(Domain::Rationals),
            _ => {}
        }
        let inner =
            t.strip_prefix("GF(").and_then(|s| s.strip_suffix(')')).ok_or_else(|| bad("expected Z, Q or GF(...)"))?;
        let (size, modulus) = match inner.split_once(';') {
            Some((s, opt)) => {
                let m = opt.trim().strip_prefix("modulus=").ok_or_else(|| bad("unknown option"))?;
                (s.trim(), Some(m.trim()))
            }
            None => (inner.trim(), None),
        };
        let (p, k) = match size.split_once('^') {
            Some((p, k)) => (
                p.trim().parse::<u64>().map_err(|_| bad("bad prime"))?,
                k.trim().parse::<u32>().map_err(|_| bad("bad exponent"))?,
            ),
            None => prime_power(size.parse::<u64>().map_err(|_| bad("bad field order"))?)
                .ok_or_else(|| bad("field order is not a prime power"))?,
        };
        if !is_prime(p) || k == 0 {
            return Err(bad("field order is not a prime power"));
        }
        match modulus {
            None if k == 1 => Ok(Domain::Prime(PrimeField::new(p).map_err(|e| bad(&e.to_string()))?)),
            None => Ok(Domain::Ext(FqField::with_default_modulus(p, k).map_err(|e| bad(&e.to_string()))?)),
            Some(m) => {
                let name = first_identifier(m).ok_or_else(|| bad("modulus has no variable"))?;
                let base = PrimeField::new(p).map_err(|e| bad(&e.to_string()))?;
                let poly = parse_poly(m, &base, &[name.as_str()])?;
                let uni = super::UniPoly::from_multipoly(&poly).expect("one variable");
                if uni.degree() != Some(k as usize) {
                    return Err(bad("modulus degree does not match the field order"));
                }
                let f = FqField::new(p, uni.coeffs(), &name).map_err(|e| bad(&e.to_string()))?;
                Ok(Domain::Ext(f))
            }
        }
    }

    pub fn descriptor(&self) -> String {
        use crate::ring::Ring;
        match self {
            Domain::Integers => "Z".into(),
            Domain::Rationals => "Q".into(),
            Domain::Prime(p) => p.descriptor(),
            Domain::Ext(e) => e.descriptor(),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Domain::Integers | Domain::Rationals => 0,
            Domain::Prime(p) => p.p(),
            Domain::Ext(e) => e.p(),
        }
    }
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    let p = crate::gf::prime_factors(q);
    if p.len() != 1 {
        return None;
    }
    let (p, mut n, mut k) = (p[0], q, 0);
    while n > 1 {
        n /= p;
        k += 1;
    }
    Some((p, k))
}

fn first_identifier(text: &str) -> Option<String> {
    let start = text.find(|c: char| c.is_ascii_alphabetic())?;
    let rest = &text[start..];
    let end = rest.find(|c: char| !c.is_ascii_alphanumeric()).unwrap_or(rest.len());
    Some(rest[..end].to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn descriptors() {
        assert_eq!(Domain::parse("Q").unwrap(), Domain::Rationals);
        assert_eq!(Domain::parse("GF(7)").unwrap().descriptor(), "GF(7)");
        assert_eq!(Domain::parse("GF(8)").unwrap().descriptor(), "GF(2^3;modulus=b^3 + b^2 + 1)");
        assert_eq!(Domain::parse("GF(3^2)").unwrap().descriptor(), "GF(3^2;modulus=a^2 + 1)");
        let d = Domain::parse("GF(2^5;modulus=c^5+c^4+c^3+c^2+1)").unwrap();
        let Domain::Ext(f) = d else { panic!() };
        assert_eq!(f.generator_name(), "c");
        assert_eq!(f.named_constant("c"), Some(2));
    }

    #[test]
    fn rejects_bad_descriptors() {
        for s in ["GF(6)", "GF(1)", "R", "GF(5^2;modulus=a^2+1)", "GF(3^2;modulus=a^3+a+1)", "GF(9;size=3)"] {
            assert!(Domain::parse(s).is_err(), "{s}");
        }
    }
}
