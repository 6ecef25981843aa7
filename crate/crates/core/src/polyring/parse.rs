//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! expr  := sign? term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('+' | '-') unary | power
//! power := atom ('^' INT)?
//! atom  := INT | IDENT | '(' expr ')'
//! ```
//!
//! `/` is only accepted with a constant divisor and must be exact in the
//! coefficient domain.

use num_bigint::BigInt;

use super::{MultiPoly, PolyError};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, PolyError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(text[start..i].parse().expect("digits")), start));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((Tok::Ident(text[start..i].to_string()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), i));
            i += 1;
        } else {
            let ch = text[i..].chars().next().unwrap_or(c);
            return Err(PolyError::Syntax { pos: i, msg: format!("unexpected character `{ch}`") });
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a, R: Ring> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    ring: &'a R,
    names: &'a [&'a str],
}

impl<R: Ring> Parser<'_, R> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn at(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn describe(t: &Tok) -> String {
        match t {
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Op(c) => format!("`{c}`"),
            Tok::End => "end of input".into(),
        }
    }

    fn expr(&mut self) -> Result<MultiPoly<R>, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Op('+') => {
                    self.bump();
                    acc = acc.try_add(&self.term()?)?;
                }
                Tok::Op('-') => {
                    self.bump();
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly<R>, PolyError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Op('*') => {
                    self.bump();
                    acc = acc.try_mul(&self.unary()?)?;
                }
                Tok::Op('/') => {
                    let pos = self.at();
                    self.bump();
                    let den = self.unary()?;
                    acc = self.divide(&acc, &den, pos)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn divide(&self, num: &MultiPoly<R>, den: &MultiPoly<R>, pos: usize) -> Result<MultiPoly<R>, PolyError> {
        if !den.is_constant() {
            return Err(PolyError::CoefficientNotInDomain { pos, msg: "divisor must be a constant".into() });
        }
        let d = den.constant_term();
        let r = self.ring;
        let mut terms = Vec::with_capacity(num.len());
        for (m, c) in num.raw_terms() {
            let q = r.div_exact(c, &d).ok_or_else(|| PolyError::CoefficientNotInDomain {
                pos,
                msg: format!("{} / {} is not in {}", r.format_elem(c), r.format_elem(&d), r.descriptor()),
            })?;
            terms.push((*m, q));
        }
        Ok(MultiPoly::from_sorted(r, num.layout(), terms))
    }

    fn unary(&mut self) -> Result<MultiPoly<R>, PolyError> {
        match self.peek() {
            Tok::Op('-') => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Tok::Op('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly<R>, PolyError> {
        let base = self.atom()?;
        if self.peek() != &Tok::Op('^') {
            return Ok(base);
        }
        self.bump();
        let pos = self.at();
        match self.bump() {
            Tok::Int(n) => {
                let e: u32 = n.try_into().map_err(|_| PolyError::Syntax { pos, msg: "exponent too large".into() })?;
                base.try_pow(e)
            }
            t => Err(PolyError::Syntax { pos, msg: format!("expected exponent, found {}", Self::describe(&t)) }),
        }
    }

    fn atom(&mut self) -> Result<MultiPoly<R>, PolyError> {
        let pos = self.at();
        let n = self.names.len();
        match self.bump() {
            Tok::Int(v) => Ok(MultiPoly::constant(self.ring, n, self.ring.from_int(&v))),
            Tok::Ident(name) => {
                if let Some(i) = self.names.iter().position(|v| *v == name) {
                    Ok(MultiPoly::var(self.ring, n, i))
                } else if let Some(c) = self.ring.named_constant(&name) {
                    Ok(MultiPoly::constant(self.ring, n, c))
                } else {
                    Err(PolyError::UnknownVariable { name, pos })
                }
            }
            Tok::Op('(') => {
                let inner = self.expr()?;
                let close = self.at();
                match self.bump() {
                    Tok::Op(')') => Ok(inner),
                    t => Err(PolyError::Syntax {
                        pos: close,
                        msg: format!("expected `)`, found {}", Self::describe(&t)),
                    }),
                }
            }
            t => Err(PolyError::Syntax { pos, msg: format!("expected operand, found {}", Self::describe(&t)) }),
        }
    }
}

/// Parses `text` over `ring` with the given variable names (in index order).
pub fn parse_poly<R: Ring>(text: &str, ring: &R, names: &[&str]) -> Result<MultiPoly<R>, PolyError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, ring, names };
    let out = p.expr()?;
    match p.peek() {
        Tok::End => Ok(out),
        t => Err(PolyError::Syntax {
            pos: p.at(),
            msg: format!("expected operator, found {}", Parser::<R>::describe(t)),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::PrimeField;
    use crate::ring::{Integers, Rationals};

    #[test]
    fn roundtrips_simple_forms() {
        for text in ["0", "x1^2 - x2^2", "-x1*x2 + 3", "x1^3*x2 - 2*x2 - 7"] {
            let p = parse_poly(text, &Integers, &["x1", "x2"]).unwrap();
            assert_eq!(p.format_with(&["x1", "x2"]), text);
        }
    }

    #[test]
    fn precedence() {
        let p = parse_poly("-x^2 + 2*x^2*3", &Integers, &["x"]).unwrap();
        assert_eq!(p.format_with(&["x"]), "5*x^2");
        let q = parse_poly("(x1-x2)*(x1-x3)*(x2-x3)", &Integers, &["x1", "x2", "x3"]).unwrap();
        assert_eq!(q.len(), 6);
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_poly("2x", &Integers, &["x"]).unwrap_err();
        assert_eq!(err, PolyError::Syntax { pos: 1, msg: "expected operator, found identifier `x`".into() });
        let err = parse_poly("x + y", &Integers, &["x"]).unwrap_err();
        assert_eq!(err, PolyError::UnknownVariable { name: "y".into(), pos: 4 });
        let err = parse_poly("x^", &Integers, &["x"]).unwrap_err();
        assert!(matches!(err, PolyError::Syntax { pos: 2, .. }));
        let err = parse_poly("(x + 1", &Integers, &["x"]).unwrap_err();
        assert!(matches!(err, PolyError::Syntax { pos: 6, .. }));
        let err = parse_poly("x # 1", &Integers, &["x"]).unwrap_err();
        assert!(matches!(err, PolyError::Syntax { pos: 2, .. }));
    }

    #[test]
    fn division_by_constants() {
        let p = parse_poly("3/4*x - 1/2", &Rationals, &["x"]).unwrap();
        assert_eq!(p.format_with(&["x"]), "3/4*x - 1/2");
        let err = parse_poly("x/2", &Integers, &["x"]).unwrap_err();
        assert!(matches!(err, PolyError::CoefficientNotInDomain { pos: 1, .. }));
        let f3 = PrimeField::new(3).unwrap();
        assert!(parse_poly("1/3", &f3, &["x"]).is_err());
        assert!(parse_poly("x/x", &Rationals, &["x"]).is_err());
    }

    #[test]
    fn table_entry_over_f3() {
        let f3 = PrimeField::new(3).unwrap();
        let p = parse_poly("x^5 - x - 1", &f3, &["x"]).unwrap();
        assert_eq!(p.coefficient(&[1]), 2);
        assert_eq!(p.format_with(&["x"]), "x^5 - x - 1");
    }
}
