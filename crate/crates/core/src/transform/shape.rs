use serde::{Deserialize, Serialize};

use crate::polyring::UniPoly;
use crate::ring::Ring;

/// Target forms of the normalizers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    /// `x^5 + b x^3 + c x + c`
    QuinticBcc,
    /// `x^6 + b x^4 + c x^2 + d x + d`
    SexticBcdd,
    /// `x^3 + a x + a`
    CubicAa,
    /// `x^4 + a x^2 + b x + b`
    QuarticAbb,
    /// vanishing `x^(n-1)` coefficient
    TraceZero,
}

impl Shape {
    pub fn degree(self) -> Option<usize> {
        match self {
            Shape::QuinticBcc => Some(5),
            Shape::SexticBcdd => Some(6),
            Shape::CubicAa => Some(3),
            Shape::QuarticAbb => Some(4),
            Shape::TraceZero => None,
        }
    }

    /// Exact pattern check, including monicity and degree.
    pub fn matches<R: Ring>(self, f: &UniPoly<R>) -> bool {
        let Some(n) = f.degree() else {
            return false;
        };
        if !f.is_monic() || self.degree().is_some_and(|d| d != n) || n < 2 {
            return false;
        }
        let r = f.ring();
        let zero = |i: usize| r.is_zero(&f.coeff(i));
        let tail_equal = f.coeff(1) == f.coeff(0);
        match self {
            Shape::QuinticBcc => zero(4) && zero(2) && tail_equal,
            Shape::SexticBcdd => zero(5) && zero(3) && tail_equal,
            Shape::CubicAa => zero(2) && tail_equal,
            Shape::QuarticAbb => zero(3) && tail_equal,
            Shape::TraceZero => zero(n - 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Shape::QuinticBcc => "quintic_bcc",
            Shape::SexticBcdd => "sextic_bcdd",
            Shape::CubicAa => "cubic_aa",
            Shape::QuarticAbb => "quartic_abb",
            Shape::TraceZero => "trace_zero",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integers;

    #[test]
    fn patterns() {
        assert!(Shape::QuinticBcc.matches(&UniPoly::from_i64(&Integers, &[-1, -1, 0, 0, 0, 1])));
        assert!(Shape::QuinticBcc.matches(&UniPoly::from_i64(&Integers, &[3, 3, 0, 7, 0, 1])));
        assert!(!Shape::QuinticBcc.matches(&UniPoly::from_i64(&Integers, &[3, 3, 1, 7, 0, 1])));
        assert!(Shape::CubicAa.matches(&UniPoly::from_i64(&Integers, &[-6, -6, 0, 1])));
        assert!(!Shape::CubicAa.matches(&UniPoly::from_i64(&Integers, &[-6, -6, 0, 2])));
        assert!(Shape::SexticBcdd.matches(&UniPoly::from_i64(&Integers, &[2, 2, 5, 0, 1, 0, 1])));
    }
}
