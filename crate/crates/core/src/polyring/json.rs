use serde_json::{json, Value};

use super::{MultiPoly, PolyError};
use crate::ring::Ring;

impl<R: Ring> MultiPoly<R> {
    /// `{"vars": [...], "terms": [{"exp": [...], "coef": ...}]}` with terms in
    /// descending lex order.
    pub fn to_json(&self, names: &[&str]) -> Value {
        let terms: Vec<Value> =
            self.terms().map(|(exp, c)| json!({ "exp": exp, "coef": self.ring.elem_to_json(c) })).collect();
        json!({ "vars": names, "terms": terms })
    }

    /// Inverse of [`MultiPoly::to_json`]; returns the polynomial and its
    /// variable names.
    pub fn from_json(v: &Value, ring: &R) -> Result<(Self, Vec<String>), PolyError> {
        let bad = |m: &str| PolyError::Json(m.to_string());
        let vars: Vec<String> = v
            .get("vars")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `vars` array"))?
            .iter()
            .map(|s| s.as_str().map(str::to_string).ok_or_else(|| bad("variable names must be strings")))
            .collect::<Result<_, _>>()?;
        let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing `terms` array"))?;
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            let exp: Vec<u32> = t
                .get("exp")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("term without `exp`"))?
                .iter()
                .map(|e| e.as_u64().and_then(|e| u32::try_from(e).ok()).ok_or_else(|| bad("bad exponent")))
                .collect::<Result<_, _>>()?;
            let coef = t.get("coef").ok_or_else(|| bad("term without `coef`"))?;
            let c = ring.elem_from_json(coef).ok_or_else(|| bad(&format!("bad coefficient {coef}")))?;
            out.push((exp, c));
        }
        Ok((Self::from_terms(ring, vars.len(), out)?, vars))
    }
}
