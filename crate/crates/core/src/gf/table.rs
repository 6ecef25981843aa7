//! The list of irreducible quintics `x^5 + b x^3 + c x + c` over small
//! fields, and its verification.

use serde::{Deserialize, Serialize};

use super::is_irreducible;
use crate::polyring::{Domain, UniPoly};
use crate::ring::Field;
use crate::transform::Shape;
use crate::with_field;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub field: String,
    /// All listed variants; the entry passes only if every one does.
    pub polynomials: Vec<String>,
}

impl TableEntry {
    fn new(field: &str, polys: &[&str]) -> Self {
        TableEntry { field: field.into(), polynomials: polys.iter().map(|s| s.to_string()).collect() }
    }
}

/// The fourteen entries, with the extension fields' stated moduli.
pub fn table_entries() -> Vec<TableEntry> {
    let mut out = vec![
        TableEntry::new("GF(2^2;modulus=a^2+a+1)", &["x^5 + a*x + a", "x^5 + (a + 1)*x + a + 1"]),
        TableEntry::new("GF(2^3;modulus=b^3+b^2+1)", &["x^5 + b*x^3 + b*x + b"]),
        TableEntry::new("GF(2^5;modulus=c^5+c^4+c^3+c^2+1)", &["x^5 + c*x^3 + x + 1"]),
    ];
    for (p, poly) in [
        (3, "x^5 - x - 1"),
        (5, "x^5 - x - 1"),
        (7, "x^5 - 2*x - 2"),
        (11, "x^5 - x - 1"),
        (13, "x^5 - x - 1"),
        (17, "x^5 + 4*x + 4"),
        (19, "x^5 + 3*x + 3"),
        (23, "x^5 + 2*x + 2"),
        (29, "x^5 - 4*x - 4"),
        (31, "x^5 + 3*x + 3"),
        (37, "x^5 - 3*x - 3"),
    ] {
        out.push(TableEntry::new(&format!("GF({p})"), &[poly]));
    }
    out
}

/// The exceptional form over `GF(2)`.
pub fn f2_exception() -> TableEntry {
    TableEntry::new("GF(2)", &["x^5 + x^3 + 1"])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableEntryReport {
    pub field: String,
    pub polynomial: String,
    pub variants: Vec<String>,
    pub irreducible: bool,
    pub shape_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl TableEntryReport {
    pub fn passed(&self) -> bool {
        self.irreducible && self.shape_ok && self.error.is_none()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub entries: Vec<TableEntryReport>,
    pub passed: usize,
    pub total: usize,
    pub exception: TableEntryReport,
}

fn check<F: Field>(field: &F, texts: &[String]) -> Result<(Vec<String>, bool, bool), String> {
    let mut printed = Vec::new();
    let (mut irr, mut shape) = (true, true);
    for t in texts {
        let f = UniPoly::parse(t, field, "x").map_err(|e| e.to_string())?;
        irr &= is_irreducible(&f);
        // The exception x^5 + x^3 + 1 is checked for irreducibility only.
        shape &= f.degree() == Some(5) && (Shape::QuinticBcc.matches(&f) || field.order() == Some(2));
        printed.push(f.format_with("x"));
    }
    Ok((printed, irr, shape))
}

fn verify_entry(entry: &TableEntry) -> TableEntryReport {
    let failed = |field: String, err: String| TableEntryReport {
        field,
        polynomial: entry.polynomials.first().cloned().unwrap_or_default(),
        variants: entry.polynomials.clone(),
        irreducible: false,
        shape_ok: false,
        error: Some(err),
    };
    let domain = match Domain::parse(&entry.field) {
        Ok(d) => d,
        Err(e) => return failed(entry.field.clone(), e.to_string()),
    };
    let desc = domain.descriptor();
    let res = with_field!(domain, f => check(f, &entry.polynomials), Err("the integers are not a field".to_string()));
    match res {
        Ok((printed, irreducible, shape_ok)) => TableEntryReport {
            field: desc,
            polynomial: printed.first().cloned().unwrap_or_default(),
            variants: printed,
            irreducible,
            shape_ok,
            error: None,
        },
        Err(e) => failed(desc, e),
    }
}

/// Re-verifies each entry: every polynomial must be irreducible over its
/// field and of the shape `x^5 + b x^3 + c x + c`.
pub fn verify_table(entries: &[TableEntry]) -> TableReport {
    let reports: Vec<TableEntryReport> = entries.iter().map(verify_entry).collect();
    let passed = reports.iter().filter(|r| r.passed()).count();
    TableReport { total: reports.len(), passed, entries: reports, exception: verify_entry(&f2_exception()) }
}
