use std::path::Path;

use serde_json::{json, Value};

use tforge_core::cache::Cache;
use tforge_core::covariants::{
    hermite_covariant, joubert_covariant, s4_fixture, verify_conditions, verify_group_facts, verify_hermite,
    verify_joubert, Covariant, SuiteReport,
};
use tforge_core::gf::{table_entries, verify_table, TableEntry};
use tforge_core::polyring::{default_names, Domain};
use tforge_core::transform::{
    default_polynomial, hermite_form, image_polynomial, joubert_map, normalize as normalize_poly,
    power_of_irreducible_decompose, tschirnhaus_extract, NormalizeField, ResultantMethod, TransformError,
    CHAR2_UNSUPPORTED,
};
use tforge_core::{with_field, Integers, UniPoly};

use crate::report::{CliError, Line, RunReport};
use crate::{CovariantName, Suite};

fn suite_lines(r: &SuiteReport) -> Vec<Line> {
    r.checks
        .iter()
        .map(|c| Line {
            passed: c.passed,
            text: if c.detail.is_empty() { c.name.clone() } else { format!("{} [{}]", c.name, c.detail) },
        })
        .collect()
}

pub fn verify(which: Suite) -> Result<RunReport, CliError> {
    let suite = match which {
        Suite::Hermite => verify_hermite(),
        Suite::Joubert => verify_joubert(),
        Suite::ConditionsTr => verify_conditions(),
        Suite::GroupFacts => verify_group_facts(),
        Suite::S4 => return verify_s4(),
    };
    let results = serde_json::to_value(&suite).expect("serializable");
    let inputs = json!({ "suite": suite.suite });
    Ok(RunReport::new("verify", inputs, results, suite.passed()).with_lines(suite_lines(&suite)))
}

fn verify_s4() -> Result<RunReport, CliError> {
    let cache = Cache::from_env();
    let (_, r) = s4_fixture(cache.as_ref()).map_err(|e| CliError::Internal(e.to_string()))?;
    let how = if r.from_cache { "loaded from cache" } else { "exact division by delta^6" };
    let lines = vec![
        Line { passed: true, text: format!("S4 = s4(phi)/delta^6 [{how}, {} terms]", r.terms) },
        Line { passed: r.homogeneous_degree_40, text: format!("S4 homogeneous of degree 40 [{:?}]", r.degree) },
        Line { passed: r.symmetric, text: "S4 symmetric".into() },
        Line {
            passed: r.pointwise_ok,
            text: format!("s4(phi) = delta^6 S4 at {} random points mod 2^31-1", r.pointwise_checks),
        },
    ];
    let results = serde_json::to_value(&r).expect("serializable");
    Ok(RunReport::new("verify", json!({ "suite": "s4" }), results, r.passed()).with_lines(lines))
}

fn not_a_field() -> CliError {
    CliError::Input("the integers are not a field".into())
}

fn parse_domain(text: &str) -> Result<Domain, CliError> {
    let d = Domain::parse(text)?;
    if d == Domain::Integers {
        return Err(not_a_field());
    }
    Ok(d)
}

pub fn transform(field: &str, poly: &str, covariant: CovariantName) -> Result<RunReport, CliError> {
    let domain = parse_domain(field)?;
    let inputs = json!({
        "field": field,
        "poly": poly,
        "covariant": match covariant { CovariantName::Hermite => "hermite", CovariantName::Joubert => "joubert" },
    });
    let (results, passed) = with_field!(domain, k => transform_in(k, poly, covariant), Err(not_a_field()))?;
    Ok(RunReport::new("transform", inputs, results, passed))
}

fn transform_in<F: NormalizeField>(field: &F, text: &str, covariant: CovariantName) -> Result<(Value, bool), CliError> {
    let f = UniPoly::parse(text, field, "x")?;
    let n = match covariant {
        CovariantName::Hermite => 5,
        CovariantName::Joubert => 6,
    };
    let found = f.degree().unwrap_or(0);
    if found != n {
        return Err(TransformError::DegreeMismatch { expected: n, found }.into());
    }
    if !f.is_monic() {
        return Err(TransformError::NotMonic.into());
    }
    if !f.is_separable() {
        return Err(TransformError::NotSeparable.into());
    }
    let (image, element, note) = match covariant {
        CovariantName::Hermite => {
            let g = hermite_form().for_poly(&f)?;
            let image = image_polynomial(&f, &g, ResultantMethod::Auto)
                .ok_or_else(|| CliError::Internal("resultant of a monic pair failed".into()))?;
            (image, Some(g.format_with("x")), None)
        }
        CovariantName::Joubert => {
            if field.characteristic() == 2 {
                return Err(TransformError::Unsupported {
                    code: CHAR2_UNSUPPORTED,
                    reason: "the Joubert covariant collapses in characteristic 2".into(),
                }
                .into());
            }
            let image = joubert_map().apply(&f)?;
            let note = tschirnhaus_extract(&joubert_covariant()).err().map(|e| e.to_string());
            (image, None, note)
        }
    };
    let decomposition = match power_of_irreducible_decompose(&image) {
        Ok(Some((h, m))) => json!({ "h": h.format_with("y"), "m": m }),
        Ok(None) => json!("not a power of an irreducible"),
        Err(TransformError::IrreducibilityUnknown) => json!("undecided"),
        Err(e) => return Err(e.into()),
    };
    let zero = |k: usize| field.is_zero(&image.coeff(n - k));
    let vanishing: Vec<String> = (1..=n).filter(|&k| zero(k)).map(|k| format!("a{k}")).collect();
    let results = json!({
        "field": field.descriptor(),
        "input": f.format_with("x"),
        "input_irreducible": F::irreducibility(&f),
        "image": image.format_with("y"),
        "decomposition": decomposition,
        "element": element,
        "element_note": note,
        "vanishing_coefficients": vanishing,
    });
    Ok((results, zero(1) && zero(3)))
}

pub fn normalize(field: &str, poly: Option<&str>, degree: Option<usize>) -> Result<RunReport, CliError> {
    let domain = parse_domain(field)?;
    let inputs = json!({ "field": field, "poly": poly, "degree": degree });
    let (results, passed) = with_field!(domain, k => normalize_in(k, poly, degree), Err(not_a_field()))?;
    Ok(RunReport::new("normalize", inputs, results, passed))
}

fn normalize_in<F: NormalizeField>(
    field: &F,
    poly: Option<&str>,
    degree: Option<usize>,
) -> Result<(Value, bool), CliError> {
    let f = match (poly, degree) {
        (Some(t), _) => UniPoly::parse(t, field, "x")?,
        (None, Some(n)) if (3..=6).contains(&n) => default_polynomial(field, n)
            .ok_or_else(|| CliError::Input(format!("no irreducible polynomial of degree {n}")))?,
        (None, Some(n)) => return Err(CliError::Input(format!("degree {n} is not in 3..=6"))),
        (None, None) => return Err(CliError::Input("either --poly or --degree is required".into())),
    };
    if !(3..=6).contains(&f.degree().unwrap_or(0)) {
        return Err(CliError::Input(format!("degree {} is not in 3..=6", f.degree().unwrap_or(0))));
    }
    let out = normalize_poly(&f)?;
    let v = out.verify();
    let mut results = out.to_json();
    results["verification"] = serde_json::to_value(&v).expect("serializable");
    Ok((results, v.passed()))
}

pub fn table(fixture: Option<&Path>) -> Result<RunReport, CliError> {
    let entries: Vec<TableEntry> = match fixture {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?;
            serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?
        }
        None => table_entries(),
    };
    let r = verify_table(&entries);
    let mut lines: Vec<Line> = r
        .entries
        .iter()
        .map(|e| Line {
            passed: e.passed(),
            text: match &e.error {
                Some(err) => format!("{}: {err}", e.field),
                None => format!("{}: {}", e.field, e.variants.join(", ")),
            },
        })
        .collect();
    lines.push(Line {
        passed: r.exception.passed(),
        text: format!("exception {}: {}", r.exception.field, r.exception.polynomial),
    });
    lines.push(Line { passed: r.passed == 14 && r.total == 14, text: format!("{}/{} entries", r.passed, r.total) });
    let passed = r.passed == r.total && r.total == 14 && r.exception.passed();
    let inputs = json!({ "fixture": fixture.map(|p| p.display().to_string()) });
    let results = serde_json::to_value(&r).expect("serializable");
    Ok(RunReport::new("table", inputs, results, passed).with_lines(lines))
}

fn covariant_json(c: &Covariant<Integers>) -> Value {
    let names = default_names(c.n);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    json!({
        "n": c.n,
        "twist": format!("{:?}", c.twist),
        "character": format!("{:?}", c.character),
        "components": c.components.iter().map(|p| p.to_json(&refs)).collect::<Vec<_>>(),
    })
}

pub fn export(covariant: CovariantName) -> Result<RunReport, CliError> {
    let (name, c) = match covariant {
        CovariantName::Hermite => ("hermite", hermite_covariant()),
        CovariantName::Joubert => ("joubert", joubert_covariant()),
    };
    let ok = c.equivariance_violation().is_none();
    Ok(RunReport::new("export", json!({ "covariant": name }), covariant_json(&c), ok))
}
