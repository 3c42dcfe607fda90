//! JSON forms of algebras, scalars, cocycles, Laurent polynomials, groups and
//! reports, and the text form of Laurent monomials.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use hopfgen_core::cocycle::TwoCocycle;
use hopfgen_core::group::FiniteGroup;
use hopfgen_core::hopf::{Family, StructureConstants};
use hopfgen_core::tring::{TElement, TMonomial};
use hopfgen_core::{make_field, Field, HopfAlgebra, Report, Scalar};

use crate::CliError;

/// Version of every JSON document written by this crate.
pub const SCHEMA: u32 = 1;

#[derive(Serialize, Deserialize)]
struct HopfJson {
    schema: u32,
    family: String,
    /// `n` such that scalars live in `Q(ζ_n)`.
    field: u32,
    dim: usize,
    labels: Vec<String>,
    mult: Vec<(usize, usize, usize, String)>,
    comult: Vec<(usize, usize, usize, String)>,
    counit: Vec<String>,
    antipode: Vec<(usize, usize, String)>,
    grouplikes: Vec<usize>,
}

pub fn hopf_to_json(h: &HopfAlgebra) -> Value {
    let sc = h.structure_constants();
    let mut mult = Vec::new();
    for (i, row) in sc.mult.iter().enumerate() {
        for (j, terms) in row.iter().enumerate() {
            mult.extend(terms.iter().map(|(k, c)| (i, j, *k, c.to_text())));
        }
    }
    let mut comult = Vec::new();
    for (i, terms) in sc.comult.iter().enumerate() {
        comult.extend(terms.iter().map(|(a, b, c)| (i, *a, *b, c.to_text())));
    }
    let mut antipode = Vec::new();
    for (i, row) in sc.antipode.iter().flatten().enumerate() {
        antipode.extend(row.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (i, k, c.to_text())));
    }
    let doc = HopfJson {
        schema: SCHEMA,
        family: h.family().tag(),
        field: h.field().n(),
        dim: h.dim(),
        labels: sc.labels,
        mult,
        comult,
        counit: sc.counit.iter().map(Scalar::to_text).collect(),
        antipode,
        grouplikes: sc.grouplikes,
    };
    serde_json::to_value(doc).expect("plain data")
}

/// Reads a Hopf dump back as an algebra of the generic family.
pub fn hopf_from_json(v: &Value) -> Result<HopfAlgebra, CliError> {
    let doc: HopfJson = serde_json::from_value(v.clone()).map_err(|e| CliError::Format(e.to_string()))?;
    let f = make_field(doc.field)?;
    let dim = doc.dim;
    if doc.labels.len() != dim {
        return Err(CliError::Format(format!("{} labels for dimension {dim}", doc.labels.len())));
    }
    let check = |k: usize| if k < dim { Ok(k) } else { Err(CliError::Format(format!("index {k} out of range"))) };
    let scalar = |s: &str| Scalar::parse(s, &f).map_err(CliError::from);
    let mut mult = vec![vec![Vec::new(); dim]; dim];
    for (i, j, k, c) in &doc.mult {
        mult[check(*i)?][check(*j)?].push((check(*k)?, scalar(c)?));
    }
    let mut comult = vec![Vec::new(); dim];
    for (i, a, b, c) in &doc.comult {
        comult[check(*i)?].push((check(*a)?, check(*b)?, scalar(c)?));
    }
    let mut antipode = vec![vec![Scalar::zero(&f); dim]; dim];
    for (i, k, c) in &doc.antipode {
        antipode[check(*i)?][check(*k)?] = scalar(c)?;
    }
    let counit = doc.counit.iter().map(|c| scalar(c)).collect::<Result<Vec<_>, _>>()?;
    let sc = StructureConstants { labels: doc.labels, mult, comult, counit, antipode: Some(antipode), grouplikes: doc.grouplikes };
    Ok(HopfAlgebra::from_constants(&f, sc, Family::Generic)?)
}

/// A scalar as its coefficient strings, lowest degree first.
pub fn scalar_to_json(s: &Scalar) -> Value {
    json!(s.coefficient_strings())
}

pub fn scalar_from_json(v: &Value, f: &Field) -> Result<Scalar, CliError> {
    let parts: Vec<String> = serde_json::from_value(v.clone()).map_err(|e| CliError::Format(e.to_string()))?;
    Ok(Scalar::from_coefficient_strings(f, &parts)?)
}

pub fn cocycle_to_json(alpha: &TwoCocycle) -> Value {
    let values: Vec<Vec<Value>> = alpha.values().iter().map(|row| row.iter().map(scalar_to_json).collect()).collect();
    json!({ "schema": SCHEMA, "values": values })
}

/// Reads a cocycle for `h`; the cocycle condition is checked.
pub fn cocycle_from_json(v: &Value, h: &HopfAlgebra) -> Result<TwoCocycle, CliError> {
    let rows = v.get("values").and_then(Value::as_array).ok_or_else(|| CliError::Format("missing \"values\"".into()))?;
    let mut values = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row.as_array().ok_or_else(|| CliError::Format("row is not an array".into()))?;
        values.push(row.iter().map(|s| scalar_from_json(s, h.field())).collect::<Result<Vec<_>, _>>()?);
    }
    if values.len() != h.dim() || values.iter().any(|r| r.len() != h.dim()) {
        return Err(CliError::Format(format!("cocycle table must be {0}x{0}", h.dim())));
    }
    Ok(TwoCocycle::new(h, values)?)
}

pub fn monomial_exponents(m: &TMonomial, labels: &[String]) -> Value {
    let map: Map<String, Value> = m.pairs().map(|(b, e)| (labels[b].clone(), json!(e))).collect();
    Value::Object(map)
}

/// The text form and the term list with exponent maps.
pub fn telement_to_json(e: &TElement, labels: &[String]) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .iter()
        .map(|(m, c)| json!({ "coefficient": scalar_to_json(c), "exponents": monomial_exponents(m, labels) }))
        .collect();
    json!({ "text": e.text(labels), "terms": terms })
}

pub fn group_to_json(g: &FiniteGroup) -> Value {
    json!({ "labels": g.labels(), "table": g.table() })
}

pub fn group_from_json(v: &Value) -> Result<FiniteGroup, CliError> {
    #[derive(Deserialize)]
    struct GroupJson {
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
    }
    let g: GroupJson = serde_json::from_value(v.clone()).map_err(|e| CliError::Format(e.to_string()))?;
    Ok(FiniteGroup::from_table(g.labels, g.table)?)
}

/// `{name: {"result": "pass"|"fail", "details": ...}}`.
pub fn checks_to_json(report: &Report) -> Value {
    let map: BTreeMap<&str, Value> = report
        .checks
        .iter()
        .map(|c| (c.name.as_str(), json!({ "result": if c.passed { "pass" } else { "fail" }, "details": c.detail })))
        .collect();
    json!(map)
}

pub fn report_to_json(report: &Report) -> Value {
    json!({
        "schema": SCHEMA,
        "subject": report.subject,
        "passed": report.all_passed(),
        "checks": checks_to_json(report),
    })
}

/// Parses `t[x]^2*t[y]*t[1]^-1` (or `1`) against the basis labels.
pub fn parse_tmonomial(text: &str, labels: &[String]) -> Result<TMonomial, CliError> {
    let text = text.trim();
    if text == "1" {
        return Ok(TMonomial::one());
    }
    let bad = |msg: &str| CliError::Format(format!("{msg} in monomial `{text}`"));
    let mut m = TMonomial::one();
    let mut rest = text;
    loop {
        rest = rest.trim_start();
        let body = rest.strip_prefix("t[").ok_or_else(|| bad("expected `t[`"))?;
        // labels may contain brackets, e.g. `(a,e)`, but never `]`
        let close = body.find(']').ok_or_else(|| bad("unclosed `[`"))?;
        let label = &body[..close];
        let b = labels.iter().position(|l| l == label).ok_or_else(|| CliError::Core(hopfgen_core::Error::UnknownLabel(label.into())))?;
        rest = &body[close + 1..];
        let mut exp = 1i32;
        if let Some(after) = rest.strip_prefix('^') {
            let end = after.find(|c: char| c != '-' && !c.is_ascii_digit()).unwrap_or(after.len());
            exp = after[..end].parse().map_err(|_| bad("bad exponent"))?;
            rest = &after[end..];
        }
        m = m.mul(&TMonomial::power(b, exp));
        rest = rest.trim_start();
        if rest.is_empty() {
            return Ok(m);
        }
        rest = rest.strip_prefix('*').ok_or_else(|| bad("expected `*`"))?;
    }
}
