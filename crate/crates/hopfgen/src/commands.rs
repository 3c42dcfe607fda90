//! One function per verb. Each returns the text to print and whether every
//! check it ran passed.

use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use hopfgen_core::cocycle::TwoCocycle;
use hopfgen_core::generic_base::{
    decompose_with_residue, gamma_generators, jacobian_check, lazy_gamma_check, niceness_witnesses,
    quotient_presentation_check, torus_lifts, uprime_relations_check, verify_sigma, SigmaTables,
};
use hopfgen_core::hopf::{verify_hopf_axioms, Family};
use hopfgen_core::identities::{parse_ncpoly, Mu};
use hopfgen_core::lattice::{basis_with_unit, named_basis, pq_generation_check, vector_text, y_group, BasisKind};
use hopfgen_core::tring::{TRing, TTensorH};
use hopfgen_core::{Error, HopfAlgebra, Report, Scalar};

use crate::formats::{self, checks_to_json, SCHEMA};
use crate::select::{group_cap, parse_group};
use crate::{selftest, CliError};

pub struct Output {
    pub body: String,
    pub ok: bool,
}

impl Output {
    fn json(v: &Value, ok: bool) -> Self {
        Output { body: serde_json::to_string_pretty(v).expect("serializable"), ok }
    }
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Format(format!("{}: {e}", path.display())))
}

fn coefficient(c: &Scalar) -> String {
    if c.is_one() {
        String::new()
    } else {
        format!("({})*", c.to_text())
    }
}

fn describe_text(h: &HopfAlgebra) -> String {
    let l = |i: usize| h.label(i).to_string();
    let mut out = format!("family: {}\ndimension: {}\nbasis: {}\n", h.family().tag(), h.dim(), h.labels().join(", "));
    let gl: Vec<String> = h.grouplikes().iter().map(|&g| l(g)).collect();
    out += &format!("group-like: {}\n\nproducts:\n", gl.join(", "));
    for (i, row) in h.mult_table().iter().enumerate() {
        for (j, terms) in row.iter().enumerate() {
            if terms.is_empty() {
                continue;
            }
            let rhs: Vec<String> = terms.iter().map(|(k, c)| format!("{}{}", coefficient(c), l(*k))).collect();
            out += &format!("  {} * {} = {}\n", l(i), l(j), rhs.join(" + "));
        }
    }
    out += "\ncoproducts:\n";
    for i in 0..h.dim() {
        let rhs: Vec<String> = h.coproduct(i).iter().map(|(a, b, c)| format!("{}{} ⊗ {}", coefficient(c), l(*a), l(*b))).collect();
        out += &format!("  Δ({}) = {}\n", l(i), rhs.join(" + "));
    }
    out += "\ncounit and antipode:\n";
    for i in 0..h.dim() {
        let s: hopfgen_core::hopf::Element = h.antipode(i);
        out += &format!("  ε({0}) = {1}, S({0}) = {2}\n", l(i), h.counit(i).to_text(), h.element_text(&s));
    }
    out
}

pub fn describe(h: &HopfAlgebra, text: bool) -> Output {
    if text {
        Output { body: describe_text(h), ok: true }
    } else {
        Output::json(&formats::hopf_to_json(h), true)
    }
}

pub fn axioms(h: &HopfAlgebra) -> Output {
    let r = verify_hopf_axioms(h);
    Output::json(&formats::report_to_json(&r), r.all_passed())
}

fn tensor_json(t: &TTensorH, h: &HopfAlgebra) -> Value {
    let terms: Vec<Value> = t
        .terms()
        .iter()
        .map(|((m, b), c)| {
            json!({
                "coefficient": c.to_text(),
                "t": formats::monomial_exponents(m, h.labels()),
                "basis": h.label(*b),
            })
        })
        .collect();
    json!({ "text": t.text(h.labels(), h.labels()), "terms": terms })
}

pub fn identity(h: &HopfAlgebra, poly: &str, cocycle: Option<&Path>, word_cap: usize) -> Result<Output, CliError> {
    let alpha = match cocycle {
        Some(p) => formats::cocycle_from_json(&read_json(p)?, h)?,
        None => TwoCocycle::trivial(h),
    };
    let p = parse_ncpoly(poly, h)?;
    let mu = Mu::new(h, &alpha).with_word_cap(word_cap);
    let c = mu.classify(&p)?;
    let v = json!({
        "schema": SCHEMA,
        "polynomial": p.text(h.labels()),
        "identity": c.identity,
        "coinvariant": c.coinvariant,
        "central": c.central,
        "image": tensor_json(&c.image, h),
    });
    Ok(Output::json(&v, c.identity))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum BaseCheck {
    Sigma,
    Jacobian,
    Quotient,
    Nice,
    Uprime,
    All,
}

/// Runs one check; under `all`, families a check does not cover are listed
/// as skipped instead of failing the command.
fn base_check(
    h: &HopfAlgebra,
    which: BaseCheck,
    seed: u64,
    report: &mut Report,
    witnesses: &mut Vec<String>,
) -> Result<(), CliError> {
    match which {
        BaseCheck::Sigma => report.absorb("sigma", verify_sigma(h, &TwoCocycle::trivial(h))),
        BaseCheck::Quotient => report.absorb("quotient", quotient_presentation_check(h)?),
        BaseCheck::Uprime => report.absorb("uprime", uprime_relations_check(h)?),
        BaseCheck::Nice => match niceness_witnesses(h) {
            Ok(ws) => {
                report.push("nice/witnesses", true, format!("{} verified", ws.len()));
                witnesses.extend(ws.iter().map(|w| w.text(h)));
            }
            Err(Error::WitnessFailure(g)) => report.push("nice/witnesses", false, format!("no witness for {g}")),
            Err(e) => return Err(e.into()),
        },
        BaseCheck::Jacobian => {
            let r = jacobian_check(h, seed)?;
            let rank = r.rank_at_point.map(|(r, n)| format!("rank {r} of {n} at a random point")).unwrap_or_else(|| "symbolic".into());
            report.push("jacobian/independent", r.independent, rank);
            if let Some(d) = &r.determinant {
                report.push("jacobian/determinant", !d.is_zero(), d.text(h.labels()));
            }
            if let Some(ok) = r.prefactor_matches {
                report.push("jacobian/prefactor", ok, "");
            }
            if let (Some(m), Some(e)) = (&r.minor, &r.expected_minor) {
                report.push("jacobian/closed_form", m == e || *m == e.neg(), format!("minor {}, closed form {}", m.text(h.labels()), e.text(h.labels())));
            }
        }
        BaseCheck::All => unreachable!(),
    }
    Ok(())
}

pub fn base(h: &HopfAlgebra, check: BaseCheck, decompose: Option<&str>, seed: u64) -> Result<Output, CliError> {
    let p = gamma_generators(h)?;
    let text = |ms: &[hopfgen_core::tring::TMonomial]| ms.iter().map(|m| m.text(h.labels())).collect::<Vec<_>>();
    let mut report = Report::new(format!("generic base algebra of {}", h.family().tag()));
    let mut witnesses = Vec::new();
    let mut skipped = Vec::new();
    if check == BaseCheck::All {
        for (name, c) in [
            ("sigma", BaseCheck::Sigma),
            ("jacobian", BaseCheck::Jacobian),
            ("quotient", BaseCheck::Quotient),
            ("nice", BaseCheck::Nice),
            ("uprime", BaseCheck::Uprime),
        ] {
            match base_check(h, c, seed, &mut report, &mut witnesses) {
                Err(CliError::Core(Error::UnsupportedFamily(_))) => skipped.push(name),
                other => other?,
            }
        }
    } else {
        base_check(h, check, seed, &mut report, &mut witnesses)?;
    }
    let mut v = json!({
        "schema": SCHEMA,
        "family": h.family().tag(),
        "generators": {
            "invertible": text(&p.invertible),
            "plain": text(&p.plain),
            "special": p.special,
        },
        "checks": checks_to_json(&report),
        "skipped": skipped,
    });
    if !witnesses.is_empty() {
        v["witnesses"] = json!(witnesses);
    }
    let mut ok = report.all_passed();
    if let Some(src) = decompose {
        let m = formats::parse_tmonomial(src, h.labels())?;
        let lifts = torus_lifts(h)?;
        let w = decompose_with_residue(h, &p, &m)?;
        let round_trip = w.remultiply(&p, &lifts) == m;
        ok &= round_trip;
        v["decomposition"] = json!({
            "input": m.text(h.labels()),
            "witness": w.text(&p, &lifts, h.labels()),
            "invertible": w.invertible,
            "plain": w.plain,
            "residue": w.residue,
            "degree_zero": w.residue.iter().all(|&k| k == 0),
            "round_trip": round_trip,
        });
    }
    v["passed"] = json!(ok);
    Ok(Output::json(&v, ok))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum BasisChoice {
    Auto,
    Named,
}

/// The named basis kind for `cyclic:N`, `product:cyclic:M,cyclic:N` and
/// `sym:N`.
fn basis_kind(spec: &str) -> Result<BasisKind, CliError> {
    let num = |s: &str| s.parse::<usize>().ok();
    let unsupported = || CliError::Usage(format!("no named basis for `{spec}`; use --basis auto"));
    if let Some(n) = spec.strip_prefix("cyclic:").and_then(num) {
        return Ok(BasisKind::Cyclic(n));
    }
    if let Some(n) = spec.strip_prefix("sym:").and_then(num) {
        return Ok(BasisKind::Symmetric(n));
    }
    if let Some((a, b)) = spec.strip_prefix("product:").and_then(|r| r.split_once(',')) {
        let m = a.strip_prefix("cyclic:").and_then(num).ok_or_else(unsupported)?;
        let n = b.strip_prefix("cyclic:").and_then(num).ok_or_else(unsupported)?;
        return Ok(BasisKind::Product(m, n));
    }
    Err(unsupported())
}

pub fn ygroup(spec: &str, basis: BasisChoice, pq: bool) -> Result<Output, CliError> {
    let cap = group_cap()?;
    let g = parse_group(spec, cap)?;
    let ab = g.abelianization().group.order();
    let mut report = Report::new(format!("Y lattice of {spec}"));
    let (strings, index) = match basis {
        BasisChoice::Auto => {
            let y = y_group(&g, cap)?;
            let b = basis_with_unit(&y);
            (b.iter().map(|v| vector_text(&g, v)).collect::<Vec<_>>(), y.index)
        }
        BasisChoice::Named => {
            let nb = named_basis(&basis_kind(spec)?)?;
            let det: u64 = nb.det.try_into().map_err(|_| CliError::Core(Error::Range("determinant overflow".into())))?;
            (nb.vectors.iter().map(|v| vector_text(&nb.group, v)).collect(), det)
        }
    };
    report.push("index_equals_abelianization", index == ab, format!("index {index}, |G_ab| = {ab}"));
    if pq {
        report.absorb("pq", pq_generation_check(&g, cap)?);
    }
    let v = json!({
        "schema": SCHEMA,
        "group": spec,
        "order": g.order(),
        "basis": strings,
        "index": index,
        "abelianization_order": ab,
        "checks": checks_to_json(&report),
    });
    Ok(Output::json(&v, report.all_passed()))
}

/// A coboundary `∂γ` with `γ` taking random nonzero rational values on the
/// group-likes and random values elsewhere.
fn random_coboundary(h: &HopfAlgebra, seed: u64) -> Result<TwoCocycle, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = h.field();
    let gamma: Vec<Scalar> = (0..h.dim())
        .map(|b| {
            if b == h.unit() {
                return h.one();
            }
            let mut k = rng.gen_range(-4..=4i64);
            if k == 0 && h.is_grouplike(b) {
                k = 1;
            }
            Scalar::ratio(f, k, rng.gen_range(1..=3))
        })
        .collect();
    Ok(TwoCocycle::coboundary(h, &gamma)?)
}

pub fn sigma(h: &HopfAlgebra, cocycle: Option<&Path>, coboundary_seed: Option<u64>, values: bool) -> Result<Output, CliError> {
    let alpha = match (cocycle, coboundary_seed) {
        (Some(_), Some(_)) => return Err(CliError::Usage("--cocycle and --coboundary-seed are exclusive".into())),
        (Some(p), None) => formats::cocycle_from_json(&read_json(p)?, h)?,
        (None, Some(s)) => random_coboundary(h, s)?,
        (None, None) => TwoCocycle::trivial(h),
    };
    let mut report = verify_sigma(h, &alpha);
    if matches!(h.family(), Family::Group(_)) {
        report.absorb("lazy", lazy_gamma_check(h, &alpha)?);
    }
    let mut v = formats::report_to_json(&report);
    v["cocycle"] = formats::cocycle_to_json(&alpha);
    if values {
        let ring = TRing::new(h)?;
        let tables = SigmaTables::new(h, &alpha, &ring);
        let mut rows = Vec::new();
        for x in 0..h.dim() {
            for y in 0..h.dim() {
                rows.push(json!({
                    "left": h.label(x),
                    "right": h.label(y),
                    "sigma": formats::telement_to_json(tables.sigma(x, y), h.labels()),
                }));
            }
        }
        v["values"] = json!(rows);
    }
    Ok(Output::json(&v, report.all_passed()))
}

pub fn selftest(ids: &[usize], seed: u64, jobs: usize, json_out: bool) -> Output {
    let results = selftest::run(ids, seed, jobs);
    let ok = results.iter().all(|r| r.passed);
    if json_out {
        let rows: Vec<Value> = results
            .iter()
            .map(|r| {
                json!({
                    "id": r.id,
                    "title": r.title,
                    "result": if r.passed { "pass" } else { "fail" },
                    "details": r.detail,
                    "seconds": r.elapsed.as_secs_f64(),
                })
            })
            .collect();
        Output::json(&json!({ "schema": SCHEMA, "seed": seed, "passed": ok, "criteria": rows }), ok)
    } else {
        let mut body: Vec<String> = results.iter().map(|r| r.line()).collect();
        let failed = results.iter().filter(|r| !r.passed).count();
        body.push(format!("{} passed, {failed} failed", results.len() - failed));
        Output { body: body.join("\n"), ok }
    }
}
