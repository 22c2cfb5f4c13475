use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Map, Value};

use equiobs::chain_complexes::build_sphere_product_fragment;
use equiobs::cohomology::{cohomology_at, CohomologyReport};
use equiobs::group_algebra::parse_cayley_table;
use equiobs::obstruction::{
    chain_obstruction, coefficient_character, congruence_check, decide_admissible, theta_equipartition,
    z2_example_problem, ObstructionOutcome, ProblemInput,
};
use equiobs::polynomial_degrees::{
    degree_monic_multiplication, resultant as compute_resultant, resultant_positivity_check, resultant_sign, sylvester_matrix,
};
use equiobs::serde_int::{JsonInt, JsonRat};
use equiobs::Polynomial;

/// Largest `m + n` accepted by `degree` (the enumeration has `C((m+n)/2, m/2)` steps).
pub const MAX_DEGREE_SUM: usize = 32;

/// Largest `k` for which `theta --cross-check` enumerates factorizations.
pub const MAX_CROSS_CHECK_K: u64 = 8;

pub enum Failure {
    Invalid(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Invalid(e.to_string())
    }
}

/// One command's output in both formats.
pub struct Report {
    pub json: Value,
    pub text: String,
    /// Set when the report records a failed check.
    pub failed: bool,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize to JSON")
}

/// Wraps a report body with the schema version and command name. A
/// `provenance` map produced by the library is exposed as `paper_ref`.
pub fn envelope(command: &str, body: Value) -> Value {
    let mut out = Map::new();
    out.insert("schema".into(), json!(1));
    out.insert("command".into(), json!(command));
    if let Value::Object(fields) = body {
        for (k, v) in fields {
            let key = if k == "provenance" { "paper_ref".to_string() } else { k };
            out.insert(key, v);
        }
    }
    Value::Object(out)
}

pub fn group_name(factors: &[JsonInt], free_rank: usize) -> String {
    let mut parts: Vec<String> = factors.iter().map(|d| format!("Z/{}", d.0)).collect();
    parts.extend(std::iter::repeat_n("Z".to_string(), free_rank));
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn tuple(v: &[JsonInt]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.0.to_string()).collect();
    format!("({})", items.join(", "))
}

pub fn cohomology(n: i64) -> Result<Report, Failure> {
    let fragment = build_sphere_product_fragment(n)?;
    let chi = coefficient_character(fragment.group());
    let degree = 2 * n - 1;
    let group = cohomology_at(&fragment, &chi, degree)?;
    let report = CohomologyReport::new(degree, &group);
    let mut body = to_value(&report);
    body["n"] = json!(n);
    body["character"] = to_value(&chi.generator_signs(fragment.group()));
    body["provenance"] = json!({
        "invariant_factors": "Smith normal form of the twisted coboundaries of the top fragment of S^n x S^n",
        "generator_cocycles": "cocycles representing the invariant-factor generators",
    });

    let mut text = format!(
        "H^{degree}(C; Z_chi) for n = {n}: {}\n",
        group_name(&report.invariant_factors, report.free_rank)
    );
    for (i, g) in report.generator_cocycles.iter().enumerate() {
        let _ = writeln!(text, "  generator {}: {}", i + 1, tuple(g));
    }
    Ok(Report { json: envelope("cohomology", body), text, failed: false })
}

fn obstruction_report(command: &str, out: &ObstructionOutcome, source: &str) -> Report {
    let mut body = to_value(out);
    body["vanishes"] = json!(out.vanishes());
    body["class_order"] = to_value(&out.class.order().map(JsonInt));
    body["provenance"] = json!({
        "cocycle": "values of pi(f_n(boundary e)) on the generators e of C_{n+1}",
        "class": format!("class of the cocycle in H^{}(C; H_n(D)), {source}", out.degree),
    });
    let text = format!(
        "obstruction in H^{}(C; H_n(D)) = {}\n  cocycle: {}\n  class:   {}\n  {}\n",
        out.degree,
        group_name(&out.group_invariant_factors, out.group_free_rank),
        tuple(&out.cocycle),
        tuple(&out.class.coordinates),
        if out.vanishes() { "vanishes: f_{n+1} exists after changing f_n" } else { "does not vanish" },
    );
    Report { json: envelope(command, body), text, failed: false }
}

pub fn obstruction_example() -> Result<Report, Failure> {
    let out = chain_obstruction(&z2_example_problem())?;
    Ok(obstruction_report("obstruction-example", &out, "worked Z/2 example with f_0 = f_1 = identity"))
}

pub fn obstruction(group: &Path, problem: &Path) -> Result<Report, Failure> {
    let read = |p: &Path| fs::read_to_string(p).map_err(|e| Failure::Invalid(format!("{}: {e}", p.display())));
    let table = parse_cayley_table(&read(group)?).map_err(|e| Failure::Invalid(format!("{}: {e}", group.display())))?;
    let input = ProblemInput::from_json(&read(problem)?)?;
    let out = chain_obstruction(&input.build(&table)?)?;
    Ok(obstruction_report("obstruction", &out, "general chain-map engine"))
}

pub fn theta(k: u64, cross_check: bool) -> Result<Report, Failure> {
    if cross_check && k > MAX_CROSS_CHECK_K {
        return Err(Failure::Invalid(format!("--cross-check needs k <= {MAX_CROSS_CHECK_K}")));
    }
    let t = theta_equipartition(k, cross_check)?;
    let mut body = to_value(&t);
    body["admissible_triple"] = if t.theta_mod4 != 0 { json!([t.d, t.j, 2]) } else { Value::Null };
    let mut text = format!("k = {k}, (d, j) = ({}, {}): theta = {} mod 4\n", t.d, t.j, t.theta_mod4);
    if t.theta_mod4 != 0 {
        let _ = writeln!(text, "  ({}, {}, 2) is admissible", t.d, t.j);
    }
    if let Some(c) = &t.cross_check {
        let _ = writeln!(
            text,
            "  enumerated degree {} = {} mod 4 ({})",
            c.monic_degree,
            c.monic_degree_mod4,
            if c.agrees { "agrees" } else { "DISAGREES" }
        );
    }
    let failed = t.cross_check.as_ref().is_some_and(|c| !c.agrees);
    Ok(Report { json: envelope("theta", body), text, failed })
}

pub fn admissible(d: u32, j: u32) -> Report {
    let r = decide_admissible(d, j);
    let body = to_value(&r);
    let verdict = body["verdict"].as_str().unwrap_or_default().to_string();
    let mut text = format!("(d, j) = ({d}, {j}), 2d - 3j = {}: {verdict}\n", r.delta);
    if let Some(t) = r.theta_mod4 {
        let _ = writeln!(text, "  theta = {t} mod 4");
    }
    let _ = writeln!(text, "  lower bound ceil(3j/2) = {}", r.ramos_lower_bound);
    for note in &r.notes {
        let _ = writeln!(text, "  note: {note}");
    }
    Report { json: envelope("admissible", body), text, failed: false }
}

pub fn degree(m: usize, n: usize, sphere: bool) -> Result<Report, Failure> {
    if m == 0 || n == 0 || m % 2 == 1 || n % 2 == 1 {
        return Err(Failure::Invalid("--m and --n must be positive even integers".into()));
    }
    if m + n > MAX_DEGREE_SUM {
        return Err(Failure::Invalid(format!("m + n must be at most {MAX_DEGREE_SUM}")));
    }
    let monic = degree_monic_multiplication(m, n)?;
    let mut body = json!({
        "m": m,
        "n": n,
        "certificate": to_value(&monic.certificate),
        "certificate_valid": monic.certificate.verify(),
    });
    let text;
    if sphere {
        let degree_abs = 2 * monic.degree.abs();
        body["degree_abs"] = json!(degree_abs);
        body["provenance"] = json!({
            "degree_abs": "|deg| of multiplication of nonzero polynomials on unit spheres: (p, q) and (-p, -q) count with the same sign",
        });
        text = format!("|deg| of the sphere map for (m, n) = ({m}, {n}): {degree_abs}\n");
    } else {
        body["degree"] = json!(monic.degree);
        body["provenance"] = json!({
            "degree": "signed count of monic factorizations of prod (x^2 + i), signs from resultants",
        });
        text = format!(
            "degree of monic multiplication for (m, n) = ({m}, {n}): {} ({} factorizations)\n",
            monic.degree,
            monic.certificate.pairs.len()
        );
    }
    Ok(Report { json: envelope("degree", body), text, failed: false })
}

pub fn resultant(p: &str, q: &str) -> Result<Report, Failure> {
    let p = Polynomial::parse_coefficients(p)?;
    let q = Polynomial::parse_coefficients(q)?;
    let r = compute_resultant(&p, &q)?;
    let sign = resultant_sign(&p, &q)?;
    let mut body = json!({
        "p": to_value(&p),
        "q": to_value(&q),
        "resultant": to_value(&JsonRat(r.clone())),
        "sign": sign,
        "provenance": {
            "resultant": "determinant of the Sylvester matrix by fraction-free elimination",
        },
    });
    if let Ok(s) = sylvester_matrix(&p, &q) {
        body["sylvester_matrix"] = to_value(&s);
    }
    body["positivity"] = match resultant_positivity_check(&p, &q) {
        Ok(c) => to_value(&c),
        Err(e) => json!({ "not_applicable": e.to_string() }),
    };
    let text = format!("Res({p}, {q}) = {r}\n");
    Ok(Report { json: envelope("resultant", body), text, failed: false })
}

pub fn congruence(k: u64) -> Result<Report, Failure> {
    let c = congruence_check(k)?;
    let text = format!(
        "k = {k}: |deg| = {}, 2*C(2k,k) = {}, 4*C(2k-1,k-1) = {}, congruent mod 8: {}\n  dimension: {} >= {}: {}\n",
        c.sphere_degree,
        c.twice_central_binomial.0,
        c.four_binomial.0,
        c.congruent_mod8,
        c.dimension_lhs,
        c.dimension_rhs,
        c.dimension_hypothesis
    );
    let failed = !c.passed;
    Ok(Report { json: envelope("congruence", to_value(&c)), text, failed })
}
