//! Reference values, recomputed from scratch on every run.

use std::fmt::Write as _;

use serde_json::{json, Value};

use equiobs::chain_complexes::build_sphere_product_fragment;
use equiobs::cohomology::cohomology_at;
use equiobs::obstruction::{
    binomial_parity, chain_obstruction, coefficient_character, congruence_check, decide_admissible,
    theta_equipartition, z2_example_problem,
};
use equiobs::polynomial_degrees::{
    degree_monic_multiplication, degree_sphere_multiplication, resultant, resultant_positivity_check,
};
use equiobs::serde_int::JsonRat;
use equiobs::Polynomial;

use crate::commands::{envelope, Report};

struct Check {
    name: String,
    expected: Value,
    actual: Value,
    source: &'static str,
}

fn check(name: impl Into<String>, expected: Value, actual: Value, source: &'static str) -> Check {
    Check { name: name.into(), expected, actual, source }
}

fn err_value<E: std::fmt::Display>(e: E) -> Value {
    json!({ "error": e.to_string() })
}

fn poly(c: &[i64]) -> Polynomial {
    Polynomial::from_ints(c)
}

fn cohomology_checks(out: &mut Vec<Check>) {
    for n in 8..=20i64 {
        let actual = build_sphere_product_fragment(n)
            .map_err(err_value)
            .and_then(|c| {
                let chi = coefficient_character(c.group());
                cohomology_at(&c, &chi, 2 * n - 1).map_err(err_value)
            })
            .map(|p| {
                if n % 2 == 0 {
                    json!({ "invariant_factors": p.invariant_factors, "generator": p.generator_cocycles().first().map(|g| g.iter().map(|x| x.to_string()).collect::<Vec<_>>()) })
                } else {
                    json!({ "invariant_factors": p.invariant_factors })
                }
            })
            .unwrap_or_else(|e| e);
        let expected = if n % 2 == 0 {
            json!({ "invariant_factors": [4], "generator": ["1", "-1"] })
        } else {
            json!({ "invariant_factors": [2, 2] })
        };
        out.push(check(
            format!("cohomology n={n}"),
            expected,
            actual,
            "H^{2n-1}(C; Z_chi) is Z/4 with generator (1,-1) for even n and Z/2 + Z/2 for odd n",
        ));
    }
}

fn obstruction_checks(out: &mut Vec<Check>) {
    let actual = chain_obstruction(&z2_example_problem())
        .map(|o| json!({ "group": o.group_invariant_factors, "class": o.class.coordinates }))
        .unwrap_or_else(err_value);
    out.push(check(
        "worked Z/2 obstruction",
        json!({ "group": [4], "class": [2] }),
        actual,
        "the worked Z/2 example: theta = 2 in Z/4",
    ));
}

fn degree_checks(out: &mut Vec<Check>) {
    for (m, n, expected) in [(2, 2, 2), (2, 4, 3), (4, 4, 6)] {
        let actual = degree_monic_multiplication(m, n)
            .map(|d| {
                let all_positive = d.certificate.pairs.iter().all(|p| p.resultant_sign == 1);
                json!({ "degree": d.degree, "all_signs_positive": all_positive })
            })
            .unwrap_or_else(err_value);
        out.push(check(
            format!("monic degree ({m},{n})"),
            json!({ "degree": expected, "all_signs_positive": true }),
            actual,
            "deg of monic multiplication = C(k+l, k), every resultant positive",
        ));
    }
    for (m, n, expected) in [(2, 2, 4), (2, 4, 6), (4, 4, 12)] {
        let actual = degree_sphere_multiplication(m, n).map(|d| json!(d)).unwrap_or_else(err_value);
        out.push(check(
            format!("sphere degree ({m},{n})"),
            json!(expected),
            actual,
            "|deg| of multiplication on spheres = 2 C(k+l, k)",
        ));
    }
}

fn resultant_checks(out: &mut Vec<Check>) {
    let actual = resultant(&poly(&[1, 0, 1]), &poly(&[4, 0, 1]))
        .map(|r| serde_json::to_value(JsonRat(r)).expect("json"))
        .unwrap_or_else(err_value);
    out.push(check("Res(x^2+1, x^2+4)", json!(9), actual, "product formula over the roots"));

    let p = poly(&[1, 0, 1]).mul(&poly(&[2, 0, 1]));
    let q = poly(&[3, 0, 1]).mul(&poly(&[5, 0, 1]));
    let actual = resultant_positivity_check(&p, &q).map(|c| json!(c.positive)).unwrap_or_else(err_value);
    out.push(check(
        "positivity (x^2+1)(x^2+2), (x^2+3)(x^2+5)",
        json!(true),
        actual,
        "resultant of monic polynomials without real roots is positive",
    ));
}

fn theta_checks(out: &mut Vec<Check>) {
    for (k, expected) in [(1, 2), (3, 0), (4, 2)] {
        let actual = theta_equipartition(k, k <= 4).map(|t| {
            let agrees = t.cross_check.as_ref().is_none_or(|c| c.agrees);
            json!({ "theta_mod4": t.theta_mod4, "cross_check_agrees": agrees })
        });
        out.push(check(
            format!("theta k={k}"),
            json!({ "theta_mod4": expected, "cross_check_agrees": true }),
            actual.unwrap_or_else(err_value),
            "theta = 2 C(2k-1, k-1) mod 4",
        ));
    }
    for (k, expected) in [(1, true), (2, true), (6, false)] {
        let actual = binomial_parity(k).map(|b| json!(b)).unwrap_or_else(err_value);
        out.push(check(
            format!("C(2k-1,k-1) odd, k={k}"),
            json!(expected),
            actual,
            "C(2k-1, k-1) is odd iff k is a power of two",
        ));
    }
}

fn admissible_checks(out: &mut Vec<Check>) {
    for (d, j, expected) in [
        (8, 5, "ADMISSIBLE_BY_PRIMARY_OBSTRUCTION"),
        (14, 9, "ADMISSIBLE_BY_PRIMARY_OBSTRUCTION"),
        (20, 13, "PRIMARY_OBSTRUCTION_VANISHES_INCONCLUSIVE"),
    ] {
        let r = decide_admissible(d, j);
        let actual = json!({
            "verdict": serde_json::to_value(r.verdict).expect("json"),
            "ramos_lower_bound": r.ramos_lower_bound,
        });
        out.push(check(
            format!("admissible ({d},{j})"),
            json!({ "verdict": expected, "ramos_lower_bound": d }),
            actual,
            "Δ(4·2^k+1, 2) = 6·2^k+2 and the lower bound 3j/2",
        ));
    }
}

fn congruence_checks(out: &mut Vec<Check>) {
    for (k, degree) in [(1, 4), (2, 12)] {
        let actual = congruence_check(k)
            .map(|c| json!({ "sphere_degree": c.sphere_degree, "passed": c.passed, "dimension": [c.dimension_lhs, c.dimension_rhs] }))
            .unwrap_or_else(err_value);
        out.push(check(
            format!("congruence k={k}"),
            json!({ "sphere_degree": degree, "passed": true, "dimension": [8 * k + 2, 6 * k + 3] }),
            actual,
            "deg = 4 C(2k-1, k-1) mod 8, with 8k+2 >= 6k+3",
        ));
    }
}

pub fn verify() -> Report {
    let mut checks = Vec::new();
    cohomology_checks(&mut checks);
    obstruction_checks(&mut checks);
    degree_checks(&mut checks);
    resultant_checks(&mut checks);
    theta_checks(&mut checks);
    admissible_checks(&mut checks);
    congruence_checks(&mut checks);

    let mut text = String::new();
    let mut rows = Vec::new();
    let mut failures = 0;
    for c in &checks {
        let ok = c.expected == c.actual;
        failures += usize::from(!ok);
        let _ = writeln!(text, "{} {}: {}", if ok { "ok  " } else { "FAIL" }, c.name, c.actual);
        rows.push(json!({
            "name": c.name,
            "expected": c.expected,
            "actual": c.actual,
            "ok": ok,
            "paper_ref": c.source,
        }));
    }
    let _ = writeln!(text, "{} checks, {} failed", checks.len(), failures);
    let body = json!({ "checks": rows, "total": checks.len(), "failed": failures });
    Report { json: envelope("verify", body), text, failed: failures > 0 }
}
