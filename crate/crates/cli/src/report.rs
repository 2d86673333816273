//! Text and JSON rendering of analysis reports.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use conic_core::{AnalysisReport, BivarPoly, PrimeAbove2, PrimeReport, RingElement, SingularLocus};

use crate::config::bigint_to_json;

fn elem_json(e: &RingElement) -> Value {
    Value::Array(e.coords().iter().map(bigint_to_json).collect())
}

fn poly_json(p: &BivarPoly<RingElement>) -> Value {
    Value::Array(
        p.terms()
            .map(|(i, j, c)| json!([i, j, elem_json(c)]))
            .collect(),
    )
}

fn prime_json(p: &PrimeAbove2) -> Value {
    json!({
        "gens": [
            elem_json(&p.ring().from_int(2)),
            elem_json(p.second_generator()),
        ],
        "residue_degree": p.residue_degree(),
        "ramification": p.ramification(),
    })
}

fn prime_report_json(r: &PrimeReport) -> Value {
    json!({
        "prime": prime_json(&r.prime),
        "d": elem_json(&r.d),
        "e": elem_json(&r.e),
        "F_P": poly_json(&r.f_p),
        "cor8": r.conditions.iter().map(|c| json!({
            "name": c.name,
            "element": elem_json(&c.element),
            "in_P2": c.in_p_squared,
        })).collect::<Vec<_>>(),
        "regular_at_P": r.regular_at_p,
        "H_factor": r.h_factor_generators.iter().map(poly_json).collect::<Vec<_>>(),
    })
}

pub fn report_json(report: &AnalysisReport) -> Value {
    json!({
        "smooth": report.smooth,
        "regular": report.regular,
        "gamma": report.gamma.iter().map(prime_report_json).collect::<Vec<_>>(),
    })
}

/// min_poly as a readable polynomial in θ (constant-first coefficients).
pub fn min_poly_text(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if !mag.is_one() || i == 0 {
            out.push_str(&mag.to_string());
        }
        match i {
            0 => {}
            1 => out.push('θ'),
            _ => out.push_str(&format!("θ^{i}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn report_text(report: &AnalysisReport) -> String {
    let mut out = String::new();
    let ring = report.input.ring();
    out.push_str(&format!(
        "ring: Z[θ], θ of degree {} with {} = 0\n",
        ring.degree(),
        min_poly_text(ring.min_poly())
    ));
    out.push_str(&format!(
        "input: a = {}, b = {}, c = {}\n",
        report.input.a(),
        report.input.b(),
        report.input.c()
    ));
    out.push_str(&format!("smooth: {}\n", report.smooth));
    if report.gamma.is_empty() {
        out.push_str("Γ is empty: regularity cannot fail anywhere\n");
    } else {
        out.push_str(&format!("Γ has {} prime(s):\n", report.gamma.len()));
        for r in &report.gamma {
            out.push_str(&format!(
                "  P = {}  [residue degree {}, ramification {}]\n",
                r.prime,
                r.prime.residue_degree(),
                r.prime.ramification()
            ));
            out.push_str(&format!("    case: {}\n", r.case));
            out.push_str(&format!("    d = {}, e = {}\n", r.d, r.e));
            out.push_str(&format!("    F_P = {}\n", r.f_p));
            for c in &r.conditions {
                out.push_str(&format!(
                    "    {} = {} ∈ P²: {}\n",
                    c.name, c.element, c.in_p_squared
                ));
            }
            out.push_str(&format!("    regular at P: {}\n", r.regular_at_p));
        }
    }
    out.push_str(&format!("regular: {}\n", report.regular));
    out.push_str(&format!(
        "singular locus: {}\n",
        if report.singular_locus_empty { "empty (unit ideal)" } else { "non-empty" }
    ));
    out
}

pub fn singular_locus_text(locus: &SingularLocus) -> String {
    match locus {
        SingularLocus::Unit => "singular locus: empty (unit ideal)\n".to_string(),
        SingularLocus::Proper { non_regular, h_generators } => {
            let mut out = String::new();
            out.push_str("singular locus: non-empty\n");
            for r in non_regular {
                out.push_str(&format!("  non-regular above P = {}\n", r.prime));
                out.push_str("  factor generators:\n");
                for g in &r.h_factor_generators {
                    out.push_str(&format!("    {}\n", g));
                }
            }
            out.push_str("generators of H:\n");
            for g in h_generators {
                out.push_str(&format!("  {}\n", g));
            }
            out
        }
    }
}

pub fn singular_locus_json(locus: &SingularLocus) -> Value {
    match locus {
        SingularLocus::Unit => json!({
            "singular_locus_empty": true,
            "h_generators": [],
            "non_regular_primes": [],
        }),
        SingularLocus::Proper { non_regular, h_generators } => json!({
            "singular_locus_empty": false,
            "h_generators": h_generators.iter().map(poly_json).collect::<Vec<_>>(),
            "non_regular_primes": non_regular
                .iter()
                .map(|r| prime_json(&r.prime))
                .collect::<Vec<_>>(),
        }),
    }
}
