//! The built-in reproduction corpus: classical verdict tables for four
//! rings, swept one representative per residue class, plus the two worked
//! single-input cases. Everything is compiled in; a run needs no data
//! files.
//!
//! Expected values are encoded as coordinate-level predicates taken from
//! the classical statements (divisibility by 2, by θ, by 1+θ, ...), not
//! recomputed through the lattice machinery under test.

use num_bigint::BigInt;

use conic_core::analyzer::{analyze, compute_de, ConicInput};
use conic_core::ideal_lattice::{primes_above_2, IdealLattice};
use conic_core::number_ring::NumberRing;
use conic_core::oracle::example14_verify;

/// Outcome of one corpus case.
#[derive(Clone, Debug)]
pub struct CaseOutcome {
    pub id: &'static str,
    pub note: &'static str,
    pub total: usize,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl CaseOutcome {
    pub fn pass(&self) -> bool {
        self.passed == self.total && self.failures.is_empty()
    }
}

pub const CASE_IDS: &[&str] = &[
    "roberts-mod4",
    "z-sqrt-minus5",
    "z-sqrt-minus7",
    "sqrt2-sqrt6",
    "example13",
    "example14",
];

pub const EXAMPLE14_DEFAULT_PRIMES: &[u64] = &[2, 3, 5, 7, 11, 13];

/// Run one case by id, or every case for "all". `example14_prime` narrows
/// the example14 case to a single prime.
pub fn run_case(id: &str, example14_prime: Option<u64>) -> Result<Vec<CaseOutcome>, String> {
    let run_one = |case: &str| -> Result<CaseOutcome, String> {
        match case {
            "roberts-mod4" => Ok(roberts_mod4()),
            "z-sqrt-minus5" => Ok(z_sqrt_minus5()),
            "z-sqrt-minus7" => Ok(z_sqrt_minus7()),
            "sqrt2-sqrt6" => Ok(sqrt2_sqrt6()),
            "example13" => Ok(example13()),
            "example14" => match example14_prime {
                Some(p) => Ok(example14(&[p])),
                None => Ok(example14(EXAMPLE14_DEFAULT_PRIMES)),
            },
            other => Err(format!("unknown corpus case {other:?}")),
        }
    };
    if id == "all" {
        CASE_IDS.iter().map(|case| run_one(case)).collect()
    } else {
        Ok(vec![run_one(id)?])
    }
}

fn ring(min_poly: &[i64]) -> NumberRing {
    NumberRing::new(min_poly.iter().map(|&c| BigInt::from(c)).collect()).unwrap()
}

/// Over Z: smooth iff b is odd or a, b, c are all even; regular-but-not-
/// smooth exactly on the classes (3,2,3), (0,0,3), (3,0,0) mod 4.
fn roberts_mod4() -> CaseOutcome {
    let z = ring(&[0, 1]);
    let mut passed = 0;
    let mut failures = Vec::new();
    for a in 0..4i64 {
        for b in 0..4i64 {
            for c in 0..4i64 {
                let input = ConicInput::new(z.from_int(a), z.from_int(b), z.from_int(c));
                let report = analyze(&input).expect("Z is maximal at 2");
                let smooth_expected = b % 2 == 1 || (a % 2 == 0 && b % 2 == 0 && c % 2 == 0);
                let rns_expected = matches!((a, b, c), (3, 2, 3) | (0, 0, 3) | (3, 0, 0));
                if report.smooth == smooth_expected
                    && (report.regular && !report.smooth) == rns_expected
                {
                    passed += 1;
                } else {
                    failures.push(format!(
                        "({a},{b},{c}): smooth={} regular={}",
                        report.smooth, report.regular
                    ));
                }
            }
        }
    }
    CaseOutcome {
        id: "roberts-mod4",
        note: "mod-4 verdict table over Z",
        total: 64,
        passed,
        failures,
    }
}

/// Over Z[√-5] with P = (2, 1+√-5): smooth iff b ∉ P or a, b, c ∈ P;
/// regular-but-not-smooth exactly when (a, b, c) ≡ (√-5, 0, √-5),
/// (0, 0, √-5) or (√-5, 0, 0) mod 2.
fn z_sqrt_minus5() -> CaseOutcome {
    let b5 = ring(&[5, 0, 1]);
    let reps: Vec<[i64; 2]> = vec![[0, 0], [1, 0], [0, 1], [1, 1]];
    let in_p = |x: &[i64; 2]| (x[0] + x[1]) % 2 == 0;
    let mut passed = 0;
    let mut failures = Vec::new();
    for a in &reps {
        for b in &reps {
            for c in &reps {
                let input = ConicInput::new(
                    b5.element_from_i64(a).unwrap(),
                    b5.element_from_i64(b).unwrap(),
                    b5.element_from_i64(c).unwrap(),
                );
                let report = analyze(&input).expect("Z[√-5] is maximal at 2");
                let smooth_expected = !in_p(b) || (in_p(a) && in_p(b) && in_p(c));
                let rns_expected = matches!(
                    (a, b, c),
                    ([0, 1], [0, 0], [0, 1]) | ([0, 0], [0, 0], [0, 1]) | ([0, 1], [0, 0], [0, 0])
                );
                if report.smooth == smooth_expected
                    && (report.regular && !report.smooth) == rns_expected
                {
                    passed += 1;
                } else {
                    failures.push(format!(
                        "(a,b,c)=({a:?},{b:?},{c:?}): smooth={} regular={}",
                        report.smooth, report.regular
                    ));
                }
            }
        }
    }
    CaseOutcome {
        id: "z-sqrt-minus5",
        note: "mod-2 verdict table over Z[√-5]",
        total: 64,
        passed,
        failures,
    }
}

/// Over Z[θ], θ = (1+√-7)/2, where 2 = θθ̄ splits: smooth iff b avoids
/// both primes, or b avoids one while a, b, c all lie in the other, or
/// a, b, c are all even.
fn z_sqrt_minus7() -> CaseOutcome {
    let b7 = ring(&[2, -1, 1]);
    let reps: Vec<[i64; 2]> = vec![[0, 0], [1, 0], [0, 1], [1, 1]];
    // divisibility by θ (the prime (2, θ)) and by θ̄ (the prime (2, 1+θ))
    let div_theta = |x: &[i64; 2]| x[0] % 2 == 0;
    let div_theta_bar = |x: &[i64; 2]| (x[0] + x[1]) % 2 == 0;
    let div_two = |x: &[i64; 2]| x[0] % 2 == 0 && x[1] % 2 == 0;
    let mut passed = 0;
    let mut failures = Vec::new();
    for a in &reps {
        for b in &reps {
            for c in &reps {
                let input = ConicInput::new(
                    b7.element_from_i64(a).unwrap(),
                    b7.element_from_i64(b).unwrap(),
                    b7.element_from_i64(c).unwrap(),
                );
                let report = analyze(&input).expect("Z[(1+√-7)/2] is maximal at 2");
                let case_i = !div_theta(b) && !div_theta_bar(b);
                let case_ii =
                    !div_theta(b) && div_theta_bar(a) && div_theta_bar(b) && div_theta_bar(c);
                let case_iii = !div_theta_bar(b) && div_theta(a) && div_theta(b) && div_theta(c);
                let case_iv = div_two(a) && div_two(b) && div_two(c);
                let smooth_expected = case_i || case_ii || case_iii || case_iv;
                if report.smooth == smooth_expected {
                    passed += 1;
                } else {
                    failures.push(format!(
                        "(a,b,c)=({a:?},{b:?},{c:?}): smooth={}",
                        report.smooth
                    ));
                }
            }
        }
    }
    CaseOutcome {
        id: "z-sqrt-minus7",
        note: "smoothness table over Z[(1+√-7)/2]",
        total: 64,
        passed,
        failures,
    }
}

/// Over Z[θ], θ = (√2+√6)/2, where 2B = (1+θ)⁴B: the lattice identities
/// for the totally ramified prime, then smooth iff b is not divisible by
/// 1+θ or a, b, c all are. (x ∈ (1+θ)B iff the coordinate sum of x is
/// even, since the residue map sends θ to 1.)
fn sqrt2_sqrt6() -> CaseOutcome {
    let b4 = ring(&[1, 0, -4, 0, 1]);
    let mut passed = 0;
    let mut failures = Vec::new();
    let mut total = 0;

    let one_plus_theta = b4.one().add(&b4.theta());
    let principal = IdealLattice::principal(&one_plus_theta).unwrap();
    let two_b = IdealLattice::from_integer(&b4, &BigInt::from(2)).unwrap();
    let checks: Vec<(&str, bool)> = {
        let primes = primes_above_2(&b4).expect("Z[(√2+√6)/2] is maximal at 2");
        vec![
            ("one totally ramified prime with e=4, k=1", {
                primes.len() == 1
                    && primes[0].ramification() == 4
                    && primes[0].residue_degree() == 1
            }),
            ("(2, 1+θ)B = (1+θ)B", primes[0].ideal() == &principal),
            ("(1+θ)⁴B = 2B", principal.pow(4) == two_b),
        ]
    };
    for (name, ok) in checks {
        total += 1;
        if ok {
            passed += 1;
        } else {
            failures.push(format!("lattice identity failed: {name}"));
        }
    }

    let div = |x: &[i64; 4]| x.iter().sum::<i64>() % 2 == 0;
    let mut reps: Vec<[i64; 4]> = Vec::with_capacity(16);
    for bits in 0..16i64 {
        reps.push([bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1]);
    }
    for a in &reps {
        for b in &reps {
            for c in &reps {
                total += 1;
                let input = ConicInput::new(
                    b4.element_from_i64(a).unwrap(),
                    b4.element_from_i64(b).unwrap(),
                    b4.element_from_i64(c).unwrap(),
                );
                let smooth = conic_core::analyzer::is_smooth(&input).unwrap();
                let smooth_expected = !div(b) || (div(a) && div(b) && div(c));
                if smooth == smooth_expected {
                    passed += 1;
                } else {
                    failures.push(format!("(a,b,c)=({a:?},{b:?},{c:?}): smooth={smooth}"));
                }
            }
        }
    }
    CaseOutcome {
        id: "sqrt2-sqrt6",
        note: "ramified-prime identities and smoothness table over Z[(√2+√6)/2]",
        total,
        passed,
        failures,
    }
}

/// The worked example over Z[θ], θ = (1+√-7)/2: a = c = 1-θ, b = θ is
/// regular but not smooth, with every intermediate fact pinned.
fn example13() -> CaseOutcome {
    let b7 = ring(&[2, -1, 1]);
    let a = b7.one().sub(&b7.theta());
    let input = ConicInput::new(a.clone(), b7.theta(), a);
    let report = analyze(&input).expect("Z[(1+√-7)/2] is maximal at 2");

    let mut checks: Vec<(&str, bool)> = vec![
        ("smooth = false", !report.smooth),
        ("regular = true", report.regular),
        ("Γ = {θB}", {
            report.gamma.len() == 1
                && report.gamma[0].prime.ideal()
                    == &IdealLattice::principal(&b7.theta()).unwrap()
        }),
    ];
    if let Some(r) = report.gamma.first() {
        let (d, e) = compute_de(&r.prime, input.a(), input.c());
        checks.push(("d = 1", d == b7.one()));
        checks.push(("e = 1", e == b7.one()));
        let p2 = r.prime.ideal().pow(2);
        let b_minus_2de = input.b().sub(&d.mul(&e).scale(&BigInt::from(2)));
        let cd2_ae2 = input.c().mul(&d.mul(&d)).sub(&input.a().mul(&e.mul(&e)));
        let a_d2 = input.a().sub(&d.mul(&d));
        checks.push(("b-2de ∈ P²", p2.contains(&b_minus_2de)));
        checks.push(("cd²-ae² = 0 ∈ P²", cd2_ae2.is_zero() && p2.contains(&cd2_ae2)));
        checks.push(("a-d² ∉ P²", !p2.contains(&a_d2)));
    }

    let total = checks.len();
    let mut passed = 0;
    let mut failures = Vec::new();
    for (name, ok) in checks {
        if ok {
            passed += 1;
        } else {
            failures.push(format!("check failed: {name}"));
        }
    }
    CaseOutcome {
        id: "example13",
        note: "regular-not-smooth conic over Z[(1+√-7)/2] with pinned intermediates",
        total,
        passed,
        failures,
    }
}

/// The degree-p family Z[X,Y]/((p+1)X^p + p²Y^p − 1): regular but not
/// smooth over Z for every prime p.
fn example14(primes: &[u64]) -> CaseOutcome {
    let mut passed = 0;
    let mut failures = Vec::new();
    for &p in primes {
        match example14_verify(p) {
            Ok(r) if r.not_smooth && r.regular && r.identity_ok => passed += 1,
            Ok(r) => failures.push(format!(
                "p={p}: not_smooth={} regular={} identity_ok={}",
                r.not_smooth, r.regular, r.identity_ok
            )),
            Err(e) => failures.push(format!("p={p}: {e}")),
        }
    }
    CaseOutcome {
        id: "example14",
        note: "degree-p family over Z, regular but not smooth",
        total: primes.len(),
        passed,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_cases_pass() {
        for outcome in run_case("all", None).unwrap() {
            assert!(
                outcome.pass(),
                "corpus case {} failed: {:?}",
                outcome.id,
                outcome.failures
            );
        }
    }

    #[test]
    fn unknown_case_is_an_error() {
        assert!(run_case("no-such-case", None).is_err());
    }

    #[test]
    fn example14_respects_prime_flag() {
        let out = run_case("example14", Some(7)).unwrap();
        assert_eq!(out[0].total, 1);
        assert!(out[0].pass());
    }
}
