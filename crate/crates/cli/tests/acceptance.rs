//! The acceptance suite: one test per criterion, each printing a single
//! pass/fail line (run with `-- --nocapture` to see the lines for passing
//! criteria). Every tolerance, count and runtime bound is pinned here.

use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use conic_core::analyzer::{
    analyze, compute_de, compute_fp, compute_gamma, conic_polynomial, ConicInput,
};
use conic_core::bivar_poly::BivarPoly;
use conic_core::error::Error;
use conic_core::ideal_lattice::{primes_above_2, IdealLattice};
use conic_core::number_ring::{NumberRing, RingElement};
use conic_core::oracle::{example14_verify, regular_oracle, smooth_oracle, OracleConfig};

fn criterion(n: u32, desc: &str, body: impl FnOnce() -> String + UnwindSafe) {
    match catch_unwind(body) {
        Ok(detail) => println!("[PASS] criterion {n}: {desc} — {detail}"),
        Err(e) => {
            println!("[FAIL] criterion {n}: {desc}");
            resume_unwind(e);
        }
    }
}

fn ring(min_poly: &[i64]) -> NumberRing {
    NumberRing::new(min_poly.iter().map(|&c| BigInt::from(c)).collect()).unwrap()
}

fn z_ring() -> NumberRing {
    ring(&[0, 1])
}

fn corpus_rings() -> Vec<NumberRing> {
    vec![z_ring(), ring(&[5, 0, 1]), ring(&[2, -1, 1]), ring(&[1, 0, -4, 0, 1])]
}

fn random_element(rng: &mut ChaCha8Rng, b: &NumberRing, bound: i64) -> RingElement {
    let coords = (0..b.degree())
        .map(|_| BigInt::from(rng.random_range(-bound..=bound)))
        .collect();
    b.element(coords).unwrap()
}

fn random_input(rng: &mut ChaCha8Rng, b: &NumberRing, bound: i64) -> ConicInput {
    ConicInput::new(
        random_element(rng, b, bound),
        random_element(rng, b, bound),
        random_element(rng, b, bound),
    )
}

#[test]
fn criterion_01_roberts_regularity_table() {
    criterion(
        1,
        "regular-but-not-smooth over Z exactly on (3,2,3), (0,0,3), (3,0,0) mod 4 (64/64, < 1 s)",
        || {
            let start = Instant::now();
            let z = z_ring();
            let mut matches = 0;
            for a in 0..4i64 {
                for b in 0..4i64 {
                    for c in 0..4i64 {
                        let input =
                            ConicInput::new(z.from_int(a), z.from_int(b), z.from_int(c));
                        let report = analyze(&input).unwrap();
                        let expected =
                            matches!((a, b, c), (3, 2, 3) | (0, 0, 3) | (3, 0, 0));
                        assert_eq!(
                            report.regular && !report.smooth,
                            expected,
                            "class ({a},{b},{c})"
                        );
                        matches += 1;
                    }
                }
            }
            let elapsed = start.elapsed();
            assert_eq!(matches, 64);
            assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
            format!("64/64 in {elapsed:?}")
        },
    );
}

#[test]
fn criterion_02_roberts_smoothness_table() {
    criterion(
        2,
        "smooth over Z iff b odd or a, b, c all even (64/64)",
        || {
            let z = z_ring();
            let mut matches = 0;
            for a in 0..4i64 {
                for b in 0..4i64 {
                    for c in 0..4i64 {
                        let input =
                            ConicInput::new(z.from_int(a), z.from_int(b), z.from_int(c));
                        let report = analyze(&input).unwrap();
                        let expected = b % 2 == 1 || (a % 2 == 0 && b % 2 == 0 && c % 2 == 0);
                        assert_eq!(report.smooth, expected, "class ({a},{b},{c})");
                        matches += 1;
                    }
                }
            }
            assert_eq!(matches, 64);
            "64/64".into()
        },
    );
}

#[test]
fn criterion_03_z_sqrt_minus5_tables() {
    criterion(
        3,
        "Z[√-5] mod-2B sweep: smoothness per the (i) rule and the three regular-not-smooth classes",
        || {
            let b5 = ring(&[5, 0, 1]);
            let reps: Vec<[i64; 2]> = vec![[0, 0], [1, 0], [0, 1], [1, 1]];
            let in_p = |x: &[i64; 2]| (x[0] + x[1]) % 2 == 0;
            let mut matches = 0;
            for a in &reps {
                for b in &reps {
                    for c in &reps {
                        let input = ConicInput::new(
                            b5.element_from_i64(a).unwrap(),
                            b5.element_from_i64(b).unwrap(),
                            b5.element_from_i64(c).unwrap(),
                        );
                        let report = analyze(&input).unwrap();
                        let smooth_expected = !in_p(b) || (in_p(a) && in_p(b) && in_p(c));
                        let rns_expected = matches!(
                            (a, b, c),
                            ([0, 1], [0, 0], [0, 1])
                                | ([0, 0], [0, 0], [0, 1])
                                | ([0, 1], [0, 0], [0, 0])
                        );
                        assert_eq!(report.smooth, smooth_expected, "smooth at ({a:?},{b:?},{c:?})");
                        assert_eq!(
                            report.regular && !report.smooth,
                            rns_expected,
                            "regular-not-smooth at ({a:?},{b:?},{c:?})"
                        );
                        matches += 1;
                    }
                }
            }
            assert_eq!(matches, 64);
            "64/64".into()
        },
    );
}

#[test]
fn criterion_04_z_sqrt_minus7_smoothness() {
    criterion(
        4,
        "Z[(1+√-7)/2] mod-2B sweep reproduces the four smoothness cases",
        || {
            let b7 = ring(&[2, -1, 1]);
            let reps: Vec<[i64; 2]> = vec![[0, 0], [1, 0], [0, 1], [1, 1]];
            let div_theta = |x: &[i64; 2]| x[0] % 2 == 0;
            let div_theta_bar = |x: &[i64; 2]| (x[0] + x[1]) % 2 == 0;
            let div_two = |x: &[i64; 2]| x[0] % 2 == 0 && x[1] % 2 == 0;
            let mut matches = 0;
            for a in &reps {
                for b in &reps {
                    for c in &reps {
                        let input = ConicInput::new(
                            b7.element_from_i64(a).unwrap(),
                            b7.element_from_i64(b).unwrap(),
                            b7.element_from_i64(c).unwrap(),
                        );
                        let report = analyze(&input).unwrap();
                        let expected = (!div_theta(b) && !div_theta_bar(b))
                            || (!div_theta(b)
                                && div_theta_bar(a)
                                && div_theta_bar(b)
                                && div_theta_bar(c))
                            || (!div_theta_bar(b)
                                && div_theta(a)
                                && div_theta(b)
                                && div_theta(c))
                            || (div_two(a) && div_two(b) && div_two(c));
                        assert_eq!(report.smooth, expected, "({a:?},{b:?},{c:?})");
                        matches += 1;
                    }
                }
            }
            assert_eq!(matches, 64);
            "64/64".into()
        },
    );
}

#[test]
fn criterion_05_example13_intermediates() {
    criterion(
        5,
        "(1-θ, θ, 1-θ) over Z[(1+√-7)/2]: not smooth, regular, with every intermediate pinned",
        || {
            let b7 = ring(&[2, -1, 1]);
            let a = b7.one().sub(&b7.theta());
            let input = ConicInput::new(a.clone(), b7.theta(), a);
            let report = analyze(&input).unwrap();
            assert!(!report.smooth, "smooth must be false");
            assert!(report.regular, "regular must be true");

            let gamma = compute_gamma(&input).unwrap();
            assert_eq!(gamma.len(), 1, "Γ = {{θB}}");
            let theta_ideal = IdealLattice::principal(&b7.theta()).unwrap();
            assert_eq!(gamma[0].ideal(), &theta_ideal, "the prime is θB");

            let (d, e) = compute_de(&gamma[0], input.a(), input.c());
            assert_eq!(d, b7.one(), "d = 1");
            assert_eq!(e, b7.one(), "e = 1");

            let p2 = gamma[0].ideal().pow(2);
            let b_minus_2de = input.b().sub(&d.mul(&e).scale(&BigInt::from(2)));
            assert!(p2.contains(&b_minus_2de), "b - 2de ∈ P²");
            let cd2_ae2 = input.c().mul(&d.mul(&d)).sub(&input.a().mul(&e.mul(&e)));
            assert!(cd2_ae2.is_zero(), "cd² - ae² = 0");
            assert!(p2.contains(&cd2_ae2), "cd² - ae² ∈ P²");
            let a_d2 = input.a().sub(&d.mul(&d));
            assert!(!p2.contains(&a_d2), "a - d² ∉ P²");
            "all 9 intermediate facts hold".into()
        },
    );
}

#[test]
fn criterion_06_degree4_ring() {
    criterion(
        6,
        "Z[(√2+√6)/2]: totally ramified prime (e=4, k=1), lattice identities, smoothness sweep",
        || {
            let b4 = ring(&[1, 0, -4, 0, 1]);
            let primes = primes_above_2(&b4).unwrap();
            assert_eq!(primes.len(), 1);
            assert_eq!(primes[0].ramification(), 4);
            assert_eq!(primes[0].residue_degree(), 1);

            let one_plus_theta = b4.one().add(&b4.theta());
            let principal = IdealLattice::principal(&one_plus_theta).unwrap();
            assert_eq!(
                principal.pow(4),
                IdealLattice::from_integer(&b4, &BigInt::from(2)).unwrap(),
                "(1+θ)⁴B = 2B"
            );
            assert_eq!(primes[0].ideal(), &principal, "(2, 1+θ)B = (1+θ)B");

            let div = |x: &[i64; 4]| x.iter().sum::<i64>() % 2 == 0;
            let mut reps: Vec<[i64; 4]> = Vec::with_capacity(16);
            for bits in 0..16i64 {
                reps.push([bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1]);
            }
            let mut matches = 0;
            for a in &reps {
                for b in &reps {
                    for c in &reps {
                        let input = ConicInput::new(
                            b4.element_from_i64(a).unwrap(),
                            b4.element_from_i64(b).unwrap(),
                            b4.element_from_i64(c).unwrap(),
                        );
                        let smooth = conic_core::analyzer::is_smooth(&input).unwrap();
                        let expected = !div(b) || (div(a) && div(b) && div(c));
                        assert_eq!(smooth, expected, "({a:?},{b:?},{c:?})");
                        matches += 1;
                    }
                }
            }
            assert_eq!(matches, 4096);
            "lattice identities + 4096/4096".into()
        },
    );
}

#[test]
fn criterion_07_oracle_agreement() {
    criterion(
        7,
        "200 seeded pseudorandom inputs per ring: oracle and analyzer agree on both verdicts (< 30 s)",
        || {
            let start = Instant::now();
            let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_2026);
            let cfg = OracleConfig::default();
            let mut checked = 0;
            for b in corpus_rings() {
                for _ in 0..200 {
                    let input = random_input(&mut rng, &b, 6);
                    let report = analyze(&input).unwrap();
                    assert_eq!(
                        smooth_oracle(&input, &cfg).unwrap(),
                        report.smooth,
                        "smoothness disagreement (ring degree {})",
                        b.degree()
                    );
                    assert_eq!(
                        regular_oracle(&input, &cfg).unwrap(),
                        report.regular,
                        "regularity disagreement (ring degree {})",
                        b.degree()
                    );
                    checked += 1;
                }
            }
            let elapsed = start.elapsed();
            assert_eq!(checked, 800);
            assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
            format!("800/800 agreements in {elapsed:?}")
        },
    );
}

#[test]
fn criterion_08_example14_family() {
    criterion(
        8,
        "degree-p family for p in {2,3,5,7,11,13}: not smooth, regular, identity exact (< 5 s)",
        || {
            let start = Instant::now();
            for p in [2u64, 3, 5, 7, 11, 13] {
                let r = example14_verify(p).unwrap();
                assert!(r.not_smooth, "p={p}: must not be smooth");
                assert!(r.regular, "p={p}: must be regular");
                assert!(r.identity_ok, "p={p}: substitution identity must be exact");
            }
            let elapsed = start.elapsed();
            assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
            format!("6/6 in {elapsed:?}")
        },
    );
}

#[test]
fn criterion_09_algebraic_invariant_suite() {
    criterion(
        9,
        "∏P^e = 2B, P·P⁻¹ = B, and 500 seeded inputs per ring: Eq-(5) residues, F_P ⊆ P, exact decomposition identity",
        || {
            // ideal-arithmetic identities in every ring
            for b in corpus_rings() {
                let primes = primes_above_2(&b).unwrap();
                let product = primes.iter().fold(IdealLattice::unit(&b), |acc, p| {
                    acc.mul(&p.ideal().pow(p.ramification()))
                });
                assert_eq!(
                    product,
                    IdealLattice::from_integer(&b, &BigInt::from(2)).unwrap(),
                    "∏P^e = 2B (ring degree {})",
                    b.degree()
                );
                for p in &primes {
                    assert!(
                        p.inverse().mul_integral(p.ideal()).is_ring(),
                        "P·P⁻¹ = B (ring degree {})",
                        b.degree()
                    );
                }
            }

            // randomized per-input identities
            let mut rng = ChaCha8Rng::seed_from_u64(0xA11CE);
            let mut fp_checked = 0usize;
            let mut identity_checked = 0usize;
            for b in corpus_rings() {
                for _ in 0..500 {
                    let input = random_input(&mut rng, &b, 6);
                    let g = conic_polynomial(&input);
                    for p in compute_gamma(&input).unwrap() {
                        let (d, e) = compute_de(&p, input.a(), input.c());
                        assert!(p.contains(&d.mul(&d).sub(input.a())), "d² ≡ a mod P");
                        assert!(p.contains(&e.mul(&e).sub(input.c())), "e² ≡ c mod P");
                        let f_p = compute_fp(&p, input.a(), input.b(), input.c(), &d, &e);
                        for (_, _, coeff) in f_p.terms() {
                            assert!(p.contains(coeff), "F_P coefficient outside P");
                        }
                        fp_checked += 1;
                        if !p.contains(input.a()) {
                            // d²g = a·Z² − 2a·Z·(eY+1) + bd·Z·Y + F_P exactly
                            let z = BivarPoly::from_terms([
                                (1u32, 0u32, d.clone()),
                                (0, 1, e.clone()),
                                (0, 0, b.one()),
                            ]);
                            let ey1 = BivarPoly::from_terms([
                                (0u32, 1u32, e.clone()),
                                (0, 0, b.one()),
                            ]);
                            let y = BivarPoly::term(b.one(), 0, 1);
                            let rhs = z
                                .mul(&z)
                                .scalar_mul(input.a())
                                .sub(&z.mul(&ey1).scalar_mul(&input.a().scale(&BigInt::from(2))))
                                .add(&z.mul(&y).scalar_mul(&input.b().mul(&d)))
                                .add(&f_p);
                            assert!(
                                g.scalar_mul(&d.mul(&d)).sub(&rhs).is_zero(),
                                "decomposition identity must be exact"
                            );
                            identity_checked += 1;
                        }
                    }
                }
            }
            assert!(fp_checked >= 500, "at least 500 F_P membership checks");
            assert!(identity_checked >= 200, "enough exact-identity checks");
            format!("{fp_checked} F_P checks, {identity_checked} exact identities, zero failures")
        },
    );
}

#[test]
fn criterion_10_negative_input_handling() {
    criterion(
        10,
        "x² + 3 (non-maximal at 2) is rejected with the dedicated error and exit code 2",
        || {
            // library level: the distinct error, never a verdict
            let b3 = ring(&[3, 0, 1]);
            let input = ConicInput::new(b3.one(), b3.one(), b3.one());
            assert!(matches!(analyze(&input), Err(Error::NonMaximalOrder)));
            assert!(matches!(
                conic_core::analyzer::is_smooth(&input),
                Err(Error::NonMaximalOrder)
            ));

            // CLI level: exit 2 with the message
            let dir = tempfile::tempdir().unwrap();
            let path = dir.path().join("job.json");
            std::fs::write(&path, r#"{"min_poly":[3,0,1],"a":[1,0],"b":[1,0],"c":[1,0]}"#)
                .unwrap();
            let out = Command::new(env!("CARGO_BIN_EXE_conic"))
                .args(["analyze", path.to_str().unwrap()])
                .output()
                .unwrap();
            assert_eq!(out.status.code(), Some(2), "exit code must be 2");
            let err = String::from_utf8_lossy(&out.stderr);
            assert!(err.contains("order not maximal at 2"), "stderr: {err}");
            assert!(out.stdout.is_empty(), "no silent verdict may be printed");
            "library error + exit 2 verified".into()
        },
    );
}
