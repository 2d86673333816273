//! The verdict pipeline for A = B[X,Y]/(aX² + bXY + cY² − 1).
//!
//! Over a ring of algebraic integers B only the primes above 2 matter:
//! A is smooth over B exactly when, for every prime P | 2B containing b,
//! both a and c lie in P. Regularity can only fail at the primes collected
//! in Γ — those P | 2B with b ∈ P but not both of a, c in P. For each such
//! P the residue field is perfect of characteristic 2, so a and c have
//! unique square roots d̄, ē mod P; lifting them to d, e ∈ B yields a
//! one-variable quadratic F_P whose coefficients all lie in P:
//!
//!   a ∉ P:  F_P = (ae² − bde + cd²)·Y² + (2ae − bd)·Y + (a − d²)
//!   a ∈ P:  F_P = (ae²)·X² − (be)·X + (c − e²)
//!
//! A fails to be regular above P exactly when F_P·P⁻¹ is contained in some
//! maximal ideal, which reduces to membership tests modulo P²: for a ∉ P
//! the ring is regular at P iff b − 2de ∈ P², cd² − ae² ∈ P² and
//! a − d² ∉ P² (symmetrically for a ∈ P). The singular locus is cut out by
//! H = ∏_{P∈Γ} (P, F_P·P⁻¹)A, reported as an explicit generator list.

use std::fmt;

use crate::bivar_poly::BivarPoly;
use crate::error::Error;
use crate::ideal_lattice::{primes_above_2, IdealLattice, PrimeAbove2};
use crate::number_ring::{NumberRing, RingElement};

/// The coefficients (a, b, c) of a conic over a fixed ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConicInput {
    ring: NumberRing,
    a: RingElement,
    b: RingElement,
    c: RingElement,
}

impl ConicInput {
    pub fn new(a: RingElement, b: RingElement, c: RingElement) -> ConicInput {
        let ring = a.ring().clone();
        assert!(b.ring() == &ring && c.ring() == &ring, "ring mismatch");
        ConicInput { ring, a, b, c }
    }

    pub fn ring(&self) -> &NumberRing {
        &self.ring
    }

    pub fn a(&self) -> &RingElement {
        &self.a
    }

    pub fn b(&self) -> &RingElement {
        &self.b
    }

    pub fn c(&self) -> &RingElement {
        &self.c
    }
}

/// Which of the two constructions produced F_P.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FpCase {
    /// a ∉ P: F_P is a quadratic in Y.
    AOutsideP,
    /// a ∈ P (then c ∉ P): F_P is a quadratic in X.
    AInsideP,
}

impl fmt::Display for FpCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FpCase::AOutsideP => write!(f, "a ∉ P"),
            FpCase::AInsideP => write!(f, "a ∈ P"),
        }
    }
}

/// One membership test modulo P².
#[derive(Clone, Debug)]
pub struct Cor8Condition {
    pub name: &'static str,
    pub element: RingElement,
    pub in_p_squared: bool,
}

/// Everything computed at one prime of Γ.
#[derive(Clone, Debug)]
pub struct PrimeReport {
    pub prime: PrimeAbove2,
    pub d: RingElement,
    pub e: RingElement,
    pub case: FpCase,
    pub f_p: BivarPoly<RingElement>,
    pub conditions: Vec<Cor8Condition>,
    pub regular_at_p: bool,
    /// Generators of the factor (P, F_P·P⁻¹): the Z-basis of P as constants
    /// followed by F_P·tⱼ for tⱼ running over a Z-basis of P⁻¹.
    pub h_factor_generators: Vec<BivarPoly<RingElement>>,
}

/// The full verdict bundle for one input.
#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub input: ConicInput,
    pub smooth: bool,
    pub gamma: Vec<PrimeReport>,
    pub regular: bool,
    pub singular_locus_empty: bool,
}

/// The singular locus, either empty (unit ideal) or presented by the
/// non-regular factors together with generators of the full product ideal H.
#[derive(Clone, Debug)]
pub enum SingularLocus {
    Unit,
    Proper {
        non_regular: Vec<PrimeReport>,
        h_generators: Vec<BivarPoly<RingElement>>,
    },
}

/// g = aX² + bXY + cY² − 1 as a polynomial over B.
pub fn conic_polynomial(input: &ConicInput) -> BivarPoly<RingElement> {
    BivarPoly::from_terms([
        (2u32, 0u32, input.a.clone()),
        (1, 1, input.b.clone()),
        (0, 2, input.c.clone()),
        (0, 0, input.ring.one().neg()),
    ])
}

/// Smoothness of A over B: every prime P above 2 that contains b must
/// contain a and c as well. Vacuously true when no prime contains b.
pub fn is_smooth(input: &ConicInput) -> Result<bool, Error> {
    let primes = primes_above_2(&input.ring)?;
    Ok(primes.iter().all(|p| {
        !p.contains(&input.b) || (p.contains(&input.a) && p.contains(&input.c))
    }))
}

/// Γ: the primes above 2 containing b but not both of a and c — the only
/// places where regularity can fail. Ordered by the deterministic prime
/// order of the splitting.
pub fn compute_gamma(input: &ConicInput) -> Result<Vec<PrimeAbove2>, Error> {
    let primes = primes_above_2(&input.ring)?;
    Ok(primes
        .into_iter()
        .filter(|p| {
            p.contains(&input.b) && !(p.contains(&input.a) && p.contains(&input.c))
        })
        .collect())
}

/// The canonical lifts d, e with d² ≡ a and e² ≡ c modulo P, coordinates
/// in {0, 1}. (The residue field is perfect of characteristic 2, so the
/// square roots exist and are unique; d and e are determined modulo P.)
pub fn compute_de(prime: &PrimeAbove2, a: &RingElement, c: &RingElement) -> (RingElement, RingElement) {
    let d = prime.lift(&prime.residue(a).sqrt());
    let e = prime.lift(&prime.residue(c).sqrt());
    (d, e)
}

/// The auxiliary quadratic F_P. Every coefficient lies in P.
///
/// Panics when both a and c lie in P: such a prime is excluded from Γ and
/// has no F_P.
pub fn compute_fp(
    prime: &PrimeAbove2,
    a: &RingElement,
    b: &RingElement,
    c: &RingElement,
    d: &RingElement,
    e: &RingElement,
) -> BivarPoly<RingElement> {
    let two = a.ring().from_int(2);
    if !prime.contains(a) {
        // (ae² − bde + cd²)·Y² + (2ae − bd)·Y + (a − d²)
        let y2 = a.mul(&e.mul(e)).sub(&b.mul(&d.mul(e))).add(&c.mul(&d.mul(d)));
        let y1 = two.mul(&a.mul(e)).sub(&b.mul(d));
        let y0 = a.sub(&d.mul(d));
        BivarPoly::from_terms([(0u32, 2u32, y2), (0, 1, y1), (0, 0, y0)])
    } else {
        assert!(
            !prime.contains(c),
            "both a and c lie in P; no F_P exists for a prime outside Γ"
        );
        // (ae²)·X² − (be)·X + (c − e²)
        let x2 = a.mul(&e.mul(e));
        let x1 = b.mul(e).neg();
        let x0 = c.sub(&e.mul(e));
        BivarPoly::from_terms([(2u32, 0u32, x2), (1, 0, x1), (0, 0, x0)])
    }
}

/// Generators F_P·tⱼ of the fractional part F_P·P⁻¹, one per Z-basis
/// vector tⱼ of P⁻¹. The products are integral because every coefficient
/// of F_P lies in P.
pub fn fp_inverse_generators(
    prime: &PrimeAbove2,
    f_p: &BivarPoly<RingElement>,
) -> Vec<BivarPoly<RingElement>> {
    let inv = prime.inverse();
    let den = inv.denominator().clone();
    inv.numerator()
        .basis_elements()
        .iter()
        .map(|t| {
            f_p.scalar_mul(t).map_coeffs(|c| {
                c.div_exact_int(&den)
                    .expect("coefficients of F_P·P⁻¹ are integral")
            })
        })
        .collect()
}

/// The per-prime regularity verdict with its membership evidence and the
/// generators of the singular-locus factor at P.
pub fn cor8_check(
    prime: &PrimeAbove2,
    input: &ConicInput,
    d: &RingElement,
    e: &RingElement,
) -> PrimeReport {
    let (a, b, c) = (&input.a, &input.b, &input.c);
    let p_squared = prime.ideal().pow(2);
    let two = input.ring.from_int(2);

    let (case, conditions, regular_at_p) = if !prime.contains(a) {
        // b − 2de ∈ P², cd² − ae² ∈ P², a − d² ∉ P²
        let t1 = b.sub(&two.mul(&d.mul(e)));
        let t2 = c.mul(&d.mul(d)).sub(&a.mul(&e.mul(e)));
        let t3 = a.sub(&d.mul(d));
        let m1 = p_squared.contains(&t1);
        let m2 = p_squared.contains(&t2);
        let m3 = p_squared.contains(&t3);
        (
            FpCase::AOutsideP,
            vec![
                Cor8Condition { name: "b-2de", element: t1, in_p_squared: m1 },
                Cor8Condition { name: "cd^2-ae^2", element: t2, in_p_squared: m2 },
                Cor8Condition { name: "a-d^2", element: t3, in_p_squared: m3 },
            ],
            m1 && m2 && !m3,
        )
    } else {
        // a ∈ P², b ∈ P², c − e² ∉ P²
        let t3 = c.sub(&e.mul(e));
        let m1 = p_squared.contains(a);
        let m2 = p_squared.contains(b);
        let m3 = p_squared.contains(&t3);
        (
            FpCase::AInsideP,
            vec![
                Cor8Condition { name: "a", element: a.clone(), in_p_squared: m1 },
                Cor8Condition { name: "b", element: b.clone(), in_p_squared: m2 },
                Cor8Condition { name: "c-e^2", element: t3, in_p_squared: m3 },
            ],
            m1 && m2 && !m3,
        )
    };

    let f_p = compute_fp(prime, a, b, c, d, e);
    let mut h_factor_generators: Vec<BivarPoly<RingElement>> = prime
        .ideal()
        .basis_elements()
        .into_iter()
        .map(BivarPoly::constant)
        .collect();
    h_factor_generators.extend(fp_inverse_generators(prime, &f_p));

    PrimeReport {
        prime: prime.clone(),
        d: d.clone(),
        e: e.clone(),
        case,
        f_p,
        conditions,
        regular_at_p,
        h_factor_generators,
    }
}

/// Run the whole pipeline on one input.
pub fn analyze(input: &ConicInput) -> Result<AnalysisReport, Error> {
    let primes = primes_above_2(&input.ring)?;
    let mut smooth = true;
    let mut gamma_primes = Vec::new();
    for p in primes {
        if !p.contains(&input.b) {
            continue;
        }
        if p.contains(&input.a) && p.contains(&input.c) {
            continue; // the fiber over P is empty; P never meets Spec A
        }
        smooth = false;
        gamma_primes.push(p);
    }
    let gamma: Vec<PrimeReport> = gamma_primes
        .iter()
        .map(|p| {
            let (d, e) = compute_de(p, &input.a, &input.c);
            cor8_check(p, input, &d, &e)
        })
        .collect();
    let regular = gamma.iter().all(|r| r.regular_at_p);
    Ok(AnalysisReport {
        input: input.clone(),
        smooth,
        gamma,
        regular,
        singular_locus_empty: regular,
    })
}

pub fn is_regular(input: &ConicInput) -> Result<bool, Error> {
    Ok(analyze(input)?.regular)
}

/// The singular locus V(H), H = ∏_{P∈Γ} (P, F_P·P⁻¹)A: the unit marker
/// when A is regular, otherwise the non-regular factors plus generators of
/// the full product (one product of generators per choice across Γ).
pub fn singular_locus(input: &ConicInput) -> Result<SingularLocus, Error> {
    let report = analyze(input)?;
    if report.regular {
        return Ok(SingularLocus::Unit);
    }
    let mut h_generators = vec![BivarPoly::constant(input.ring.one())];
    for prime_report in &report.gamma {
        let mut next = Vec::with_capacity(h_generators.len() * prime_report.h_factor_generators.len());
        for acc in &h_generators {
            for g in &prime_report.h_factor_generators {
                next.push(acc.mul(g));
            }
        }
        h_generators = next;
    }
    let non_regular = report
        .gamma
        .into_iter()
        .filter(|r| !r.regular_at_p)
        .collect();
    Ok(SingularLocus::Proper { non_regular, h_generators })
}

/// P² as a lattice — convenience for tests and reports.
pub fn prime_square(prime: &PrimeAbove2) -> IdealLattice {
    prime.ideal().pow(2)
}
