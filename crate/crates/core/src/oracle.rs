//! Independent brute-force verification of the analyzer verdicts.
//!
//! Smoothness is checked by searching every fiber above 2 for a point where
//! the conic and both partials vanish simultaneously; regularity by the
//! point-wise criterion that all generators of F_P·P⁻¹ vanish at a point of
//! the fiber. Points are enumerated over GF(2^(k·m)) for m up to a
//! configurable bound.
//!
//! The default bound 2 suffices: any non-regularity witness lies on the
//! line d̄X + ēY + 1̄ = 0 inside the fiber, where the extra equations
//! restrict to univariate polynomials of degree at most 2, so a nonempty
//! witness set always contains a point of residue degree at most 2.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::analyzer::{
    compute_de, compute_fp, compute_gamma, conic_polynomial, fp_inverse_generators, ConicInput,
};
use crate::bivar_poly::{embed_poly, reduce_mod_prime, BivarPoly, Coefficient, Var};
use crate::error::Error;
use crate::gf2_poly::{FieldEmbedding, FqElement, FqField};
use crate::ideal_lattice::primes_above_2;

/// Enumeration bound: residue extensions of degree m ≤ `degree_bound` are
/// searched above each prime.
#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    pub degree_bound: u32,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { degree_bound: 2 }
    }
}

impl OracleConfig {
    pub fn new(degree_bound: u32) -> OracleConfig {
        assert!(degree_bound >= 1, "degree bound must be at least 1");
        OracleConfig { degree_bound }
    }
}

/// A point of the fiber over some GF(2^(k·m)), kept with its field.
#[derive(Clone, Debug)]
pub struct RationalPoint {
    pub field: FqField,
    pub x: FqElement,
    pub y: FqElement,
}

/// A witness against smoothness: a fiber point where the conic and both of
/// its partials vanish. `None` means smooth.
pub fn smooth_witness(input: &ConicInput, cfg: &OracleConfig) -> Result<Option<RationalPoint>, Error> {
    assert!(cfg.degree_bound >= 1);
    let g = conic_polynomial(input);
    for prime in primes_above_2(input.ring())? {
        let gbar = reduce_mod_prime(&g, &prime);
        let gx = gbar.derivative(Var::X);
        let gy = gbar.derivative(Var::Y);
        let k = prime.residue_degree();
        for m in 1..=cfg.degree_bound as usize {
            let ext = FqField::canonical(k * m);
            let emb = FieldEmbedding::new(prime.residue_field(), &ext)?;
            let ge = embed_poly(&gbar, &emb);
            let gxe = embed_poly(&gx, &emb);
            let gye = embed_poly(&gy, &emb);
            let points: Vec<FqElement> = ext.elements().collect();
            for x in &points {
                for y in &points {
                    if ge.eval(x, y).is_zero()
                        && gxe.eval(x, y).is_zero()
                        && gye.eval(x, y).is_zero()
                    {
                        return Ok(Some(RationalPoint {
                            field: ext,
                            x: x.clone(),
                            y: y.clone(),
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Smoothness by exhaustive fiber search.
pub fn smooth_oracle(input: &ConicInput, cfg: &OracleConfig) -> Result<bool, Error> {
    Ok(smooth_witness(input, cfg)?.is_none())
}

/// A witness against regularity: a fiber point over some P in Γ where the
/// conic and every generator of F_P·P⁻¹ vanish. `None` means regular.
pub fn regular_witness(input: &ConicInput, cfg: &OracleConfig) -> Result<Option<RationalPoint>, Error> {
    assert!(cfg.degree_bound >= 1);
    let g = conic_polynomial(input);
    for prime in compute_gamma(input)? {
        let (d, e) = compute_de(&prime, input.a(), input.c());
        let f_p = compute_fp(&prime, input.a(), input.b(), input.c(), &d, &e);
        let gens = fp_inverse_generators(&prime, &f_p);
        let gbar = reduce_mod_prime(&g, &prime);
        let gens_bar: Vec<_> = gens.iter().map(|h| reduce_mod_prime(h, &prime)).collect();
        let k = prime.residue_degree();
        for m in 1..=cfg.degree_bound as usize {
            let ext = FqField::canonical(k * m);
            let emb = FieldEmbedding::new(prime.residue_field(), &ext)?;
            let ge = embed_poly(&gbar, &emb);
            let gens_ext: Vec<_> = gens_bar.iter().map(|h| embed_poly(h, &emb)).collect();
            let points: Vec<FqElement> = ext.elements().collect();
            for x in &points {
                for y in &points {
                    if ge.eval(x, y).is_zero() && gens_ext.iter().all(|h| h.eval(x, y).is_zero()) {
                        return Ok(Some(RationalPoint {
                            field: ext,
                            x: x.clone(),
                            y: y.clone(),
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Regularity by the point-wise criterion.
pub fn regular_oracle(input: &ConicInput, cfg: &OracleConfig) -> Result<bool, Error> {
    Ok(regular_witness(input, cfg)?.is_none())
}

/// Largest prime accepted by [`example14_verify`].
pub const EXAMPLE14_PRIME_BOUND: u64 = 50;

/// The verdict triple for the degree-p family Z[X,Y]/((p+1)X^p + p²Y^p − 1).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Example14Report {
    pub not_smooth: bool,
    pub regular: bool,
    pub identity_ok: bool,
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Elements of the prime field GF(p), used only for the degree-p family
/// (the quadratic pipeline lives entirely in characteristic 2).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Fp {
    p: u64,
    v: u64,
}

impl Coefficient for Fp {
    fn zero_like(&self) -> Self {
        Fp { p: self.p, v: 0 }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p);
        Fp { p: self.p, v: (self.v + rhs.v) % self.p }
    }
    fn neg(&self) -> Self {
        Fp { p: self.p, v: (self.p - self.v) % self.p }
    }
    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p);
        Fp { p: self.p, v: (self.v * rhs.v) % self.p }
    }
}

fn reduce_mod_p(poly: &BivarPoly<BigInt>, p: u64) -> BivarPoly<Fp> {
    let modulus = BigInt::from(p);
    poly.map_coeffs(|c| {
        let v = c.mod_floor(&modulus).to_u64().unwrap();
        Fp { p, v }
    })
}

/// Pascal's triangle row p: C(p, 0), ..., C(p, p).
fn binomial_row(p: u64) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    for _ in 0..p {
        let mut next = vec![BigInt::from(1)];
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::from(1));
        row = next;
    }
    row
}

/// Checks that D = Z[X,Y]/((p+1)X^p + p²Y^p − 1) is regular but not smooth
/// over Z, for a prime p.
///
/// - `not_smooth`: the fiber over p has a point where g and both partials
///   vanish, found by direct enumeration over GF(p)².
/// - `identity_ok`: the exact substitution identity in Z = X − 1,
///   g = (p+1)·[Z^p + Σ_{k=1}^{p−1} C(p,k)·Z^{p−k}] + p·(pY^p + 1),
///   holds as a polynomial identity over Z, and p divides every interior
///   binomial coefficient C(p,k).
/// - `regular`: `identity_ok`, and the residue of pY^p + 1 modulo (p, Z)
///   is the nonzero constant 1 — so the bracket part of g lies in the
///   square of any candidate maximal ideal while the rest cannot.
pub fn example14_verify(p: u64) -> Result<Example14Report, Error> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    if p > EXAMPLE14_PRIME_BOUND {
        return Err(Error::PrimeTooLarge(p, EXAMPLE14_PRIME_BOUND));
    }
    let pi = BigInt::from(p);
    let pe = p as u32;

    // g = (p+1)·X^p + p²·Y^p − 1 over Z
    let g: BivarPoly<BigInt> = BivarPoly::from_terms([
        (pe, 0u32, &pi + 1),
        (0, pe, &pi * &pi),
        (0, 0, BigInt::from(-1)),
    ]);

    // fiber search over GF(p)²
    let gbar = reduce_mod_p(&g, p);
    let gxbar = reduce_mod_p(&g.derivative(Var::X), p);
    let gybar = reduce_mod_p(&g.derivative(Var::Y), p);
    let mut not_smooth = false;
    'search: for xv in 0..p {
        for yv in 0..p {
            let x = Fp { p, v: xv };
            let y = Fp { p, v: yv };
            if gbar.eval(&x, &y).is_zero()
                && gxbar.eval(&x, &y).is_zero()
                && gybar.eval(&x, &y).is_zero()
            {
                not_smooth = true;
                break 'search;
            }
        }
    }

    // substitution identity in Z = X − 1 (the X axis below carries Z):
    // (p+1)(Z+1)^p + p²Y^p − 1, with (Z+1)^p expanded by repeated
    // multiplication, against the regrouped right-hand side built from
    // independently computed binomial coefficients.
    let z_plus_1: BivarPoly<BigInt> =
        BivarPoly::from_terms([(1u32, 0u32, BigInt::from(1)), (0, 0, BigInt::from(1))]);
    let lhs = z_plus_1
        .pow(pe)
        .scalar_mul(&(&pi + 1))
        .add(&BivarPoly::term(&pi * &pi, 0, pe))
        .add(&BivarPoly::constant(BigInt::from(-1)));

    let binom = binomial_row(p);
    let mut bracket: BivarPoly<BigInt> = BivarPoly::term(BigInt::from(1), pe, 0);
    let mut binom_divisible = true;
    for k in 1..p {
        if !Zero::is_zero(&binom[k as usize].mod_floor(&pi)) {
            binom_divisible = false;
        }
        bracket = bracket.add(&BivarPoly::term(binom[k as usize].clone(), (p - k) as u32, 0));
    }
    let tail: BivarPoly<BigInt> =
        BivarPoly::from_terms([(0u32, pe, pi.clone()), (0, 0, BigInt::from(1))]);
    let rhs = bracket.scalar_mul(&(&pi + 1)).add(&tail.scalar_mul(&pi));
    let identity_ok = lhs.sub(&rhs).is_zero() && binom_divisible;

    // residue of p·Y^p + 1 modulo (p, Z) must be the nonzero constant 1
    let tail_mod_p = reduce_mod_p(&tail, p);
    let tail_mod_pz = BivarPoly::from_terms(
        tail_mod_p
            .terms()
            .filter(|&(i, _, _)| i == 0)
            .map(|(i, j, c)| (i, j, *c)),
    );
    let one = Fp { p, v: 1 };
    let regular = identity_ok && tail_mod_pz == BivarPoly::constant(one) && !one.is_zero();

    Ok(Example14Report { not_smooth, regular, identity_ok })
}
