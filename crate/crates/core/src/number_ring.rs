//! Arithmetic in a monogenic order B = Z[θ], θ a root of a monic integer
//! polynomial, with elements stored as exact integer coordinate vectors in
//! the power basis 1, θ, ..., θ^(n-1).
//!
//! All coordinates are arbitrary-precision integers; membership tests in
//! squares of prime ideals downstream must be exact, so no modular shortcuts
//! are taken here. Rings and elements are immutable after construction.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Supported degree range for the minimal polynomial.
pub const MAX_DEGREE: usize = 16;

/// Divisor enumeration for the rational-root check is skipped above this
/// bound on the constant term (the roots ±1 are always tested).
const ROOT_CHECK_BOUND: u64 = 1_000_000_000_000;

#[derive(Debug)]
struct NumberRingInner {
    n: usize,
    min_poly: Vec<BigInt>,
    /// θ^m reduced modulo the minimal polynomial, for m = 0..=2n-2; entries
    /// m < n are unit vectors, and theta_powers[i + j] is the row (i, j) of
    /// the power-basis multiplication table.
    theta_powers: Vec<Vec<BigInt>>,
}

/// A monogenic order Z[θ]. Cheap to clone, shareable across threads.
#[derive(Clone, Debug)]
pub struct NumberRing {
    inner: Arc<NumberRingInner>,
}

impl PartialEq for NumberRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.min_poly == other.inner.min_poly
    }
}

impl Eq for NumberRing {}

fn eval_int_poly(coeffs: &[BigInt], at: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = acc * at + c;
    }
    acc
}

impl NumberRing {
    /// Build Z[θ] from a monic minimal polynomial given constant-term first.
    ///
    /// Full irreducibility over Q is a precondition on the caller; as a
    /// cheap necessary check, polynomials of degree >= 2 with a rational
    /// integer root dividing the constant term are rejected.
    pub fn new(min_poly: Vec<BigInt>) -> Result<NumberRing, Error> {
        if min_poly.len() < 2 || min_poly.len() > MAX_DEGREE + 1 {
            return Err(Error::DegreeOutOfRange(
                min_poly.len().saturating_sub(1),
                MAX_DEGREE,
            ));
        }
        let n = min_poly.len() - 1;
        if !min_poly[n].is_one() {
            return Err(Error::NotMonic);
        }
        if n >= 2 {
            for r in rational_root_candidates(&min_poly[0]) {
                if eval_int_poly(&min_poly, &r).is_zero() {
                    return Err(Error::ReducibleMinPoly(r));
                }
            }
        }

        // θ^n = -(a_0 + a_1 θ + ... + a_{n-1} θ^{n-1})
        let mut theta_powers: Vec<Vec<BigInt>> = Vec::with_capacity(2 * n - 1);
        for m in 0..n {
            let mut v = vec![BigInt::zero(); n];
            v[m] = BigInt::one();
            theta_powers.push(v);
        }
        for _ in n..=2 * n - 2 {
            let prev = theta_powers.last().unwrap().clone();
            let mut next = vec![BigInt::zero(); n];
            // multiply by θ: shift, then reduce the overflowing θ^n term
            for i in 0..n - 1 {
                next[i + 1] = prev[i].clone();
            }
            let carry = &prev[n - 1];
            if !carry.is_zero() {
                for i in 0..n {
                    next[i] -= carry * &min_poly[i];
                }
            }
            theta_powers.push(next);
        }

        Ok(NumberRing {
            inner: Arc::new(NumberRingInner { n, min_poly, theta_powers }),
        })
    }

    pub fn degree(&self) -> usize {
        self.inner.n
    }

    pub fn min_poly(&self) -> &[BigInt] {
        &self.inner.min_poly
    }

    /// θ^m in reduced coordinates, for m <= 2n-2.
    pub(crate) fn theta_power(&self, m: usize) -> &[BigInt] {
        &self.inner.theta_powers[m]
    }

    pub fn element(&self, coords: Vec<BigInt>) -> Result<RingElement, Error> {
        if coords.len() != self.inner.n {
            return Err(Error::CoordinateLength { expected: self.inner.n, got: coords.len() });
        }
        Ok(RingElement { ring: self.clone(), coords })
    }

    /// Convenience constructor from small integer coordinates.
    pub fn element_from_i64(&self, coords: &[i64]) -> Result<RingElement, Error> {
        self.element(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(&self) -> RingElement {
        RingElement { ring: self.clone(), coords: vec![BigInt::zero(); self.inner.n] }
    }

    pub fn one(&self) -> RingElement {
        self.from_int(BigInt::one())
    }

    pub fn theta(&self) -> RingElement {
        let mut coords = vec![BigInt::zero(); self.inner.n];
        if self.inner.n >= 2 {
            coords[1] = BigInt::one();
            RingElement { ring: self.clone(), coords }
        } else {
            // degree 1: θ is the integer -a_0
            self.from_int(-self.inner.min_poly[0].clone())
        }
    }

    /// The image of a rational integer: coordinates (k, 0, ..., 0).
    pub fn from_int(&self, k: impl Into<BigInt>) -> RingElement {
        let mut coords = vec![BigInt::zero(); self.inner.n];
        coords[0] = k.into();
        RingElement { ring: self.clone(), coords }
    }
}

fn rational_root_candidates(constant: &BigInt) -> Vec<BigInt> {
    if constant.is_zero() {
        // x divides the polynomial
        return vec![BigInt::zero()];
    }
    let mut out = vec![BigInt::one(), -BigInt::one()];
    if let Some(c) = constant.abs().to_u64() {
        if c <= ROOT_CHECK_BOUND {
            let mut d = 2u64;
            while d.saturating_mul(d) <= c {
                if c % d == 0 {
                    for v in [d, c / d] {
                        out.push(BigInt::from(v));
                        out.push(-BigInt::from(v));
                    }
                }
                d += 1;
            }
            out.push(BigInt::from(c));
            out.push(-BigInt::from(c));
        }
    }
    out
}

/// An element of Z[θ] as a coordinate vector in the power basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingElement {
    ring: NumberRing,
    coords: Vec<BigInt>,
}

impl RingElement {
    pub fn ring(&self) -> &NumberRing {
        &self.ring
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn check_ring(&self, rhs: &RingElement) {
        assert!(self.ring == rhs.ring, "ring mismatch");
    }

    pub fn add(&self, rhs: &RingElement) -> RingElement {
        self.check_ring(rhs);
        let coords = self
            .coords
            .iter()
            .zip(&rhs.coords)
            .map(|(a, b)| a + b)
            .collect();
        RingElement { ring: self.ring.clone(), coords }
    }

    pub fn sub(&self, rhs: &RingElement) -> RingElement {
        self.check_ring(rhs);
        let coords = self
            .coords
            .iter()
            .zip(&rhs.coords)
            .map(|(a, b)| a - b)
            .collect();
        RingElement { ring: self.ring.clone(), coords }
    }

    pub fn neg(&self) -> RingElement {
        RingElement {
            ring: self.ring.clone(),
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    /// Product reduced modulo the minimal polynomial via the precomputed
    /// power table.
    pub fn mul(&self, rhs: &RingElement) -> RingElement {
        self.check_ring(rhs);
        let n = self.ring.degree();
        // convolution of coordinates, then reduction of each θ^m
        let mut conv = vec![BigInt::zero(); 2 * n - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] += a * b;
            }
        }
        let mut coords = vec![BigInt::zero(); n];
        for (m, c) in conv.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, p) in self.ring.theta_power(m).iter().enumerate() {
                if !p.is_zero() {
                    coords[i] += &c * p;
                }
            }
        }
        RingElement { ring: self.ring.clone(), coords }
    }

    pub fn scale(&self, k: &BigInt) -> RingElement {
        RingElement {
            ring: self.ring.clone(),
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    /// Exact division of every coordinate by a nonzero integer; `None` when
    /// some coordinate is not divisible.
    pub fn div_exact_int(&self, k: &BigInt) -> Option<RingElement> {
        let mut coords = Vec::with_capacity(self.coords.len());
        for c in &self.coords {
            let (q, r) = num_integer::Integer::div_rem(c, k);
            if !r.is_zero() {
                return None;
            }
            coords.push(q);
        }
        Some(RingElement { ring: self.ring.clone(), coords })
    }

    pub fn pow(&self, e: u32) -> RingElement {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            wrote = true;
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{}", mag)?;
            }
            match i {
                0 => {}
                1 => write!(f, "θ")?,
                _ => write!(f, "θ^{}", i)?,
            }
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}
