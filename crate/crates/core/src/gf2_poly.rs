//! Univariate polynomials over GF(2) and the residue fields GF(2^k).
//!
//! Coefficients are packed into the bits of a [`num_bigint::BigUint`]: bit
//! `i` holds the coefficient of `x^i`, so addition is XOR and multiplication
//! is shift-and-XOR. The zero polynomial is the empty bit string and reports
//! `degree() == None`.
//!
//! [`FqField`] builds GF(2^k) as GF(2)[x] modulo an irreducible polynomial.
//! Because these fields are perfect of characteristic 2, every element has a
//! unique square root, computed as `x^(2^(k-1))` by repeated squaring.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use crate::error::Error;

/// Hard cap on the degree of externally constructed polynomials.
///
/// Intermediate results of arithmetic (products, remainders) may exceed the
/// cap; only the public constructors enforce it.
pub const DEGREE_CAP: usize = 64;

/// A polynomial over GF(2), bit `i` = coefficient of `x^i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Poly {
    bits: BigUint,
}

fn bits_degree(bits: &BigUint) -> Option<usize> {
    if bits.is_zero() {
        None
    } else {
        Some(bits.bits() as usize - 1)
    }
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Gf2Poly { bits: BigUint::zero() }
    }

    pub fn one() -> Self {
        Gf2Poly { bits: BigUint::from(1u32) }
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Gf2Poly { bits: BigUint::from(2u32) }
    }

    fn from_bits_raw(bits: BigUint) -> Self {
        Gf2Poly { bits }
    }

    /// Construct from a packed bit pattern (`0b111` is `x^2 + x + 1`).
    pub fn from_bits(bits: u64) -> Self {
        Gf2Poly { bits: BigUint::from(bits) }
    }

    /// Construct from an arbitrary bit pattern, enforcing the degree cap.
    pub fn from_biguint(bits: BigUint) -> Result<Self, Error> {
        match bits_degree(&bits) {
            Some(d) if d > DEGREE_CAP => Err(Error::DegreeCapExceeded(d, DEGREE_CAP)),
            _ => Ok(Gf2Poly { bits }),
        }
    }

    /// The mod-2 image of an integer polynomial (constant term first).
    pub fn from_int_coeffs(coeffs: &[BigInt]) -> Result<Self, Error> {
        let mut bits = BigUint::zero();
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_odd() {
                bits.set_bit(i as u64, true);
            }
        }
        Self::from_biguint(bits)
    }

    pub fn bits(&self) -> &BigUint {
        &self.bits
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        bits_degree(&self.bits)
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.degree() == Some(0)
    }

    /// Coefficient of `x^i`.
    pub fn coeff(&self, i: usize) -> bool {
        self.bits.bit(i as u64)
    }

    pub fn add(&self, rhs: &Gf2Poly) -> Gf2Poly {
        Gf2Poly { bits: &self.bits ^ &rhs.bits }
    }

    pub fn mul(&self, rhs: &Gf2Poly) -> Gf2Poly {
        let mut acc = BigUint::zero();
        let n = rhs.bits.bits();
        for i in 0..n {
            if rhs.bits.bit(i) {
                acc ^= &self.bits << (i as usize);
            }
        }
        Gf2Poly { bits: acc }
    }

    /// Quotient and remainder by a nonzero divisor.
    ///
    /// Panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Gf2Poly) -> (Gf2Poly, Gf2Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.bits.clone();
        let mut quot = BigUint::zero();
        while let Some(dr) = bits_degree(&rem) {
            if dr < dd {
                break;
            }
            let shift = dr - dd;
            quot.set_bit(shift as u64, true);
            rem ^= &divisor.bits << shift;
        }
        (Gf2Poly::from_bits_raw(quot), Gf2Poly::from_bits_raw(rem))
    }

    pub fn rem(&self, modulus: &Gf2Poly) -> Gf2Poly {
        self.div_rem(modulus).1
    }

    pub fn gcd(&self, other: &Gf2Poly) -> Gf2Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    pub fn pow(&self, e: u32) -> Gf2Poly {
        let mut acc = Gf2Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Irreducibility over GF(2) by trial division against every polynomial
    /// of degree 1..=deg/2. Constants and zero are not irreducible.
    pub fn is_irreducible(&self) -> bool {
        let d = match self.degree() {
            None | Some(0) => return false,
            Some(d) => d,
        };
        if d == 1 {
            return true;
        }
        let mut cand: u64 = 2;
        loop {
            let cd = 63 - cand.leading_zeros() as usize;
            if 2 * cd > d {
                return true;
            }
            if self.rem(&Gf2Poly::from_bits(cand)).is_zero() {
                return false;
            }
            cand += 1;
        }
    }

    /// Factor into irreducibles with multiplicities, sorted by
    /// (degree, bit value). Trial division in ascending candidate order:
    /// composites never divide the remainder because their own factors have
    /// already been divided out.
    ///
    /// Panics on the zero polynomial; the constant 1 yields an empty list.
    pub fn factor(&self) -> Vec<(Gf2Poly, u32)> {
        assert!(!self.is_zero(), "cannot factor the zero polynomial");
        let mut rem = self.clone();
        let mut out = Vec::new();
        let mut cand: u64 = 2;
        while rem.degree().unwrap() >= 1 {
            let d = rem.degree().unwrap();
            let cd = 63 - cand.leading_zeros() as usize;
            if 2 * cd > d {
                // everything smaller has been divided out, so rem is irreducible
                out.push((rem, 1));
                break;
            }
            let q = Gf2Poly::from_bits(cand);
            let mut mult = 0u32;
            loop {
                let (quot, r) = rem.div_rem(&q);
                if r.is_zero() {
                    rem = quot;
                    mult += 1;
                } else {
                    break;
                }
            }
            if mult > 0 {
                out.push((q, mult));
            }
            cand += 1;
        }
        out
    }

    /// Evaluate at an element of some GF(2^k) (Horner over the bits).
    pub fn eval_in(&self, t: &FqElement) -> FqElement {
        let field = t.field().clone();
        let mut acc = field.zero();
        let n = self.bits.bits();
        for i in (0..n).rev() {
            acc = acc.mul(t);
            if self.bits.bit(i) {
                acc = acc.add(&field.one());
            }
        }
        acc
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({})", self)
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.bits.bits() as usize).rev() {
            if !self.coeff(i) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "1")?,
                1 => write!(f, "x")?,
                _ => write!(f, "x^{}", i)?,
            }
        }
        Ok(())
    }
}

#[derive(Debug)]
struct FqFieldInner {
    modulus: Gf2Poly,
    k: usize,
}

/// The finite field GF(2^k) presented as GF(2)[x] modulo an irreducible
/// polynomial of degree k. Cheap to clone and safe to share across threads.
#[derive(Clone, Debug)]
pub struct FqField {
    inner: Arc<FqFieldInner>,
}

impl PartialEq for FqField {
    fn eq(&self, other: &Self) -> bool {
        self.inner.modulus == other.inner.modulus
    }
}

impl Eq for FqField {}

impl FqField {
    /// Build GF(2)[x]/(modulus). Fails unless the modulus is irreducible of
    /// degree at least 1.
    pub fn new(modulus: Gf2Poly) -> Result<FqField, Error> {
        if !modulus.is_irreducible() {
            return Err(Error::ReducibleModulus);
        }
        let k = modulus.degree().unwrap();
        Ok(FqField { inner: Arc::new(FqFieldInner { modulus, k }) })
    }

    /// The canonical GF(2^k): modulus is the first irreducible of degree k
    /// in bit-value order.
    pub fn canonical(k: usize) -> FqField {
        assert!(k >= 1 && k <= DEGREE_CAP, "extension degree out of range");
        assert!(k < 63, "canonical modulus search limited to degree < 63");
        for v in 1u64 << k..1u64 << (k + 1) {
            let p = Gf2Poly::from_bits(v);
            if p.is_irreducible() {
                return FqField::new(p).unwrap();
            }
        }
        unreachable!("an irreducible of every degree exists")
    }

    pub fn k(&self) -> usize {
        self.inner.k
    }

    pub fn modulus(&self) -> &Gf2Poly {
        &self.inner.modulus
    }

    pub fn zero(&self) -> FqElement {
        FqElement { field: self.clone(), rep: Gf2Poly::zero() }
    }

    pub fn one(&self) -> FqElement {
        FqElement { field: self.clone(), rep: Gf2Poly::one() }
    }

    /// The element represented by `rep`, reduced modulo the field modulus.
    pub fn element(&self, rep: Gf2Poly) -> FqElement {
        FqElement { field: self.clone(), rep: rep.rem(&self.inner.modulus) }
    }

    /// All 2^k elements in representative bit-value order.
    pub fn elements(&self) -> impl Iterator<Item = FqElement> + '_ {
        assert!(self.inner.k < 32, "field too large to enumerate");
        (0u64..1 << self.inner.k).map(move |v| FqElement {
            field: self.clone(),
            rep: Gf2Poly::from_bits(v),
        })
    }
}

/// An element of GF(2^k): a representative of degree < k together with its
/// parent field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FqElement {
    field: FqField,
    rep: Gf2Poly,
}

impl FqElement {
    pub fn field(&self) -> &FqField {
        &self.field
    }

    pub fn rep(&self) -> &Gf2Poly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rep.is_one()
    }

    fn check_field(&self, rhs: &FqElement) {
        assert!(self.field == rhs.field, "field mismatch");
    }

    pub fn add(&self, rhs: &FqElement) -> FqElement {
        self.check_field(rhs);
        FqElement { field: self.field.clone(), rep: self.rep.add(&rhs.rep) }
    }

    pub fn mul(&self, rhs: &FqElement) -> FqElement {
        self.check_field(rhs);
        self.field.element(self.rep.mul(&rhs.rep))
    }

    pub fn square(&self) -> FqElement {
        self.field.element(self.rep.mul(&self.rep))
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self) -> Result<FqElement, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let modulus = self.field.modulus();
        let (mut old_r, mut r) = (self.rep.clone(), modulus.clone());
        let (mut old_s, mut s) = (Gf2Poly::one(), Gf2Poly::zero());
        while !r.is_zero() {
            let (q, rem) = old_r.div_rem(&r);
            old_r = std::mem::replace(&mut r, rem);
            let next_s = old_s.add(&q.mul(&s));
            old_s = std::mem::replace(&mut s, next_s);
        }
        debug_assert!(old_r.is_one(), "modulus is irreducible, gcd must be 1");
        Ok(self.field.element(old_s))
    }

    /// The unique square root: the Frobenius x -> x^2 is bijective on a
    /// finite field of characteristic 2, and its inverse is x^(2^(k-1)),
    /// i.e. k-1 successive squarings.
    pub fn sqrt(&self) -> FqElement {
        let mut acc = self.clone();
        for _ in 1..self.field.k() {
            acc = acc.square();
        }
        acc
    }

    pub fn pow(&self, e: u64) -> FqElement {
        let mut acc = self.field.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for FqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

/// The embedding GF(2^k) -> GF(2^(k*m)) sending x to a root of the source
/// modulus in the target field. Any root yields a field embedding; the scan
/// picks the first in representative order, which makes results
/// deterministic. Vanishing conditions are stable under the Galois action,
/// so the choice of root never changes a verdict.
#[derive(Clone, Debug)]
pub struct FieldEmbedding {
    src: FqField,
    dst: FqField,
    x_image: FqElement,
}

impl FieldEmbedding {
    pub fn new(src: &FqField, dst: &FqField) -> Result<FieldEmbedding, Error> {
        if dst.k() % src.k() != 0 {
            return Err(Error::NoEmbedding(src.k(), dst.k()));
        }
        if src == dst {
            let x_image = dst.element(Gf2Poly::x());
            return Ok(FieldEmbedding { src: src.clone(), dst: dst.clone(), x_image });
        }
        for t in dst.elements() {
            if src.modulus().eval_in(&t).is_zero() {
                return Ok(FieldEmbedding { src: src.clone(), dst: dst.clone(), x_image: t });
            }
        }
        unreachable!("the modulus splits in every extension of its splitting field")
    }

    pub fn src(&self) -> &FqField {
        &self.src
    }

    pub fn dst(&self) -> &FqField {
        &self.dst
    }

    pub fn apply(&self, e: &FqElement) -> FqElement {
        assert!(e.field() == &self.src, "element not in the embedding source field");
        e.rep().eval_in(&self.x_image)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(bits: u64) -> Gf2Poly {
        Gf2Poly::from_bits(bits)
    }

    #[test]
    fn mul_frobenius_square() {
        // (x+1)(x+1) = x^2 + 1 in characteristic 2
        assert_eq!(p(0b11).mul(&p(0b11)), p(0b101));
    }

    #[test]
    fn mul_by_zero() {
        assert_eq!(p(0b10).mul(&p(0)), p(0));
        assert!(p(0b10).mul(&Gf2Poly::zero()).is_zero());
    }

    #[test]
    fn mul_expand() {
        // (x^2+x+1)(x+1) = x^3 + 1
        assert_eq!(p(0b111).mul(&p(0b11)), p(0b1001));
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(Gf2Poly::zero().degree(), None);
        assert_eq!(p(1).degree(), Some(0));
        assert_eq!(p(0b10110).degree(), Some(4));
    }

    #[test]
    fn degree_cap_enforced() {
        let ok = BigUint::from(1u8) << DEGREE_CAP;
        assert!(Gf2Poly::from_biguint(ok).is_ok());
        let too_big = BigUint::from(1u8) << (DEGREE_CAP + 1);
        assert!(matches!(
            Gf2Poly::from_biguint(too_big),
            Err(Error::DegreeCapExceeded(65, DEGREE_CAP))
        ));
    }

    #[test]
    fn factor_square() {
        // x^2 + 1 = (x+1)^2
        assert_eq!(p(0b101).factor(), vec![(p(0b11), 2)]);
    }

    #[test]
    fn factor_split() {
        // x^2 + x = x (x+1)
        assert_eq!(p(0b110).factor(), vec![(p(0b10), 1), (p(0b11), 1)]);
    }

    #[test]
    fn factor_quartic_power() {
        // x^4 + 1 = (x+1)^4
        assert_eq!(p(0b10001).factor(), vec![(p(0b11), 4)]);
    }

    #[test]
    fn factor_roundtrip_exhaustive() {
        // every nonzero polynomial of degree <= 8 multiplies back from its factors
        for v in 2u64..512 {
            let q = p(v);
            let product = q
                .factor()
                .into_iter()
                .fold(Gf2Poly::one(), |acc, (f, m)| acc.mul(&f.pow(m)));
            assert_eq!(product, q, "roundtrip failed for bits {v:#b}");
        }
    }

    #[test]
    fn factors_are_irreducible_and_sorted() {
        for v in 2u64..512 {
            let fs = p(v).factor();
            for (f, _) in &fs {
                assert!(f.is_irreducible());
            }
            for w in fs.windows(2) {
                assert!(w[0].0 < w[1].0, "factors out of order for {v:#b}");
            }
        }
    }

    #[test]
    fn sqrt_gf2() {
        let f = FqField::canonical(1);
        assert!(f.one().sqrt().is_one());
        assert!(f.zero().sqrt().is_zero());
    }

    #[test]
    fn sqrt_gf4() {
        // GF(4) = GF(2)[x]/(x^2+x+1): sqrt(x) = x+1 since (x+1)^2 = x^2+1 = x
        let f = FqField::new(p(0b111)).unwrap();
        let xbar = f.element(Gf2Poly::x());
        assert_eq!(xbar.sqrt(), f.element(p(0b11)));
        assert_eq!(xbar.sqrt().square(), xbar);
    }

    #[test]
    fn sqrt_square_identity_exhaustive() {
        for k in 1..=8 {
            let f = FqField::canonical(k);
            for e in f.elements() {
                assert_eq!(e.sqrt().square(), e, "sqrt(x)^2 != x in GF(2^{k})");
                assert_eq!(e.square().sqrt(), e, "sqrt(x^2) != x in GF(2^{k})");
            }
        }
    }

    #[test]
    fn sqrt_is_multiplicative() {
        for k in 1..=4 {
            let f = FqField::canonical(k);
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(a.mul(&b).sqrt(), a.sqrt().mul(&b.sqrt()));
                }
            }
        }
    }

    #[test]
    fn inv_gf2() {
        let f = FqField::canonical(1);
        assert!(f.one().inv().unwrap().is_one());
        assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn inv_gf4() {
        let f = FqField::new(p(0b111)).unwrap();
        let xbar = f.element(Gf2Poly::x());
        // x(x+1) = x^2+x = 1 mod x^2+x+1
        assert_eq!(xbar.inv().unwrap(), f.element(p(0b11)));
    }

    #[test]
    fn inv_exhaustive() {
        for k in 1..=6 {
            let f = FqField::canonical(k);
            for e in f.elements() {
                if e.is_zero() {
                    assert!(e.inv().is_err());
                } else {
                    assert!(e.mul(&e.inv().unwrap()).is_one());
                }
            }
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2+1 = (x+1)^2 is not a field modulus
        assert!(matches!(FqField::new(p(0b101)), Err(Error::ReducibleModulus)));
        assert!(FqField::new(Gf2Poly::one()).is_err());
    }

    #[test]
    fn embedding_gf4_into_gf16() {
        let gf4 = FqField::new(p(0b111)).unwrap();
        let gf16 = FqField::canonical(4);
        let emb = FieldEmbedding::new(&gf4, &gf16).unwrap();
        for a in gf4.elements() {
            for b in gf4.elements() {
                assert_eq!(emb.apply(&a.mul(&b)), emb.apply(&a).mul(&emb.apply(&b)));
                assert_eq!(emb.apply(&a.add(&b)), emb.apply(&a).add(&emb.apply(&b)));
            }
        }
        assert!(emb.apply(&gf4.one()).is_one());
    }

    #[test]
    fn embedding_requires_divisible_degree() {
        let gf4 = FqField::new(p(0b111)).unwrap();
        let gf8 = FqField::canonical(3);
        assert!(matches!(
            FieldEmbedding::new(&gf4, &gf8),
            Err(Error::NoEmbedding(2, 3))
        ));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(0b1011).to_string(), "x^3 + x + 1");
        assert_eq!(Gf2Poly::zero().to_string(), "0");
        assert_eq!(Gf2Poly::one().to_string(), "1");
    }
}
