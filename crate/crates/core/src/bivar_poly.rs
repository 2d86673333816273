//! Sparse bivariate polynomials Σ c_ij X^i Y^j over an arbitrary
//! commutative coefficient ring. Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::gf2_poly::{FieldEmbedding, FqElement};
use crate::ideal_lattice::PrimeAbove2;
use crate::number_ring::RingElement;

/// Coefficient operations needed by [`BivarPoly`]. `zero_like` exists
/// because zero may carry context (a parent ring or field).
pub trait Coefficient: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    /// n·self by double-and-add; lets formal derivatives respect the
    /// coefficient characteristic.
    fn mul_nat(&self, n: u64) -> Self {
        let mut acc = self.zero_like();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.add(&base);
            }
            base = base.add(&base);
            n >>= 1;
        }
        acc
    }
}

impl Coefficient for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Coefficient for RingElement {
    fn zero_like(&self) -> Self {
        self.ring().zero()
    }
    fn is_zero(&self) -> bool {
        RingElement::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        RingElement::add(self, rhs)
    }
    fn neg(&self) -> Self {
        RingElement::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        RingElement::mul(self, rhs)
    }
}

impl Coefficient for FqElement {
    fn zero_like(&self) -> Self {
        self.field().zero()
    }
    fn is_zero(&self) -> bool {
        FqElement::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        FqElement::add(self, rhs)
    }
    fn neg(&self) -> Self {
        self.clone() // characteristic 2
    }
    fn mul(&self, rhs: &Self) -> Self {
        FqElement::mul(self, rhs)
    }
}

/// Which variable to differentiate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    X,
    Y,
}

/// A sparse polynomial in X and Y.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivarPoly<C: Coefficient> {
    terms: BTreeMap<(u32, u32), C>,
}

impl<C: Coefficient> BivarPoly<C> {
    pub fn zero() -> Self {
        BivarPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, 0, 0)
    }

    /// The monomial c·X^i·Y^j.
    pub fn term(c: C, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BivarPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, C)>) -> Self {
        let mut out = Self::zero();
        for (i, j, c) in terms {
            out.add_term(i, j, c);
        }
        out
    }

    fn add_term(&mut self, i: u32, j: u32, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&(i, j)) {
            None => {
                self.terms.insert((i, j), c);
            }
            Some(old) => {
                let sum = old.add(&c);
                if !sum.is_zero() {
                    self.terms.insert((i, j), sum);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &C)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn coeff(&self, i: u32, j: u32) -> Option<&C> {
        self.terms.get(&(i, j))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        BivarPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, c.neg())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (i1, j1, c1) in self.terms() {
            for (i2, j2, c2) in rhs.terms() {
                out.add_term(i1 + i2, j1 + j2, c1.mul(c2));
            }
        }
        out
    }

    /// self^e for e >= 1, by repeated multiplication.
    pub fn pow(&self, e: u32) -> Self {
        assert!(e >= 1, "pow requires a positive exponent");
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scalar_mul(&self, k: &C) -> Self {
        let mut out = Self::zero();
        for (i, j, c) in self.terms() {
            out.add_term(i, j, c.mul(k));
        }
        out
    }

    pub fn map_coeffs<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> BivarPoly<D> {
        let mut out = BivarPoly::zero();
        for (i, j, c) in self.terms() {
            out.add_term(i, j, f(c));
        }
        out
    }

    /// Formal partial derivative.
    pub fn derivative(&self, var: Var) -> Self {
        let mut out = Self::zero();
        for (i, j, c) in self.terms() {
            match var {
                Var::X if i > 0 => out.add_term(i - 1, j, c.mul_nat(i as u64)),
                Var::Y if j > 0 => out.add_term(i, j - 1, c.mul_nat(j as u64)),
                _ => {}
            }
        }
        out
    }

    /// Value at (x, y); coefficients, x and y must live in the same ring.
    pub fn eval(&self, x: &C, y: &C) -> C {
        let mut acc = x.zero_like();
        let mut x_pows: Vec<C> = Vec::new();
        let mut y_pows: Vec<C> = Vec::new();
        for (i, j, c) in self.terms() {
            let mut t = c.clone();
            if i > 0 {
                t = t.mul(power(x, i, &mut x_pows));
            }
            if j > 0 {
                t = t.mul(power(y, j, &mut y_pows));
            }
            acc = acc.add(&t);
        }
        acc
    }
}

/// cache[e-1] = base^e, filled on demand.
fn power<'a, C: Coefficient>(base: &C, e: u32, cache: &'a mut Vec<C>) -> &'a C {
    debug_assert!(e >= 1);
    while cache.len() < e as usize {
        let next = match cache.last() {
            None => base.clone(),
            Some(p) => p.mul(base),
        };
        cache.push(next);
    }
    &cache[e as usize - 1]
}

impl<C: Coefficient + fmt::Display> fmt::Display for BivarPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, j, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.to_string();
            let needs_parens =
                cs.contains(' ') || cs.chars().skip(1).any(|ch| ch == '-' || ch == '+');
            let is_unit = cs == "1";
            if i == 0 && j == 0 {
                write!(f, "{}", if needs_parens { format!("({})", cs) } else { cs })?;
                continue;
            }
            if !is_unit {
                if needs_parens {
                    write!(f, "({})·", cs)?;
                } else {
                    write!(f, "{}·", cs)?;
                }
            }
            match (i, j) {
                (0, 0) => unreachable!(),
                (i, 0) if i == 1 => write!(f, "X")?,
                (i, 0) => write!(f, "X^{}", i)?,
                (0, j) if j == 1 => write!(f, "Y")?,
                (0, j) => write!(f, "Y^{}", j)?,
                (i, j) => {
                    if i == 1 {
                        write!(f, "X·")?;
                    } else {
                        write!(f, "X^{}·", i)?;
                    }
                    if j == 1 {
                        write!(f, "Y")?;
                    } else {
                        write!(f, "Y^{}", j)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Coefficient-wise reduction of a polynomial over B to the residue field
/// of a prime above 2.
pub fn reduce_mod_prime(p: &BivarPoly<RingElement>, prime: &PrimeAbove2) -> BivarPoly<FqElement> {
    p.map_coeffs(|c| prime.residue(c))
}

/// Coefficient-wise embedding of a residue-field polynomial into an
/// extension field.
pub fn embed_poly(p: &BivarPoly<FqElement>, emb: &FieldEmbedding) -> BivarPoly<FqElement> {
    p.map_coeffs(|c| emb.apply(c))
}
