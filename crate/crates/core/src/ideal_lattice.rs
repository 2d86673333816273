//! Ideals of B = Z[θ] as full-rank integer lattices in Hermite normal form.
//!
//! The basis is an upper-triangular n×n integer matrix whose column j is the
//! coordinate vector of the j-th Z-basis vector: the pivot sits on the
//! diagonal, diagonals are positive, and every off-diagonal entry is reduced
//! into [0, diagonal of its row). The HNF is canonical, so ideal equality is
//! basis equality and the norm is the product of the diagonal.
//!
//! On top of the lattice layer this module factors 2B into primes by
//! splitting the minimal polynomial mod 2, guards that splitting with the
//! maximality test at 2, and inverts primes above 2 by integer linear
//! algebra. The two-element shape P = (2, g(θ)) produced by the splitting
//! makes reduction to the residue field a polynomial evaluation.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::gf2_poly::{FqElement, FqField, Gf2Poly};
use crate::number_ring::{NumberRing, RingElement};

/// An integral ideal (more generally, a full-rank sublattice) of B in HNF.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdealLattice {
    ring: NumberRing,
    /// basis[j] is column j; entries below the diagonal are zero.
    basis: Vec<Vec<BigInt>>,
}

/// Hermite normal form of a spanning set of coordinate vectors.
///
/// Column elimination with extended gcds, then off-diagonal reduction. The
/// result is independent of generator order and of redundant generators.
fn hnf(n: usize, gens: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>, Error> {
    let mut slots: Vec<Option<Vec<BigInt>>> = vec![None; n];
    for g in gens {
        debug_assert_eq!(g.len(), n);
        let mut v = g.clone();
        loop {
            let h = match v.iter().rposition(|c| !c.is_zero()) {
                Some(h) => h,
                None => break, // v reduced to zero
            };
            match slots[h].take() {
                None => {
                    if v[h].is_negative() {
                        for c in v.iter_mut() {
                            *c = -&*c;
                        }
                    }
                    slots[h] = Some(v);
                    break;
                }
                Some(w) => {
                    let mut gcd = w[h].extended_gcd(&v[h]);
                    if gcd.gcd.is_negative() {
                        gcd.gcd = -gcd.gcd;
                        gcd.x = -gcd.x;
                        gcd.y = -gcd.y;
                    }
                    let (qw, qv) = (&w[h] / &gcd.gcd, &v[h] / &gcd.gcd);
                    let mut new_w = vec![BigInt::zero(); n];
                    let mut new_v = vec![BigInt::zero(); n];
                    for i in 0..=h {
                        new_w[i] = &gcd.x * &w[i] + &gcd.y * &v[i];
                        new_v[i] = &qw * &v[i] - &qv * &w[i];
                    }
                    debug_assert!(new_v[h].is_zero());
                    slots[h] = Some(new_w);
                    v = new_v;
                }
            }
        }
    }
    let mut basis: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for slot in slots {
        basis.push(slot.ok_or(Error::RankDeficient)?);
    }
    // normalize off-diagonal entries into [0, diagonal)
    for j in 0..n {
        for i in (0..j).rev() {
            let q = basis[j][i].div_floor(&basis[i][i]);
            if q.is_zero() {
                continue;
            }
            let col = basis[i].clone();
            for (r, c) in col.iter().enumerate().take(i + 1) {
                basis[j][r] -= &q * c;
            }
        }
    }
    Ok(basis)
}

impl IdealLattice {
    /// HNF of the lattice spanned by the given coordinate vectors.
    ///
    /// This is the raw lattice constructor: it does not verify closure under
    /// multiplication by θ (see [`IdealLattice::is_ideal`]). Rank-deficient
    /// input — in particular anything spanning the zero ideal — is an error.
    pub fn from_generators(ring: &NumberRing, gens: &[Vec<BigInt>]) -> Result<IdealLattice, Error> {
        let basis = hnf(ring.degree(), gens)?;
        Ok(IdealLattice { ring: ring.clone(), basis })
    }

    /// The ideal generated by the given elements of B: the HNF of the
    /// Z-span of every elemᵢ·θ^j, 0 <= j < n.
    pub fn from_elements(elems: &[RingElement]) -> Result<IdealLattice, Error> {
        let ring = elems.first().expect("at least one generator").ring().clone();
        let n = ring.degree();
        let mut gens = Vec::with_capacity(elems.len() * n);
        for e in elems {
            assert!(e.ring() == &ring, "ring mismatch");
            let mut shifted = e.clone();
            for _ in 0..n {
                gens.push(shifted.coords().to_vec());
                shifted = shifted.mul(&ring.theta());
            }
        }
        Self::from_generators(&ring, &gens)
    }

    pub fn principal(x: &RingElement) -> Result<IdealLattice, Error> {
        Self::from_elements(std::slice::from_ref(x))
    }

    /// The unit ideal B (identity basis).
    pub fn unit(ring: &NumberRing) -> IdealLattice {
        let n = ring.degree();
        let mut basis = vec![vec![BigInt::zero(); n]; n];
        for (j, col) in basis.iter_mut().enumerate() {
            col[j] = BigInt::one();
        }
        IdealLattice { ring: ring.clone(), basis }
    }

    /// The ideal mB for a nonzero integer m.
    pub fn from_integer(ring: &NumberRing, m: &BigInt) -> Result<IdealLattice, Error> {
        if m.is_zero() {
            return Err(Error::RankDeficient);
        }
        let n = ring.degree();
        let mut basis = vec![vec![BigInt::zero(); n]; n];
        for (j, col) in basis.iter_mut().enumerate() {
            col[j] = m.abs();
        }
        Ok(IdealLattice { ring: ring.clone(), basis })
    }

    pub fn ring(&self) -> &NumberRing {
        &self.ring
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn basis_elements(&self) -> Vec<RingElement> {
        self.basis
            .iter()
            .map(|col| self.ring.element(col.clone()).unwrap())
            .collect()
    }

    /// The ideal norm: the index [B : I], i.e. the product of the diagonal.
    pub fn norm(&self) -> BigInt {
        self.basis
            .iter()
            .enumerate()
            .fold(BigInt::one(), |acc, (j, col)| acc * &col[j])
    }

    /// Membership by back-substitution in the triangular basis over Z.
    pub fn contains(&self, x: &RingElement) -> bool {
        assert!(x.ring() == &self.ring, "ring mismatch");
        let n = self.ring.degree();
        let mut rem = x.coords().to_vec();
        for i in (0..n).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (q, r) = rem[i].div_rem(&self.basis[i][i]);
            if !r.is_zero() {
                return false;
            }
            for (row, c) in self.basis[i].iter().enumerate().take(i + 1) {
                rem[row] -= &q * c;
            }
        }
        debug_assert!(rem.iter().all(Zero::is_zero));
        true
    }

    /// Product ideal: the HNF of all pairwise products of basis vectors.
    /// (The Z-span of those products is already closed under θ.)
    pub fn mul(&self, other: &IdealLattice) -> IdealLattice {
        assert!(self.ring == other.ring, "ring mismatch");
        let mine = self.basis_elements();
        let theirs = other.basis_elements();
        let mut gens = Vec::with_capacity(mine.len() * theirs.len());
        for x in &mine {
            for y in &theirs {
                gens.push(x.mul(y).coords().to_vec());
            }
        }
        Self::from_generators(&self.ring, &gens)
            .expect("product of full-rank ideals is full-rank")
    }

    pub fn pow(&self, e: u32) -> IdealLattice {
        let mut acc = Self::unit(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// True when the lattice is closed under multiplication by θ, i.e. is
    /// an ideal of B and not just a sublattice.
    pub fn is_ideal(&self) -> bool {
        let theta = self.ring.theta();
        self.basis_elements()
            .iter()
            .all(|v| self.contains(&v.mul(&theta)))
    }
}

impl fmt::Display for IdealLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (j, e) in self.basis_elements().iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, "]")
    }
}

/// A fractional ideal numerator/denominator, kept in lowest terms (no
/// integer factor divides the denominator together with every numerator
/// entry).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FractionalIdeal {
    numerator: IdealLattice,
    denominator: BigInt,
}

impl FractionalIdeal {
    pub fn new(numerator: IdealLattice, denominator: BigInt) -> FractionalIdeal {
        assert!(denominator.is_positive(), "denominator must be positive");
        let mut f = FractionalIdeal { numerator, denominator };
        f.normalize();
        f
    }

    fn normalize(&mut self) {
        let mut g = self.denominator.clone();
        for col in self.numerator.basis.iter() {
            for c in col {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            for col in self.numerator.basis.iter_mut() {
                for c in col.iter_mut() {
                    *c /= &g;
                }
            }
            self.denominator /= &g;
        }
    }

    pub fn numerator(&self) -> &IdealLattice {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn mul_integral(&self, other: &IdealLattice) -> FractionalIdeal {
        FractionalIdeal::new(self.numerator.mul(other), self.denominator.clone())
    }

    /// True when this fractional ideal equals B itself.
    pub fn is_ring(&self) -> bool {
        self.denominator.is_one() && self.numerator == IdealLattice::unit(self.numerator.ring())
    }
}

impl fmt::Display for FractionalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "(1/{})·{}", self.denominator, self.numerator)
        }
    }
}

/// A prime ideal P above 2 in two-element form P = (2, g(θ)), with the
/// residue field B/P ≅ GF(2)[x]/(g) attached.
#[derive(Clone, Debug)]
pub struct PrimeAbove2 {
    ideal: IdealLattice,
    second_generator: RingElement,
    residue_modulus: Gf2Poly,
    residue_degree: usize,
    ramification: u32,
    residue_field: FqField,
}

impl PartialEq for PrimeAbove2 {
    fn eq(&self, other: &Self) -> bool {
        self.ideal == other.ideal
    }
}

impl Eq for PrimeAbove2 {}

impl PrimeAbove2 {
    pub fn ideal(&self) -> &IdealLattice {
        &self.ideal
    }

    pub fn second_generator(&self) -> &RingElement {
        &self.second_generator
    }

    pub fn residue_modulus(&self) -> &Gf2Poly {
        &self.residue_modulus
    }

    pub fn residue_degree(&self) -> usize {
        self.residue_degree
    }

    pub fn ramification(&self) -> u32 {
        self.ramification
    }

    pub fn residue_field(&self) -> &FqField {
        &self.residue_field
    }

    pub fn ring(&self) -> &NumberRing {
        self.ideal.ring()
    }

    pub fn contains(&self, x: &RingElement) -> bool {
        self.ideal.contains(x)
    }

    /// The residue map B -> B/P: reduce coordinates mod 2 and evaluate the
    /// power basis at the class of x modulo the residue modulus.
    pub fn residue(&self, x: &RingElement) -> FqElement {
        let rep = Gf2Poly::from_int_coeffs(x.coords()).expect("ring degree is under the cap");
        self.residue_field.element(rep)
    }

    /// The canonical lift B/P -> B with coordinates in {0, 1}.
    pub fn lift(&self, e: &FqElement) -> RingElement {
        assert!(e.field() == &self.residue_field, "element not in this residue field");
        let ring = self.ideal.ring();
        let mut coords = vec![BigInt::zero(); ring.degree()];
        for (i, c) in coords.iter_mut().enumerate() {
            if e.rep().coeff(i) {
                *c = BigInt::one();
            }
        }
        ring.element(coords).unwrap()
    }

    /// P⁻¹ = (1/2)·{x ∈ B : x·P ⊆ 2B}, computed from the GF(2) kernel of
    /// the multiplication maps x ↦ x·bⱼ mod 2.
    pub fn inverse(&self) -> FractionalIdeal {
        let ring = self.ideal.ring();
        let n = ring.degree();
        let theta = ring.theta();

        // rows of the GF(2) system, one per (basis vector of P, coordinate)
        let mut rows: Vec<u32> = Vec::with_capacity(n * n);
        for b in self.ideal.basis_elements() {
            // θ^i·b for i = 0..n
            let mut shifted = b;
            let mut cols: Vec<Vec<bool>> = Vec::with_capacity(n);
            for _ in 0..n {
                cols.push(shifted.coords().iter().map(|c| c.is_odd()).collect());
                shifted = shifted.mul(&theta);
            }
            for r in 0..n {
                let mut row = 0u32;
                for (i, col) in cols.iter().enumerate() {
                    if col[r] {
                        row |= 1 << i;
                    }
                }
                rows.push(row);
            }
        }

        let kernel = gf2_nullspace(&rows, n);
        let two = BigInt::from(2);
        let mut gens: Vec<Vec<BigInt>> = Vec::with_capacity(n + kernel.len());
        for r in 0..n {
            let mut v = vec![BigInt::zero(); n];
            v[r] = two.clone();
            gens.push(v);
        }
        for mask in kernel {
            let v = (0..n)
                .map(|i| if mask >> i & 1 == 1 { BigInt::one() } else { BigInt::zero() })
                .collect();
            gens.push(v);
        }
        let numerator = IdealLattice::from_generators(ring, &gens)
            .expect("the inverse lattice contains 2B and is full-rank");
        debug_assert_eq!(
            self.ideal.mul(&numerator),
            IdealLattice::from_integer(ring, &two).unwrap(),
            "P · (2·P⁻¹) must equal 2B"
        );
        FractionalIdeal::new(numerator, two)
    }
}

impl fmt::Display for PrimeAbove2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(2, {})", self.second_generator)
    }
}

/// Basis of the nullspace of a GF(2) matrix given as row bitmasks.
fn gf2_nullspace(rows: &[u32], ncols: usize) -> Vec<u32> {
    let mut reduced: Vec<u32> = Vec::new();
    for &row in rows {
        let mut r = row;
        for &e in &reduced {
            let pivot = e.trailing_zeros();
            if r >> pivot & 1 == 1 {
                r ^= e;
            }
        }
        if r != 0 {
            // eliminate the new pivot from earlier rows to reach RREF
            let pivot = r.trailing_zeros();
            for e in reduced.iter_mut() {
                if *e >> pivot & 1 == 1 {
                    *e ^= r;
                }
            }
            reduced.push(r);
        }
    }
    let pivots: Vec<u32> = reduced.iter().map(|e| e.trailing_zeros()).collect();
    let mut basis = Vec::new();
    for free in 0..ncols as u32 {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = 1u32 << free;
        for (e, &pivot) in reduced.iter().zip(&pivots) {
            if e >> free & 1 == 1 {
                v |= 1 << pivot;
            }
        }
        basis.push(v);
    }
    basis
}

fn lift_poly(g: &Gf2Poly) -> Vec<BigInt> {
    let deg = match g.degree() {
        None => return vec![BigInt::zero()],
        Some(d) => d,
    };
    (0..=deg)
        .map(|i| if g.coeff(i) { BigInt::one() } else { BigInt::zero() })
        .collect()
}

fn mul_int_polys(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Maximality of Z[θ] at 2 by the effective criterion: with
/// f̄ = ∏ ḡᵢ^eᵢ over GF(2), g* = ∏ gᵢ and h* a lift of f̄/ḡ*, set
/// T = (g*·h* − f)/2; the order is maximal at 2 iff gcd(T̄, ḡ*, h̄*) = 1.
pub fn dedekind_maximal_at_2(ring: &NumberRing) -> bool {
    let f = ring.min_poly();
    let fbar = Gf2Poly::from_int_coeffs(f).expect("ring degree is under the cap");
    let radical = fbar
        .factor()
        .into_iter()
        .fold(Gf2Poly::one(), |acc, (g, _)| acc.mul(&g));
    let hbar = fbar.div_rem(&radical).0;

    let gh = mul_int_polys(&lift_poly(&radical), &lift_poly(&hbar));
    let mut t = vec![BigInt::zero(); f.len().max(gh.len())];
    for (i, c) in gh.iter().enumerate() {
        t[i] += c;
    }
    for (i, c) in f.iter().enumerate() {
        t[i] -= c;
    }
    let t: Vec<BigInt> = t
        .into_iter()
        .map(|c| {
            debug_assert!(c.is_even(), "g*·h* ≡ f mod 2 by construction");
            c / 2
        })
        .collect();
    let tbar = Gf2Poly::from_int_coeffs(&t).expect("difference degree is under the cap");

    tbar.gcd(&radical).gcd(&hbar).is_one()
}

/// The primes above 2 read off Dedekind splitting: for each irreducible
/// factor ḡᵢ^eᵢ of the minimal polynomial mod 2, Pᵢ = (2, gᵢ(θ)) with
/// residue degree deg ḡᵢ and ramification eᵢ. Requires (and checks) that
/// the order is maximal at 2; the deterministic factor order fixes the
/// prime order.
pub fn primes_above_2(ring: &NumberRing) -> Result<Vec<PrimeAbove2>, Error> {
    if !dedekind_maximal_at_2(ring) {
        return Err(Error::NonMaximalOrder);
    }
    let fbar = Gf2Poly::from_int_coeffs(ring.min_poly())?;
    let two = ring.from_int(2);
    let mut primes = Vec::new();
    for (gbar, e) in fbar.factor() {
        let beta = eval_lift_at_theta(ring, &gbar);
        let ideal = IdealLattice::from_elements(&[two.clone(), beta.clone()])?;
        let k = gbar.degree().expect("irreducible factors are nonconstant");
        debug_assert_eq!(ideal.norm(), BigInt::one() << k, "norm of a residue-degree-k prime");
        let residue_field = FqField::new(gbar.clone())?;
        primes.push(PrimeAbove2 {
            ideal,
            second_generator: beta,
            residue_modulus: gbar,
            residue_degree: k,
            ramification: e,
            residue_field,
        });
    }
    debug_assert_eq!(
        primes
            .iter()
            .fold(IdealLattice::unit(ring), |acc, p| acc.mul(&p.ideal.pow(p.ramification))),
        IdealLattice::from_integer(ring, &BigInt::from(2)).unwrap(),
        "∏ Pᵢ^eᵢ must equal 2B"
    );
    Ok(primes)
}

fn eval_lift_at_theta(ring: &NumberRing, g: &Gf2Poly) -> RingElement {
    let deg = match g.degree() {
        None => return ring.zero(),
        Some(d) => d,
    };
    let theta = ring.theta();
    let mut acc = ring.zero();
    let mut power = ring.one();
    for i in 0..=deg {
        if g.coeff(i) {
            acc = acc.add(&power);
        }
        if i < deg {
            power = power.mul(&theta);
        }
    }
    acc
}
