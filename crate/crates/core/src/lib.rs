//! Smoothness and regularity of conic algebras over rings of algebraic
//! integers.
//!
//! For a monogenic order B = Z[θ] (required to be maximal at 2) and
//! coefficients a, b, c ∈ B, this crate decides whether
//! A = B[X,Y]/(aX² + bXY + cY² − 1) is smooth over B and whether A is a
//! regular ring, and computes generators of the ideal cutting out the
//! singular locus. Every verdict can be cross-checked against an
//! independent brute-force oracle that enumerates points of the fibers
//! above 2 over small extension fields.
//!
//! The supporting layers are exact throughout: GF(2) polynomial arithmetic
//! and GF(2^k) residue fields ([`gf2_poly`]), power-basis arithmetic in
//! Z[θ] over arbitrary-precision integers ([`number_ring`]), ideals as
//! integer lattices in Hermite normal form with prime factorization of 2B
//! and prime inverses ([`ideal_lattice`]), and sparse bivariate polynomials
//! ([`bivar_poly`]).

pub mod analyzer;
pub mod bivar_poly;
pub mod error;
pub mod gf2_poly;
pub mod ideal_lattice;
pub mod number_ring;
pub mod oracle;

pub use analyzer::{
    analyze, compute_de, compute_fp, compute_gamma, conic_polynomial, cor8_check, is_regular,
    is_smooth, singular_locus, AnalysisReport, ConicInput, Cor8Condition, FpCase, PrimeReport,
    SingularLocus,
};
pub use bivar_poly::{reduce_mod_prime, BivarPoly, Coefficient, Var};
pub use error::Error;
pub use gf2_poly::{FieldEmbedding, FqElement, FqField, Gf2Poly};
pub use ideal_lattice::{
    dedekind_maximal_at_2, primes_above_2, FractionalIdeal, IdealLattice, PrimeAbove2,
};
pub use number_ring::{NumberRing, RingElement};
pub use oracle::{
    example14_verify, regular_oracle, regular_witness, smooth_oracle, smooth_witness,
    Example14Report, OracleConfig, RationalPoint,
};
