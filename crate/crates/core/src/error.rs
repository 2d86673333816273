use num_bigint::BigInt;
use thiserror::Error;

/// Errors produced by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The order Z[θ] is not maximal at 2; every verdict downstream would be
    /// meaningless, so this is a hard input error.
    #[error("order not maximal at 2")]
    NonMaximalOrder,

    /// A GF(2) polynomial was constructed past the supported degree cap.
    #[error("GF(2) polynomial degree {0} exceeds the cap of {1}")]
    DegreeCapExceeded(usize, usize),

    /// A residue-field modulus must be irreducible over GF(2).
    #[error("polynomial is not irreducible over GF(2)")]
    ReducibleModulus,

    /// Inversion of zero in a residue field.
    #[error("division by zero in GF(2^k)")]
    DivisionByZero,

    /// No field embedding exists (target degree not a multiple of the source).
    #[error("no embedding of GF(2^{0}) into GF(2^{1})")]
    NoEmbedding(usize, usize),

    /// The minimal polynomial must be monic with integer coefficients.
    #[error("minimal polynomial is not monic")]
    NotMonic,

    /// Degree of the minimal polynomial is outside the supported range.
    #[error("ring degree {0} is outside the supported range 1..={1}")]
    DegreeOutOfRange(usize, usize),

    /// The minimal polynomial has a rational integer root, so it is reducible.
    #[error("minimal polynomial has the rational root {0}")]
    ReducibleMinPoly(BigInt),

    /// An element vector has the wrong number of coordinates.
    #[error("expected {expected} coordinates, got {got}")]
    CoordinateLength { expected: usize, got: usize },

    /// Generators that do not span a full-rank lattice (e.g. the zero ideal).
    #[error("generators span a rank-deficient lattice")]
    RankDeficient,

    /// `example14_verify` requires a prime argument.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// `example14_verify` is restricted to desk-scale primes.
    #[error("prime {0} exceeds the supported bound {1}")]
    PrimeTooLarge(u64, u64),
}
