//! Exact analysis of real conic bundle threefolds presented as double covers
//! of P¹×P² branched over a (2,2)-divisor.
//!
//! The input is a triple of ternary quadratic forms (Q1, Q2, Q3) with rational
//! coefficients, given by their symmetric Gram matrices. From it the library
//! derives, in exact arithmetic wherever a certificate depends on it:
//!
//! * the quartic discriminant curve Δ = (Q1·Q3 − Q2² = 0) and validity
//!   certificates (Δ smooth, discriminant cover étale),
//! * the branch sextic of the genus-2 curve Γ and the signature profile of
//!   the quadric surface fibers over P¹(ℝ),
//! * the real isotopy class of Δ with per-oval data,
//! * the real bitangents of Δ,
//! * intermediate-Jacobian-torsor point certificates over real lines,
//! * a rationality verdict with machine-checkable reasons, for the triple
//!   and for its quadratic twist (−Q1, Q2, −Q3).
//!
//! Core arithmetic is generic over the scalar through the [`ring`] traits
//! (backed by `num-traits`); the concrete instantiations used throughout are
//! the aliases below.

pub mod aberth;
pub mod bitangents;
pub mod corpus;
pub mod error;
pub mod ijt;
pub mod interval;
pub mod macaulay;
pub mod matrix;
pub mod model;
pub mod plot;
pub mod poly;
pub mod report;
pub mod ring;
pub mod signatures;
pub mod ternary;
pub mod topology;
pub mod verdict;

/// Arbitrary-precision integer scalar.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational scalar, always reduced, denominator > 0.
pub type Rat = num_rational::BigRational;
/// Double-precision complex scalar for the non-certified numeric seeds.
pub type C64 = num_complex::Complex64;

/// Dense univariate polynomial over the exact rational scalar.
pub type RatPoly = poly::Poly<Rat>;
/// Dense univariate polynomial over the integers.
pub type IntPoly = poly::Poly<Int>;
/// Univariate polynomial with integer-polynomial coefficients (ℤ[x][y]).
pub type IntPoly2 = poly::Poly<IntPoly>;
/// Dense univariate polynomial over `C64`.
pub type CPoly = poly::Poly<C64>;

/// Ternary form (homogeneous in u, v, w) over the rational scalar.
pub type RatForm = ternary::TernaryForm<Rat>;
/// 3×3 matrix over the rational scalar.
pub type RatMat3 = matrix::Mat3<Rat>;

pub use error::AnalysisError;

/// Shorthand for building a `Rat` from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Shorthand for building a `Rat` from a numerator/denominator pair.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}
