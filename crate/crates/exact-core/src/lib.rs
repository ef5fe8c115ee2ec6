//! Exact arithmetic foundation: arbitrary-precision rationals, bivariate
//! polynomials in the boundary fugacities `a` and `b`, sparse polynomial
//! matrices, and a fraction-free nullspace solver.
//!
//! Everything here is exact; no floating point is used anywhere. All values
//! are immutable after construction and safe to share across threads.

pub mod intpoly;
pub mod kernel;
pub mod matrix;
pub mod poly;

pub use kernel::{kernel_one_dim, rational_kernel, KernelError};
pub use matrix::{content_normalize, NormalizeError, PolyMatrix, PolyVector};
pub use poly::{EvalError, MultiPoly, ParsePolyError, Var};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type BigRational = num_rational::BigRational;

/// Arbitrary-precision integer.
pub type BigInt = num_bigint::BigInt;

/// Convenience constructor for small rationals.
pub fn ratio(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Convenience constructor for integer-valued rationals.
pub fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}
