//! Exact scalar arithmetic: arbitrary-precision rationals, cyclotomic field
//! elements, and p-adic valuations.
//!
//! Everything in this module is immutable after construction and all
//! operations are pure, so values can be shared freely across threads.

pub mod arith;
mod cyclotomic;
mod intpoly;
mod rational;
mod valuation;

pub use cyclotomic::{align, cyclotomic_polynomial, CyclotomicElement};
pub use intpoly::IntPolynomial;
pub use rational::{sign, Rational};
pub use valuation::{min_coefficient_valuation, p_adic_valuation, Valuation};

use thiserror::Error;

/// Errors from exact scalar arithmetic.
#[derive(Debug, Error)]
pub enum ExactnumError {
    #[error("cannot parse `{0}` as an exact rational")]
    ParseRational(String),
    #[error("cyclotomic order mismatch: {0} vs {1} (promote to a common order first)")]
    OrderMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("Q(zeta_{0}) does not embed in Q(zeta_{1})")]
    NotASubfield(u32, u32),
}
