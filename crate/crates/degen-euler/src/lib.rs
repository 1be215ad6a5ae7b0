//! Exact computation of degenerate Euler polynomials, their
//! Dirichlet-character generalizations, and mechanical verification of the
//! symmetry identities relating them.
//!
//! Everything is computed over exact rings — arbitrary-precision rationals
//! and cyclotomic fields — so every identity check is an exact equality.
//! There are no floating-point numbers and no tolerances anywhere.
//!
//! The layers, bottom up:
//!
//! - [`exactnum`]: rationals, cyclotomic field elements, p-adic valuations.
//! - [`ring`] and [`fps`]: a coefficient-ring abstraction and truncated
//!   exponential generating functions over it (products are binomial
//!   convolutions).
//! - [`poly`]: dense polynomials, the integrands of the integral oracles.
//! - [`characters`]: Dirichlet characters of odd modulus with exact values.
//! - [`degen`]: the number/polynomial engines, alternating character sums,
//!   and two independent integral oracles.
//! - [`identities`]: the verification engine — per-identity checkers,
//!   parameter sweeps, reports.
//!
//! ```
//! use degen_euler::characters::enumerate_characters;
//! use degen_euler::exactnum::Rational;
//! use degen_euler::identities::{check_identity, IdentityKind, IdentityParams};
//!
//! // Verify a symmetry identity exactly, degree by degree, for the
//! // quadratic character mod 3 at lambda = 1/2, (w1, w2) = (3, 1):
//! let chi = &enumerate_characters(3).unwrap()[1];
//! let params = IdentityParams::new(
//!     chi, 1, Rational::new(1, 2), 3, 1, Rational::new(1, 2), 6,
//! ).unwrap();
//! let report = check_identity(IdentityKind::Thm2, chi, &params);
//! assert!(report.holds);
//! ```
//!
//! A narrative guide with runnable examples lives in `book/`; its code
//! blocks are compiled by `cargo test --doc` through the module below.

pub mod characters;
pub mod degen;
pub mod exactnum;
pub mod fps;
pub mod identities;
pub mod poly;
pub mod ring;

// Every code block in the guide is a doctest of this crate, so the book
// cannot drift from the library.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-scalars.md")]
    mod exact_scalars {}
    #[doc = include_str!("../../../book/src/egf-series.md")]
    mod egf_series {}
    #[doc = include_str!("../../../book/src/dirichlet-characters.md")]
    mod dirichlet_characters {}
    #[doc = include_str!("../../../book/src/degenerate-euler.md")]
    mod degenerate_euler {}
    #[doc = include_str!("../../../book/src/symmetry-identities.md")]
    mod symmetry_identities {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
