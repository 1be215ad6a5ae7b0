//! The computational core: degenerate falling factorials, degenerate Euler
//! numbers and polynomials (plain and attached to a Dirichlet character),
//! alternating character sums, and the independent integral oracles that
//! cross-check all of them.

mod numbers;
mod oracle;

pub use numbers::{
    carlitz_numbers, carlitz_poly_eval, falling, falling_rational, falling_sequence,
    generalized_numbers, generalized_poly_eval, r_sum, r_sums_up_to, shifted_falling_poly,
    DegenEulerNumbers, GenDegenEulerNumbers,
};
pub use oracle::{
    fermionic_integral, finite_level_sum, finite_level_sum_twisted, twisted_fermionic_integral,
    DegenError,
};
