//! Two independent oracles for the number engines.
//!
//! The untwisted functional `I` is pinned down on polynomials by the shift
//! relation `I(f(.+1)) + I(f) = 2 f(0)`; the character-twisted functional
//! `J` by `J(f(.+d)) + J(f) = 2 sum_{l<d} (-1)^l chi(l) f(l)` for the odd
//! modulus d. Both relations are triangular in monomial degree, so they
//! determine the values uniquely — no generating function is involved,
//! which is what makes these genuine cross-checks for the series engines.
//!
//! `finite_level_sum` evaluates the truncated alternating sums whose limit
//! defines `I`, for empirical convergence checks in the p-adic metric.

use num::integer::gcd;
use thiserror::Error;

use crate::characters::DirichletCharacter;
use crate::exactnum::arith::is_prime;
use crate::exactnum::{CyclotomicElement, Rational};
use crate::fps::binomial;
use crate::poly::QPolynomial;

#[derive(Debug, Error)]
pub enum DegenError {
    #[error("p must be an odd prime, got {0}")]
    NotOddPrime(u64),
    #[error("the level N must be at least 1")]
    LevelTooSmall,
    #[error("p = {0} must be coprime to the character modulus d = {1}")]
    SharedFactor(u64, u64),
}

/// Values of `I` on monomials `x^0 .. x^(n_max)` via the triangular
/// recurrence `2 I(x^n) = 2*[n=0] - sum_{k<n} C(n,k) I(x^k)`.
fn untwisted_monomial_values(n_max: usize) -> Vec<Rational> {
    let half = Rational::new(1, 2);
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(Rational::one());
    for n in 1..=n_max {
        let mut acc = Rational::zero();
        for (k, v) in values.iter().enumerate() {
            if !v.is_zero() {
                acc += &(v * &Rational::from_integer(binomial(n, k)));
            }
        }
        values.push(-(&acc * &half));
    }
    values
}

/// The fermionic integral of a rational polynomial: the unique linear
/// functional with `I(f(.+1)) + I(f) = 2 f(0)`. Its monomial values are
/// the classical Euler numbers.
pub fn fermionic_integral(f: &QPolynomial) -> Rational {
    let Some(deg) = f.degree() else {
        return Rational::zero();
    };
    let monomials = untwisted_monomial_values(deg);
    let mut acc = Rational::zero();
    for (k, c) in f.coeffs().iter().enumerate() {
        if !c.is_zero() {
            acc += &(c * &monomials[k]);
        }
    }
    acc
}

/// Values of the twisted functional `J` on monomials, from
/// `2 J(x^n) = 2 sum_{l<d} (-1)^l chi(l) l^n - sum_{k<n} C(n,k) d^(n-k) J(x^k)`.
fn twisted_monomial_values(chi: &DirichletCharacter, n_max: usize) -> Vec<CyclotomicElement> {
    let d = chi.modulus();
    let order = chi.order();
    let half = Rational::new(1, 2);
    let mut values: Vec<CyclotomicElement> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        // boundary term: sum over one period, with 0^0 = 1
        let mut boundary = CyclotomicElement::zero(order);
        for l in 0..d {
            let chi_l = chi.value(l as i64);
            if chi_l.is_zero() {
                continue;
            }
            let power = if n == 0 {
                Rational::one()
            } else {
                Rational::from(l).pow(n as i64)
            };
            let term = chi_l.scale(&power);
            boundary = if l % 2 == 0 {
                &boundary + &term
            } else {
                &boundary - &term
            };
        }
        let mut rhs = boundary.scale(&Rational::from(2i64));
        for (k, v) in values.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let scalar =
                &Rational::from(d).pow((n - k) as i64) * &Rational::from_integer(binomial(n, k));
            rhs = &rhs - &v.scale(&scalar);
        }
        values.push(rhs.scale(&half));
    }
    values
}

/// The chi-twisted fermionic integral of a rational polynomial: the unique
/// linear functional with
/// `J(f(.+d)) + J(f) = 2 sum_{l<d} (-1)^l chi(l) f(l)`.
/// For the modulus-1 character it coincides with [`fermionic_integral`].
pub fn twisted_fermionic_integral(f: &QPolynomial, chi: &DirichletCharacter) -> CyclotomicElement {
    let order = chi.order();
    let Some(deg) = f.degree() else {
        return CyclotomicElement::zero(order);
    };
    let monomials = twisted_monomial_values(chi, deg);
    let mut acc = CyclotomicElement::zero(order);
    for (k, c) in f.coeffs().iter().enumerate() {
        if !c.is_zero() {
            acc = &acc + &monomials[k].scale(c);
        }
    }
    acc
}

fn validate_level_params(p: u64, level: u32, modulus: u64) -> Result<(), DegenError> {
    if p == 2 || !is_prime(p) {
        return Err(DegenError::NotOddPrime(p));
    }
    if level < 1 {
        return Err(DegenError::LevelTooSmall);
    }
    if gcd(p, modulus) != 1 {
        return Err(DegenError::SharedFactor(p, modulus));
    }
    Ok(())
}

/// The finite alternating sum `sum_{x=0}^{p^N - 1} f(x) (-1)^x` whose
/// p-adic limit is the fermionic integral.
pub fn finite_level_sum(f: &QPolynomial, p: u64, level: u32) -> Result<Rational, DegenError> {
    validate_level_params(p, level, 1)?;
    let bound = p.pow(level);
    let mut acc = Rational::zero();
    for x in 0..bound {
        let v = f.eval(&Rational::from(x));
        if x % 2 == 0 {
            acc += &v;
        } else {
            acc -= &v;
        }
    }
    Ok(acc)
}

/// The chi-twisted finite alternating sum over `0 .. d p^N`, requiring
/// `gcd(p, d) = 1`.
pub fn finite_level_sum_twisted(
    f: &QPolynomial,
    chi: &DirichletCharacter,
    p: u64,
    level: u32,
) -> Result<CyclotomicElement, DegenError> {
    let d = chi.modulus();
    validate_level_params(p, level, d)?;
    let bound = d * p.pow(level);
    let mut acc = CyclotomicElement::zero(chi.order());
    for x in 0..bound {
        let chi_x = chi.value(x as i64);
        if chi_x.is_zero() {
            continue;
        }
        let term = chi_x.scale(&f.eval(&Rational::from(x)));
        acc = if x % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    Ok(acc)
}
