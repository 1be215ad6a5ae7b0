//! Degenerate Euler numbers and polynomials, plain and character-twisted,
//! plus the alternating character sums R_k.
//!
//! The numbers come from one exact series division per `(chi, lambda)`;
//! polynomial values at any argument are then binomial convolutions with
//! degenerate falling factorials, so a cached number table serves every
//! evaluation point.

use crate::characters::DirichletCharacter;
use crate::exactnum::{CyclotomicElement, Rational};
use crate::fps::{binomial, EgfSeries};
use crate::poly::Polynomial;
use crate::ring::{CyclotomicField, RationalField, Ring};

/// Degenerate falling factorial `(y|lambda)_n = y (y-lambda) ... (y-(n-1)lambda)`,
/// with `(y|lambda)_0 = 1`. At `lambda = 0` this is `y^n`.
pub fn falling<R: Ring>(ring: &R, y: &R::Elem, lambda: &R::Elem, n: usize) -> R::Elem {
    let mut acc = ring.one();
    let mut factor = y.clone();
    for _ in 0..n {
        acc = ring.mul(&acc, &factor);
        factor = ring.sub(&factor, lambda);
    }
    acc
}

/// Rational-argument degenerate falling factorial.
pub fn falling_rational(y: &Rational, lambda: &Rational, n: usize) -> Rational {
    falling(&RationalField, y, lambda, n)
}

/// All of `(y|lambda)_0 ..= (y|lambda)_(n_max)` in one pass.
pub fn falling_sequence<R: Ring>(
    ring: &R,
    y: &R::Elem,
    lambda: &R::Elem,
    n_max: usize,
) -> Vec<R::Elem> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(ring.one());
    let mut factor = y.clone();
    for n in 1..=n_max {
        out.push(ring.mul(&out[n - 1], &factor));
        factor = ring.sub(&factor, lambda);
    }
    out
}

/// `(x + y | lambda)_n` expanded as a polynomial in `y`.
pub fn shifted_falling_poly<R: Ring>(
    ring: &R,
    x: &R::Elem,
    lambda: &R::Elem,
    n: usize,
) -> Polynomial<R> {
    let mut acc = Polynomial::constant(ring.clone(), ring.one());
    let mut shift = x.clone();
    for _ in 0..n {
        let linear = Polynomial::from_coeffs(ring.clone(), vec![shift.clone(), ring.one()]);
        acc = acc.mul(&linear);
        shift = ring.sub(&shift, lambda);
    }
    acc
}

/// The degenerate Euler numbers for one deformation parameter, i.e. the
/// EGF coefficients of `2 / ((1 + lambda t)^(1/lambda) + 1)`.
#[derive(Clone, Debug)]
pub struct DegenEulerNumbers {
    lambda: Rational,
    values: Vec<Rational>,
}

impl DegenEulerNumbers {
    pub fn new(lambda: &Rational, n_max: usize) -> Self {
        let denom = EgfSeries::degenerate_exponential_rational(&Rational::one(), lambda, n_max)
            .add_constant(&Rational::one());
        let series = denom
            .inverse()
            .expect("denominator has constant term 2")
            .scale(&Rational::from(2i64));
        DegenEulerNumbers {
            lambda: lambda.clone(),
            values: series.coeffs().to_vec(),
        }
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn value(&self, n: usize) -> &Rational {
        &self.values[n]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// The degenerate Euler polynomial at `x`:
    /// `sum_k C(n,k) * value(k) * (x|lambda)_(n-k)`.
    pub fn polynomial_value(&self, n: usize, x: &Rational) -> Rational {
        self.polynomial_values_up_to(n, x).pop().unwrap()
    }

    /// Polynomial values for every degree `0 ..= n_max` at one argument,
    /// sharing a single falling-factorial table.
    pub fn polynomial_values_up_to(&self, n_max: usize, x: &Rational) -> Vec<Rational> {
        assert!(
            n_max <= self.n_max(),
            "requested degree beyond the cached table"
        );
        let falls = falling_sequence(&RationalField, x, &self.lambda, n_max);
        (0..=n_max)
            .map(|n| {
                let mut acc = Rational::zero();
                for k in 0..=n {
                    if self.values[k].is_zero() {
                        continue;
                    }
                    acc += &(&(&self.values[k] * &falls[n - k])
                        * &Rational::from_integer(binomial(n, k)));
                }
                acc
            })
            .collect()
    }
}

/// Degenerate Euler numbers up to `n_max`.
pub fn carlitz_numbers(lambda: &Rational, n_max: usize) -> DegenEulerNumbers {
    DegenEulerNumbers::new(lambda, n_max)
}

/// One-off degenerate Euler polynomial value. Builds the number table for
/// degree `n`; prefer a cached [`DegenEulerNumbers`] inside sweeps.
pub fn carlitz_poly_eval(lambda: &Rational, n: usize, x: &Rational) -> Rational {
    DegenEulerNumbers::new(lambda, n).polynomial_value(n, x)
}

/// The generalized degenerate Euler numbers attached to a character: EGF
/// coefficients of
/// `2 (sum_a (-1)^a chi(a) (1+lambda t)^(a/lambda)) / ((1+lambda t)^(d/lambda) + 1)`,
/// computed over Q(zeta_m) for m the order of the character.
#[derive(Clone, Debug)]
pub struct GenDegenEulerNumbers {
    chi: DirichletCharacter,
    lambda: Rational,
    values: Vec<CyclotomicElement>,
}

impl GenDegenEulerNumbers {
    pub fn new(chi: &DirichletCharacter, lambda: &Rational, n_max: usize) -> Self {
        let field = CyclotomicField::new(chi.order());
        let d = chi.modulus();
        let lam = field.from_rational(lambda);

        let mut numer = EgfSeries::zero(field, n_max);
        for a in 0..d {
            let chi_a = chi.value(a as i64);
            if chi_a.is_zero() {
                continue;
            }
            let signed = if a % 2 == 0 { chi_a } else { chi_a.negate() };
            let exp = EgfSeries::degenerate_exponential(
                field,
                &field.from_integer(a as i64),
                &lam,
                n_max,
            );
            numer = numer.add(&exp.scale(&signed));
        }
        let numer = numer.scale(&field.from_integer(2));

        let denom =
            EgfSeries::degenerate_exponential(field, &field.from_integer(d as i64), &lam, n_max)
                .add_constant(&field.one());
        let series = numer.mul(&denom.inverse().expect("denominator has constant term 2"));

        GenDegenEulerNumbers {
            chi: chi.clone(),
            lambda: lambda.clone(),
            values: series.coeffs().to_vec(),
        }
    }

    pub fn character(&self) -> &DirichletCharacter {
        &self.chi
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn value(&self, n: usize) -> &CyclotomicElement {
        &self.values[n]
    }

    pub fn values(&self) -> &[CyclotomicElement] {
        &self.values
    }

    /// The generalized degenerate Euler polynomial at a rational `x`:
    /// `sum_k C(n,k) * value(k) * (x|lambda)_(n-k)`.
    pub fn polynomial_value(&self, n: usize, x: &Rational) -> CyclotomicElement {
        self.polynomial_values_up_to(n, x).pop().unwrap()
    }

    /// Polynomial values for every degree `0 ..= n_max` at one argument,
    /// sharing a single falling-factorial table.
    pub fn polynomial_values_up_to(&self, n_max: usize, x: &Rational) -> Vec<CyclotomicElement> {
        assert!(
            n_max <= self.n_max(),
            "requested degree beyond the cached table"
        );
        let falls = falling_sequence(&RationalField, x, &self.lambda, n_max);
        (0..=n_max)
            .map(|n| {
                let mut acc = CyclotomicElement::zero(self.chi.order());
                for k in 0..=n {
                    if self.values[k].is_zero() {
                        continue;
                    }
                    let scalar = &falls[n - k] * &Rational::from_integer(binomial(n, k));
                    acc = &acc + &self.values[k].scale(&scalar);
                }
                acc
            })
            .collect()
    }
}

/// Generalized degenerate Euler numbers up to `n_max`.
pub fn generalized_numbers(
    chi: &DirichletCharacter,
    lambda: &Rational,
    n_max: usize,
) -> GenDegenEulerNumbers {
    GenDegenEulerNumbers::new(chi, lambda, n_max)
}

/// One-off generalized degenerate Euler polynomial value.
pub fn generalized_poly_eval(
    chi: &DirichletCharacter,
    lambda: &Rational,
    n: usize,
    x: &Rational,
) -> CyclotomicElement {
    GenDegenEulerNumbers::new(chi, lambda, n).polynomial_value(n, x)
}

/// The alternating character sum
/// `R_k(n, lambda | chi) = 2 sum_{l=0}^{n} (-1)^l chi(l) (l|lambda)_k`.
pub fn r_sum(k: usize, n: u64, lambda: &Rational, chi: &DirichletCharacter) -> CyclotomicElement {
    r_sums_up_to(k, n, lambda, chi).pop().unwrap()
}

/// `R_k(n, lambda | chi)` for every `k = 0 ..= k_max`, sharing one
/// falling-factorial table per summand.
pub fn r_sums_up_to(
    k_max: usize,
    n: u64,
    lambda: &Rational,
    chi: &DirichletCharacter,
) -> Vec<CyclotomicElement> {
    let mut acc = vec![CyclotomicElement::zero(chi.order()); k_max + 1];
    for l in 0..=n {
        let chi_l = chi.value(l as i64);
        if chi_l.is_zero() {
            continue;
        }
        let falls = falling_sequence(&RationalField, &Rational::from(l), lambda, k_max);
        for (k, fall) in falls.iter().enumerate() {
            let term = chi_l.scale(fall);
            acc[k] = if l % 2 == 0 {
                &acc[k] + &term
            } else {
                &acc[k] - &term
            };
        }
    }
    let two = Rational::from(2i64);
    acc.into_iter().map(|c| c.scale(&two)).collect()
}
