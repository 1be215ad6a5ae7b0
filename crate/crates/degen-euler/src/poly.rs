//! Dense polynomials over a generic coefficient ring.
//!
//! These are the integrands fed to the fermionic-integral oracles and, via
//! [`PolynomialRing`], a way to run the series engine with a formal variable
//! in the coefficients (used to track dependence on the deformation
//! parameter exactly).

use crate::exactnum::Rational;
use crate::ring::{RationalField, Ring};

/// A dense polynomial, constant term first, with no trailing zero
/// coefficients (the zero polynomial stores an empty vector).
#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

/// Polynomials over the rationals, the common integrand type.
pub type QPolynomial = Polynomial<RationalField>;

impl<R: Ring> Polynomial<R> {
    pub fn zero(ring: R) -> Self {
        Polynomial {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(ring: R, c: R::Elem) -> Self {
        let mut p = Polynomial::zero(ring);
        if !p.ring.is_zero(&c) {
            p.coeffs.push(c);
        }
        p
    }

    /// The variable `x`.
    pub fn variable(ring: R) -> Self {
        let coeffs = vec![ring.zero(), ring.one()];
        Polynomial { ring, coeffs }
    }

    /// `x^n` with coefficient one.
    pub fn monomial(ring: R, n: usize) -> Self {
        let mut coeffs = vec![ring.zero(); n + 1];
        coeffs[n] = ring.one();
        Polynomial { ring, coeffs }
    }

    pub fn from_coeffs(ring: R, coeffs: Vec<R::Elem>) -> Self {
        let mut p = Polynomial { ring, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| self.ring.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the stored range.
    pub fn coeff(&self, i: usize) -> R::Elem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(self.ring.compatible(&other.ring), "incompatible rings");
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.ring.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        Polynomial::from_coeffs(self.ring.clone(), coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| self.ring.neg(c)).collect(),
        }
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect();
        Polynomial::from_coeffs(self.ring.clone(), coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert!(self.ring.compatible(&other.ring), "incompatible rings");
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.ring.clone());
        }
        let mut coeffs = vec![self.ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if self.ring.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = self.ring.add(&coeffs[i + j], &self.ring.mul(a, b));
            }
        }
        Polynomial::from_coeffs(self.ring.clone(), coeffs)
    }

    /// Horner evaluation at a ring element.
    pub fn eval(&self, x: &R::Elem) -> R::Elem {
        let mut acc = self.ring.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.ring.add(&self.ring.mul(&acc, x), c);
        }
        acc
    }

    /// Exact division by the variable; `None` when the constant term is
    /// nonzero (or implicitly zero for the zero polynomial, which divides).
    pub fn div_by_variable(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if !self.ring.is_zero(&self.coeffs[0]) {
            return None;
        }
        Some(Polynomial::from_coeffs(
            self.ring.clone(),
            self.coeffs[1..].to_vec(),
        ))
    }
}

impl QPolynomial {
    /// Convenience constructor from integer coefficients, constant first.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(
            RationalField,
            coeffs.iter().map(|&c| Rational::from(c)).collect(),
        )
    }
}

/// The ring of polynomials over `R`, usable as a coefficient ring for the
/// series engine. Units are the nonzero constants with invertible value.
#[derive(Clone, PartialEq, Debug)]
pub struct PolynomialRing<R: Ring> {
    base: R,
}

impl<R: Ring> PolynomialRing<R> {
    pub fn new(base: R) -> Self {
        PolynomialRing { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn variable(&self) -> Polynomial<R> {
        Polynomial::variable(self.base.clone())
    }
}

impl<R: Ring> Ring for PolynomialRing<R> {
    type Elem = Polynomial<R>;

    fn zero(&self) -> Polynomial<R> {
        Polynomial::zero(self.base.clone())
    }
    fn one(&self) -> Polynomial<R> {
        Polynomial::constant(self.base.clone(), self.base.one())
    }
    fn is_zero(&self, a: &Polynomial<R>) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Polynomial<R>, b: &Polynomial<R>) -> Polynomial<R> {
        a.add(b)
    }
    fn sub(&self, a: &Polynomial<R>, b: &Polynomial<R>) -> Polynomial<R> {
        a.sub(b)
    }
    fn neg(&self, a: &Polynomial<R>) -> Polynomial<R> {
        a.neg()
    }
    fn mul(&self, a: &Polynomial<R>, b: &Polynomial<R>) -> Polynomial<R> {
        a.mul(b)
    }
    fn inverse(&self, a: &Polynomial<R>) -> Option<Polynomial<R>> {
        if a.degree() != Some(0) {
            return None;
        }
        let inv = self.base.inverse(&a.coeffs[0])?;
        Some(Polynomial::constant(self.base.clone(), inv))
    }
    fn from_rational(&self, q: &Rational) -> Polynomial<R> {
        Polynomial::constant(self.base.clone(), self.base.from_rational(q))
    }
    fn compatible(&self, other: &Self) -> bool {
        self.base.compatible(&other.base)
    }
}
