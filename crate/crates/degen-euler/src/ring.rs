//! The commutative coefficient ring abstraction shared by series and
//! polynomial arithmetic.
//!
//! A [`Ring`] value is a lightweight context describing where coefficients
//! live (the rationals, a fixed cyclotomic field, or a polynomial ring over
//! either); elements carry no context of their own beyond what the type
//! stores. Binary operations in higher layers check [`Ring::compatible`]
//! before mixing elements.

use std::fmt;

use num::BigInt;

use crate::exactnum::{CyclotomicElement, Rational};

/// A commutative ring with exact, decidable equality.
// `self` here is the ring context, not a value being converted.
#[allow(clippy::wrong_self_convention)]
pub trait Ring: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse, when `a` is a unit.
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Embeds a rational scalar.
    fn from_rational(&self, q: &Rational) -> Self::Elem;

    /// Whether elements of `self` and `other` may be combined.
    fn compatible(&self, other: &Self) -> bool {
        self == other
    }

    fn from_integer(&self, n: i64) -> Self::Elem {
        self.from_rational(&Rational::from(n))
    }

    /// Multiplies by an integer scalar (binomial coefficients and similar).
    fn mul_big_int(&self, a: &Self::Elem, n: &BigInt) -> Self::Elem {
        self.mul(a, &self.from_rational(&Rational::from_integer(n.clone())))
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct RationalField;

impl Ring for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn inverse(&self, a: &Rational) -> Option<Rational> {
        a.inverse()
    }
    fn from_rational(&self, q: &Rational) -> Rational {
        q.clone()
    }
}

/// The cyclotomic field Q(zeta_m) for a fixed order m.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CyclotomicField {
    order: u32,
}

impl CyclotomicField {
    pub fn new(order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        CyclotomicField { order }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `zeta_m^k` in this field.
    pub fn root_of_unity(&self, k: i64) -> CyclotomicElement {
        CyclotomicElement::root_of_unity(self.order, k)
    }
}

impl Ring for CyclotomicField {
    type Elem = CyclotomicElement;

    fn zero(&self) -> CyclotomicElement {
        CyclotomicElement::zero(self.order)
    }
    fn one(&self) -> CyclotomicElement {
        CyclotomicElement::one(self.order)
    }
    fn is_zero(&self, a: &CyclotomicElement) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        a + b
    }
    fn sub(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        a - b
    }
    fn neg(&self, a: &CyclotomicElement) -> CyclotomicElement {
        a.negate()
    }
    fn mul(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        a * b
    }
    fn inverse(&self, a: &CyclotomicElement) -> Option<CyclotomicElement> {
        a.inverse().ok()
    }
    fn from_rational(&self, q: &Rational) -> CyclotomicElement {
        CyclotomicElement::from_rational(self.order, q.clone())
    }
}
