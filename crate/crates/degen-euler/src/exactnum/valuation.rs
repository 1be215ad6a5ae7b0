//! p-adic valuations of exact rationals.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, Integer, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::arith::is_prime;
use super::cyclotomic::CyclotomicElement;
use super::rational::Rational;
use super::ExactnumError;

/// A p-adic valuation: a finite integer, or the conventional +infinity of
/// the zero element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    /// Whether this valuation is at least the given bound.
    pub fn at_least(&self, bound: i64) -> bool {
        match self {
            Valuation::Infinite => true,
            Valuation::Finite(v) => *v >= bound,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
            (Valuation::Infinite, _) => Ordering::Greater,
            (_, Valuation::Infinite) => Ordering::Less,
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

impl std::str::FromStr for Valuation {
    type Err = ExactnumError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "inf" {
            Ok(Valuation::Infinite)
        } else {
            s.parse::<i64>()
                .map(Valuation::Finite)
                .map_err(|_| ExactnumError::ParseRational(s.to_string()))
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Valuation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e| D::Error::custom(format!("{e}")))
    }
}

fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    debug_assert!(!n.is_zero());
    let mut v = 0i64;
    let mut cur = n.abs();
    loop {
        let (q, r) = cur.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        cur = q;
    }
}

/// The exponent of `p` in `q`: the `v` with `q = p^v * (unit away from p)`.
/// Zero maps to the infinite valuation. Errors when `p` is not prime.
pub fn p_adic_valuation(q: &Rational, p: u64) -> Result<Valuation, ExactnumError> {
    if !is_prime(p) {
        return Err(ExactnumError::NotPrime(p));
    }
    if q.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let p = BigInt::from(p);
    Ok(Valuation::Finite(
        int_valuation(q.numer(), &p) - int_valuation(q.denom(), &p),
    ))
}

/// Coefficientwise valuation of a cyclotomic element in the power basis:
/// the minimum of `v_p` over its coefficients. For rational values this is
/// the ordinary p-adic valuation.
pub fn min_coefficient_valuation(
    a: &CyclotomicElement,
    p: u64,
) -> Result<Valuation, ExactnumError> {
    let mut min = Valuation::Infinite;
    for c in a.coeffs() {
        let v = p_adic_valuation(c, p)?;
        if v < min {
            min = v;
        }
    }
    Ok(min)
}
