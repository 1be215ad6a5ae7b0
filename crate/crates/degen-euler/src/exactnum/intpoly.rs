//! Dense integer polynomials, the carrier for cyclotomic polynomials.

use std::fmt;

use num::{BigInt, One, Zero};

/// A polynomial with arbitrary-precision integer coefficients, stored densely
/// with the constant term first. The zero polynomial has an empty coefficient
/// vector; otherwise the leading coefficient is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    /// Builds a polynomial from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs<I: Into<BigInt>>(coeffs: Vec<I>) -> Self {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// `x^m - 1`.
    pub fn x_pow_minus_one(m: usize) -> Self {
        assert!(m >= 1);
        let mut coeffs = vec![BigInt::zero(); m + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[m] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the stored range).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Exact division by a monic divisor. Returns `None` when the divisor is
    /// not monic or the remainder is nonzero.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        if !divisor.is_monic() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        let d = divisor.degree().unwrap();
        let n = self.degree().unwrap();
        if n < d {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - d + 1];
        for k in (0..=n - d).rev() {
            let q = rem[k + d].clone();
            if !q.is_zero() {
                for (j, c) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &q * c;
                }
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPolynomial::from_coeffs(quot))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_and_exact_division_round_trip() {
        let a = IntPolynomial::from_coeffs(vec![-1, 1]); // x - 1
        let b = IntPolynomial::from_coeffs(vec![1, 1, 1]); // x^2 + x + 1
        let prod = a.mul(&b);
        assert_eq!(prod, IntPolynomial::x_pow_minus_one(3));
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
    }

    #[test]
    fn inexact_division_is_rejected() {
        let a = IntPolynomial::x_pow_minus_one(3);
        let b = IntPolynomial::from_coeffs(vec![1, 1]); // x + 1
        assert!(a.div_exact(&b).is_none());
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = IntPolynomial::from_coeffs(vec![1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
    }
}
