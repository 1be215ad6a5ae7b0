//! Truncated exponential generating functions over a generic coefficient
//! ring.
//!
//! A series stores coefficients `a_0 .. a_T` and denotes
//! `sum_{n<=T} a_n t^n / n!`. With this convention the product of two series
//! is the binomial convolution of their coefficient sequences, which is the
//! shape every identity in this crate takes. Truncation orders never resize
//! implicitly: binary operations demand equal `T` and panic otherwise.

use std::sync::{Mutex, OnceLock};

use num::{BigInt, One, Zero};
use thiserror::Error;

use crate::exactnum::Rational;
use crate::ring::Ring;

#[derive(Debug, Error)]
pub enum SeriesError {
    #[error("series inverse requires an invertible constant term")]
    NonInvertibleConstantTerm,
}

/// Exact binomial coefficient C(n, k), from a process-wide Pascal triangle
/// that grows on demand.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    static TRIANGLE: OnceLock<Mutex<Vec<Vec<BigInt>>>> = OnceLock::new();
    let triangle = TRIANGLE.get_or_init(|| Mutex::new(vec![vec![BigInt::one()]]));
    let mut rows = triangle.lock().expect("binomial cache lock");
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let mut row = Vec::with_capacity(prev.len() + 1);
        row.push(BigInt::one());
        for i in 1..prev.len() {
            row.push(&prev[i - 1] + &prev[i]);
        }
        row.push(BigInt::one());
        rows.push(row);
    }
    rows[n][k].clone()
}

/// A truncated EGF `sum_{n<=T} a_n t^n/n!` with coefficients in `R`.
#[derive(Clone, PartialEq, Debug)]
pub struct EgfSeries<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> EgfSeries<R> {
    /// The zero series truncated at order `t`.
    pub fn zero(ring: R, t: usize) -> Self {
        let coeffs = vec![ring.zero(); t + 1];
        EgfSeries { ring, coeffs }
    }

    /// The constant series with value `c`.
    pub fn constant(ring: R, c: R::Elem, t: usize) -> Self {
        let mut s = Self::zero(ring, t);
        s.coeffs[0] = c;
        s
    }

    pub fn one(ring: R, t: usize) -> Self {
        let c = ring.one();
        Self::constant(ring, c, t)
    }

    /// Wraps an explicit coefficient vector `a_0 ..= a_T` (so `T = len - 1`).
    pub fn from_coeffs(ring: R, coeffs: Vec<R::Elem>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a_0");
        EgfSeries { ring, coeffs }
    }

    /// The series of `(1 + lambda t)^(y/lambda)`: coefficients are the
    /// degenerate falling factorials `(y|lambda)_n`, so `lambda = 0` gives
    /// the classical exponential `e^(yt)` with coefficients `y^n`.
    pub fn degenerate_exponential(ring: R, y: &R::Elem, lambda: &R::Elem, t: usize) -> Self {
        let mut coeffs = Vec::with_capacity(t + 1);
        coeffs.push(ring.one());
        let mut step = y.clone();
        for n in 1..=t {
            coeffs.push(ring.mul(&coeffs[n - 1], &step));
            step = ring.sub(&step, lambda);
        }
        EgfSeries { ring, coeffs }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient `a_n` (of `t^n/n!`).
    pub fn coeff(&self, n: usize) -> &R::Elem {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    fn check_aligned(&self, other: &Self) {
        assert!(
            self.ring.compatible(&other.ring),
            "series over incompatible coefficient rings"
        );
        assert_eq!(
            self.truncation_order(),
            other.truncation_order(),
            "series truncation orders differ"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_aligned(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.ring.add(a, b))
            .collect();
        EgfSeries {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_aligned(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.ring.sub(a, b))
            .collect();
        EgfSeries {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        EgfSeries {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| self.ring.neg(a)).collect(),
        }
    }

    /// Multiplies every coefficient by a fixed ring element.
    pub fn scale(&self, c: &R::Elem) -> Self {
        EgfSeries {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect(),
        }
    }

    /// Adds a constant to the series (only `a_0` changes).
    pub fn add_constant(&self, c: &R::Elem) -> Self {
        let mut out = self.clone();
        out.coeffs[0] = self.ring.add(&out.coeffs[0], c);
        out
    }

    /// EGF product: `(s*u)_n = sum_i C(n,i) s_i u_(n-i)`.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_aligned(other);
        let t = self.truncation_order();
        let ring = &self.ring;
        let mut coeffs = Vec::with_capacity(t + 1);
        for n in 0..=t {
            let mut acc = ring.zero();
            for i in 0..=n {
                let a = &self.coeffs[i];
                let b = &other.coeffs[n - i];
                if ring.is_zero(a) || ring.is_zero(b) {
                    continue;
                }
                let term = ring.mul_big_int(&ring.mul(a, b), &binomial(n, i));
                acc = ring.add(&acc, &term);
            }
            coeffs.push(acc);
        }
        EgfSeries {
            ring: ring.clone(),
            coeffs,
        }
    }

    /// Multiplicative inverse up to the truncation order, solving the
    /// triangular system `sum_i C(n,i) s_i b_(n-i) = [n = 0]`.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let ring = &self.ring;
        let a0_inv = ring
            .inverse(&self.coeffs[0])
            .ok_or(SeriesError::NonInvertibleConstantTerm)?;
        let t = self.truncation_order();
        let mut inv = Vec::with_capacity(t + 1);
        inv.push(a0_inv.clone());
        for n in 1..=t {
            let mut acc = ring.zero();
            for i in 1..=n {
                let a = &self.coeffs[i];
                if ring.is_zero(a) {
                    continue;
                }
                let term = ring.mul_big_int(&ring.mul(a, &inv[n - i]), &binomial(n, i));
                acc = ring.add(&acc, &term);
            }
            inv.push(ring.neg(&ring.mul(&a0_inv, &acc)));
        }
        Ok(EgfSeries {
            ring: ring.clone(),
            coeffs: inv,
        })
    }
}

impl EgfSeries<crate::ring::RationalField> {
    /// Rational-coefficient degenerate exponential, the common case.
    pub fn degenerate_exponential_rational(y: &Rational, lambda: &Rational, t: usize) -> Self {
        Self::degenerate_exponential(crate::ring::RationalField, y, lambda, t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{CyclotomicField, RationalField};

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn series(coeffs: &[(i64, i64)]) -> EgfSeries<RationalField> {
        EgfSeries::from_coeffs(
            RationalField,
            coeffs.iter().map(|&(n, d)| rat(n, d)).collect(),
        )
    }

    #[test]
    fn binomials_match_pascal() {
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(10, 5), BigInt::from(252));
        assert_eq!(binomial(3, 7), BigInt::from(0));
    }

    #[test]
    fn additive_structure() {
        let s = series(&[(1, 1), (2, 1), (3, 1)]);
        let zero = EgfSeries::zero(RationalField, 2);
        assert_eq!(s.add(&zero), s);
        assert!(s.add(&s.neg()).coeffs().iter().all(Rational::is_zero));
        assert_eq!(
            s.scale(&rat(2, 1)).coeffs(),
            series(&[(2, 1), (4, 1), (6, 1)]).coeffs()
        );
    }

    #[test]
    fn exp_times_exp_doubles() {
        // e^t * e^t = e^{2t}: all-ones coefficients convolve to 2^n.
        let e = EgfSeries::from_coeffs(RationalField, vec![Rational::one(); 7]);
        let sq = e.mul(&e);
        for n in 0..=6 {
            assert_eq!(sq.coeff(n), &Rational::from(1i64 << n));
        }
    }

    #[test]
    fn mul_identity() {
        let s = series(&[(1, 2), (-3, 1), (5, 7)]);
        let one = EgfSeries::one(RationalField, 2);
        assert_eq!(s.mul(&one), s);
    }

    #[test]
    fn degenerate_exponential_examples() {
        // y = 0 collapses to the constant series
        let s = EgfSeries::degenerate_exponential_rational(&rat(0, 1), &rat(7, 3), 4);
        assert_eq!(s.coeff(0), &Rational::one());
        assert!(s.coeffs()[1..].iter().all(Rational::is_zero));

        // lambda = 0 gives y^n
        let s = EgfSeries::degenerate_exponential_rational(&rat(5, 1), &rat(0, 1), 3);
        let expected = [1i64, 5, 25, 125];
        for (n, e) in expected.iter().enumerate() {
            assert_eq!(s.coeff(n), &Rational::from(*e));
        }

        // lambda = 1, y = 3: ordinary falling factorials 1, 3, 6, 6
        let s = EgfSeries::degenerate_exponential_rational(&rat(3, 1), &rat(1, 1), 3);
        let expected = [1i64, 3, 6, 6];
        for (n, e) in expected.iter().enumerate() {
            assert_eq!(s.coeff(n), &Rational::from(*e));
        }
    }

    #[test]
    fn degenerate_addition_law_concrete() {
        // Direct-convolution oracle at lambda = 1/2, y = 1, z = 2, T = 6.
        let lambda = rat(1, 2);
        let t = 6;
        let sy = EgfSeries::degenerate_exponential_rational(&rat(1, 1), &lambda, t);
        let sz = EgfSeries::degenerate_exponential_rational(&rat(2, 1), &lambda, t);
        let sum = EgfSeries::degenerate_exponential_rational(&rat(3, 1), &lambda, t);
        let mut conv = Vec::new();
        for n in 0..=t {
            let mut acc = Rational::zero();
            for k in 0..=n {
                acc +=
                    &(&(sy.coeff(k) * sz.coeff(n - k)) * &Rational::from_integer(binomial(n, k)));
            }
            conv.push(acc);
        }
        assert_eq!(sy.mul(&sz).coeffs(), &conv[..]);
        assert_eq!(sum.coeffs(), &conv[..]);
    }

    #[test]
    fn inverse_of_exp_plus_one_type_series() {
        // a_0 = 2, a_n = 1 for n >= 1, truncated at T = 2:
        // the inverse solves to 1/2, -1/4, 0.
        let s = series(&[(2, 1), (1, 1), (1, 1)]);
        let inv = s.inverse().unwrap();
        assert_eq!(inv.coeffs(), &[rat(1, 2), rat(-1, 4), rat(0, 1)]);
    }

    #[test]
    fn inverse_round_trip() {
        let s = series(&[(2, 1), (1, 3), (-5, 1), (7, 2)]);
        let prod = s.mul(&s.inverse().unwrap());
        assert_eq!(prod, EgfSeries::one(RationalField, 3));
    }

    #[test]
    fn inverse_requires_unit_constant_term() {
        let s = series(&[(0, 1), (1, 1)]);
        assert!(matches!(
            s.inverse(),
            Err(SeriesError::NonInvertibleConstantTerm)
        ));
    }

    #[test]
    fn constant_series_inverse() {
        let two = EgfSeries::constant(RationalField, rat(2, 1), 3);
        let inv = two.inverse().unwrap();
        assert_eq!(inv, EgfSeries::constant(RationalField, rat(1, 2), 3));
    }

    #[test]
    fn cyclotomic_coefficients_work_end_to_end() {
        let k = CyclotomicField::new(3);
        let z = k.root_of_unity(1);
        let s = EgfSeries::constant(k, z.clone(), 2).add_constant(&k.from_integer(2));
        let inv = s.inverse().unwrap();
        assert_eq!(s.mul(&inv), EgfSeries::one(k, 2));
    }

    #[test]
    #[should_panic(expected = "truncation orders differ")]
    fn mismatched_truncation_orders_panic() {
        let a = EgfSeries::one(RationalField, 2);
        let b = EgfSeries::one(RationalField, 3);
        let _ = a.add(&b);
    }

    #[test]
    #[should_panic(expected = "incompatible coefficient rings")]
    fn mismatched_rings_panic() {
        let a = EgfSeries::one(CyclotomicField::new(3), 2);
        let b = EgfSeries::one(CyclotomicField::new(4), 2);
        let _ = a.mul(&b);
    }
}
