//! Exact arithmetic in cyclotomic fields Q(zeta_m).
//!
//! Elements are polynomials in `zeta_m` of degree below `phi(m)`, reduced
//! modulo the m-th cyclotomic polynomial. Reduction data for each order is
//! computed once and shared process-wide.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, One, Zero};

use super::arith::{divisors, euler_phi, moebius};
use super::intpoly::IntPolynomial;
use super::rational::Rational;
use super::ExactnumError;

/// The m-th cyclotomic polynomial, the minimal polynomial of a primitive
/// m-th root of unity. Monic, with degree `phi(m)`.
///
/// Computed as the quotient of products of `x^d - 1` over divisors `d` of m,
/// split by the sign of the Moebius function at `m/d`.
pub fn cyclotomic_polynomial(m: u32) -> IntPolynomial {
    assert!(m >= 1, "cyclotomic order must be positive");
    let m = m as u64;
    let mut numer = IntPolynomial::from_coeffs(vec![1]);
    let mut denom = IntPolynomial::from_coeffs(vec![1]);
    for d in divisors(m) {
        match moebius(m / d) {
            1 => numer = numer.mul(&IntPolynomial::x_pow_minus_one(d as usize)),
            -1 => denom = denom.mul(&IntPolynomial::x_pow_minus_one(d as usize)),
            _ => {}
        }
    }
    numer
        .div_exact(&denom)
        .expect("cyclotomic quotient is exact")
}

/// Shared per-order reduction data: the modulus, rows expressing the powers
/// `zeta^k` for `phi <= k <= 2*phi - 2` in the power basis, and the full
/// table of `zeta^k` for `0 <= k < m`.
struct CycloTable {
    phi: usize,
    modulus: IntPolynomial,
    reduction: Vec<Vec<BigInt>>,
    zeta_powers: Vec<Vec<BigInt>>,
}

impl CycloTable {
    fn build(m: u32) -> CycloTable {
        let modulus = cyclotomic_polynomial(m);
        let phi = euler_phi(m as u64) as usize;
        debug_assert_eq!(modulus.degree(), Some(phi));

        // zeta^phi = -(lower coefficients of the monic modulus)
        let base: Vec<BigInt> = (0..phi).map(|i| -modulus.coeff(i)).collect();
        let shift_once = |row: &[BigInt]| -> Vec<BigInt> {
            let mut next = vec![BigInt::zero(); phi];
            next[1..].clone_from_slice(&row[..phi - 1]);
            let carry = row[phi - 1].clone();
            if !carry.is_zero() {
                for (n, b) in next.iter_mut().zip(&base) {
                    *n += &carry * b;
                }
            }
            next
        };

        // Rows for zeta^k with phi <= k <= 2*phi - 2; none needed when
        // products of reduced elements cannot exceed degree phi - 1.
        let mut reduction = Vec::with_capacity(phi.saturating_sub(1));
        if phi >= 2 {
            reduction.push(base.clone());
            for j in 1..phi - 1 {
                let prev = reduction[j - 1].clone();
                reduction.push(shift_once(&prev));
            }
        }

        let mut zeta_powers = Vec::with_capacity(m as usize);
        let mut one = vec![BigInt::zero(); phi];
        one[0] = BigInt::one();
        zeta_powers.push(one);
        for k in 1..m as usize {
            let next = shift_once(&zeta_powers[k - 1]);
            zeta_powers.push(next);
        }

        CycloTable {
            phi,
            modulus,
            reduction,
            zeta_powers,
        }
    }
}

fn table(m: u32) -> Arc<CycloTable> {
    static TABLES: OnceLock<Mutex<HashMap<u32, Arc<CycloTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = tables.lock().expect("cyclotomic table lock");
    guard
        .entry(m)
        .or_insert_with(|| Arc::new(CycloTable::build(m)))
        .clone()
}

/// An exact element of the cyclotomic field Q(zeta_m).
///
/// The coefficient vector always has exactly `phi(m)` entries; equality is
/// coefficient comparison on this canonical representation. Binary operations
/// require equal orders — promote with [`CyclotomicElement::promote_to`]
/// (usually to the lcm of the two orders) before mixing fields.
#[derive(Clone, PartialEq, Eq)]
pub struct CyclotomicElement {
    order: u32,
    coeffs: Vec<Rational>,
}

impl CyclotomicElement {
    pub fn zero(order: u32) -> Self {
        let phi = euler_phi(order as u64) as usize;
        CyclotomicElement {
            order,
            coeffs: vec![Rational::zero(); phi],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    /// Embeds a rational as a constant.
    pub fn from_rational(order: u32, q: Rational) -> Self {
        let mut elem = Self::zero(order);
        elem.coeffs[0] = q;
        elem
    }

    /// `zeta_m^k`, for any integer exponent (reduced mod m).
    pub fn root_of_unity(order: u32, k: i64) -> Self {
        let t = table(order);
        let m = order as i64;
        let k = k.rem_euclid(m) as usize;
        let coeffs = t.zeta_powers[k]
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        CyclotomicElement { order, coeffs }
    }

    /// Builds an element from a coefficient vector in the power basis
    /// `1, zeta, ..., zeta^(phi-1)`. The vector must have length `phi(m)`.
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Self {
        let phi = euler_phi(order as u64) as usize;
        assert_eq!(
            coeffs.len(),
            phi,
            "coefficient vector must have length phi({order}) = {phi}"
        );
        CyclotomicElement { order, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// The rational value, when the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ExactnumError> {
        self.zip_coeffs(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ExactnumError> {
        self.zip_coeffs(other, |a, b| a - b)
    }

    fn zip_coeffs(
        &self,
        other: &Self,
        f: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<Self, ExactnumError> {
        if self.order != other.order {
            return Err(ExactnumError::OrderMismatch(self.order, other.order));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(CyclotomicElement {
            order: self.order,
            coeffs,
        })
    }

    pub fn negate(&self) -> Self {
        CyclotomicElement {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Scales every coefficient by a rational.
    pub fn scale(&self, q: &Rational) -> Self {
        CyclotomicElement {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ExactnumError> {
        if self.order != other.order {
            return Err(ExactnumError::OrderMismatch(self.order, other.order));
        }
        let t = table(self.order);
        let phi = t.phi;
        let mut conv = vec![Rational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += &(a * b);
                }
            }
        }
        let mut coeffs: Vec<Rational> = conv[..phi].to_vec();
        for (j, row) in t.reduction.iter().enumerate() {
            let c = &conv[phi + j];
            if c.is_zero() {
                continue;
            }
            for (out, r) in coeffs.iter_mut().zip(row) {
                if !r.is_zero() {
                    *out += &(c * &Rational::from_integer(r.clone()));
                }
            }
        }
        Ok(CyclotomicElement {
            order: self.order,
            coeffs,
        })
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the (irreducible) modulus.
    pub fn inverse(&self) -> Result<Self, ExactnumError> {
        if self.is_zero() {
            return Err(ExactnumError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(
                self.order,
                q.inverse().ok_or(ExactnumError::DivisionByZero)?,
            ));
        }
        let t = table(self.order);
        let modulus: Vec<Rational> = (0..=t.phi)
            .map(|i| Rational::from_integer(t.modulus.coeff(i)))
            .collect();
        let u = rat_poly_modular_inverse(&self.coeffs, &modulus);
        let mut coeffs = u;
        coeffs.resize(t.phi, Rational::zero());
        Ok(CyclotomicElement {
            order: self.order,
            coeffs,
        })
    }

    /// Embeds this element into Q(zeta_M) for a multiple M of the order,
    /// sending `zeta_m` to `zeta_M^(M/m)`.
    pub fn promote_to(&self, new_order: u32) -> Result<Self, ExactnumError> {
        if !new_order.is_multiple_of(self.order) {
            return Err(ExactnumError::NotASubfield(self.order, new_order));
        }
        if new_order == self.order {
            return Ok(self.clone());
        }
        let step = (new_order / self.order) as i64;
        let mut out = CyclotomicElement::zero(new_order);
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let term = Self::root_of_unity(new_order, j as i64 * step).scale(c);
                out = out.checked_add(&term)?;
            }
        }
        Ok(out)
    }
}

/// Aligns two elements into the field of the lcm of their orders.
pub fn align(
    a: &CyclotomicElement,
    b: &CyclotomicElement,
) -> Result<(CyclotomicElement, CyclotomicElement), ExactnumError> {
    let m = num::integer::lcm(a.order() as u64, b.order() as u64) as u32;
    Ok((a.promote_to(m)?, b.promote_to(m)?))
}

// Inverse of `a` modulo the monic polynomial `modulus` over Q, assuming the
// two are coprime. Dense, low-first coefficient vectors.
fn rat_poly_modular_inverse(a: &[Rational], modulus: &[Rational]) -> Vec<Rational> {
    let trim = |mut v: Vec<Rational>| -> Vec<Rational> {
        while v.last().is_some_and(Rational::is_zero) {
            v.pop();
        }
        v
    };
    let divmod = |num: &[Rational], den: &[Rational]| -> (Vec<Rational>, Vec<Rational>) {
        let mut rem = num.to_vec();
        let dd = den.len() - 1;
        let lead_inv = den[dd].inverse().expect("nonzero leading coefficient");
        if rem.len() <= dd {
            return (Vec::new(), trim(rem));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] * &lead_inv;
            if !q.is_zero() {
                for (j, c) in den.iter().enumerate() {
                    rem[k + j] -= &(&q * c);
                }
            }
            quot[k] = q;
        }
        (trim(quot), trim(rem))
    };

    // Extended Euclid tracking only the Bezout coefficient of `a`.
    let mut r0 = trim(modulus.to_vec());
    let mut r1 = trim(a.to_vec());
    let mut s0: Vec<Rational> = Vec::new();
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while r1.len() > 1 {
        let (q, r) = divmod(&r0, &r1);
        // s_next = s0 - q * s1
        let mut s_next = s0.clone();
        let prod_len = q.len() + s1.len();
        if s_next.len() < prod_len.saturating_sub(1) {
            s_next.resize(prod_len.saturating_sub(1), Rational::zero());
        }
        for (i, qi) in q.iter().enumerate() {
            if qi.is_zero() {
                continue;
            }
            for (j, sj) in s1.iter().enumerate() {
                s_next[i + j] -= &(qi * sj);
            }
        }
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = trim(s_next);
    }
    // r1 is a nonzero constant: gcd(a, modulus) up to scaling.
    let g_inv = r1[0].inverse().expect("gcd constant is nonzero");
    s1.iter().map(|c| c * &g_inv).collect()
}

macro_rules! cyclo_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &CyclotomicElement {
            type Output = CyclotomicElement;
            fn $method(self, rhs: &CyclotomicElement) -> CyclotomicElement {
                self.$checked(rhs).expect("cyclotomic order mismatch")
            }
        }
        impl $trait for CyclotomicElement {
            type Output = CyclotomicElement;
            fn $method(self, rhs: CyclotomicElement) -> CyclotomicElement {
                (&self).$method(&rhs)
            }
        }
    };
}

cyclo_binop!(Add, add, checked_add);
cyclo_binop!(Sub, sub, checked_sub);
cyclo_binop!(Mul, mul, checked_mul);

impl Neg for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn neg(self) -> CyclotomicElement {
        self.negate()
    }
}

impl Neg for CyclotomicElement {
    type Output = CyclotomicElement;
    fn neg(self) -> CyclotomicElement {
        self.negate()
    }
}

impl fmt::Display for CyclotomicElement {
    /// Rational values print as `p/q`; other elements as a polynomial in
    /// `z{m}`, e.g. `1/2 - z6 + 2*z6^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let sym = format!("z{}", self.order);
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign_str = if first {
                if super::rational::sign(c) < 0 {
                    "-"
                } else {
                    ""
                }
            } else if super::rational::sign(c) < 0 {
                " - "
            } else {
                " + "
            };
            let term = match (i, mag.is_one()) {
                (0, _) => format!("{mag}"),
                (1, true) => sym.clone(),
                (1, false) => format!("{mag}*{sym}"),
                (_, true) => format!("{sym}^{i}"),
                (_, false) => format!("{mag}*{sym}^{i}"),
            };
            write!(f, "{sign_str}{term}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in Q(z{})", self.order)
    }
}
