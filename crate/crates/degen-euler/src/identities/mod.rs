//! The identity verification engine.
//!
//! Every identity is checked by computing its two sides along genuinely
//! independent routes over exact scalars and comparing for equality — there
//! are no tolerances anywhere. A check over one parameter tuple produces an
//! [`IdentityReport`] with one row per degree; a [`sweep`](sweep::sweep)
//! runs a whole parameter grid and returns reports in deterministic grid
//! order regardless of scheduling.

mod checks;
mod sweep;

pub use checks::{check_identity, double_i_series};
pub use sweep::{expand_grid, sweep, sweep_with_options, SweepConfig, SweepError, SweepOptions};

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::characters::DirichletCharacter;
use crate::exactnum::{align, CyclotomicElement, Rational, Valuation};

#[derive(Debug, Error)]
pub enum IdentityError {
    #[error("{name} must be odd, got {value}")]
    EvenParameter { name: &'static str, value: u64 },
    #[error("p must be an odd prime, got {0}")]
    BadPrime(u64),
    #[error("levels must be nonempty with every N >= 1")]
    BadLevels,
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

/// The identities the engine can verify, named by their stable ids.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum IdentityKind {
    /// Binomial-convolution form of the w1 <-> w2 symmetry.
    #[serde(rename = "thm1")]
    Thm1,
    /// Alternating-sum form of the w1 <-> w2 symmetry.
    #[serde(rename = "thm2")]
    Thm2,
    /// Boundary identity: E_k(nd) + E_k = R_k(nd-1) for odd n.
    #[serde(rename = "eq18")]
    Eq18,
    /// The w2 = 1 specialization of the alternating-sum symmetry.
    #[serde(rename = "corollary_w2_1")]
    CorollaryW2One,
    /// The x = 0, w2 = 1 specialization.
    #[serde(rename = "corollary_x0")]
    CorollaryX0,
    /// Twisted integral recurrence vs. generating-function values.
    #[serde(rename = "dual_oracle")]
    DualOracle,
    /// Modulus-distribution of the twisted polynomials over plain ones.
    #[serde(rename = "distribution")]
    Distribution,
    /// Three independent routes to the coefficients of the double-integral
    /// series agree.
    #[serde(rename = "i_series_consistency")]
    ISeriesConsistency,
    /// Valuation growth of the truncated alternating sums.
    #[serde(rename = "padic_limit")]
    PadicLimit,
}

impl IdentityKind {
    /// Canonical ordering used by `check all` and the default sweep.
    pub const ALL: [IdentityKind; 9] = [
        IdentityKind::Thm1,
        IdentityKind::Thm2,
        IdentityKind::Eq18,
        IdentityKind::CorollaryW2One,
        IdentityKind::CorollaryX0,
        IdentityKind::DualOracle,
        IdentityKind::Distribution,
        IdentityKind::ISeriesConsistency,
        IdentityKind::PadicLimit,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            IdentityKind::Thm1 => "thm1",
            IdentityKind::Thm2 => "thm2",
            IdentityKind::Eq18 => "eq18",
            IdentityKind::CorollaryW2One => "corollary_w2_1",
            IdentityKind::CorollaryX0 => "corollary_x0",
            IdentityKind::DualOracle => "dual_oracle",
            IdentityKind::Distribution => "distribution",
            IdentityKind::ISeriesConsistency => "i_series_consistency",
            IdentityKind::PadicLimit => "padic_limit",
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for IdentityKind {
    type Err = IdentityError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityKind::ALL
            .into_iter()
            .find(|k| k.id() == s)
            .ok_or_else(|| IdentityError::UnknownIdentity(s.to_string()))
    }
}

/// One parameter tuple for a check. Odd-ness of the modulus and of `w1`,
/// `w2` is enforced at construction; `eq18` reads its odd multiplier from
/// the `w1` slot.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityParams {
    #[serde(rename = "d")]
    pub modulus: u64,
    pub chi_index: usize,
    pub chi_exponents: Vec<u64>,
    pub lambda: Rational,
    pub w1: u64,
    pub w2: u64,
    pub x: Rational,
    #[serde(rename = "L")]
    pub degree_bound: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f: Option<Vec<i64>>,
}

impl IdentityParams {
    pub fn new(
        chi: &DirichletCharacter,
        chi_index: usize,
        lambda: Rational,
        w1: u64,
        w2: u64,
        x: Rational,
        degree_bound: usize,
    ) -> Result<Self, IdentityError> {
        if w1.is_multiple_of(2) {
            return Err(IdentityError::EvenParameter {
                name: "w1",
                value: w1,
            });
        }
        if w2.is_multiple_of(2) {
            return Err(IdentityError::EvenParameter {
                name: "w2",
                value: w2,
            });
        }
        Ok(IdentityParams {
            modulus: chi.modulus(),
            chi_index,
            chi_exponents: chi.exponents().to_vec(),
            lambda,
            w1,
            w2,
            x,
            degree_bound,
            p: None,
            levels: None,
            f: None,
        })
    }

    /// Parameters for the p-adic limit check of one integer polynomial.
    pub fn padic(
        chi: &DirichletCharacter,
        p: u64,
        levels: Vec<u32>,
        f: Vec<i64>,
    ) -> Result<Self, IdentityError> {
        if p == 2 || !crate::exactnum::arith::is_prime(p) {
            return Err(IdentityError::BadPrime(p));
        }
        if levels.is_empty() || levels.iter().any(|&n| n < 1) {
            return Err(IdentityError::BadLevels);
        }
        let mut params = IdentityParams::new(chi, 0, Rational::zero(), 1, 1, Rational::zero(), 0)?;
        params.p = Some(p);
        params.levels = Some(levels);
        params.f = Some(f);
        Ok(params)
    }
}

/// An exact value carried by a report row: a rational, a cyclotomic number,
/// or a p-adic valuation. Equality is mathematical (a rational-valued
/// cyclotomic element equals the plain rational).
#[derive(Clone, Debug)]
pub enum ExactValue {
    Rational(Rational),
    Cyclotomic(CyclotomicElement),
    Valuation(Valuation),
}

impl ExactValue {
    /// Wraps a cyclotomic element, collapsing rational values to the plain
    /// form so serialized output is as readable as possible.
    pub fn from_cyclotomic(c: CyclotomicElement) -> Self {
        match c.as_rational() {
            Some(q) => ExactValue::Rational(q),
            None => ExactValue::Cyclotomic(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ExactValue::Rational(q) => q.is_zero(),
            ExactValue::Cyclotomic(c) => c.is_zero(),
            ExactValue::Valuation(_) => false,
        }
    }

    pub fn negated(&self) -> Self {
        match self {
            ExactValue::Rational(q) => ExactValue::Rational(-q),
            ExactValue::Cyclotomic(c) => ExactValue::Cyclotomic(c.negate()),
            ExactValue::Valuation(Valuation::Finite(v)) => {
                ExactValue::Valuation(Valuation::Finite(-v))
            }
            ExactValue::Valuation(Valuation::Infinite) => {
                ExactValue::Valuation(Valuation::Infinite)
            }
        }
    }
}

impl PartialEq for ExactValue {
    fn eq(&self, other: &Self) -> bool {
        use ExactValue::*;
        match (self, other) {
            (Rational(a), Rational(b)) => a == b,
            (Cyclotomic(a), Cyclotomic(b)) => match align(a, b) {
                Ok((a, b)) => a == b,
                Err(_) => false,
            },
            (Rational(a), Cyclotomic(b)) | (Cyclotomic(b), Rational(a)) => {
                b.as_rational().as_ref() == Some(a)
            }
            (Valuation(a), Valuation(b)) => a == b,
            (Valuation(crate::exactnum::Valuation::Finite(v)), Rational(q))
            | (Rational(q), Valuation(crate::exactnum::Valuation::Finite(v))) => {
                q == &crate::exactnum::Rational::from(*v)
            }
            _ => false,
        }
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Rational(q) => write!(f, "{q}"),
            ExactValue::Cyclotomic(c) => write!(f, "{c}"),
            ExactValue::Valuation(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for ExactValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExactValue::Rational(q) => q.serialize(serializer),
            ExactValue::Valuation(v) => v.serialize(serializer),
            ExactValue::Cyclotomic(c) => match c.as_rational() {
                Some(q) => q.serialize(serializer),
                None => {
                    use serde::ser::SerializeStruct;
                    let mut st = serializer.serialize_struct("cyclotomic", 2)?;
                    st.serialize_field("order", &c.order())?;
                    st.serialize_field("coeffs", c.coeffs())?;
                    st.end()
                }
            },
        }
    }
}

impl<'de> Deserialize<'de> for ExactValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Cyclo { order: u32, coeffs: Vec<Rational> },
        }
        match Repr::deserialize(deserializer)? {
            Repr::Text(s) => {
                if s.trim() == "inf" {
                    Ok(ExactValue::Valuation(Valuation::Infinite))
                } else {
                    s.parse::<Rational>()
                        .map(ExactValue::Rational)
                        .map_err(|e| D::Error::custom(format!("{e}")))
                }
            }
            Repr::Cyclo { order, coeffs } => {
                let phi = crate::exactnum::arith::euler_phi(order as u64) as usize;
                if coeffs.len() != phi {
                    return Err(D::Error::custom(format!(
                        "expected {phi} coefficients for order {order}"
                    )));
                }
                Ok(ExactValue::Cyclotomic(CyclotomicElement::from_coeffs(
                    order, coeffs,
                )))
            }
        }
    }
}

/// One compared degree: the flag means exact equality, except for
/// `padic_limit` where it means the valuation on the left meets the bound
/// on the right.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportRow {
    pub n: usize,
    pub lhs: ExactValue,
    pub rhs: ExactValue,
    pub equal: bool,
}

/// The outcome of checking one identity over one parameter tuple.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity: IdentityKind,
    pub params: IdentityParams,
    pub holds: bool,
    pub rows: Vec<ReportRow>,
    pub first_failure: Option<usize>,
    #[serde(skip)]
    pub elapsed: Duration,
}

fn row_satisfied(kind: IdentityKind, lhs: &ExactValue, rhs: &ExactValue) -> bool {
    match kind {
        IdentityKind::PadicLimit => match (lhs, rhs) {
            (ExactValue::Valuation(v), ExactValue::Rational(bound)) => {
                bound.is_integer()
                    && v.at_least(
                        bound
                            .numer()
                            .try_into()
                            .expect("level bounds are small integers"),
                    )
            }
            _ => false,
        },
        _ => lhs == rhs,
    }
}

impl IdentityReport {
    /// Assembles a report from per-degree side values, computing the flags.
    pub fn from_sides(
        identity: IdentityKind,
        params: IdentityParams,
        sides: Vec<(usize, ExactValue, ExactValue)>,
        elapsed: Duration,
    ) -> Self {
        let rows: Vec<ReportRow> = sides
            .into_iter()
            .map(|(n, lhs, rhs)| {
                let equal = row_satisfied(identity, &lhs, &rhs);
                ReportRow { n, lhs, rhs, equal }
            })
            .collect();
        let first_failure = rows.iter().find(|r| !r.equal).map(|r| r.n);
        IdentityReport {
            identity,
            params,
            holds: first_failure.is_none(),
            rows,
            first_failure,
            elapsed,
        }
    }

    /// Flips the sign of the first nonzero right-hand value and recomputes
    /// the flags: the negative control that guards the harness against
    /// vacuous passes. Returns false when no row can be corrupted (only
    /// possible for valuation-bound reports).
    pub fn apply_negative_control(&mut self) -> bool {
        if self.identity == IdentityKind::PadicLimit {
            return false;
        }
        let Some(target) = self.rows.iter().position(|r| !r.rhs.is_zero()) else {
            return false;
        };
        self.rows[target].rhs = self.rows[target].rhs.negated();
        for row in &mut self.rows {
            row.equal = row_satisfied(self.identity, &row.lhs, &row.rhs);
        }
        self.first_failure = self.rows.iter().find(|r| !r.equal).map(|r| r.n);
        self.holds = self.first_failure.is_none();
        true
    }
}
