//! Per-identity checkers. Each computes both sides of its identity along
//! independent routes and compares exactly, degree by degree.

use std::time::Instant;

use crate::characters::DirichletCharacter;
use crate::degen::{
    carlitz_numbers, fermionic_integral, finite_level_sum, r_sum, r_sums_up_to,
    shifted_falling_poly, twisted_fermionic_integral, GenDegenEulerNumbers,
};
use crate::exactnum::{p_adic_valuation, CyclotomicElement, Rational};
use crate::fps::{binomial, EgfSeries};
use crate::poly::QPolynomial;
use crate::ring::{CyclotomicField, RationalField, Ring};

use super::{ExactValue, IdentityKind, IdentityParams, IdentityReport};

fn lambda_over(lambda: &Rational, w: u64) -> Rational {
    lambda / &Rational::from(w)
}

/// The EGF of twice the symmetrized double integral, built from its closed
/// form by series arithmetic over Q(zeta_m):
///
/// `4 * S_(w1) * S_(w2) * (1+lt)^(w1 w2 x / l) * ((1+lt)^(d w1 w2 / l) + 1)
///    / (((1+lt)^(w1 d / l) + 1) ((1+lt)^(w2 d / l) + 1))`
///
/// where `S_(w) = sum_(a<d) (-1)^a chi(a) (1+lt)^(wa/l)`. The result is
/// symmetric in `w1, w2` by construction.
pub fn double_i_series(
    chi: &DirichletCharacter,
    w1: u64,
    w2: u64,
    lambda: &Rational,
    x: &Rational,
    t: usize,
) -> EgfSeries<CyclotomicField> {
    assert!(w1 % 2 == 1 && w2 % 2 == 1, "w1 and w2 must be odd");
    let field = CyclotomicField::new(chi.order());
    let d = chi.modulus();
    let lam = field.from_rational(lambda);
    let de =
        |y: Rational| EgfSeries::degenerate_exponential(field, &field.from_rational(&y), &lam, t);
    let char_sum = |w: u64| {
        let mut acc = EgfSeries::zero(field, t);
        for a in 0..d {
            let chi_a = chi.value(a as i64);
            if chi_a.is_zero() {
                continue;
            }
            let signed = if a % 2 == 0 { chi_a } else { chi_a.negate() };
            acc = acc.add(&de(Rational::from(w * a)).scale(&signed));
        }
        acc
    };

    let s1 = char_sum(w1);
    let s2 = char_sum(w2);
    let x_factor = de(&Rational::from(w1 * w2) * x);
    let big = de(Rational::from(d * w1 * w2)).add_constant(&field.one());
    let den1 = de(Rational::from(w1 * d))
        .add_constant(&field.one())
        .inverse()
        .expect("denominator has constant term 2");
    let den2 = de(Rational::from(w2 * d))
        .add_constant(&field.one())
        .inverse()
        .expect("denominator has constant term 2");

    s1.mul(&s2)
        .mul(&x_factor)
        .mul(&big)
        .mul(&den1)
        .mul(&den2)
        .scale(&field.from_integer(4))
}

/// The binomial-convolution side
/// `sum_i C(l,i) E_(i, l/u, chi)(v x) u^i v^(l-i) R_(l-i)(d u - 1, l/v | chi)`
/// for `l = 0 ..= l_max`. With `(u, v) = (w2, w1)` these are the
/// coefficients of twice the double integral.
fn convolution_side(
    chi: &DirichletCharacter,
    u: u64,
    v: u64,
    lambda: &Rational,
    x: &Rational,
    l_max: usize,
) -> Vec<CyclotomicElement> {
    let d = chi.modulus();
    let numbers = GenDegenEulerNumbers::new(chi, &lambda_over(lambda, u), l_max);
    let arg = &Rational::from(v) * x;
    let evals = numbers.polynomial_values_up_to(l_max, &arg);
    let r = r_sums_up_to(l_max, d * u - 1, &lambda_over(lambda, v), chi);
    let u_q = Rational::from(u);
    let v_q = Rational::from(v);
    (0..=l_max)
        .map(|l| {
            let mut acc = CyclotomicElement::zero(chi.order());
            for i in 0..=l {
                let scalar = &(&u_q.pow(i as i64) * &v_q.pow((l - i) as i64))
                    * &Rational::from_integer(binomial(l, i));
                let term = (&evals[i] * &r[l - i]).scale(&scalar);
                acc = &acc + &term;
            }
            acc
        })
        .collect()
}

/// The alternating-sum side
/// `u^n sum_(l < d u) (-1)^l chi(l) E_(n, l/u, chi)(v x + (v/u) l)`
/// for `n = 0 ..= n_max`. Twice this side, with `(u, v) = (w2, w1)`, again
/// gives the coefficients of the double integral.
fn alternating_sum_side(
    chi: &DirichletCharacter,
    u: u64,
    v: u64,
    lambda: &Rational,
    x: &Rational,
    n_max: usize,
) -> Vec<CyclotomicElement> {
    let d = chi.modulus();
    let numbers = GenDegenEulerNumbers::new(chi, &lambda_over(lambda, u), n_max);
    let base = &Rational::from(v) * x;
    let u_q = Rational::from(u);
    let mut acc = vec![CyclotomicElement::zero(chi.order()); n_max + 1];
    for l in 0..d * u {
        let chi_l = chi.value(l as i64);
        if chi_l.is_zero() {
            continue;
        }
        let arg = &base + &Rational::new(v * l, u);
        let evals = numbers.polynomial_values_up_to(n_max, &arg);
        for (n, eval) in evals.iter().enumerate() {
            let term = &chi_l * eval;
            acc[n] = if l % 2 == 0 {
                &acc[n] + &term
            } else {
                &acc[n] - &term
            };
        }
    }
    acc.into_iter()
        .enumerate()
        .map(|(n, c)| c.scale(&u_q.pow(n as i64)))
        .collect()
}

fn paired_sides(
    lhs: Vec<CyclotomicElement>,
    rhs: Vec<CyclotomicElement>,
) -> Vec<(usize, ExactValue, ExactValue)> {
    lhs.into_iter()
        .zip(rhs)
        .enumerate()
        .map(|(n, (l, r))| {
            (
                n,
                ExactValue::from_cyclotomic(l),
                ExactValue::from_cyclotomic(r),
            )
        })
        .collect()
}

fn thm1_sides(
    chi: &DirichletCharacter,
    params: &IdentityParams,
) -> Vec<(usize, ExactValue, ExactValue)> {
    let l_max = params.degree_bound;
    let lhs = convolution_side(chi, params.w1, params.w2, &params.lambda, &params.x, l_max);
    let rhs = convolution_side(chi, params.w2, params.w1, &params.lambda, &params.x, l_max);
    paired_sides(lhs, rhs)
}

fn thm2_sides(
    chi: &DirichletCharacter,
    params: &IdentityParams,
) -> Vec<(usize, ExactValue, ExactValue)> {
    let n_max = params.degree_bound;
    let lhs = alternating_sum_side(chi, params.w2, params.w1, &params.lambda, &params.x, n_max);
    let rhs = alternating_sum_side(chi, params.w1, params.w2, &params.lambda, &params.x, n_max);
    paired_sides(lhs, rhs)
}

fn eq18_sides(
    chi: &DirichletCharacter,
    params: &IdentityParams,
) -> Vec<(usize, ExactValue, ExactValue)> {
    // The odd multiplier rides in the w1 slot.
    let n = params.w1;
    let d = chi.modulus();
    let k_max = params.degree_bound;
    let numbers = GenDegenEulerNumbers::new(chi, &params.lambda, k_max);
    let shift = Rational::from(n * d);
    (0..=k_max)
        .map(|k| {
            let lhs = &numbers.polynomial_value(k, &shift) + numbers.value(k);
            let rhs = r_sum(k, n * d - 1, &params.lambda, chi);
            (
                k,
                ExactValue::from_cyclotomic(lhs),
                ExactValue::from_cyclotomic(rhs),
            )
        })
        .collect()
}

fn dual_oracle_sides(
    chi: &DirichletCharacter,
    params: &IdentityParams,
) -> Vec<(usize, ExactValue, ExactValue)> {
    let n_max = params.degree_bound;
    let numbers = GenDegenEulerNumbers::new(chi, &params.lambda, n_max);
    (0..=n_max)
        .map(|n| {
            let integrand = shifted_falling_poly(&RationalField, &params.x, &params.lambda, n);
            let lhs = twisted_fermionic_integral(&integrand, chi);
            let rhs = numbers.polynomial_value(n, &params.x);
            (
                n,
                ExactValue::from_cyclotomic(lhs),
                ExactValue::from_cyclotomic(rhs),
            )
        })
        .collect()
}

fn distribution_sides(
    chi: &DirichletCharacter,
    params: &IdentityParams,
) -> Vec<(usize, ExactValue, ExactValue)> {
    let n_max = params.degree_bound;
    let d = chi.modulus();
    let twisted = GenDegenEulerNumbers::new(chi, &params.lambda, n_max);
    let plain = carlitz_numbers(&lambda_over(&params.lambda, d), n_max);
    let d_q = Rational::from(d);
    (0..=n_max)
        .map(|n| {
            let lhs = twisted.polynomial_value(n, &params.x);
            let mut rhs = CyclotomicElement::zero(chi.order());
            for a in 0..d {
                let chi_a = chi.value(a as i64);
                if chi_a.is_zero() {
                    continue;
                }
                let arg = &(&params.x + &Rational::from(a)) / &d_q;
                let term = chi_a.scale(&plain.polynomial_value(n, &arg));
                rhs = if a % 2 == 0 {
                    &rhs + &term
                } else {
                    &rhs - &term
                };
            }
            rhs = rhs.scale(&d_q.pow(n as i64));
            (
                n,
                ExactValue::from_cyclotomic(lhs),
                ExactValue::from_cyclotomic(rhs),
            )
        })
        .collect()
}

fn consistency_sides(
    chi: &DirichletCharacter,
    params: &IdentityParams,
) -> Vec<(usize, ExactValue, ExactValue)> {
    let n_max = params.degree_bound;
    let closed_form = double_i_series(chi, params.w1, params.w2, &params.lambda, &params.x, n_max);
    let convolution = convolution_side(chi, params.w2, params.w1, &params.lambda, &params.x, n_max);
    let two = Rational::from(2u64);
    let sums: Vec<CyclotomicElement> =
        alternating_sum_side(chi, params.w2, params.w1, &params.lambda, &params.x, n_max)
            .into_iter()
            .map(|c| c.scale(&two))
            .collect();

    // Two rows per degree: closed form vs. convolution route, then closed
    // form vs. alternating-sum route.
    let mut rows = Vec::with_capacity(2 * (n_max + 1));
    for n in 0..=n_max {
        let a = ExactValue::from_cyclotomic(closed_form.coeff(n).clone());
        rows.push((
            n,
            a.clone(),
            ExactValue::from_cyclotomic(convolution[n].clone()),
        ));
        rows.push((n, a, ExactValue::from_cyclotomic(sums[n].clone())));
    }
    rows
}

fn padic_sides(params: &IdentityParams) -> Vec<(usize, ExactValue, ExactValue)> {
    let p = params.p.expect("padic params carry p");
    let levels = params.levels.as_ref().expect("padic params carry levels");
    let coeffs = params.f.as_ref().expect("padic params carry f");
    let f = QPolynomial::from_integers(coeffs);
    let oracle = fermionic_integral(&f);
    levels
        .iter()
        .map(|&level| {
            let s = finite_level_sum(&f, p, level).expect("params validated at construction");
            let v = p_adic_valuation(&(&s - &oracle), p).expect("p validated prime");
            (
                level as usize,
                ExactValue::Valuation(v),
                ExactValue::Rational(Rational::from(level as u64)),
            )
        })
        .collect()
}

/// Fixes the parameter slots an identity does not read, so reports echo
/// what was actually computed.
fn normalized_params(kind: IdentityKind, params: &IdentityParams) -> IdentityParams {
    let mut params = params.clone();
    match kind {
        IdentityKind::CorollaryW2One => params.w2 = 1,
        IdentityKind::CorollaryX0 => {
            params.w2 = 1;
            params.x = Rational::zero();
        }
        IdentityKind::Eq18 | IdentityKind::DualOracle | IdentityKind::Distribution => {
            params.w2 = 1;
            if kind != IdentityKind::Eq18 {
                params.w1 = 1;
            }
        }
        _ => {}
    }
    params
}

/// Runs one identity check over one parameter tuple.
pub fn check_identity(
    kind: IdentityKind,
    chi: &DirichletCharacter,
    params: &IdentityParams,
) -> IdentityReport {
    let params = normalized_params(kind, params);
    let start = Instant::now();
    let sides = match kind {
        IdentityKind::Thm1 => thm1_sides(chi, &params),
        IdentityKind::Thm2 => thm2_sides(chi, &params),
        IdentityKind::Eq18 => eq18_sides(chi, &params),
        IdentityKind::CorollaryW2One | IdentityKind::CorollaryX0 => thm2_sides(chi, &params),
        IdentityKind::DualOracle => dual_oracle_sides(chi, &params),
        IdentityKind::Distribution => distribution_sides(chi, &params),
        IdentityKind::ISeriesConsistency => consistency_sides(chi, &params),
        IdentityKind::PadicLimit => padic_sides(&params),
    };
    IdentityReport::from_sides(kind, params, sides, start.elapsed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::enumerate_characters;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn params(
        chi: &DirichletCharacter,
        index: usize,
        lambda: Rational,
        w1: u64,
        w2: u64,
        x: Rational,
        l: usize,
    ) -> IdentityParams {
        IdentityParams::new(chi, index, lambda, w1, w2, x, l).unwrap()
    }

    #[test]
    fn double_i_series_is_symmetric_in_w1_w2() {
        let chi = &enumerate_characters(3).unwrap()[1];
        let a = double_i_series(chi, 3, 5, &rat(1, 2), &rat(1, 3), 5);
        let b = double_i_series(chi, 5, 3, &rat(1, 2), &rat(1, 3), 5);
        assert_eq!(a, b);
    }

    #[test]
    fn double_i_series_trivial_case_matches_doubled_numbers() {
        // d = 1, w1 = w2 = 1, x = 0: the closed form collapses to twice
        // the plain degenerate Euler number series.
        let chi = &enumerate_characters(1).unwrap()[0];
        for lambda in [rat(0, 1), rat(1, 2)] {
            let series = double_i_series(chi, 1, 1, &lambda, &Rational::zero(), 6);
            let numbers = carlitz_numbers(&lambda, 6);
            for n in 0..=6 {
                assert_eq!(
                    series.coeff(n).as_rational().unwrap(),
                    numbers.value(n) * &rat(2, 1),
                    "lambda = {lambda}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn thm1_holds_on_sample_tuples() {
        let chi = &enumerate_characters(3).unwrap()[1];
        // w1 = w2 makes both sides syntactically identical
        let report = check_identity(
            IdentityKind::Thm1,
            chi,
            &params(chi, 1, rat(1, 2), 3, 3, rat(1, 2), 4),
        );
        assert!(report.holds);

        let report = check_identity(
            IdentityKind::Thm1,
            chi,
            &params(chi, 1, rat(1, 2), 3, 1, rat(1, 2), 6),
        );
        assert!(report.holds, "first failure: {:?}", report.first_failure);
        assert_eq!(report.rows.len(), 7);

        // the x = 0 corollary is the same check at x = 0
        let report = check_identity(
            IdentityKind::Thm1,
            chi,
            &params(chi, 1, rat(1, 2), 3, 1, rat(0, 1), 6),
        );
        assert!(report.holds);
    }

    #[test]
    fn thm1_swap_exchanges_sides() {
        let chi = &enumerate_characters(5).unwrap()[1];
        let a = check_identity(
            IdentityKind::Thm1,
            chi,
            &params(chi, 1, rat(-2, 3), 3, 5, rat(1, 1), 5),
        );
        let b = check_identity(
            IdentityKind::Thm1,
            chi,
            &params(chi, 1, rat(-2, 3), 5, 3, rat(1, 1), 5),
        );
        for (ra, rb) in a.rows.iter().zip(&b.rows) {
            assert_eq!(ra.lhs, rb.rhs);
            assert_eq!(ra.rhs, rb.lhs);
        }
    }

    #[test]
    fn thm2_and_corollaries_hold() {
        let chi = &enumerate_characters(3).unwrap()[1];
        let report = check_identity(
            IdentityKind::Thm2,
            chi,
            &params(chi, 1, rat(1, 2), 1, 1, rat(1, 2), 5),
        );
        assert!(report.holds);

        let report = check_identity(
            IdentityKind::Thm2,
            chi,
            &params(chi, 1, rat(1, 2), 3, 1, rat(1, 2), 6),
        );
        assert!(report.holds, "first failure: {:?}", report.first_failure);

        let report = check_identity(
            IdentityKind::CorollaryW2One,
            chi,
            &params(chi, 1, rat(1, 2), 3, 5, rat(1, 2), 6),
        );
        assert!(report.holds);
        assert_eq!(report.params.w2, 1, "corollary pins w2");

        let report = check_identity(
            IdentityKind::CorollaryX0,
            chi,
            &params(chi, 1, rat(1, 2), 3, 1, rat(1, 2), 6),
        );
        assert!(report.holds);
        assert!(report.params.x.is_zero(), "corollary pins x = 0");
    }

    #[test]
    fn eq18_examples() {
        // d = 1, n = 1, k = 0: both sides are 2.
        let chi = &enumerate_characters(1).unwrap()[0];
        let report = check_identity(
            IdentityKind::Eq18,
            chi,
            &params(chi, 0, rat(3, 4), 1, 1, rat(0, 1), 0),
        );
        assert!(report.holds);
        assert_eq!(report.rows[0].lhs, ExactValue::Rational(rat(2, 1)));

        let chi = &enumerate_characters(3).unwrap()[1];
        for (n, lambda) in [(1u64, rat(2, 5)), (3, rat(-1, 2))] {
            let report = check_identity(
                IdentityKind::Eq18,
                chi,
                &params(chi, 1, lambda, n, 1, rat(0, 1), 8),
            );
            assert!(report.holds, "n = {n}");
        }
    }

    #[test]
    fn consistency_routes_agree() {
        let chi = &enumerate_characters(3).unwrap()[1];
        let report = check_identity(
            IdentityKind::ISeriesConsistency,
            chi,
            &params(chi, 1, rat(1, 2), 3, 5, rat(1, 3), 6),
        );
        assert!(report.holds, "first failure: {:?}", report.first_failure);
        assert_eq!(report.rows.len(), 14);

        // order-4 character mod 5, values in Q(zeta_4)
        let chi = &enumerate_characters(5).unwrap()[1];
        assert_eq!(chi.order(), 4);
        let report = check_identity(
            IdentityKind::ISeriesConsistency,
            chi,
            &params(chi, 1, rat(1, 1), 1, 3, rat(0, 1), 5),
        );
        assert!(report.holds, "first failure: {:?}", report.first_failure);
    }

    #[test]
    fn dual_oracle_and_distribution_hold() {
        let chi = &enumerate_characters(5).unwrap()[2];
        let p = params(chi, 2, rat(-2, 3), 1, 1, rat(1, 2), 6);
        assert!(check_identity(IdentityKind::DualOracle, chi, &p).holds);
        assert!(check_identity(IdentityKind::Distribution, chi, &p).holds);
    }

    #[test]
    fn padic_limit_rows() {
        let chi = &enumerate_characters(1).unwrap()[0];
        let p = IdentityParams::padic(chi, 3, vec![1, 2, 3], vec![0, 1]).unwrap();
        let report = check_identity(IdentityKind::PadicLimit, chi, &p);
        assert!(report.holds);
        assert_eq!(report.rows.len(), 3);
        for row in &report.rows {
            assert!(row.equal);
        }
    }

    #[test]
    fn negative_control_locates_a_failure() {
        let chi = &enumerate_characters(3).unwrap()[1];
        let mut report = check_identity(
            IdentityKind::Eq18,
            chi,
            &params(chi, 1, rat(2, 5), 1, 1, rat(0, 1), 8),
        );
        assert!(report.holds);
        assert!(report.apply_negative_control());
        assert!(!report.holds);
        assert!(report.first_failure.is_some());
    }

    #[test]
    fn reports_are_reproducible() {
        let chi = &enumerate_characters(3).unwrap()[1];
        let p = params(chi, 1, rat(1, 2), 3, 1, rat(1, 2), 5);
        let a = check_identity(IdentityKind::Thm2, chi, &p);
        let b = check_identity(IdentityKind::Thm2, chi, &p);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}
