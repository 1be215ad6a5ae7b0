//! Property tests for the algebraic invariants: field axioms, series
//! algebra up to truncation, the degenerate addition law, oracle
//! consistency, and the exact classical-limit certificate.

use proptest::prelude::*;

use degen_euler::degen::{
    carlitz_numbers, falling_sequence, fermionic_integral, finite_level_sum, generalized_numbers,
    shifted_falling_poly,
};
use degen_euler::exactnum::{p_adic_valuation, CyclotomicElement, Rational, Valuation};
use degen_euler::fps::{binomial, EgfSeries};
use degen_euler::poly::{Polynomial, PolynomialRing, QPolynomial};
use degen_euler::ring::{CyclotomicField, RationalField, Ring};

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |q| !q.is_zero())
}

fn cyclotomic(order: u32) -> impl Strategy<Value = CyclotomicElement> {
    let phi = degen_euler::exactnum::arith::euler_phi(order as u64) as usize;
    proptest::collection::vec(rational(), phi)
        .prop_map(move |coeffs| CyclotomicElement::from_coeffs(order, coeffs))
}

fn rational_series(t: usize) -> impl Strategy<Value = EgfSeries<RationalField>> {
    proptest::collection::vec(rational(), t + 1)
        .prop_map(|coeffs| EgfSeries::from_coeffs(RationalField, coeffs))
}

fn cyclotomic_series(order: u32, t: usize) -> impl Strategy<Value = EgfSeries<CyclotomicField>> {
    proptest::collection::vec(cyclotomic(order), t + 1)
        .prop_map(move |coeffs| EgfSeries::from_coeffs(CyclotomicField::new(order), coeffs))
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &(-&a), Rational::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inverse().unwrap(), Rational::one());
        }
    }

    #[test]
    fn valuation_is_additive(
        a in nonzero_rational(),
        b in nonzero_rational(),
        p in prop::sample::select(vec![3u64, 5, 7]),
    ) {
        let va = p_adic_valuation(&a, p).unwrap();
        let vb = p_adic_valuation(&b, p).unwrap();
        let vab = p_adic_valuation(&(&a * &b), p).unwrap();
        match (va, vb, vab) {
            (Valuation::Finite(x), Valuation::Finite(y), Valuation::Finite(z)) => {
                prop_assert_eq!(x + y, z)
            }
            _ => prop_assert!(false, "nonzero rationals have finite valuation"),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_ring_axioms(
        (a, b, c) in prop::sample::select(vec![1u32, 2, 3, 4, 6, 12])
            .prop_flat_map(|m| (cyclotomic(m), cyclotomic(m), cyclotomic(m))),
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            let inv = a.inverse().unwrap();
            prop_assert_eq!(&a * &inv, CyclotomicElement::one(a.order()));
        }
    }

    #[test]
    fn roots_of_unity_have_exact_order(order in prop::sample::select(vec![1u32, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12])) {
        let z = CyclotomicElement::root_of_unity(order, 1);
        let mut power = CyclotomicElement::one(order);
        for _ in 0..order {
            power = &power * &z;
        }
        prop_assert_eq!(power, CyclotomicElement::one(order));
    }

    #[test]
    fn series_mul_is_commutative_and_associative_over_q(
        a in rational_series(8),
        b in rational_series(8),
        c in rational_series(8),
    ) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn series_mul_is_commutative_and_associative_over_cyclotomics(
        a in cyclotomic_series(3, 5),
        b in cyclotomic_series(3, 5),
        c in cyclotomic_series(3, 5),
    ) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn degenerate_addition_law(
        lambda in rational(),
        y in rational(),
        z in rational(),
        t in 0usize..=8,
    ) {
        // (1+lt)^(y/l) * (1+lt)^(z/l) = (1+lt)^((y+z)/l), coefficientwise:
        // sum_k C(n,k) (y|l)_k (z|l)_(n-k) = (y+z|l)_n.
        let sy = EgfSeries::degenerate_exponential_rational(&y, &lambda, t);
        let sz = EgfSeries::degenerate_exponential_rational(&z, &lambda, t);
        let sum = EgfSeries::degenerate_exponential_rational(&(&y + &z), &lambda, t);
        prop_assert_eq!(sy.mul(&sz), sum);
    }

    #[test]
    fn series_inverse_round_trips(
        series in rational_series(6).prop_filter("unit constant term", |s| !s.coeff(0).is_zero()),
    ) {
        let inv = series.inverse().unwrap();
        prop_assert_eq!(series.mul(&inv), EgfSeries::one(RationalField, 6));
    }

    #[test]
    fn untwisted_oracle_matches_polynomial_engine(
        lambda in rational(),
        x in rational(),
        n in 0usize..=8,
    ) {
        // integrating (x+y|lambda)_n in y equals the degree-n polynomial value
        let integrand = shifted_falling_poly(&RationalField, &x, &lambda, n);
        let via_integral = fermionic_integral(&integrand);
        let via_series = carlitz_numbers(&lambda, n).polynomial_value(n, &x);
        prop_assert_eq!(via_integral, via_series);
    }

    #[test]
    fn level_sums_converge_for_random_integer_polynomials(
        coeffs in proptest::collection::vec(-9i64..=9, 1..=7),
        p in prop::sample::select(vec![3u64, 5]),
        level in 1u32..=4,
    ) {
        let f = QPolynomial::from_integers(&coeffs);
        let s = finite_level_sum(&f, p, level).unwrap();
        let diff = &s - &fermionic_integral(&f);
        prop_assert!(p_adic_valuation(&diff, p).unwrap().at_least(level as i64));
    }
}

/// Computes the degenerate Euler polynomial value with the deformation
/// parameter kept as a formal variable, so the classical limit and the
/// rate of approach can be certified exactly.
fn carlitz_poly_in_lambda(n: usize, x: &Rational) -> Polynomial<RationalField> {
    let ring = PolynomialRing::new(RationalField);
    let lambda = ring.variable();
    let one = ring.one();
    let denominator =
        EgfSeries::degenerate_exponential(ring.clone(), &one, &lambda, n).add_constant(&one);
    let numbers = denominator
        .inverse()
        .expect("constant term 2 is a unit")
        .scale(&ring.from_integer(2));
    let falls = falling_sequence(&ring, &ring.from_rational(x), &lambda, n);
    let mut acc = ring.zero();
    for k in 0..=n {
        let term = numbers.coeff(k).mul(&falls[n - k]);
        acc = acc.add(&term.scale(&Rational::from_integer(binomial(n, k))));
    }
    acc
}

#[test]
fn classical_limit_certificate() {
    // For each degree and sample point: the value at lambda = 0 is the
    // classical Euler polynomial (by the integral oracle), the difference
    // is exactly divisible by lambda, and the quotient's coefficient sum
    // bounds the approach rate for lambda = 10^-j.
    for n in 0..=8usize {
        for x in [Rational::zero(), Rational::one(), Rational::new(1, 2)] {
            let p_lambda = carlitz_poly_in_lambda(n, &x);
            let classical = fermionic_integral(&shifted_falling_poly(
                &RationalField,
                &x,
                &Rational::zero(),
                n,
            ));
            assert_eq!(p_lambda.coeff(0), classical, "n = {n}, x = {x}");

            let diff = p_lambda.sub(&Polynomial::constant(RationalField, classical.clone()));
            let quotient = diff
                .div_by_variable()
                .expect("difference vanishes at lambda = 0");
            let bound: Rational = quotient
                .coeffs()
                .iter()
                .fold(Rational::zero(), |acc, c| &acc + &c.abs());

            for j in 1..=4i64 {
                let lambda = Rational::new(1, 10i64.pow(j as u32));
                let value = carlitz_numbers(&lambda, n).polynomial_value(n, &x);
                // the formal-variable route agrees with the plain engine
                assert_eq!(p_lambda.eval(&lambda), value, "n = {n}, x = {x}, j = {j}");
                let error = (&value - &classical).abs();
                assert!(
                    error <= &lambda * &bound,
                    "n = {n}, x = {x}, lambda = {lambda}: |error| = {error} > lambda * {bound}"
                );
            }
        }
    }
}

#[test]
fn distribution_relation_over_small_grid() {
    // E_(n,lambda,chi)(x) = d^n sum_a (-1)^a chi(a) E_n((x+a)/d | lambda/d),
    // pitting the twisted series division against the plain one.
    for d in [1u64, 3, 5] {
        for chi in degen_euler::characters::enumerate_characters(d).unwrap() {
            for lambda in [Rational::zero(), Rational::new(1, 2), Rational::new(-2, 3)] {
                let twisted = generalized_numbers(&chi, &lambda, 6);
                let plain = carlitz_numbers(&(&lambda / &Rational::from(d)), 6);
                let d_q = Rational::from(d);
                for x in [Rational::zero(), Rational::new(1, 2)] {
                    for n in 0..=6usize {
                        let lhs = twisted.polynomial_value(n, &x);
                        let mut rhs = CyclotomicElement::zero(chi.order());
                        for a in 0..d {
                            let chi_a = chi.value(a as i64);
                            if chi_a.is_zero() {
                                continue;
                            }
                            let arg = &(&x + &Rational::from(a)) / &d_q;
                            let term = chi_a.scale(&plain.polynomial_value(n, &arg));
                            rhs = if a % 2 == 0 {
                                &rhs + &term
                            } else {
                                &rhs - &term
                            };
                        }
                        rhs = rhs.scale(&d_q.pow(n as i64));
                        assert_eq!(lhs, rhs, "d = {d}, lambda = {lambda}, x = {x}, n = {n}");
                    }
                }
            }
        }
    }
}
