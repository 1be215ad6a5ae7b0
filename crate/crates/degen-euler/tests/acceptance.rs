//! Acceptance suite: every release-gating property, one test per
//! criterion, each printing a pass/fail line (visible with
//! `cargo test --test acceptance -- --nocapture`).
//!
//! All comparisons are exact — rationals and cyclotomic numbers compared
//! coefficient by coefficient. There are no tolerances.

use std::time::Instant;

use degen_euler::characters::enumerate_characters;
use degen_euler::degen::{carlitz_numbers, fermionic_integral, finite_level_sum};
use degen_euler::exactnum::{arith::euler_phi, p_adic_valuation, CyclotomicElement, Rational};
use degen_euler::identities::{
    sweep, sweep_with_options, IdentityKind, IdentityReport, SweepConfig, SweepOptions,
};
use degen_euler::poly::QPolynomial;
use degen_euler::ring::RationalField;

fn report_line(criterion: &str, ok: bool, start: Instant) {
    let status = if ok { "PASS" } else { "FAIL" };
    println!(
        "[{status}] {criterion} ({:.2}s)",
        start.elapsed().as_secs_f64()
    );
}

fn first_counterexample(reports: &[IdentityReport]) -> String {
    reports
        .iter()
        .find(|r| !r.holds)
        .map(|r| {
            format!(
                "{} failed at degree {:?} for params {}",
                r.identity,
                r.first_failure,
                serde_json::to_string(&r.params).unwrap()
            )
        })
        .unwrap_or_default()
}

fn grid_for(identities: Vec<IdentityKind>, degree_bound: usize) -> SweepConfig {
    SweepConfig {
        identities,
        degree_bound,
        ..SweepConfig::default()
    }
}

#[test]
fn criterion_1_thm1_sweep() {
    let start = Instant::now();
    let reports = sweep(&grid_for(vec![IdentityKind::Thm1], 8)).unwrap();
    let ok = !reports.is_empty() && reports.iter().all(|r| r.holds);
    report_line(
        "criterion 1: binomial-convolution symmetry (thm1), full grid, l <= 8, exact",
        ok,
        start,
    );
    assert!(ok, "{}", first_counterexample(&reports));
}

#[test]
fn criterion_2_thm2_sweep_with_corollaries() {
    let start = Instant::now();
    let reports = sweep(&grid_for(
        vec![
            IdentityKind::Thm2,
            IdentityKind::CorollaryW2One,
            IdentityKind::CorollaryX0,
        ],
        8,
    ))
    .unwrap();
    let ok = !reports.is_empty() && reports.iter().all(|r| r.holds);
    report_line(
        "criterion 2: alternating-sum symmetry (thm2) with w2=1 and x=0 corollaries, n <= 8, exact",
        ok,
        start,
    );
    assert!(ok, "{}", first_counterexample(&reports));
}

#[test]
fn criterion_3_eq18_sweep() {
    let start = Instant::now();
    // The odd multiplier n in {1, 3, 5} rides the w1 axis of the grid.
    let reports = sweep(&grid_for(vec![IdentityKind::Eq18], 8)).unwrap();
    let ok = !reports.is_empty() && reports.iter().all(|r| r.holds);
    report_line(
        "criterion 3: boundary identity (eq18) for odd n in {1,3,5}, k <= 8, exact",
        ok,
        start,
    );
    assert!(ok, "{}", first_counterexample(&reports));
}

#[test]
fn criterion_4_triple_route_consistency() {
    let start = Instant::now();
    let reports = sweep(&grid_for(vec![IdentityKind::ISeriesConsistency], 6)).unwrap();
    let ok = !reports.is_empty() && reports.iter().all(|r| r.holds);
    report_line(
        "criterion 4: closed-form, convolution, and sum routes agree, n <= 6, exact",
        ok,
        start,
    );
    assert!(ok, "{}", first_counterexample(&reports));
}

#[test]
fn criterion_5_dual_oracle_agreement() {
    let start = Instant::now();
    let reports = sweep(&grid_for(vec![IdentityKind::DualOracle], 8)).unwrap();
    let ok = !reports.is_empty() && reports.iter().all(|r| r.holds);
    report_line(
        "criterion 5: twisted integral recurrence equals generating-function values, n <= 8, exact",
        ok,
        start,
    );
    assert!(ok, "{}", first_counterexample(&reports));
}

#[test]
fn criterion_6_classical_reduction() {
    let start = Instant::now();
    // Derive the classical Euler numbers with the independent integral
    // recurrence, then demand that the lambda = 0 series path reproduces
    // them. The literal sequence is frozen alongside.
    let oracle: Vec<Rational> = (0..=8)
        .map(|n| fermionic_integral(&QPolynomial::monomial(RationalField, n)))
        .collect();
    let frozen: Vec<Rational> = [
        (1, 1),
        (-1, 2),
        (0, 1),
        (1, 4),
        (0, 1),
        (-1, 2),
        (0, 1),
        (17, 8),
        (0, 1),
    ]
    .into_iter()
    .map(|(n, d)| Rational::new(n, d))
    .collect();
    let series_path = carlitz_numbers(&Rational::zero(), 8);
    let ok = oracle == frozen && series_path.values() == &frozen[..];
    report_line(
        "criterion 6: lambda = 0 reproduces E_0..E_8 from the recurrence oracle, exact",
        ok,
        start,
    );
    assert_eq!(oracle, frozen, "oracle disagrees with frozen sequence");
    assert_eq!(
        series_path.values(),
        &frozen[..],
        "series path disagrees with oracle"
    );
}

#[test]
fn criterion_7_padic_limit() {
    let start = Instant::now();
    let polys: [&[i64]; 4] = [&[1], &[0, 1], &[0, 0, 1], &[0, 2, 0, 1]];
    let mut ok = true;
    let mut detail = String::new();
    for coeffs in polys {
        let f = QPolynomial::from_integers(coeffs);
        let oracle = fermionic_integral(&f);
        for p in [3u64, 5] {
            for level in 1..=4u32 {
                let s = finite_level_sum(&f, p, level).unwrap();
                let v = p_adic_valuation(&(&s - &oracle), p).unwrap();
                if !v.at_least(level as i64) {
                    ok = false;
                    detail =
                        format!("f = {coeffs:?}, p = {p}, N = {level}: valuation {v} < {level}");
                }
            }
        }
    }
    report_line(
        "criterion 7: v_p(S_N(f) - I(f)) >= N for f in {1, x, x^2, x^3+2x}, p in {3,5}, N <= 4",
        ok,
        start,
    );
    assert!(ok, "{detail}");
}

#[test]
fn criterion_8_character_module() {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    for d in (1..=15u64).step_by(2) {
        let chars = enumerate_characters(d).unwrap();
        if chars.len() as u64 != euler_phi(d) {
            ok = false;
            detail = format!("expected phi({d}) characters, got {}", chars.len());
            break;
        }
        for chi in &chars {
            // exhaustive multiplicativity
            for a in 0..d {
                for b in 0..d {
                    let lhs = chi.value((a * b) as i64);
                    let rhs = &chi.value(a as i64) * &chi.value(b as i64);
                    if lhs != rhs {
                        ok = false;
                        detail = format!("chi mod {d} not multiplicative at ({a}, {b})");
                    }
                }
            }
            // orthogonality for nontrivial characters
            if !chi.is_trivial() {
                let mut sum = CyclotomicElement::zero(chi.order());
                for n in 0..d {
                    sum = &sum + &chi.value(n as i64);
                }
                if !sum.is_zero() {
                    ok = false;
                    detail = format!("nontrivial chi mod {d} does not sum to zero");
                }
            }
        }
    }
    report_line(
        "criterion 8: phi(d) characters for odd d <= 15, multiplicativity and orthogonality, exact",
        ok,
        start,
    );
    assert!(ok, "{detail}");
}

#[test]
fn criterion_9_negative_control() {
    let start = Instant::now();
    let config = SweepConfig {
        identities: vec![IdentityKind::Eq18],
        moduli: vec![3],
        chi_indices: Some(vec![1]),
        lambdas: vec![Rational::new(2, 5)],
        w1: vec![1],
        w2: vec![1],
        xs: vec![Rational::zero()],
        degree_bound: 8,
        primes: vec![],
        levels: vec![],
        polys: vec![],
    };
    let clean = sweep(&config).unwrap();
    let corrupted = sweep_with_options(
        &config,
        SweepOptions {
            negative_control: true,
        },
    )
    .unwrap();
    let ok = clean.len() == 1
        && clean[0].holds
        && corrupted.len() == 1
        && !corrupted[0].holds
        && corrupted[0].first_failure.is_some();
    report_line(
        "criterion 9: corrupted fixture reports holds = false with a located first failure",
        ok,
        start,
    );
    assert!(
        ok,
        "negative control failed to corrupt or to locate the failure"
    );
}
