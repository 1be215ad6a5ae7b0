//! Parameter grids and the sweep runner.
//!
//! A sweep expands a grid into (identity, character, params) jobs in a
//! deterministic order, evaluates them (possibly concurrently), and returns
//! the reports in grid order regardless of how the work was scheduled.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::characters::{enumerate_characters, CharacterError, DirichletCharacter};
use crate::exactnum::Rational;

use super::{check_identity, IdentityError, IdentityKind, IdentityParams, IdentityReport};

#[derive(Debug, Error)]
pub enum SweepError {
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error(transparent)]
    Params(#[from] IdentityError),
    #[error("no character with index {index} mod {modulus}")]
    BadCharacterIndex { modulus: u64, index: usize },
}

/// A parameter grid: which identities to check and which values each
/// parameter axis takes. Identities only consume the axes they read, so a
/// sweep never produces duplicate tuples.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepConfig {
    pub identities: Vec<IdentityKind>,
    /// Odd moduli d.
    pub moduli: Vec<u64>,
    /// Character indices per modulus; `None` means every character.
    pub chi_indices: Option<Vec<usize>>,
    pub lambdas: Vec<Rational>,
    pub w1: Vec<u64>,
    pub w2: Vec<u64>,
    pub xs: Vec<Rational>,
    /// Degree bound L: rows run over 0 ..= L.
    pub degree_bound: usize,
    /// Odd primes for the valuation check.
    pub primes: Vec<u64>,
    /// Levels N for the valuation check.
    pub levels: Vec<u32>,
    /// Integer polynomials (constant-first coefficients) for the valuation
    /// check.
    pub polys: Vec<Vec<i64>>,
}

impl Default for SweepConfig {
    /// The default grid: every identity, d in {1, 3, 5}, all characters,
    /// lambda in {0, 1/2, -2/3, 3}, w1, w2 in {1, 3, 5}, x in {0, 1, 1/2},
    /// L = 8, and the valuation check over p in {3, 5}, N in 1..=4 for
    /// f in {1, x, x^2, x^3 + 2x}.
    fn default() -> Self {
        SweepConfig {
            identities: IdentityKind::ALL.to_vec(),
            moduli: vec![1, 3, 5],
            chi_indices: None,
            lambdas: vec![
                Rational::zero(),
                Rational::new(1, 2),
                Rational::new(-2, 3),
                Rational::from(3i64),
            ],
            w1: vec![1, 3, 5],
            w2: vec![1, 3, 5],
            xs: vec![Rational::zero(), Rational::one(), Rational::new(1, 2)],
            degree_bound: 8,
            primes: vec![3, 5],
            levels: vec![1, 2, 3, 4],
            polys: vec![vec![1], vec![0, 1], vec![0, 0, 1], vec![0, 2, 0, 1]],
        }
    }
}

/// Which axes an identity consumes when expanding a grid.
fn uses_axes(kind: IdentityKind) -> (bool, bool, bool) {
    // (w1, w2, x)
    match kind {
        IdentityKind::Thm1 | IdentityKind::Thm2 | IdentityKind::ISeriesConsistency => {
            (true, true, true)
        }
        IdentityKind::CorollaryW2One => (true, false, true),
        IdentityKind::CorollaryX0 => (true, false, false),
        IdentityKind::Eq18 => (true, false, false),
        IdentityKind::DualOracle | IdentityKind::Distribution => (false, false, true),
        IdentityKind::PadicLimit => (false, false, false),
    }
}

/// Expands a grid into jobs, in deterministic order: identity, then
/// modulus, character, lambda, w1, w2, x (skipping axes the identity does
/// not read).
pub fn expand_grid(
    config: &SweepConfig,
) -> Result<Vec<(IdentityKind, DirichletCharacter, IdentityParams)>, SweepError> {
    let mut jobs = Vec::new();
    for &kind in &config.identities {
        if kind == IdentityKind::PadicLimit {
            let trivial = enumerate_characters(1)?.remove(0);
            for f in &config.polys {
                for &p in &config.primes {
                    let params =
                        IdentityParams::padic(&trivial, p, config.levels.clone(), f.clone())?;
                    jobs.push((kind, trivial.clone(), params));
                }
            }
            continue;
        }
        let (use_w1, use_w2, use_x) = uses_axes(kind);
        let w1_axis: &[u64] = if use_w1 { &config.w1 } else { &[1] };
        let w2_axis: &[u64] = if use_w2 { &config.w2 } else { &[1] };
        let zero = [Rational::zero()];
        let x_axis: &[Rational] = if use_x { &config.xs } else { &zero };
        for &d in &config.moduli {
            let all = enumerate_characters(d)?;
            let indices: Vec<usize> = match &config.chi_indices {
                None => (0..all.len()).collect(),
                Some(sel) => {
                    for &i in sel {
                        if i >= all.len() {
                            return Err(SweepError::BadCharacterIndex {
                                modulus: d,
                                index: i,
                            });
                        }
                    }
                    sel.clone()
                }
            };
            for &i in &indices {
                let chi = &all[i];
                for lambda in &config.lambdas {
                    for &w1 in w1_axis {
                        for &w2 in w2_axis {
                            for x in x_axis {
                                let params = IdentityParams::new(
                                    chi,
                                    i,
                                    lambda.clone(),
                                    w1,
                                    w2,
                                    x.clone(),
                                    config.degree_bound,
                                )?;
                                jobs.push((kind, chi.clone(), params));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(jobs)
}

/// Knobs for a sweep run.
#[derive(Clone, Copy, Debug, Default)]
pub struct SweepOptions {
    /// Corrupt the first corruptible report (one sign flip on a right-hand
    /// value) so the run must fail: guards against vacuous passes.
    pub negative_control: bool,
}

/// Runs every job in the grid and returns reports in grid order. Jobs are
/// evaluated on the rayon thread pool; the output order is deterministic.
pub fn sweep(config: &SweepConfig) -> Result<Vec<IdentityReport>, SweepError> {
    sweep_with_options(config, SweepOptions::default())
}

pub fn sweep_with_options(
    config: &SweepConfig,
    options: SweepOptions,
) -> Result<Vec<IdentityReport>, SweepError> {
    let jobs = expand_grid(config)?;
    let mut reports: Vec<IdentityReport> = jobs
        .par_iter()
        .map(|(kind, chi, params)| check_identity(*kind, chi, params))
        .collect();
    if options.negative_control {
        for report in &mut reports {
            if report.apply_negative_control() {
                break;
            }
        }
    }
    Ok(reports)
}
