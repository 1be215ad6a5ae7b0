//! `degen-euler`: tables of degenerate Euler numbers/polynomials and exact
//! identity sweeps.
//!
//! Exit codes: 0 on success (and when every checked identity holds), 1 when
//! an identity check fails, 2 on usage or parameter errors.

mod config;
mod output;

use std::path::PathBuf;
use std::process;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;

use degen_euler::characters::{enumerate_characters, DirichletCharacter};
use degen_euler::degen::{
    fermionic_integral, finite_level_sum, finite_level_sum_twisted, generalized_numbers, r_sum,
    twisted_fermionic_integral,
};
use degen_euler::exactnum::{min_coefficient_valuation, p_adic_valuation, Rational, Valuation};
use degen_euler::identities::{
    sweep_with_options, ExactValue, IdentityKind, IdentityReport, SweepConfig, SweepOptions,
};
use degen_euler::poly::QPolynomial;

use config::ChiSelection;
use output::{emit, render_json, write_text, Format, TabularData};

#[derive(Parser)]
#[command(
    name = "degen-euler",
    version,
    about = "Exact degenerate Euler polynomial tables and identity verification"
)]
struct Cli {
    /// Output format for tables (check always emits JSON reports).
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for sweeps (default: available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Sweep configuration file (flat TOML; inline flags override it).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Table of generalized degenerate Euler numbers.
    Numbers {
        /// Odd modulus of the character.
        #[arg(long)]
        d: u64,
        /// Character index in enumeration order.
        #[arg(long, conflicts_with = "chi_exponents")]
        chi: Option<usize>,
        /// Address the character by its exponent vector instead.
        #[arg(long, value_delimiter = ',')]
        chi_exponents: Option<Vec<u64>>,
        /// Deformation parameter as an exact fraction.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        nmax: usize,
    },
    /// One generalized degenerate Euler polynomial value.
    Poly {
        #[arg(long)]
        d: u64,
        #[arg(long, conflicts_with = "chi_exponents")]
        chi: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        chi_exponents: Option<Vec<u64>>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// One alternating character sum R_k(n, lambda | chi).
    Rsum {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        #[arg(long, conflicts_with = "chi_exponents")]
        chi: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        chi_exponents: Option<Vec<u64>>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Table of all Dirichlet characters of an odd modulus.
    Chars {
        #[arg(long)]
        d: u64,
    },
    /// Check one identity (or `all`) over a parameter grid; writes a JSON
    /// report and exits 0 only when every report holds.
    Check {
        /// Identity id (thm1, thm2, eq18, corollary_w2_1, corollary_x0,
        /// dual_oracle, distribution, i_series_consistency, padic_limit)
        /// or `all`.
        identity: String,
        /// Use the built-in default grid (ignores --config).
        #[arg(long)]
        default_grid: bool,
        #[arg(long, value_delimiter = ',')]
        d: Option<Vec<u64>>,
        /// `all` or a comma list of character indices.
        #[arg(long)]
        chi: Option<String>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Option<Vec<String>>,
        #[arg(long, value_delimiter = ',')]
        w1: Option<Vec<u64>>,
        #[arg(long, value_delimiter = ',')]
        w2: Option<Vec<u64>>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        x: Option<Vec<String>>,
        /// Degree bound: rows run over 0..=L.
        #[arg(long = "L")]
        degree_bound: Option<usize>,
        /// Odd multiplier(s) for eq18 (rides the w1 axis).
        #[arg(long, value_delimiter = ',')]
        n: Option<Vec<u64>>,
        #[arg(long, value_delimiter = ',')]
        p: Option<Vec<u64>>,
        /// Levels for padic_limit, e.g. `1..4` or `1,2,3`.
        #[arg(long = "N")]
        levels: Option<String>,
        /// Flip one sign in the first report so the run must fail; guards
        /// CI against vacuous passes.
        #[arg(long)]
        negative_control: bool,
    },
    /// Finite alternating sums vs. the integral oracle, with valuations.
    Padic {
        /// Integer polynomial, constant-first coefficients, e.g. `0,1`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        f: Vec<i64>,
        #[arg(long)]
        p: u64,
        /// Level range, e.g. `1..3`, `2`, or `1,2,4`.
        #[arg(long = "N")]
        levels: String,
        /// Optional odd character modulus for the twisted sums.
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        chi: Option<usize>,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap exits 2 on usage errors and 0 for --help/--version
        Err(err) => err.exit(),
    };
    match run(cli) {
        Ok(code) => process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    if let Some(workers) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .context("configuring worker pool")?;
    }
    match &cli.command {
        Command::Numbers {
            d,
            chi,
            chi_exponents,
            lambda,
            nmax,
        } => {
            let (index, character) = resolve_character(*d, *chi, chi_exponents.clone())?;
            let lambda: Rational = parse_fraction(lambda)?;
            cmd_numbers(&cli, *d, index, &character, lambda, *nmax)
        }
        Command::Poly {
            d,
            chi,
            chi_exponents,
            lambda,
            n,
            x,
        } => {
            let (index, character) = resolve_character(*d, *chi, chi_exponents.clone())?;
            let lambda: Rational = parse_fraction(lambda)?;
            let x: Rational = parse_fraction(x)?;
            cmd_poly(&cli, *d, index, &character, lambda, *n, x)
        }
        Command::Rsum {
            k,
            n,
            d,
            chi,
            chi_exponents,
            lambda,
        } => {
            let (index, character) = resolve_character(*d, *chi, chi_exponents.clone())?;
            let lambda: Rational = parse_fraction(lambda)?;
            cmd_rsum(&cli, *k, *n, *d, index, &character, lambda)
        }
        Command::Chars { d } => cmd_chars(&cli, *d),
        Command::Check { .. } => cmd_check(&cli),
        Command::Padic { .. } => cmd_padic(&cli),
    }
}

fn parse_fraction(s: &str) -> Result<Rational> {
    s.parse::<Rational>()
        .with_context(|| format!("bad exact fraction `{s}`"))
}

fn resolve_character(
    d: u64,
    index: Option<usize>,
    exponents: Option<Vec<u64>>,
) -> Result<(usize, DirichletCharacter)> {
    let all = enumerate_characters(d)?;
    match (index, exponents) {
        (Some(i), None) => {
            let count = all.len();
            let chi = all
                .into_iter()
                .nth(i)
                .with_context(|| format!("no character with index {i} mod {d} ({count} exist)"))?;
            Ok((i, chi))
        }
        (None, Some(exps)) => all
            .into_iter()
            .enumerate()
            .find(|(_, c)| c.exponents() == exps)
            .with_context(|| format!("no character mod {d} with exponents {exps:?}")),
        (None, None) => bail!("select a character with --chi or --chi-exponents"),
        (Some(_), Some(_)) => unreachable!("clap enforces the conflict"),
    }
}

#[derive(Serialize)]
struct NumberRow {
    n: usize,
    value: ExactValue,
}

#[derive(Serialize)]
struct NumbersDoc {
    table: &'static str,
    d: u64,
    chi_index: usize,
    chi_exponents: Vec<u64>,
    chi_order: u32,
    lambda: Rational,
    rows: Vec<NumberRow>,
}

fn cmd_numbers(
    cli: &Cli,
    d: u64,
    chi_index: usize,
    chi: &DirichletCharacter,
    lambda: Rational,
    nmax: usize,
) -> Result<i32> {
    let numbers = generalized_numbers(chi, &lambda, nmax);
    let rows: Vec<NumberRow> = numbers
        .values()
        .iter()
        .enumerate()
        .map(|(n, v)| NumberRow {
            n,
            value: ExactValue::from_cyclotomic(v.clone()),
        })
        .collect();
    let mut tab = TabularData::new(vec!["n", "value"]);
    for row in &rows {
        tab.push_row(vec![row.n.to_string(), row.value.to_string()]);
    }
    let doc = NumbersDoc {
        table: "numbers",
        d,
        chi_index,
        chi_exponents: chi.exponents().to_vec(),
        chi_order: chi.order(),
        lambda,
        rows,
    };
    emit(cli.format, &doc, &tab, cli.out.as_deref())?;
    Ok(0)
}

#[derive(Serialize)]
struct ValueDoc {
    table: &'static str,
    d: u64,
    chi_index: usize,
    chi_exponents: Vec<u64>,
    lambda: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    x: Option<Rational>,
    value: ExactValue,
}

fn cmd_poly(
    cli: &Cli,
    d: u64,
    chi_index: usize,
    chi: &DirichletCharacter,
    lambda: Rational,
    n: usize,
    x: Rational,
) -> Result<i32> {
    let value =
        ExactValue::from_cyclotomic(generalized_numbers(chi, &lambda, n).polynomial_value(n, &x));
    let mut tab = TabularData::new(vec!["n", "x", "value"]);
    tab.push_row(vec![n.to_string(), x.to_string(), value.to_string()]);
    let doc = ValueDoc {
        table: "poly",
        d,
        chi_index,
        chi_exponents: chi.exponents().to_vec(),
        lambda,
        n: Some(n as u64),
        k: None,
        x: Some(x),
        value,
    };
    emit(cli.format, &doc, &tab, cli.out.as_deref())?;
    Ok(0)
}

fn cmd_rsum(
    cli: &Cli,
    k: usize,
    n: u64,
    d: u64,
    chi_index: usize,
    chi: &DirichletCharacter,
    lambda: Rational,
) -> Result<i32> {
    let value = ExactValue::from_cyclotomic(r_sum(k, n, &lambda, chi));
    let mut tab = TabularData::new(vec!["k", "n", "value"]);
    tab.push_row(vec![k.to_string(), n.to_string(), value.to_string()]);
    let doc = ValueDoc {
        table: "rsum",
        d,
        chi_index,
        chi_exponents: chi.exponents().to_vec(),
        lambda,
        n: Some(n),
        k: Some(k),
        x: None,
        value,
    };
    emit(cli.format, &doc, &tab, cli.out.as_deref())?;
    Ok(0)
}

#[derive(Serialize)]
struct CharRow {
    index: usize,
    exponents: Vec<u64>,
    order: u32,
    conductor: u64,
    primitive: bool,
    parity: i8,
    values: Vec<ExactValue>,
}

#[derive(Serialize)]
struct CharsDoc {
    table: &'static str,
    d: u64,
    rows: Vec<CharRow>,
}

fn cmd_chars(cli: &Cli, d: u64) -> Result<i32> {
    let chars = enumerate_characters(d)?;
    let rows: Vec<CharRow> = chars
        .iter()
        .enumerate()
        .map(|(index, chi)| CharRow {
            index,
            exponents: chi.exponents().to_vec(),
            order: chi.order(),
            conductor: chi.conductor(),
            primitive: chi.is_primitive(),
            parity: chi.parity(),
            values: (0..d)
                .map(|n| ExactValue::from_cyclotomic(chi.value(n as i64)))
                .collect(),
        })
        .collect();
    let mut tab = TabularData::new(vec![
        "index",
        "exponents",
        "order",
        "conductor",
        "primitive",
        "parity",
        "values",
    ]);
    for row in &rows {
        let exps: Vec<String> = row.exponents.iter().map(u64::to_string).collect();
        let values: Vec<String> = row.values.iter().map(ExactValue::to_string).collect();
        tab.push_row(vec![
            row.index.to_string(),
            exps.join(";"),
            row.order.to_string(),
            row.conductor.to_string(),
            row.primitive.to_string(),
            row.parity.to_string(),
            values.join(";"),
        ]);
    }
    let doc = CharsDoc {
        table: "chars",
        d,
        rows,
    };
    emit(cli.format, &doc, &tab, cli.out.as_deref())?;
    Ok(0)
}

fn parse_levels(spec: &str) -> Result<Vec<u32>> {
    let spec = spec.trim();
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo: u32 = lo.trim().parse().context("bad level range start")?;
        let hi: u32 = hi.trim().parse().context("bad level range end")?;
        if lo > hi {
            bail!("empty level range `{spec}`");
        }
        return Ok((lo..=hi).collect());
    }
    spec.split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .with_context(|| format!("bad level `{part}`"))
        })
        .collect()
}

fn cmd_check(cli: &Cli) -> Result<i32> {
    let Command::Check {
        identity,
        default_grid,
        d,
        chi,
        lambda,
        w1,
        w2,
        x,
        degree_bound,
        n,
        p,
        levels,
        negative_control,
    } = &cli.command
    else {
        unreachable!()
    };
    if cli.format != Format::Json {
        bail!("check emits JSON reports only; drop --format");
    }

    let mut grid = SweepConfig::default();
    if !default_grid {
        if let Some(path) = &cli.config {
            config::apply_file(&mut grid, config::load_file(path)?)?;
        }
    }

    // identity argument: a single id always wins; `all` defers to the
    // config file's list when one was given.
    if identity != "all" {
        grid.identities = vec![identity.parse::<IdentityKind>()?];
    } else if *default_grid || cli.config.is_none() {
        grid.identities = IdentityKind::ALL.to_vec();
    }

    if let Some(d) = d {
        grid.moduli = d.clone();
    }
    if let Some(chi) = chi {
        grid.chi_indices = ChiSelection::parse(chi)?.into_indices()?;
    }
    if let Some(lambda) = lambda {
        grid.lambdas = config::parse_rationals(lambda)?;
    }
    if let Some(w1) = w1 {
        grid.w1 = w1.clone();
    }
    if let Some(n) = n {
        // eq18's odd multiplier rides the w1 axis
        grid.w1 = n.clone();
    }
    if let Some(w2) = w2 {
        grid.w2 = w2.clone();
    }
    if let Some(x) = x {
        grid.xs = config::parse_rationals(x)?;
    }
    if let Some(l) = degree_bound {
        grid.degree_bound = *l;
    }
    if let Some(p) = p {
        grid.primes = p.clone();
    }
    if let Some(levels) = levels {
        grid.levels = parse_levels(levels)?;
    }

    let reports = sweep_with_options(
        &grid,
        SweepOptions {
            negative_control: *negative_control,
        },
    )?;
    let failures: Vec<&IdentityReport> = reports.iter().filter(|r| !r.holds).collect();

    write_text(&render_json(&reports)?, cli.out.as_deref())?;

    if let Some(first) = failures.first() {
        eprintln!(
            "FAIL {} at degree {} for params {}",
            first.identity,
            first
                .first_failure
                .map_or_else(|| "?".to_string(), |n| n.to_string()),
            serde_json::to_string(&first.params)?
        );
        eprintln!("{} of {} reports failed", failures.len(), reports.len());
        return Ok(1);
    }
    eprintln!("{} reports: all hold", reports.len());
    Ok(0)
}

#[derive(Serialize)]
struct PadicRow {
    #[serde(rename = "N")]
    level: u32,
    finite_sum: ExactValue,
    integral: ExactValue,
    valuation: Valuation,
}

#[derive(Serialize)]
struct PadicDoc {
    table: &'static str,
    f: Vec<i64>,
    p: u64,
    d: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi_index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi_exponents: Option<Vec<u64>>,
    rows: Vec<PadicRow>,
}

fn cmd_padic(cli: &Cli) -> Result<i32> {
    let Command::Padic {
        f,
        p,
        levels,
        d,
        chi,
    } = &cli.command
    else {
        unreachable!()
    };
    let levels = parse_levels(levels)?;
    let poly = QPolynomial::from_integers(f);
    let d = d.unwrap_or(1);

    let (chi_index, character) = if d > 1 {
        let (i, c) = resolve_character(d, Some(chi.unwrap_or(0)), None)?;
        (Some(i), Some(c))
    } else {
        (None, None)
    };

    let mut rows = Vec::with_capacity(levels.len());
    match &character {
        None => {
            let integral = fermionic_integral(&poly);
            for &level in &levels {
                let s = finite_level_sum(&poly, *p, level)?;
                let v = p_adic_valuation(&(&s - &integral), *p)?;
                rows.push(PadicRow {
                    level,
                    finite_sum: ExactValue::Rational(s),
                    integral: ExactValue::Rational(integral.clone()),
                    valuation: v,
                });
            }
        }
        Some(chi) => {
            let integral = twisted_fermionic_integral(&poly, chi);
            for &level in &levels {
                let s = finite_level_sum_twisted(&poly, chi, *p, level)?;
                let diff = s.checked_sub(&integral).expect("matching orders");
                // coefficientwise valuation in the power basis
                let v = min_coefficient_valuation(&diff, *p)?;
                rows.push(PadicRow {
                    level,
                    finite_sum: ExactValue::from_cyclotomic(s),
                    integral: ExactValue::from_cyclotomic(integral.clone()),
                    valuation: v,
                });
            }
        }
    }

    let mut tab = TabularData::new(vec!["N", "finite_sum", "integral", "valuation"]);
    for row in &rows {
        tab.push_row(vec![
            row.level.to_string(),
            row.finite_sum.to_string(),
            row.integral.to_string(),
            row.valuation.to_string(),
        ]);
    }
    let doc = PadicDoc {
        table: "padic",
        f: f.clone(),
        p: *p,
        d,
        chi_index,
        chi_exponents: character.as_ref().map(|c| c.exponents().to_vec()),
        rows,
    };
    emit(cli.format, &doc, &tab, cli.out.as_deref())?;
    Ok(0)
}
