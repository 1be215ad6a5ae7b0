//! Sweep configuration: a flat TOML document of key -> list-of-values
//! entries, merged under any inline flags.
//!
//! ```toml
//! identities = ["thm1", "eq18"]
//! d = [1, 3, 5]
//! chi = "all"            # or a list of indices, e.g. [0, 1]
//! lambda = ["0", "1/2", "-2/3", "3"]
//! w1 = [1, 3, 5]
//! w2 = [1, 3, 5]
//! x = ["0", "1", "1/2"]
//! L = 8
//! p = [3, 5]
//! N = [1, 2, 3, 4]
//! f = [[1], [0, 1], [0, 0, 1], [0, 2, 0, 1]]
//! ```

use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Deserialize;

use degen_euler::exactnum::Rational;
use degen_euler::identities::{IdentityKind, SweepConfig};

/// Character selection: every character of each modulus, or fixed indices.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ChiSelection {
    Keyword(String),
    Indices(Vec<usize>),
}

impl ChiSelection {
    pub fn into_indices(self) -> Result<Option<Vec<usize>>> {
        match self {
            ChiSelection::Keyword(s) if s == "all" => Ok(None),
            ChiSelection::Keyword(s) => bail!("chi must be `all` or a list of indices, got `{s}`"),
            ChiSelection::Indices(v) => Ok(Some(v)),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        if s == "all" {
            return Ok(ChiSelection::Keyword("all".into()));
        }
        let indices = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .with_context(|| format!("bad character index `{part}`"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ChiSelection::Indices(indices))
    }
}

/// The on-disk form: every key optional, so a file can override just part
/// of the default grid.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub identities: Option<Vec<String>>,
    pub d: Option<Vec<u64>>,
    pub chi: Option<ChiSelection>,
    pub lambda: Option<Vec<String>>,
    pub w1: Option<Vec<u64>>,
    pub w2: Option<Vec<u64>>,
    pub x: Option<Vec<String>>,
    #[serde(rename = "L")]
    pub degree_bound: Option<usize>,
    pub p: Option<Vec<u64>>,
    #[serde(rename = "N")]
    pub levels: Option<Vec<u32>>,
    pub f: Option<Vec<Vec<i64>>>,
}

pub fn load_file(path: &Path) -> Result<FileConfig> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading config {}", path.display()))?;
    toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
}

pub fn parse_rationals(values: &[String]) -> Result<Vec<Rational>> {
    values
        .iter()
        .map(|s| {
            s.parse::<Rational>()
                .with_context(|| format!("bad exact fraction `{s}`"))
        })
        .collect()
}

fn parse_identities(names: &[String]) -> Result<Vec<IdentityKind>> {
    names
        .iter()
        .map(|s| s.parse::<IdentityKind>().map_err(anyhow::Error::from))
        .collect()
}

/// Applies a file on top of the default grid. Inline flags are applied by
/// the caller afterwards, so the precedence is defaults < file < flags.
pub fn apply_file(base: &mut SweepConfig, file: FileConfig) -> Result<()> {
    if let Some(identities) = file.identities {
        base.identities = parse_identities(&identities)?;
    }
    if let Some(d) = file.d {
        base.moduli = d;
    }
    if let Some(chi) = file.chi {
        base.chi_indices = chi.into_indices()?;
    }
    if let Some(lambda) = file.lambda {
        base.lambdas = parse_rationals(&lambda)?;
    }
    if let Some(w1) = file.w1 {
        base.w1 = w1;
    }
    if let Some(w2) = file.w2 {
        base.w2 = w2;
    }
    if let Some(x) = file.x {
        base.xs = parse_rationals(&x)?;
    }
    if let Some(l) = file.degree_bound {
        base.degree_bound = l;
    }
    if let Some(p) = file.p {
        base.primes = p;
    }
    if let Some(levels) = file.levels {
        base.levels = levels;
    }
    if let Some(f) = file.f {
        base.polys = f;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_overrides_defaults() {
        let mut config = SweepConfig::default();
        let file: FileConfig = toml::from_str(
            r#"
                identities = ["eq18"]
                d = [3]
                chi = [1]
                lambda = ["2/5"]
                L = 6
            "#,
        )
        .unwrap();
        apply_file(&mut config, file).unwrap();
        assert_eq!(config.identities, vec![IdentityKind::Eq18]);
        assert_eq!(config.moduli, vec![3]);
        assert_eq!(config.chi_indices, Some(vec![1]));
        assert_eq!(config.lambdas, vec![Rational::new(2, 5)]);
        assert_eq!(config.degree_bound, 6);
        // untouched keys keep their defaults
        assert_eq!(config.w1, vec![1, 3, 5]);
    }

    #[test]
    fn chi_selection_forms() {
        assert!(ChiSelection::parse("all")
            .unwrap()
            .into_indices()
            .unwrap()
            .is_none());
        assert_eq!(
            ChiSelection::parse("0,2").unwrap().into_indices().unwrap(),
            Some(vec![0, 2])
        );
        assert!(ChiSelection::parse("first").is_err());
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let parsed: Result<FileConfig, _> = toml::from_str("bogus = 3");
        assert!(parsed.is_err());
    }
}
