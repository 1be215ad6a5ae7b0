//! Output emitters: JSON (the authoritative, round-trippable form), CSV,
//! and LaTeX tabulars (presentation only).
//!
//! Every emitter is deterministic — stable field and row order, no
//! timestamps — so identical invocations produce byte-identical files.

use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

/// Row-oriented rendering of a table for the CSV and LaTeX emitters.
pub struct TabularData {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl TabularData {
    pub fn new<S: Into<String>>(headers: Vec<S>) -> Self {
        TabularData {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push_row<S: Into<String>>(&mut self, row: Vec<S>) {
        let row: Vec<String> = row.into_iter().map(Into::into).collect();
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }
}

pub fn render_json<T: Serialize>(doc: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(doc)?;
    text.push('\n');
    Ok(text)
}

fn render_csv(tab: &TabularData) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(&tab.headers)?;
    for row in &tab.rows {
        writer.write_record(row)?;
    }
    let bytes = writer.into_inner().context("finishing csv output")?;
    Ok(String::from_utf8(bytes)?)
}

fn latex_escape(s: &str) -> String {
    // The cell contents are fractions, small integers, and z^k terms;
    // only a few characters need care in text mode.
    s.replace('\\', "\\textbackslash{}")
        .replace('&', "\\&")
        .replace('%', "\\%")
        .replace('_', "\\_")
        .replace('#', "\\#")
}

fn render_latex(tab: &TabularData) -> String {
    let mut out = String::new();
    let spec = "l".repeat(tab.headers.len());
    out.push_str(&format!("\\begin{{tabular}}{{{spec}}}\n\\hline\n"));
    let head: Vec<String> = tab.headers.iter().map(|h| latex_escape(h)).collect();
    out.push_str(&head.join(" & "));
    out.push_str(" \\\\\n\\hline\n");
    for row in &tab.rows {
        let cells: Vec<String> = row.iter().map(|c| latex_escape(c)).collect();
        out.push_str(&cells.join(" & "));
        out.push_str(" \\\\\n");
    }
    out.push_str("\\hline\n\\end{tabular}\n");
    out
}

/// Renders a table in the requested format and writes it to the path, or
/// to stdout when no path is given.
pub fn emit<T: Serialize>(
    format: Format,
    doc: &T,
    tab: &TabularData,
    out: Option<&Path>,
) -> Result<()> {
    let text = match format {
        Format::Json => render_json(doc)?,
        Format::Csv => render_csv(tab)?,
        Format::Latex => render_latex(tab),
    };
    write_text(&text, out)
}

pub fn write_text(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}
