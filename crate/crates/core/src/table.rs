//! Rectangular windows of a pairing function, rendered as text or CSV.
//!
//! Rows index the first argument and columns the second. Cells are always
//! produced by [`pair`], so a table is only a view of the core functions.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::pairing::pair;
use crate::{Natural, Scheme};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TableFormat {
    #[default]
    Aligned,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSpec {
    pub scheme: Scheme,
    pub row_start: Natural,
    pub col_start: Natural,
    pub rows: usize,
    pub cols: usize,
    pub format: TableFormat,
}

pub const DEFAULT_SIZE: usize = 10;

/// Label in the top-left header cell.
pub const CORNER: &str = "m\\n";

impl TableSpec {
    /// A `rows × cols` window anchored at the scheme's origin.
    pub fn new(scheme: Scheme, rows: usize, cols: usize) -> Self {
        let origin = Natural::from(scheme.origin());
        Self {
            scheme,
            row_start: origin.clone(),
            col_start: origin,
            rows,
            cols,
            format: TableFormat::Aligned,
        }
    }

    pub fn with_format(mut self, format: TableFormat) -> Self {
        self.format = format;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::Table(format!(
                "table must have at least one row and column, got {}x{}",
                self.rows, self.cols
            )));
        }
        let origin = Natural::from(self.scheme.origin());
        if self.row_start < origin || self.col_start < origin {
            return Err(Error::Table(format!(
                "scheme {} starts at {origin}, got origin ({}, {})",
                self.scheme, self.row_start, self.col_start
            )));
        }
        Ok(())
    }

    fn row_labels(&self) -> Vec<Natural> {
        (0..self.rows).map(|r| &self.row_start + r).collect()
    }

    fn col_labels(&self) -> Vec<Natural> {
        (0..self.cols).map(|c| &self.col_start + c).collect()
    }
}

/// Cell values, row-major.
pub fn table_values(spec: &TableSpec) -> Result<Vec<Vec<Natural>>> {
    spec.validate()?;
    let cols = spec.col_labels();
    spec.row_labels()
        .iter()
        .map(|m| cols.iter().map(|n| pair(spec.scheme, m, n)).collect())
        .collect()
}

pub fn render_table(spec: &TableSpec) -> Result<String> {
    let values = table_values(spec)?;
    let header: Vec<String> = std::iter::once(CORNER.to_owned())
        .chain(spec.col_labels().iter().map(ToString::to_string))
        .collect();
    let body: Vec<Vec<String>> = spec
        .row_labels()
        .iter()
        .zip(&values)
        .map(|(m, row)| {
            std::iter::once(m.to_string())
                .chain(row.iter().map(ToString::to_string))
                .collect()
        })
        .collect();

    let mut out = String::new();
    match spec.format {
        TableFormat::Csv => {
            for line in std::iter::once(&header).chain(&body) {
                out.push_str(&line.join(","));
                out.push('\n');
            }
        }
        TableFormat::Aligned => {
            let width = std::iter::once(&header)
                .chain(&body)
                .flatten()
                .map(String::len)
                .max()
                .unwrap_or(1);
            for line in std::iter::once(&header).chain(&body) {
                let cells: Vec<String> = line.iter().map(|c| format!("{c:>width$}")).collect();
                writeln!(out, "{}", cells.join(" ")).expect("writing to a String");
            }
        }
    }
    Ok(out)
}
