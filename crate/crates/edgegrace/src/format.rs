//! Text rendering for exact rationals and the factor-pair table.

use edgegrace_core::diophantine::{FactorPairRow, Rational};
use serde::Serialize;

/// Exact decimal when the expansion terminates (`1343/4` → `335.75`),
/// otherwise the reduced fraction (`-27/28`).
pub fn rational(r: &Rational) -> String {
    let (numer, denom) = (*r.numer(), *r.denom());
    if denom == 1 {
        return numer.to_string();
    }
    let (mut rest, mut twos, mut fives) = (denom, 0u32, 0u32);
    while rest % 2 == 0 {
        rest /= 2;
        twos += 1;
    }
    while rest % 5 == 0 {
        rest /= 5;
        fives += 1;
    }
    if rest != 1 {
        return format!("{numer}/{denom}");
    }
    let places = twos.max(fives);
    let scaled = numer.checked_mul(10i128.pow(places)).map(|s| s / denom);
    let Some(scaled) = scaled else {
        return format!("{numer}/{denom}");
    };
    let digits = format!("{:0width$}", scaled.unsigned_abs(), width = places as usize + 1);
    let (int, frac) = digits.split_at(digits.len() - places as usize);
    let sign = if scaled < 0 { "-" } else { "" };
    format!("{sign}{int}.{frac}")
}

/// One row as it appears in JSON output, rationals rendered by [`rational`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowRecord {
    pub n1: String,
    pub n2: String,
    #[serde(rename = "X")]
    pub big_x: String,
    #[serde(rename = "Y")]
    pub big_y: String,
    pub x: String,
    pub y: String,
    pub integral: bool,
}

impl From<&FactorPairRow> for RowRecord {
    fn from(row: &FactorPairRow) -> Self {
        RowRecord {
            n1: row.n1.to_string(),
            n2: row.n2.to_string(),
            big_x: rational(&row.big_x),
            big_y: rational(&row.big_y),
            x: rational(&row.x),
            y: rational(&row.y),
            integral: row.integral,
        }
    }
}

/// Whitespace-aligned table with columns `N1 N2 X Y x y`; integral rows are starred.
pub fn factor_pair_table(rows: &[FactorPairRow]) -> String {
    let header = ["N1", "N2", "X", "Y", "x", "y"].map(str::to_owned);
    let body: Vec<[String; 6]> = rows
        .iter()
        .map(RowRecord::from)
        .map(|r| [r.n1, r.n2, r.big_x, r.big_y, r.x, r.y])
        .collect();
    let mut widths = header.clone().map(|h| h.len());
    for cells in &body {
        for (w, c) in widths.iter_mut().zip(cells) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cells: &[String; 6], mark: &str| {
        let cols: Vec<String> = cells.iter().zip(widths).map(|(c, w)| format!("{c:>w$}")).collect();
        format!("{}{mark}\n", cols.join("  ")).trim_end().to_owned() + "\n"
    };
    let mut out = line(&header, "");
    for (cells, row) in body.iter().zip(rows) {
        out += &line(cells, if row.integral { "  *" } else { "" });
    }
    out
}
