//! Payoff tables: one column per profile in canonical order, one row per player.

use gamesym_core::{FiniteGame, Matrix, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub const DEFAULT_PRECISION: usize = 4;

/// How table cells are written.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cells {
    /// Decimal with this many fractional digits, rounded half away from zero.
    Decimal(usize),
    /// Exact `p/q`.
    Exact,
}

/// `r` rounded to `precision` fractional digits, half away from zero. Values that round to
/// zero are printed without a sign.
pub fn decimal(r: &Rational, precision: usize) -> String {
    let scale = BigInt::from(10u32).pow(precision as u32);
    let scaled = (r * Rational::from_integer(scale.clone()))
        .round()
        .to_integer();
    if precision == 0 {
        return scaled.to_string();
    }
    let negative = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let digits = format!("{digits:0>width$}", width = precision + 1);
    let (int_part, frac_part) = digits.split_at(digits.len() - precision);
    let sign = if negative { "-" } else { "" };
    format!("{sign}{int_part}.{frac_part}")
}

fn cell(r: &Rational, cells: Cells) -> String {
    match cells {
        Cells::Decimal(p) => decimal(r, p),
        Cells::Exact => {
            if r.is_zero() {
                "0".to_string()
            } else {
                r.to_string()
            }
        }
    }
}

fn layout(header: Vec<String>, rows: Vec<Vec<String>>) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String]| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (c, &w))| {
                let pad = w - c.chars().count();
                if i == 0 {
                    format!("{c}{}", " ".repeat(pad))
                } else {
                    format!("{}{c}", " ".repeat(pad))
                }
            })
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = line(&header);
    out.push('\n');
    for row in &rows {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

/// Payoff table of a game: header `c\a` followed by the profile labels, then rows `c1..cn`.
pub fn payoff_table(g: &FiniteGame, cells: Cells) -> String {
    let spec = g.spec();
    let mut header = vec!["c\\a".to_string()];
    header.extend(spec.profiles().map(|p| spec.profile_label(&p)));
    let rows = (0..spec.n())
        .map(|i| {
            let mut row = vec![format!("c{}", i + 1)];
            row.extend(g.player_row(i).iter().map(|r| cell(r, cells)));
            row
        })
        .collect();
    layout(header, rows)
}

/// A dense matrix with the given row labels and columns numbered from 1.
pub fn labelled_matrix(m: &Matrix, labels: &[String], cells: Cells) -> String {
    let mut header = vec![String::new()];
    header.extend((1..=m.cols()).map(|j| j.to_string()));
    let rows = m
        .row_iter()
        .zip(labels)
        .map(|(r, label)| {
            let mut row = vec![label.clone()];
            row.extend(r.iter().map(|x| cell(x, cells)));
            row
        })
        .collect();
    layout(header, rows)
}

/// Exact values joined by spaces, e.g. `[-1/6 0]`.
pub fn exact_vector(v: &[Rational]) -> String {
    let cells: Vec<String> = v.iter().map(|r| cell(r, Cells::Exact)).collect();
    format!("[{}]", cells.join(" "))
}
