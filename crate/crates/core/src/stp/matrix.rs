use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::{dot, LogicalMatrix, Rational};
use crate::{Error, Result};

/// Dense row-major matrix of exact rationals.
///
/// Zero-row matrices are allowed; they represent empty bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// The all-ones row `1ᵀ_n`.
    pub fn ones_row(n: usize) -> Self {
        Matrix {
            rows: 1,
            cols: n,
            data: vec![Rational::one(); n],
        }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::mismatch(
                "Matrix::from_vec",
                format!("{} entries for a {rows}x{cols} matrix", data.len()),
            ));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Row-major integer entries.
    pub fn from_ints(rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        Self::from_vec(rows, cols, entries.iter().map(|&v| super::int(v)).collect())
    }

    /// Build from rows of length `cols`; `rows` may be empty.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::mismatch(
                    "Matrix::from_rows",
                    format!("row {i} has {} entries, expected {cols}", row.len()),
                ));
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    pub fn row_vector(entries: Vec<Rational>) -> Self {
        Matrix {
            rows: 1,
            cols: entries.len(),
            data: entries,
        }
    }

    pub fn column_vector(entries: Vec<Rational>) -> Self {
        Matrix {
            rows: entries.len(),
            cols: 1,
            data: entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Entries in row-major order.
    pub fn as_slice(&self) -> &[Rational] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Square with every off-diagonal entry zero.
    pub fn is_diagonal(&self) -> bool {
        self.first_off_diagonal().is_none()
    }

    pub(crate) fn first_off_diagonal(&self) -> Option<(usize, usize)> {
        if self.rows != self.cols {
            return Some((0, 0));
        }
        (0..self.rows)
            .flat_map(|r| (0..self.cols).map(move |c| (r, c)))
            .find(|&(r, c)| r != c && !self.get(r, c).is_zero())
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    fn check_same_shape(&self, other: &Matrix, op: &'static str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::mismatch(
                op,
                format!(
                    "{}x{} against {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other, "matrix sum")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other, "matrix difference")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, factor: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * factor).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    /// Conventional product; requires `self.cols() == other.rows()`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::mismatch(
                "matrix product",
                format!(
                    "{}x{} times {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            ));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.data[r * other.cols + c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Product with a logical matrix: column `j` of the result is column
    /// `other.image(j)` of `self`.
    pub fn mul_logical(&self, other: &LogicalMatrix) -> Result<Matrix> {
        if self.cols != other.rows() {
            return Err(Error::mismatch(
                "matrix-logical product",
                format!("{} columns against {} rows", self.cols, other.rows()),
            ));
        }
        let cols = other.ncols();
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            let row = self.row(r);
            data.extend(other.indices().iter().map(|&i| row[i].clone()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols,
            data,
        })
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zeros(rows, cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if !b.is_zero() {
                            out.set(r1 * other.rows + r2, c1 * other.cols + c2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// `self ⊗ I_k`.
    fn inflate(&self, k: usize) -> Matrix {
        if k == 1 {
            self.clone()
        } else {
            self.kron(&Matrix::identity(k))
        }
    }

    /// Semi-tensor product `self ⋉ other`.
    pub fn stp(&self, other: &Matrix) -> Matrix {
        let n = self.cols;
        let p = other.rows;
        if n == 0 || p == 0 {
            // Degenerate shapes only arise with empty bases; fall back to the plain product shape.
            return Matrix::zeros(self.rows, other.cols);
        }
        let t = n.lcm(&p);
        self.inflate(t / n)
            .mul(&other.inflate(t / p))
            .expect("inflated dimensions agree")
    }

    /// Semi-tensor product with a logical right factor, without densifying it.
    pub fn stp_logical(&self, other: &LogicalMatrix) -> Matrix {
        let n = self.cols;
        let p = other.rows();
        if n == 0 || p == 0 {
            return Matrix::zeros(self.rows, other.ncols());
        }
        let t = n.lcm(&p);
        self.inflate(t / n)
            .mul_logical(&other.inflate(t / p))
            .expect("inflated dimensions agree")
    }

    /// Khatri-Rao product: column `j` is `col_j(self) ⋉ col_j(other)`.
    pub fn khatri_rao(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::mismatch(
                "Khatri-Rao product",
                format!("{} columns against {}", self.cols, other.cols),
            ));
        }
        let rows = self.rows * other.rows;
        let mut out = Matrix::zeros(rows, self.cols);
        for c in 0..self.cols {
            for r1 in 0..self.rows {
                let a = self.get(r1, c);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    out.set(r1 * other.rows + r2, c, a * other.get(r2, c));
                }
            }
        }
        Ok(out)
    }

    /// `V_R(self)`.
    pub fn row_stack(&self) -> Matrix {
        Matrix::column_vector(self.data.clone())
    }

    /// `V_C(self)`.
    pub fn col_stack(&self) -> Matrix {
        Matrix::column_vector(self.transpose().data)
    }

    /// Concatenate side by side; all parts must have the same row count.
    pub fn hstack(parts: &[Matrix]) -> Result<Matrix> {
        let Some(first) = parts.first() else {
            return Ok(Matrix::zeros(0, 0));
        };
        let rows = first.rows;
        if let Some(bad) = parts.iter().find(|p| p.rows != rows) {
            return Err(Error::mismatch(
                "hstack",
                format!("{} rows against {rows}", bad.rows),
            ));
        }
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for p in parts {
                data.extend_from_slice(p.row(r));
            }
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Stack vertically; all parts must have the same column count.
    pub fn vstack(parts: &[Matrix]) -> Result<Matrix> {
        let Some(first) = parts.first() else {
            return Ok(Matrix::zeros(0, 0));
        };
        let cols = first.cols;
        if let Some(bad) = parts.iter().find(|p| p.cols != cols) {
            return Err(Error::mismatch(
                "vstack",
                format!("{} columns against {cols}", bad.cols),
            ));
        }
        let mut data = Vec::new();
        for p in parts {
            data.extend_from_slice(&p.data);
        }
        Ok(Matrix {
            rows: parts.iter().map(|p| p.rows).sum(),
            cols,
            data,
        })
    }

    /// `self · selfᵀ`, the Gram matrix of the rows.
    pub fn gram(&self) -> Matrix {
        let mut g = Matrix::zeros(self.rows, self.rows);
        for i in 0..self.rows {
            for j in i..self.rows {
                let v = dot(self.row(i), self.row(j));
                if !v.is_zero() {
                    g.set(j, i, v.clone());
                    g.set(i, j, v);
                }
            }
        }
        g
    }

    /// Rank by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut work: Vec<Vec<Rational>> = self.row_iter().map(|r| r.to_vec()).collect();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(pivot) = (rank..work.len()).find(|&r| !work[r][c].is_zero()) else {
                continue;
            };
            work.swap(rank, pivot);
            let inv = work[rank][c].recip();
            for v in work[rank].iter_mut() {
                *v *= &inv;
            }
            let pivot_row = work[rank].clone();
            for (r, row) in work.iter_mut().enumerate() {
                if r == rank || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
            rank += 1;
            if rank == work.len() {
                break;
            }
        }
        rank
    }
}

impl fmt::Display for Matrix {
    /// One row per line, entries as exact rationals separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for (c, v) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
