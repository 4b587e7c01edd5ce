use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::One;

use super::{Matrix, Rational};
use crate::{Error, Result};

/// A logical matrix `δ_m[i_1, …, i_r]`: an `m×r` 0/1 matrix whose `j`-th column is the
/// `i_j`-th column of `I_m`. Stored as the index list (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LogicalMatrix {
    rows: usize,
    cols: Vec<usize>,
}

impl LogicalMatrix {
    pub fn new(rows: usize, cols: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = cols.iter().find(|&&c| c >= rows) {
            return Err(Error::OutOfRange {
                what: "logical column index",
                got: bad,
                bound: rows,
            });
        }
        Ok(LogicalMatrix { rows, cols })
    }

    /// Build from the 1-based notation `δ_rows[i_1, …, i_r]`.
    pub fn from_one_based(rows: usize, indices: &[usize]) -> Result<Self> {
        let cols = indices
            .iter()
            .map(|&i| {
                i.checked_sub(1)
                    .filter(|&c| c < rows)
                    .ok_or(Error::OutOfRange {
                        what: "1-based logical index",
                        got: i,
                        bound: rows + 1,
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LogicalMatrix { rows, cols })
    }

    /// The column vector `δ_dim^index` (0-based index).
    pub fn delta(dim: usize, index: usize) -> Result<Self> {
        Self::new(dim, vec![index])
    }

    pub fn identity(n: usize) -> Self {
        LogicalMatrix {
            rows: n,
            cols: (0..n).collect(),
        }
    }

    /// Swap matrix `W_[m,n]`.
    pub fn swap(m: usize, n: usize) -> Self {
        let mut cols = vec![0; m * n];
        for i in 0..m {
            for j in 0..n {
                // column δ_m^i ⋉ δ_n^j holds δ_n^j ⋉ δ_m^i
                cols[i * n + j] = j * m + i;
            }
        }
        LogicalMatrix { rows: m * n, cols }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// Row index of the single 1 in each column.
    pub fn indices(&self) -> &[usize] {
        &self.cols
    }

    /// `self · δ^col`, as a row index.
    pub fn image(&self, col: usize) -> usize {
        self.cols[col]
    }

    pub fn kron(&self, other: &LogicalMatrix) -> LogicalMatrix {
        let mut cols = Vec::with_capacity(self.cols.len() * other.cols.len());
        for &a in &self.cols {
            for &b in &other.cols {
                cols.push(a * other.rows + b);
            }
        }
        LogicalMatrix {
            rows: self.rows * other.rows,
            cols,
        }
    }

    /// Conventional product; requires `self.ncols() == other.rows()`.
    pub fn product(&self, other: &LogicalMatrix) -> Result<LogicalMatrix> {
        if self.ncols() != other.rows {
            return Err(Error::mismatch(
                "logical product",
                format!("{} columns against {} rows", self.ncols(), other.rows),
            ));
        }
        Ok(LogicalMatrix {
            rows: self.rows,
            cols: other.cols.iter().map(|&c| self.cols[c]).collect(),
        })
    }

    /// Semi-tensor product. Logical matrices are closed under it.
    pub fn stp(&self, other: &LogicalMatrix) -> LogicalMatrix {
        let n = self.ncols();
        let p = other.rows;
        let t = n.lcm(&p);
        let left = self.inflate(t / n);
        let right = other.inflate(t / p);
        left.product(&right).expect("inflated dimensions agree")
    }

    /// `self ⊗ I_k`.
    pub fn inflate(&self, k: usize) -> LogicalMatrix {
        if k == 1 {
            return self.clone();
        }
        self.kron(&LogicalMatrix::identity(k))
    }

    /// Column-wise semi-tensor product.
    pub fn khatri_rao(&self, other: &LogicalMatrix) -> Result<LogicalMatrix> {
        if self.ncols() != other.ncols() {
            return Err(Error::mismatch(
                "Khatri-Rao product",
                format!("{} columns against {}", self.ncols(), other.ncols()),
            ));
        }
        Ok(LogicalMatrix {
            rows: self.rows * other.rows,
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(&a, &b)| a * other.rows + b)
                .collect(),
        })
    }

    pub fn is_permutation(&self) -> bool {
        if self.rows != self.cols.len() {
            return false;
        }
        let mut seen = vec![false; self.rows];
        self.cols
            .iter()
            .all(|&c| !core::mem::replace(&mut seen[c], true))
    }

    /// Inverse (= transpose) of a permutation matrix, `None` otherwise.
    pub fn inverse(&self) -> Option<LogicalMatrix> {
        if !self.is_permutation() {
            return None;
        }
        let mut cols = vec![0; self.rows];
        for (j, &i) in self.cols.iter().enumerate() {
            cols[i] = j;
        }
        Some(LogicalMatrix {
            rows: self.rows,
            cols,
        })
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols.len());
        for (j, &i) in self.cols.iter().enumerate() {
            m.set(i, j, Rational::one());
        }
        m
    }
}
