//! Bases of the skew-symmetric subspace (`D`) and the symmetric subspace (`E`).
//!
//! Both are built the same way: a basis of admissible first-player payoff rows (`B` from
//! strictly increasing tuples, `H` from non-decreasing tuples) is extended to all players
//! through swap-matrix chains. Row order is tuples in lexicographic order, then the first
//! player's strategy `j = 1..κ`.
//!
//! Gram matrices are diagonal: `DDᵀ = n!·I`, `EEᵀ = diag(n·q_i)` and `DEᵀ = 0`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::game::GameSpec;
use crate::group::enumerate;
use crate::stp::{int, Matrix, Rational};
use crate::symmetry::{skew_transposition_chain, symmetric_shift};
use crate::Result;

/// Which subspace a [`BasisMatrix`] spans.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    /// `B`: skew-symmetric rows for player 1 only.
    SkewFirstPlayer,
    /// `D`: skew-symmetric subspace.
    Skew,
    /// `H`: symmetric rows for player 1 only.
    SymmetricFirstPlayer,
    /// `E`: symmetric subspace.
    Symmetric,
    /// `Q = [D; E]`.
    Stacked,
}

/// Row-stacked basis with the `(tuple index, strategy)` each row was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMatrix {
    pub kind: BasisKind,
    pub matrix: Matrix,
    pub labels: Vec<(usize, usize)>,
}

impl BasisMatrix {
    pub fn len(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.matrix.rows() == 0
    }

    pub fn gram(&self) -> Matrix {
        self.matrix.gram()
    }
}

/// A non-decreasing tuple together with its orbit under permutations of its entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakTuple {
    pub values: Vec<usize>,
    /// Distinct rearrangements of `values`, in lexicographic order.
    pub orbit: Vec<Vec<usize>>,
}

impl WeakTuple {
    /// `q_i`, the number of distinct rearrangements.
    pub fn orbit_size(&self) -> usize {
        self.orbit.len()
    }

    /// Multiplicity `#(j)` of strategy `j` in the tuple.
    pub fn multiplicity(&self, j: usize) -> usize {
        self.values.iter().filter(|&&v| v == j).count()
    }
}

/// Dimension bookkeeping for `𝒢_[n;κ]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dimensions {
    pub n: usize,
    pub kappa: usize,
    /// `ℓ = C(κ, n−1)`, number of strictly increasing tuples.
    pub ell: usize,
    /// `β = κℓ = dim 𝒦`.
    pub beta: usize,
    /// `p = C(n+κ−2, n−1)`, number of non-decreasing tuples.
    pub p: usize,
    /// `α = κp = dim 𝒮`.
    pub alpha: usize,
    /// Orbit sizes `q_i = (n−1)! / ∏_j #_i(j)!`, in tuple order.
    pub orbit_sizes: Vec<usize>,
    /// `dim ℰ = nκⁿ − α − β`.
    pub dim_asymmetric: usize,
}

impl Dimensions {
    pub fn of(spec: &GameSpec) -> Self {
        let (n, kappa) = (spec.n(), spec.kappa());
        let ell = binomial(kappa, n - 1);
        let p = binomial(n + kappa - 2, n - 1);
        let orbit_sizes = weak_tuples(n - 1, kappa)
            .iter()
            .map(|t| multinomial_orbit_size(t, kappa))
            .collect();
        Dimensions {
            n,
            kappa,
            ell,
            beta: kappa * ell,
            p,
            alpha: kappa * p,
            orbit_sizes,
            dim_asymmetric: spec.dimension() - kappa * ell - kappa * p,
        }
    }
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `(len)! / ∏_j #(j)!` for a tuple over strategies `0..kappa`.
pub fn multinomial_orbit_size(values: &[usize], kappa: usize) -> usize {
    let mut counts = vec![0usize; kappa];
    for &v in values {
        counts[v] += 1;
    }
    let denom: u128 = counts.iter().map(|&c| factorial(c)).product();
    (factorial(values.len()) / denom) as usize
}

fn strict_tuples(len: usize, kappa: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(start: usize, len: usize, kappa: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in start..kappa {
            cur.push(v);
            go(v + 1, len, kappa, cur, out);
            cur.pop();
        }
    }
    go(0, len, kappa, &mut cur, &mut out);
    out
}

fn weak_tuples(len: usize, kappa: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(start: usize, len: usize, kappa: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in start..kappa {
            cur.push(v);
            go(v, len, kappa, cur, out);
            cur.pop();
        }
    }
    go(0, len, kappa, &mut cur, &mut out);
    out
}

/// Distinct rearrangements of a sorted tuple, in lexicographic order.
fn distinct_rearrangements(sorted: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = sorted.to_vec();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (0..cur.len().saturating_sub(1))
            .rev()
            .find(|&i| cur[i] < cur[i + 1])
        else {
            return out;
        };
        let j = (i + 1..cur.len())
            .rev()
            .find(|&j| cur[j] > cur[i])
            .expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

/// Strictly increasing `(n−1)`-tuples over `0..κ`, lexicographically ordered.
/// Empty when `n − 1 > κ`.
pub fn enum_strict(spec: &GameSpec) -> Vec<Vec<usize>> {
    strict_tuples(spec.n() - 1, spec.kappa())
}

/// Non-decreasing `(n−1)`-tuples over `0..κ` with their orbits, lexicographically ordered.
pub fn enum_weak(spec: &GameSpec) -> Vec<WeakTuple> {
    weak_tuples(spec.n() - 1, spec.kappa())
        .into_iter()
        .map(|values| WeakTuple {
            orbit: distinct_rearrangements(&values),
            values,
        })
        .collect()
}

fn tuple_index(kappa: usize, first: usize, rest: &[usize]) -> usize {
    rest.iter().fold(first, |acc, &x| acc * kappa + x)
}

/// `η`: the length-`κⁿ` row with `sign(σ)` at every profile `(j, z_σ(1), …, z_σ(n−1))`.
pub fn eta(spec: &GameSpec, tuple: &[usize], j: usize) -> Result<Vec<Rational>> {
    let mut row = vec![Rational::zero(); spec.profile_count()];
    for sigma in enumerate(tuple.len())? {
        let permuted: Vec<usize> = (0..tuple.len()).map(|k| tuple[sigma.apply(k)]).collect();
        row[tuple_index(spec.kappa(), j, &permuted)] += int(sigma.sign() as i64);
    }
    Ok(row)
}

/// `ζ`: the length-`κⁿ` 0/1 row marking every profile `(j, z')` with `z'` in the orbit.
pub fn zeta(spec: &GameSpec, tuple: &WeakTuple, j: usize) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); spec.profile_count()];
    for z in &tuple.orbit {
        row[tuple_index(spec.kappa(), j, z)] = int(1);
    }
    row
}

/// `B`: rows `η^i_j`, `κℓ × κⁿ`.
pub fn build_b(spec: &GameSpec) -> Result<BasisMatrix> {
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for (i, z) in enum_strict(spec).iter().enumerate() {
        for j in 0..spec.kappa() {
            rows.push(eta(spec, z, j)?);
            labels.push((i, j));
        }
    }
    Ok(BasisMatrix {
        kind: BasisKind::SkewFirstPlayer,
        matrix: Matrix::from_rows(spec.profile_count(), rows)?,
        labels,
    })
}

/// `D = [B, −B W_[κ⁰,κ] W_[κ,κ], …, −B W_[κ^{n−2},κ] W_[κ,κ^{n−1}]]`, `β × nκⁿ`.
pub fn build_d(spec: &GameSpec) -> Result<BasisMatrix> {
    let b = build_b(spec)?;
    let mut blocks = vec![b.matrix.clone()];
    for player in 2..=spec.n() {
        let chain = skew_transposition_chain(spec.kappa(), player);
        blocks.push(b.matrix.stp_logical(&chain).neg());
    }
    Ok(BasisMatrix {
        kind: BasisKind::Skew,
        matrix: Matrix::hstack(&blocks)?,
        labels: b.labels,
    })
}

/// `H`: rows `ζ^i_j`, `κp × κⁿ`.
pub fn build_h(spec: &GameSpec) -> Result<BasisMatrix> {
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for (i, z) in enum_weak(spec).iter().enumerate() {
        for j in 0..spec.kappa() {
            rows.push(zeta(spec, z, j));
            labels.push((i, j));
        }
    }
    Ok(BasisMatrix {
        kind: BasisKind::SymmetricFirstPlayer,
        matrix: Matrix::from_rows(spec.profile_count(), rows)?,
        labels,
    })
}

/// `E = [H, H W_[κ,κ], …, H W_[κ^{n−1},κ]]`, `α × nκⁿ`.
pub fn build_e(spec: &GameSpec) -> Result<BasisMatrix> {
    let h = build_h(spec)?;
    let blocks: Vec<Matrix> = (1..=spec.n())
        .map(|player| h.matrix.stp_logical(&symmetric_shift(spec.kappa(), player)))
        .collect();
    Ok(BasisMatrix {
        kind: BasisKind::Symmetric,
        matrix: Matrix::hstack(&blocks)?,
        labels: h.labels,
    })
}

/// `Q = [D; E]`.
pub fn build_q(spec: &GameSpec) -> Result<BasisMatrix> {
    let d = build_d(spec)?;
    let e = build_e(spec)?;
    let mut labels = d.labels;
    labels.extend(e.labels);
    Ok(BasisMatrix {
        kind: BasisKind::Stacked,
        matrix: Matrix::vstack(&[d.matrix, e.matrix])?,
        labels,
    })
}
