//! The symmetric group on players and its matrix expressions.
//!
//! * [`Permutation::matrix`]: `P_σ`, the `n×n` logical matrix with column `i` equal to
//!   `δ_n^{σ(i)}`.
//! * [`phi`]: `Φ_i = 1ᵀ_{κ^{i-1}} ⊗ I_κ ⊗ 1ᵀ_{κ^{n-i}}`, extracting player `i`'s strategy from
//!   the STP form of a profile.
//! * [`t_sigma`]: `T_σ = Φ_{σ⁻¹(1)} ∗ ⋯ ∗ Φ_{σ⁻¹(n)}` (Khatri-Rao chain), the profile
//!   permutation `⋉_i x_i ↦ ⋉_i x_{σ⁻¹(i)}`.
//! * [`psi`]: the representation `ψ(σ) = P_σ ⊗ sign(σ) T_σ` on structure vectors.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::stp::{int, LogicalMatrix, Matrix};
use crate::{Error, Result};

/// Largest `n` for which [`enumerate`] will list all of `S_n`.
pub const MAX_ENUMERATION_DEGREE: usize = 9;

/// A permutation of `0..n` in one-line notation: `map[i] = σ(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n || core::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation(n));
            }
        }
        Ok(Permutation { map })
    }

    /// From 1-based one-line notation, e.g. `[2, 3, 1]` for `1→2, 2→3, 3→1`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let map = images
            .iter()
            .map(|&v| v.checked_sub(1).ok_or(Error::NotAPermutation(n)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(map)
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n).collect(),
        }
    }

    /// The transposition exchanging `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        for v in [a, b] {
            if v >= n {
                return Err(Error::OutOfRange {
                    what: "transposition point",
                    got: v,
                    bound: n,
                });
            }
        }
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(a, b);
        Ok(Permutation { map })
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    /// `σ(i)`.
    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i8 {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.map[i];
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `self ∘ sigma`, i.e. `i ↦ self(sigma(i))`.
    pub fn compose(&self, sigma: &Permutation) -> Result<Permutation> {
        if self.degree() != sigma.degree() {
            return Err(Error::mismatch(
                "permutation composition",
                format!("S_{} against S_{}", self.degree(), sigma.degree()),
            ));
        }
        Ok(Permutation {
            map: sigma.map.iter().map(|&i| self.map[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut map = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v] = i;
        }
        Permutation { map }
    }

    /// `P_σ = [δ_n^{σ(1)}, …, δ_n^{σ(n)}]`.
    pub fn matrix(&self) -> LogicalMatrix {
        LogicalMatrix::new(self.map.len(), self.map.clone()).expect("images are in range")
    }
}

impl fmt::Display for Permutation {
    /// 1-based one-line notation, e.g. `[2 3 1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.map.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("]")
    }
}

/// All `n!` permutations of `0..n` in lexicographic order of their one-line notation.
pub fn enumerate(n: usize) -> Result<Vec<Permutation>> {
    if n > MAX_ENUMERATION_DEGREE {
        return Err(Error::SizeGuard {
            what: "degree of the enumerated symmetric group",
            got: n as u128,
            limit: MAX_ENUMERATION_DEGREE as u128,
        });
    }
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        out.push(Permutation {
            map: current.clone(),
        });
        if !next_permutation(&mut current) {
            return Ok(out);
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len())
        .rev()
        .find(|&j| v[j] > v[i])
        .expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// The generators `(1, i)`, `2 ≤ i ≤ n` (0-based: `(0, i)` for `1 ≤ i < n`).
pub fn generators(n: usize) -> Vec<Permutation> {
    (1..n)
        .map(|i| Permutation::transposition(n, 0, i).expect("in range"))
        .collect()
}

/// `Φ_i` for `n` players with `kappa` strategies each (0-based player `i`): the `κ×κⁿ`
/// logical matrix with `Φ_i ⋉_j δ_κ^{x_j} = δ_κ^{x_i}`.
pub fn phi(n: usize, kappa: usize, i: usize) -> Result<LogicalMatrix> {
    if i >= n {
        return Err(Error::OutOfRange {
            what: "player index",
            got: i,
            bound: n,
        });
    }
    let before = LogicalMatrix::new(1, vec![0; kappa.pow(i as u32)])?;
    let after = LogicalMatrix::new(1, vec![0; kappa.pow((n - 1 - i) as u32)])?;
    Ok(before.kron(&LogicalMatrix::identity(kappa)).kron(&after))
}

/// The profile permutation `T_σ` together with its shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfilePermutation {
    pub n: usize,
    pub kappa: usize,
    pub matrix: LogicalMatrix,
}

/// `T_σ = Φ_{σ⁻¹(1)} ∗ Φ_{σ⁻¹(2)} ∗ ⋯ ∗ Φ_{σ⁻¹(n)}`.
pub fn t_sigma(sigma: &Permutation, kappa: usize) -> ProfilePermutation {
    let n = sigma.degree();
    let inv = sigma.inverse();
    let mut chain = LogicalMatrix::new(1, vec![0; kappa.pow(n as u32)]).expect("row of ones");
    for i in 0..n {
        let block = phi(n, kappa, inv.apply(i)).expect("player index in range");
        chain = chain
            .khatri_rao(&block)
            .expect("all blocks have κⁿ columns");
    }
    ProfilePermutation {
        n,
        kappa,
        matrix: chain,
    }
}

/// A signed permutation matrix `s · L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    pub sign: i8,
    pub matrix: LogicalMatrix,
}

impl SignedPermutation {
    pub fn to_dense(&self) -> Matrix {
        let m = self.matrix.to_dense();
        if self.sign < 0 {
            m.neg()
        } else {
            m
        }
    }
}

/// `ψ(σ) = P_σ ⊗ sign(σ) T_σ` in compact form.
pub fn psi_signed(sigma: &Permutation, kappa: usize) -> SignedPermutation {
    SignedPermutation {
        sign: sigma.sign(),
        matrix: sigma.matrix().kron(&t_sigma(sigma, kappa).matrix),
    }
}

/// `ψ(σ) = P_σ ⊗ sign(σ) T_σ` as a dense `nκⁿ × nκⁿ` matrix.
pub fn psi(sigma: &Permutation, kappa: usize) -> Matrix {
    let p = sigma.matrix().to_dense();
    let t = t_sigma(sigma, kappa).matrix.to_dense();
    p.kron(&t.scale(&int(sigma.sign() as i64)))
}
