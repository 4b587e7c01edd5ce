//! Symmetry predicates.
//!
//! Every property is available twice: by brute force over its definition (all `σ ∈ S_n`,
//! all profiles, all players) and through matrix conditions on the structure vector. The
//! brute-force route reports the first violation it meets, in the order `σ` (lexicographic
//! one-line notation), profile index, player.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::basis::{build_d, build_e};
use crate::game::{FiniteGame, GameSpec, StrategyProfile};
use crate::group::{enumerate, generators, psi_signed, Permutation};
use crate::stp::{dot, LogicalMatrix, Matrix, Rational};
use crate::{Error, Result};

/// Upper bound on `n!·κⁿ·n` for brute-force definition checks.
pub const MAX_DEFINITION_CHECKS: u128 = 100_000_000;

/// `W_[κ^{i−2},κ] ⋉ W_[κ,κ^{i−1}]` for 1-based player `i ≥ 2`: the `κ^i`-square logical
/// matrix exchanging the first and the `i`-th factor of `x_1 ⋯ x_i`.
pub fn skew_transposition_chain(kappa: usize, player: usize) -> LogicalMatrix {
    debug_assert!(player >= 2);
    let p = player as u32;
    LogicalMatrix::swap(kappa.pow(p - 2), kappa).stp(&LogicalMatrix::swap(kappa, kappa.pow(p - 1)))
}

/// `W_[κ^{i−1},κ]` for 1-based player `i ≥ 1`: moves the `i`-th factor to the front.
pub fn symmetric_shift(kappa: usize, player: usize) -> LogicalMatrix {
    debug_assert!(player >= 1);
    LogicalMatrix::swap(kappa.pow(player as u32 - 1), kappa)
}

/// Which defining identity to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    /// `c_i(x) = c_{σ(i)}(x_{σ⁻¹(1)}, …, x_{σ⁻¹(n)})`.
    Symmetric,
    /// `c_i(x) = sign(σ)·c_{σ(i)}(x_{σ⁻¹(1)}, …, x_{σ⁻¹(n)})`.
    Skew,
}

/// Which permutations a check quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Quantifier {
    /// Every `σ ∈ S_n`.
    #[default]
    All,
    /// The transpositions `(1, i)`, which generate `S_n`.
    Generators,
}

/// A counterexample `(σ, profile, player)` to a defining identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub sigma: Permutation,
    pub profile: StrategyProfile,
    pub player: usize,
}

fn permutations(n: usize, quantifier: Quantifier) -> Result<Vec<Permutation>> {
    match quantifier {
        Quantifier::All => enumerate(n),
        Quantifier::Generators => Ok(generators(n)),
    }
}

fn definition_guard(spec: &GameSpec, quantifier: Quantifier) -> Result<()> {
    let group: u128 = match quantifier {
        Quantifier::All => (1..=spec.n() as u128).product(),
        Quantifier::Generators => spec.n() as u128 - 1,
    };
    let work = group * spec.profile_count() as u128 * spec.n() as u128;
    if work > MAX_DEFINITION_CHECKS {
        return Err(Error::SizeGuard {
            what: "brute-force symmetry checks n!*kappa^n*n",
            got: work,
            limit: MAX_DEFINITION_CHECKS,
        });
    }
    Ok(())
}

/// First violation of the chosen identity, or `None` if the game satisfies it.
pub fn definition_violation(
    g: &FiniteGame,
    symmetry: Symmetry,
    quantifier: Quantifier,
) -> Result<Option<Witness>> {
    let spec = g.spec();
    definition_guard(spec, quantifier)?;
    let n = spec.n();
    let mut permuted = alloc::vec![0; n];
    for sigma in permutations(n, quantifier)? {
        let inv = sigma.inverse();
        let negate = symmetry == Symmetry::Skew && sigma.sign() < 0;
        for profile in spec.profiles() {
            let x = profile.choices();
            for (k, slot) in permuted.iter_mut().enumerate() {
                *slot = x[inv.apply(k)];
            }
            let idx = spec.profile_index(&profile);
            let moved = permuted.iter().fold(0, |acc, &v| acc * spec.kappa() + v);
            for i in 0..n {
                let lhs = g.payoff_at(i, idx);
                let rhs = g.payoff_at(sigma.apply(i), moved);
                let holds = if negate { *lhs == -rhs } else { lhs == rhs };
                if !holds {
                    return Ok(Some(Witness {
                        sigma,
                        profile,
                        player: i,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Symmetric by definition, checked over all of `S_n`.
pub fn is_symmetric_def(g: &FiniteGame) -> Result<bool> {
    Ok(definition_violation(g, Symmetry::Symmetric, Quantifier::All)?.is_none())
}

/// Skew-symmetric by definition, checked over all of `S_n`.
pub fn is_skew_def(g: &FiniteGame) -> Result<bool> {
    Ok(definition_violation(g, Symmetry::Skew, Quantifier::All)?.is_none())
}

fn player_row_matrix(g: &FiniteGame, i: usize) -> Matrix {
    Matrix::row_vector(g.player_row(i).to_vec())
}

/// Skew-symmetry through the swap-matrix conditions
///
/// * `V^c_i = −V^c_1 W_[κ^{i−2},κ] W_[κ,κ^{i−1}]` for `i = 2..n`, and, when `n > 2`,
/// * `V^c_1 δ_κ^s [I_{κ^{n−1}} + W_[κ^{i−2},κ] W_[κ,κ^{i−3}] ⊗ I_{κ^{n−i}}] = 0` for
///   `s = 1..κ`, `i = 3..n`,
///
/// all products being semi-tensor products.
pub fn is_skew_thm(g: &FiniteGame) -> bool {
    let spec = g.spec();
    let (n, kappa) = (spec.n(), spec.kappa());
    let v1 = player_row_matrix(g, 0);
    for i in 2..=n {
        let image = v1.stp_logical(&skew_transposition_chain(kappa, i)).neg();
        if image.as_slice() != g.player_row(i - 1) {
            return false;
        }
    }
    for i in 3..=n {
        let swap = inner_transposition(kappa, n, i);
        for s in 0..kappa {
            let slice = v1.stp_logical(&LogicalMatrix::delta(kappa, s).expect("s < kappa"));
            let swapped = slice.mul_logical(&swap).expect("square of matching size");
            if !slice.add(&swapped).expect("same shape").is_zero() {
                return false;
            }
        }
    }
    true
}

/// `W_[κ^{i−2},κ] ⋉ W_[κ,κ^{i−3}] ⊗ I_{κ^{n−i}}`: exchanges factors 1 and `i−1` of an
/// `(n−1)`-factor product (players 2 and `i` once player 1 is split off).
fn inner_transposition(kappa: usize, n: usize, i: usize) -> LogicalMatrix {
    let i32_ = i as u32;
    let chain = LogicalMatrix::swap(kappa.pow(i32_ - 2), kappa)
        .stp(&LogicalMatrix::swap(kappa, kappa.pow(i32_ - 3)))
        .inflate(kappa.pow((n - i) as u32));
    debug_assert_eq!(
        chain,
        crate::group::t_sigma(
            &Permutation::transposition(n - 1, 0, i - 2).expect("in range"),
            kappa
        )
        .matrix,
        "swap chain disagrees with the profile permutation of (2, {i})"
    );
    chain
}

/// Symmetry through the swap-matrix conditions
///
/// * `V^c_1 [I_κ ⊗ (W_[κ^{s−2},κ] W_[κ,κ^{s−1}]) − I_{κ^{s+1}}] = 0` for `s = 2..n−1`, and
/// * `V^c_i = V^c_1 W_[κ^{i−1},κ]` for `i = 2..n`.
pub fn is_symmetric_thm(g: &FiniteGame) -> bool {
    let spec = g.spec();
    let (n, kappa) = (spec.n(), spec.kappa());
    let v1 = player_row_matrix(g, 0);
    for s in 2..n {
        let swap = LogicalMatrix::identity(kappa).kron(&skew_transposition_chain(kappa, s));
        let moved = v1.stp_logical(&swap);
        let fixed = v1.stp_logical(&LogicalMatrix::identity(kappa.pow(s as u32 + 1)));
        if moved != fixed {
            return false;
        }
    }
    (2..=n).all(|i| v1.stp_logical(&symmetric_shift(kappa, i)).as_slice() == g.player_row(i - 1))
}

/// `V_G ψ(σ) = V_G` for every `σ` quantified over.
pub fn is_invariant_psi(g: &FiniteGame, quantifier: Quantifier) -> Result<bool> {
    let spec = g.spec();
    let v = g.structure_vector();
    for sigma in permutations(spec.n(), quantifier)? {
        let rep = psi_signed(&sigma, spec.kappa());
        let negate = rep.sign < 0;
        let invariant = rep.matrix.indices().iter().enumerate().all(|(j, &src)| {
            if negate {
                v[j] == -&v[src]
            } else {
                v[j] == v[src]
            }
        });
        if !invariant {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Σ_i c_i(x) = 0` at every profile.
pub fn is_zero_sum(g: &FiniteGame) -> bool {
    let spec = g.spec();
    (0..spec.profile_count()).all(|idx| {
        (0..spec.n())
            .map(|i| g.payoff_at(i, idx))
            .fold(Rational::zero(), |acc, v| acc + v)
            .is_zero()
    })
}

/// Orthogonal to every row of the given basis.
fn orthogonal_to(v: &[Rational], basis: &Matrix) -> bool {
    basis.row_iter().all(|row| dot(v, row).is_zero())
}

/// Membership of a game in the symmetric, skew-symmetric and asymmetric subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryVerdict {
    pub is_symmetric: bool,
    pub is_skew: bool,
    /// Orthogonal to both the symmetric and the skew-symmetric subspace.
    pub is_asymmetric: bool,
    pub is_zero_sum: bool,
    /// First violation of each failed definition (symmetric first), when brute force ran.
    pub witnesses: Vec<(Symmetry, Witness)>,
}

/// Classify a game. Uses the brute-force definitions (with witnesses) when they fit the size
/// guard, the matrix conditions otherwise.
pub fn verdict(g: &FiniteGame) -> Result<SymmetryVerdict> {
    let mut witnesses = Vec::new();
    let (is_symmetric, is_skew) = if definition_guard(g.spec(), Quantifier::All).is_ok() {
        let sym = definition_violation(g, Symmetry::Symmetric, Quantifier::All)?;
        let skew = definition_violation(g, Symmetry::Skew, Quantifier::All)?;
        let flags = (sym.is_none(), skew.is_none());
        witnesses.extend(sym.map(|w| (Symmetry::Symmetric, w)));
        witnesses.extend(skew.map(|w| (Symmetry::Skew, w)));
        flags
    } else {
        (is_symmetric_thm(g), is_skew_thm(g))
    };
    let v = g.structure_vector();
    let is_asymmetric = orthogonal_to(v, &build_d(g.spec())?.matrix)
        && orthogonal_to(v, &build_e(g.spec())?.matrix);
    Ok(SymmetryVerdict {
        is_symmetric,
        is_skew,
        is_asymmetric,
        is_zero_sum: is_zero_sum(g),
        witnesses,
    })
}
