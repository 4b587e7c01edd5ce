//! Finite games in `𝒢_[n;κ]` and their structure vectors.
//!
//! Profiles are indexed lexicographically with player 1 most significant, which is the
//! position of `⋉_j δ_κ^{x_j}` in `Δ_{κⁿ}` and the column order of payoff tables
//! (`111, 112, 121, …`).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::stp::{dot, Matrix, Rational};
use crate::{Error, Result};

/// Upper bound on the number of profiles `κⁿ`.
pub const MAX_PROFILES: usize = 1_000_000;

/// Shape of a game: `n` players, each with strategies `0..kappa`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GameSpec {
    n: usize,
    kappa: usize,
    profiles: usize,
}

impl GameSpec {
    pub fn new(n: usize, kappa: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooSmall {
                what: "player count n",
                min: 2,
                got: n,
            });
        }
        if kappa < 2 {
            return Err(Error::TooSmall {
                what: "strategy count kappa",
                min: 2,
                got: kappa,
            });
        }
        let profiles = u32::try_from(n)
            .ok()
            .and_then(|e| kappa.checked_pow(e))
            .filter(|&p| p <= MAX_PROFILES)
            .ok_or(Error::SizeGuard {
                what: "profile count kappa^n",
                got: (kappa as u128).saturating_pow(n.min(128) as u32),
                limit: MAX_PROFILES as u128,
            })?;
        Ok(GameSpec { n, kappa, profiles })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    /// `κⁿ`.
    pub fn profile_count(&self) -> usize {
        self.profiles
    }

    /// `nκⁿ`, the dimension of the game space.
    pub fn dimension(&self) -> usize {
        self.n * self.profiles
    }

    /// Index of a profile (0-based strategies) in canonical order.
    pub fn profile_index(&self, profile: &StrategyProfile) -> usize {
        profile
            .choices
            .iter()
            .fold(0, |acc, &x| acc * self.kappa + x)
    }

    /// Inverse of [`GameSpec::profile_index`].
    pub fn profile_of_index(&self, index: usize) -> Result<StrategyProfile> {
        if index >= self.profiles {
            return Err(Error::OutOfRange {
                what: "profile index",
                got: index,
                bound: self.profiles,
            });
        }
        let mut choices = vec![0; self.n];
        let mut rest = index;
        for slot in choices.iter_mut().rev() {
            *slot = rest % self.kappa;
            rest /= self.kappa;
        }
        Ok(StrategyProfile { choices })
    }

    /// Column label of a profile as used in payoff tables, e.g. `"121"`. Labels are
    /// comma-separated once strategies need more than one digit.
    pub fn profile_label(&self, profile: &StrategyProfile) -> String {
        let sep = if self.kappa > 9 { "," } else { "" };
        let mut s = String::new();
        for (i, &x) in profile.choices.iter().enumerate() {
            if i > 0 {
                s.push_str(sep);
            }
            s.push_str(&format!("{}", x + 1));
        }
        s
    }

    /// All profiles in canonical order.
    pub fn profiles(&self) -> impl Iterator<Item = StrategyProfile> + '_ {
        (0..self.profiles).map(move |i| self.profile_of_index(i).expect("index in range"))
    }
}

/// One strategy per player, 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StrategyProfile {
    choices: Vec<usize>,
}

impl StrategyProfile {
    pub fn new(spec: &GameSpec, choices: Vec<usize>) -> Result<Self> {
        if choices.len() != spec.n {
            return Err(Error::mismatch(
                "strategy profile",
                format!("{} choices for {} players", choices.len(), spec.n),
            ));
        }
        if let Some(&bad) = choices.iter().find(|&&x| x >= spec.kappa) {
            return Err(Error::OutOfRange {
                what: "strategy",
                got: bad,
                bound: spec.kappa,
            });
        }
        Ok(StrategyProfile { choices })
    }

    /// From 1-based strategy labels, e.g. `[1, 2, 1]`.
    pub fn from_one_based(spec: &GameSpec, labels: &[usize]) -> Result<Self> {
        let choices = labels
            .iter()
            .map(|&x| {
                x.checked_sub(1).ok_or(Error::OutOfRange {
                    what: "1-based strategy label",
                    got: x,
                    bound: spec.kappa + 1,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(spec, choices)
    }

    pub fn choices(&self) -> &[usize] {
        &self.choices
    }
}

/// A finite game stored as its structure vector `V_G = [V^c_1, …, V^c_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGame {
    spec: GameSpec,
    payoffs: Vec<Rational>,
    name: Option<String>,
}

impl FiniteGame {
    pub fn zero(spec: GameSpec) -> Self {
        FiniteGame {
            spec,
            payoffs: vec![Rational::zero(); spec.dimension()],
            name: None,
        }
    }

    /// From the concatenated structure vector of length `nκⁿ`.
    pub fn from_structure_vector(spec: GameSpec, payoffs: Vec<Rational>) -> Result<Self> {
        if payoffs.len() != spec.dimension() {
            return Err(Error::mismatch(
                "structure vector",
                format!(
                    "{} entries, expected n*kappa^n = {}",
                    payoffs.len(),
                    spec.dimension()
                ),
            ));
        }
        Ok(FiniteGame {
            spec,
            payoffs,
            name: None,
        })
    }

    /// From `n` payoff rows with `κⁿ` entries each, columns in canonical profile order.
    pub fn from_payoff_tables(spec: GameSpec, tables: Vec<Vec<Rational>>) -> Result<Self> {
        if tables.len() != spec.n {
            return Err(Error::mismatch(
                "payoff tables",
                format!("{} rows for {} players", tables.len(), spec.n),
            ));
        }
        let mut payoffs = Vec::with_capacity(spec.dimension());
        for (i, row) in tables.into_iter().enumerate() {
            if row.len() != spec.profiles {
                return Err(Error::mismatch(
                    "payoff tables",
                    format!(
                        "row c_{} has {} entries, expected {}",
                        i + 1,
                        row.len(),
                        spec.profiles
                    ),
                ));
            }
            payoffs.extend(row);
        }
        Ok(FiniteGame {
            spec,
            payoffs,
            name: None,
        })
    }

    pub fn to_payoff_tables(&self) -> Vec<Vec<Rational>> {
        (0..self.spec.n)
            .map(|i| self.player_row(i).to_vec())
            .collect()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn spec(&self) -> &GameSpec {
        &self.spec
    }

    pub fn structure_vector(&self) -> &[Rational] {
        &self.payoffs
    }

    pub fn into_structure_vector(self) -> Vec<Rational> {
        self.payoffs
    }

    /// `V^c_i` (0-based player).
    pub fn player_row(&self, i: usize) -> &[Rational] {
        let k = self.spec.profiles;
        &self.payoffs[i * k..(i + 1) * k]
    }

    /// `c_i(s)` (0-based player).
    pub fn payoff(&self, player: usize, profile: &StrategyProfile) -> Result<&Rational> {
        if player >= self.spec.n {
            return Err(Error::OutOfRange {
                what: "player",
                got: player,
                bound: self.spec.n,
            });
        }
        if profile.choices.len() != self.spec.n
            || profile.choices.iter().any(|&x| x >= self.spec.kappa)
        {
            return Err(Error::mismatch(
                "payoff evaluation",
                format!(
                    "profile {:?} does not fit {}x{}",
                    profile.choices, self.spec.n, self.spec.kappa
                ),
            ));
        }
        Ok(self.payoff_at(player, self.spec.profile_index(profile)))
    }

    /// Payoff of `player` at the profile with canonical index `index`.
    pub fn payoff_at(&self, player: usize, index: usize) -> &Rational {
        &self.payoffs[player * self.spec.profiles + index]
    }

    pub fn is_zero(&self) -> bool {
        self.payoffs.iter().all(Zero::is_zero)
    }

    /// Squared Euclidean norm of the structure vector.
    pub fn norm_squared(&self) -> Rational {
        dot(&self.payoffs, &self.payoffs)
    }

    /// Payoff matrices `(A, B)` of a two-player game, `V_R(A)ᵀ = V^c_1`, `V_R(B)ᵀ = V^c_2`.
    pub fn two_player_matrices(&self) -> Result<(Matrix, Matrix)> {
        if self.spec.n != 2 {
            return Err(Error::NotTwoPlayer(self.spec.n));
        }
        let k = self.spec.kappa;
        Ok((
            Matrix::from_vec(k, k, self.player_row(0).to_vec())?,
            Matrix::from_vec(k, k, self.player_row(1).to_vec())?,
        ))
    }

    /// `a·self + b·other`, keeping `self`'s name.
    pub fn linear_combination(
        &self,
        a: &Rational,
        other: &FiniteGame,
        b: &Rational,
    ) -> Result<Self> {
        if self.spec != other.spec {
            return Err(Error::mismatch(
                "game combination",
                format!(
                    "G[{};{}] against G[{};{}]",
                    self.spec.n, self.spec.kappa, other.spec.n, other.spec.kappa
                ),
            ));
        }
        Ok(FiniteGame {
            spec: self.spec,
            payoffs: self
                .payoffs
                .iter()
                .zip(&other.payoffs)
                .map(|(x, y)| a * x + b * y)
                .collect(),
            name: self.name.clone(),
        })
    }
}
