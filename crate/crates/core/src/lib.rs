//! Exact linear algebra for finite normal-form games.
//!
//! A game with `n` players, each choosing among `kappa` strategies, is identified with its
//! structure vector: the concatenation of the `n` payoff rows, one entry per strategy profile
//! in lexicographic order (player 1 most significant). On that vector space this crate
//! provides
//!
//! * semi-tensor product (STP) algebra over exact rationals ([`stp`]),
//! * the symmetric group acting on players and its linear representation ([`group`]),
//! * symmetry / skew-symmetry predicates, by brute force and by matrix conditions
//!   ([`symmetry`]),
//! * explicit orthogonal bases of the symmetric and skew-symmetric subspaces ([`basis`]),
//! * the orthogonal decomposition symmetric ⊕ skew-symmetric ⊕ asymmetric ([`decompose`]).
//!
//! Indices are 0-based throughout the API: players `0..n`, strategies `0..kappa`, profiles
//! `0..kappa^n`. File formats and rendered tables use the 1-based labels of the domain.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod basis;
pub mod decompose;
mod error;
pub mod game;
pub mod group;
pub mod stp;
pub mod symmetry;

pub use basis::{BasisKind, BasisMatrix, Dimensions};
pub use decompose::{Decomposer, Decomposition};
pub use error::{Error, Result};
pub use game::{FiniteGame, GameSpec, StrategyProfile};
pub use group::Permutation;
pub use stp::{LogicalMatrix, Matrix, Rational};
pub use symmetry::SymmetryVerdict;
