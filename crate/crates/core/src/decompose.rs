//! Orthogonal decomposition `V_G = V_G^S + V_G^K + V_G^E`.
//!
//! With `Q = [D; E]`, the coordinates are `X = V_G Qᵀ (QQᵀ)⁻¹`. `QQᵀ` is diagonal, so each
//! coordinate is `⟨V_G, q⟩ / ⟨q, q⟩` for the corresponding row `q`; the Gram matrix is still
//! computed once per shape and checked for diagonality before it is relied on.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::basis::{build_d, build_e, BasisMatrix, Dimensions};
use crate::game::{FiniteGame, GameSpec};
use crate::stp::{dot, frac, LogicalMatrix, Matrix, Rational};
use crate::symmetry::{verdict, SymmetryVerdict};
use crate::{Error, Result};

/// The three components of a game and its coordinates against `D` and `E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub symmetric: FiniteGame,
    pub skew: FiniteGame,
    pub asymmetric: FiniteGame,
    /// `X₁ ∈ ℚ^β`, coordinates of the skew-symmetric part against the rows of `D`.
    pub skew_coords: Vec<Rational>,
    /// `X₂ ∈ ℚ^α`, coordinates of the symmetric part against the rows of `E`.
    pub symmetric_coords: Vec<Rational>,
}

impl Decomposition {
    /// `V^S + V^K + V^E`.
    pub fn reconstruct(&self) -> Result<FiniteGame> {
        let one = Rational::from_integer(1.into());
        self.symmetric
            .linear_combination(&one, &self.skew, &one)?
            .linear_combination(&one, &self.asymmetric, &one)
    }
}

/// Projection onto `𝒮 ⊕ 𝒦 ⊕ ℰ` for one game shape, holding the bases and their norms.
#[derive(Clone, Debug)]
pub struct Decomposer {
    spec: GameSpec,
    d: BasisMatrix,
    e: BasisMatrix,
    d_norms: Vec<Rational>,
    e_norms: Vec<Rational>,
}

impl Decomposer {
    pub fn new(spec: GameSpec) -> Result<Self> {
        let d = build_d(&spec)?;
        let e = build_e(&spec)?;
        let q = Matrix::vstack(&[d.matrix.clone(), e.matrix.clone()])?;
        let gram = q.gram();
        if let Some((r, c)) = gram.first_off_diagonal() {
            return Err(Error::NonDiagonalGram(r, c));
        }
        let mut norms = gram.diagonal();
        let e_norms = norms.split_off(d.len());
        Ok(Decomposer {
            spec,
            d,
            e,
            d_norms: norms,
            e_norms,
        })
    }

    pub fn spec(&self) -> &GameSpec {
        &self.spec
    }

    /// Skew-symmetric basis `D`.
    pub fn skew_basis(&self) -> &BasisMatrix {
        &self.d
    }

    /// Symmetric basis `E`.
    pub fn symmetric_basis(&self) -> &BasisMatrix {
        &self.e
    }

    pub fn decompose(&self, g: &FiniteGame) -> Result<Decomposition> {
        if g.spec() != &self.spec {
            return Err(Error::mismatch(
                "decomposition",
                alloc::format!(
                    "game in G[{};{}] against a decomposer for G[{};{}]",
                    g.spec().n(),
                    g.spec().kappa(),
                    self.spec.n(),
                    self.spec.kappa()
                ),
            ));
        }
        let v = g.structure_vector();
        let (skew_coords, skew) = project(v, &self.d.matrix, &self.d_norms);
        let (symmetric_coords, symmetric) = project(v, &self.e.matrix, &self.e_norms);
        let asymmetric: Vec<Rational> = v
            .iter()
            .zip(&symmetric)
            .zip(&skew)
            .map(|((x, s), k)| x - s - k)
            .collect();
        Ok(Decomposition {
            symmetric: FiniteGame::from_structure_vector(self.spec, symmetric)?,
            skew: FiniteGame::from_structure_vector(self.spec, skew)?,
            asymmetric: FiniteGame::from_structure_vector(self.spec, asymmetric)?,
            skew_coords,
            symmetric_coords,
        })
    }
}

/// Coordinates `⟨v,row⟩/⟨row,row⟩` and the combination `Σ coord·row`.
fn project(v: &[Rational], basis: &Matrix, norms: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut combo = alloc::vec![Rational::zero(); basis.cols()];
    let coords: Vec<Rational> = basis
        .row_iter()
        .zip(norms)
        .map(|(row, norm)| {
            let x = dot(v, row) / norm;
            if !x.is_zero() {
                for (acc, r) in combo.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *acc += &x * r;
                    }
                }
            }
            x
        })
        .collect();
    (coords, combo)
}

/// Decompose a single game, building the bases for its shape.
pub fn decompose(g: &FiniteGame) -> Result<Decomposition> {
    Decomposer::new(*g.spec())?.decompose(g)
}

/// Closed form for two players: with `S = (V^c_1 + V^c_2 W_[κ,κ])/2` and
/// `K = (V^c_1 − V^c_2 W_[κ,κ])/2`, the symmetric part is `[S, S W_[κ,κ]]` and the
/// skew-symmetric part `[K, −K W_[κ,κ]]`. The asymmetric remainder is zero.
///
/// Coordinates are those of the closed-form components against `D` and `E`.
pub fn two_player_decompose(g: &FiniteGame) -> Result<Decomposition> {
    let spec = *g.spec();
    if spec.n() != 2 {
        return Err(Error::NotTwoPlayer(spec.n()));
    }
    let w = LogicalMatrix::swap(spec.kappa(), spec.kappa());
    let half = frac(1, 2);
    let v1 = Matrix::row_vector(g.player_row(0).to_vec());
    let v2w = Matrix::row_vector(g.player_row(1).to_vec()).mul_logical(&w)?;
    let s = v1.add(&v2w)?.scale(&half);
    let k = v1.sub(&v2w)?.scale(&half);
    let sym = Matrix::hstack(&[s.clone(), s.mul_logical(&w)?])?;
    let skew = Matrix::hstack(&[k.clone(), k.mul_logical(&w)?.neg()])?;
    let asym: Vec<Rational> = g
        .structure_vector()
        .iter()
        .zip(sym.as_slice())
        .zip(skew.as_slice())
        .map(|((x, a), b)| x - a - b)
        .collect();

    let decomposer = Decomposer::new(spec)?;
    let coords = |v: &[Rational], basis: &BasisMatrix, norms: &[Rational]| -> Vec<Rational> {
        basis
            .matrix
            .row_iter()
            .zip(norms)
            .map(|(row, norm)| dot(v, row) / norm)
            .collect()
    };
    let skew_coords = coords(skew.as_slice(), &decomposer.d, &decomposer.d_norms);
    let symmetric_coords = coords(sym.as_slice(), &decomposer.e, &decomposer.e_norms);
    Ok(Decomposition {
        symmetric: FiniteGame::from_structure_vector(spec, sym.into_vec())?,
        skew: FiniteGame::from_structure_vector(spec, skew.into_vec())?,
        asymmetric: FiniteGame::from_structure_vector(spec, asym)?,
        skew_coords,
        symmetric_coords,
    })
}

/// Summary of where a game lives in `𝒮 ⊕ 𝒦 ⊕ ℰ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub dimensions: Dimensions,
    /// Squared norms of the symmetric, skew-symmetric and asymmetric components.
    pub norm_symmetric: Rational,
    pub norm_skew: Rational,
    pub norm_asymmetric: Rational,
    /// The game equals its symmetric component (likewise below).
    pub pure_symmetric: bool,
    pub pure_skew: bool,
    pub pure_asymmetric: bool,
    pub verdict: SymmetryVerdict,
    pub decomposition: Decomposition,
}

pub fn classify(g: &FiniteGame) -> Result<Classification> {
    let decomposition = decompose(g)?;
    let verdict = verdict(g)?;
    let v = g.structure_vector();
    Ok(Classification {
        dimensions: Dimensions::of(g.spec()),
        norm_symmetric: decomposition.symmetric.norm_squared(),
        norm_skew: decomposition.skew.norm_squared(),
        norm_asymmetric: decomposition.asymmetric.norm_squared(),
        pure_symmetric: decomposition.symmetric.structure_vector() == v,
        pure_skew: decomposition.skew.structure_vector() == v,
        pure_asymmetric: decomposition.asymmetric.structure_vector() == v,
        verdict,
        decomposition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stp::int;
    use alloc::vec;
    use alloc::vec::Vec;

    fn example7() -> FiniteGame {
        let mut v = vec![int(0); 24];
        v[2] = int(1);
        v[8 + 5] = int(1);
        v[16 + 6] = int(1);
        FiniteGame::from_structure_vector(GameSpec::new(3, 2).unwrap(), v).unwrap()
    }

    fn fracs(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|&(p, q)| frac(p, q)).collect()
    }

    #[test]
    fn example7_coordinates() {
        let d = decompose(&example7()).unwrap();
        assert_eq!(d.skew_coords, fracs(&[(-1, 6), (0, 1)]));
        assert_eq!(
            d.symmetric_coords,
            fracs(&[(0, 1), (0, 1), (1, 6), (0, 1), (2, 3), (0, 1)])
        );
        assert_eq!(d.reconstruct().unwrap(), example7());
    }

    #[test]
    fn symmetric_and_zero_inputs() {
        let spec = GameSpec::new(3, 2).unwrap();
        let (a, b, c, dd, e, f) = (1, 2, 3, 4, 5, 6);
        let rows = [
            [a, b, b, dd, c, e, e, f],
            [a, b, c, e, b, dd, e, f],
            [a, c, b, e, b, e, dd, f],
        ];
        let g = FiniteGame::from_payoff_tables(
            spec,
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
        .unwrap();
        let d = decompose(&g).unwrap();
        assert_eq!(d.symmetric, g);
        assert!(d.skew.is_zero() && d.asymmetric.is_zero());

        let z = decompose(&FiniteGame::zero(spec)).unwrap();
        assert!(z.symmetric.is_zero() && z.skew.is_zero() && z.asymmetric.is_zero());
    }

    #[test]
    fn classification() {
        let c = classify(&example7()).unwrap();
        assert!(
            !c.norm_symmetric.is_zero() && !c.norm_skew.is_zero() && !c.norm_asymmetric.is_zero()
        );
        assert!(!c.pure_symmetric && !c.pure_skew && !c.pure_asymmetric);
        assert_eq!(c.dimensions.dim_asymmetric, 16);
        // squared norms of the components add up to that of the game
        assert_eq!(
            &c.norm_symmetric + &c.norm_skew + &c.norm_asymmetric,
            example7().norm_squared()
        );
    }

    #[test]
    fn two_player_closed_form_on_bimatrix() {
        // (α,β | γ,δ ; ξ,η | λ,μ) = (1,2 | 3,4 ; 5,6 | 7,8)
        let spec = GameSpec::new(2, 2).unwrap();
        let g = FiniteGame::from_payoff_tables(
            spec,
            vec![
                vec![int(1), int(3), int(5), int(7)],
                vec![int(2), int(4), int(6), int(8)],
            ],
        )
        .unwrap();
        let d = two_player_decompose(&g).unwrap();
        // a = (α+β)/2, b = (γ+η)/2, c = (ξ+δ)/2, d = (λ+μ)/2
        assert_eq!(
            d.symmetric.player_row(0),
            &fracs(&[(3, 2), (9, 2), (9, 2), (15, 2)])[..]
        );
        // a' = (α−β)/2, b' = (γ−η)/2, c' = (ξ−δ)/2, d' = (λ−μ)/2
        assert_eq!(
            d.skew.player_row(0),
            &fracs(&[(-1, 2), (-3, 2), (1, 2), (-1, 2)])[..]
        );
        assert_eq!(
            d.skew.player_row(1),
            &fracs(&[(1, 2), (-1, 2), (3, 2), (1, 2)])[..]
        );
        assert!(d.asymmetric.is_zero());
        assert_eq!(d, decompose(&g).unwrap());
        assert!(matches!(
            two_player_decompose(&example7()),
            Err(Error::NotTwoPlayer(3))
        ));
    }

    #[test]
    fn shape_mismatch() {
        let dec = Decomposer::new(GameSpec::new(2, 3).unwrap()).unwrap();
        assert!(dec.decompose(&example7()).is_err());
    }
}
