//! Exact semi-tensor product algebra.
//!
//! Scalars are arbitrary-precision rationals; there is no rounding anywhere. Dense matrices
//! ([`Matrix`]) carry general payoff data and bases, while logical matrices
//! ([`LogicalMatrix`], every column a column of an identity matrix) carry swap matrices,
//! permutation matrices and profile conversions in the compact `δ_m[i_1, …, i_r]` form.

mod logical;
mod matrix;

pub use logical::LogicalMatrix;
pub use matrix::Matrix;

use num_bigint::BigInt;
use num_traits::Zero;

/// Exact rational scalar, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Integer as a [`Rational`].
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// The fraction `numer / denom`, reduced.
///
/// Panics if `denom` is zero.
pub fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Standard inner product of two equally long rational vectors. Zero entries of `a` are
/// skipped, which matters for the sparse basis rows this crate works with.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Semi-tensor product `a ⋉ b = (a ⊗ I_{t/n})(b ⊗ I_{t/p})` with `t = lcm(n, p)`, where `a`
/// is `m×n` and `b` is `p×q`.
pub fn stp(a: &Matrix, b: &Matrix) -> Matrix {
    a.stp(b)
}

/// Kronecker product.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    a.kron(b)
}

/// Dense swap matrix `W_[m,n]`, the `mn×mn` permutation with `W (x ⋉ y) = y ⋉ x` for
/// `x ∈ Δ_m`, `y ∈ Δ_n`. `W_[m,1] = W_[1,m] = I_m`.
pub fn swap_matrix(m: usize, n: usize) -> Matrix {
    LogicalMatrix::swap(m, n).to_dense()
}

/// Column-wise semi-tensor product of two matrices with the same column count.
pub fn khatri_rao(a: &Matrix, b: &Matrix) -> crate::Result<Matrix> {
    a.khatri_rao(b)
}

/// Row stacking form `V_R(a)` as a column vector.
pub fn row_stack(a: &Matrix) -> Matrix {
    a.row_stack()
}

/// Column stacking form `V_C(a)` as a column vector.
pub fn col_stack(a: &Matrix) -> Matrix {
    a.col_stack()
}
