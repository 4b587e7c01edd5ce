//! Fixtures, random games and independent oracles shared by the integration tests.
#![allow(dead_code)]

use gamesym_core::basis::{build_d, build_e};
use gamesym_core::stp::{frac, int};
use gamesym_core::{FiniteGame, GameSpec, Matrix, Rational};
use num_traits::{One, Zero};
use rand::Rng;

pub fn spec(n: usize, kappa: usize) -> GameSpec {
    GameSpec::new(n, kappa).unwrap()
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

pub fn game(n: usize, kappa: usize, rows: &[Vec<i64>]) -> FiniteGame {
    FiniteGame::from_payoff_tables(spec(n, kappa), rows.iter().map(|r| ints(r)).collect()).unwrap()
}

/// Generic symmetric game in G[3;2] with parameters a..f.
pub fn symmetric_3_2(p: [i64; 6]) -> FiniteGame {
    let [a, b, c, d, e, f] = p;
    game(
        3,
        2,
        &[
            vec![a, b, b, d, c, e, e, f],
            vec![a, b, c, e, b, d, e, f],
            vec![a, c, b, e, b, e, d, f],
        ],
    )
}

/// Generic skew-symmetric game in G[3;2] with parameters g, h.
pub fn skew_3_2(g: i64, h: i64) -> FiniteGame {
    game(
        3,
        2,
        &[
            vec![0, g, -g, 0, 0, h, -h, 0],
            vec![0, -g, 0, -h, g, 0, h, 0],
            vec![0, 0, g, h, -g, -h, 0, 0],
        ],
    )
}

/// Numerical example in G[3;2]: V^c_1 = δ_8^3, V^c_2 = δ_8^6, V^c_3 = δ_8^7.
pub fn numerical_example() -> FiniteGame {
    let mut rows = vec![vec![0; 8]; 3];
    rows[0][2] = 1;
    rows[1][5] = 1;
    rows[2][6] = 1;
    game(3, 2, &rows)
}

/// Skew-symmetric game in G[3;3] from the 9-parameter first payoff row; the other two
/// rows follow from c_2(x) = −c_1(x2,x1,x3) and c_3(x) = −c_1(x3,x2,x1).
pub fn skew_3_3(a: [i64; 3], b: [i64; 3], c: [i64; 3]) -> FiniteGame {
    let block = |p: [i64; 3]| [0, p[0], p[1], -p[0], 0, p[2], -p[1], -p[2], 0];
    let v1: Vec<i64> = block(a)
        .into_iter()
        .chain(block(b))
        .chain(block(c))
        .collect();
    let at = |x: [usize; 3]| v1[x[0] * 9 + x[1] * 3 + x[2]];
    let mut v2 = vec![0; 27];
    let mut v3 = vec![0; 27];
    for idx in 0..27 {
        let x = [idx / 9, idx / 3 % 3, idx % 3];
        v2[idx] = -at([x[1], x[0], x[2]]);
        v3[idx] = -at([x[2], x[1], x[0]]);
    }
    game(3, 3, &[v1, v2, v3])
}

/// All worked-example games with their expected (symmetric, skew) status.
pub fn known_games() -> Vec<(&'static str, FiniteGame, bool, bool)> {
    vec![
        (
            "symmetric G[3;2] table",
            symmetric_3_2([1, 2, 3, 4, 5, 6]),
            true,
            false,
        ),
        ("skew G[3;2] table", skew_3_2(1, 2), false, true),
        (
            "numerical example G[3;2]",
            numerical_example(),
            false,
            false,
        ),
        (
            "skew G[3;3] example",
            skew_3_3([1, 2, 3], [4, 5, 6], [7, 8, 9]),
            false,
            true,
        ),
        ("zero G[3;2]", FiniteGame::zero(spec(3, 2)), true, true),
        (
            "symmetric bimatrix",
            game(2, 2, &[vec![1, 2, 3, 4], vec![1, 3, 2, 4]]),
            true,
            false,
        ),
        (
            "skew bimatrix",
            game(2, 2, &[vec![1, 2, 3, 4], vec![-1, -3, -2, -4]]),
            false,
            true,
        ),
    ]
}

/// Small random rational with numerator in −9..=9 and denominator in 1..=4.
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    frac(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

pub fn random_game<R: Rng>(rng: &mut R, spec: GameSpec) -> FiniteGame {
    let v = (0..spec.dimension())
        .map(|_| random_rational(rng))
        .collect();
    FiniteGame::from_structure_vector(spec, v).unwrap()
}

/// Random combination of the rows of `basis`.
pub fn random_in_span<R: Rng>(rng: &mut R, spec: GameSpec, basis: &Matrix) -> FiniteGame {
    let mut v = vec![Rational::zero(); spec.dimension()];
    for row in basis.row_iter() {
        let c = random_rational(rng);
        for (acc, x) in v.iter_mut().zip(row) {
            *acc += &c * x;
        }
    }
    FiniteGame::from_structure_vector(spec, v).unwrap()
}

pub fn random_skew<R: Rng>(rng: &mut R, spec: GameSpec) -> FiniteGame {
    random_in_span(rng, spec, &build_d(&spec).unwrap().matrix)
}

pub fn random_symmetric<R: Rng>(rng: &mut R, spec: GameSpec) -> FiniteGame {
    random_in_span(rng, spec, &build_e(&spec).unwrap().matrix)
}

/// A mix of general, symmetric, skew-symmetric and slightly perturbed games, so that both
/// answers of every predicate are exercised.
pub fn random_mixed<R: Rng>(rng: &mut R, spec: GameSpec, i: usize) -> FiniteGame {
    match i % 5 {
        0 => random_game(rng, spec),
        1 => random_symmetric(rng, spec),
        2 => random_skew(rng, spec),
        3 | 4 => {
            let base = if i % 5 == 3 {
                random_symmetric(rng, spec)
            } else {
                random_skew(rng, spec)
            };
            let mut v = base.into_structure_vector();
            let at = rng.gen_range(0..v.len());
            v[at] += Rational::one();
            FiniteGame::from_structure_vector(spec, v).unwrap()
        }
        _ => unreachable!(),
    }
}

/// All permutations of 0..n as images, built by insertion; independent of the library.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for k in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for pos in 0..=k {
                let mut q: Vec<usize> = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Sign by counting inversions.
pub fn inversion_sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Linear constraints on the structure vector expressing
/// `c_i(x) = s(σ) c_{σ(i)}(x_{σ⁻¹(1)}, …, x_{σ⁻¹(n)})` for every σ, i and x,
/// with `s ≡ 1` (`skew = false`) or `s = sign` (`skew = true`).
pub fn definition_constraints(spec: &GameSpec, skew: bool) -> Matrix {
    let (n, k) = (spec.n(), spec.kappa());
    let m = spec.profile_count();
    let mut rows = Vec::new();
    for sigma in all_permutations(n) {
        let s = if skew { inversion_sign(&sigma) } else { 1 };
        let mut inv = vec![0; n];
        for (i, &si) in sigma.iter().enumerate() {
            inv[si] = i;
        }
        for idx in 0..m {
            let mut x = vec![0; n];
            let mut r = idx;
            for slot in (0..n).rev() {
                x[slot] = r % k;
                r /= k;
            }
            let y_idx = (0..n).fold(0, |acc, j| acc * k + x[inv[j]]);
            for i in 0..n {
                let mut row = vec![Rational::zero(); spec.dimension()];
                row[i * m + idx] += Rational::one();
                row[sigma[i] * m + y_idx] -= int(s);
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(spec.dimension(), rows).unwrap()
}

/// Reduced row echelon form; returns the nonzero rows and the pivot columns.
pub fn rref(m: &Matrix) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut a: Vec<Vec<Rational>> = m.row_iter().map(|r| r.to_vec()).collect();
    let cols = m.cols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let lead = a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = &*x / &lead;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Basis of `{v : M v = 0}`, one vector per row.
pub fn nullspace(m: &Matrix) -> Matrix {
    let (reduced, pivots) = rref(m);
    let cols = m.cols();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let rows = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect();
    Matrix::from_rows(cols, rows).unwrap()
}
