//! Index from first principles: realize the seaweed as an explicit algebra of
//! matrices, tabulate its structure constants, and measure the generic rank of
//! the Kirillov form `B_ξ(x, y) = ξ([x, y])`. The index is `dim q` minus that
//! rank. Nothing here looks at meander graphs.
//!
//! `sp(2n)` is realized inside `gl(2n)` as the matrices
//! `[[A, B], [C, -Â]]` with `B = B̂` and `C = Ĉ`, where `^` is the transpose
//! about the antidiagonal. In coordinates: `X[i][j] = ε · X[j'][i']` with
//! `i' = 2n+1-i` and `ε = -1` when `i, j` lie in the same half, `+1` otherwise.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::composition::{Composition, SeaweedA, SeaweedC};
use crate::error::{Error, Result};

pub const DEFAULT_BOUND: usize = 4;
pub const DEFAULT_SEED: u64 = 0x5eed_0f3a;
pub const COORDINATE_RANGE: i64 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    Gl,
    Sp,
}

/// Dense square integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    size: usize,
    entries: Vec<i64>,
}

impl Matrix {
    pub fn zero(size: usize) -> Self {
        Self {
            size,
            entries: vec![0; size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// 0-based access.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    fn set(&mut self, i: usize, j: usize, value: i64) {
        self.entries[i * self.size + j] = value;
    }

    fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.size;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let x = self.get(i, k);
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += x * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn bracket(&self, other: &Matrix) -> Matrix {
        let mut out = self.mul(other);
        let back = other.mul(self);
        out.entries
            .iter_mut()
            .zip(back.entries)
            .for_each(|(x, y)| *x -= y);
        out
    }

    fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }
}

/// The form `Ω = [[0, K], [-K, 0]]` (`K` the antidiagonal unit matrix) whose
/// isometry algebra is the realization of `sp(2n)` used here.
pub fn symplectic_form(rank: usize) -> Matrix {
    let size = 2 * rank;
    let mut omega = Matrix::zero(size);
    for i in 0..rank {
        omega.set(i, size - 1 - i, 1);
        omega.set(size - 1 - i, i, -1);
    }
    omega
}

/// `Xᵀ Ω + Ω X = 0`.
pub fn preserves_symplectic_form(x: &Matrix) -> bool {
    let omega = symplectic_form(x.size() / 2);
    let mut sum = x.transpose().mul(&omega);
    let right = omega.mul(x);
    sum.entries
        .iter_mut()
        .zip(right.entries)
        .for_each(|(a, b)| *a += b);
    sum.is_zero()
}

#[derive(Debug, Clone)]
pub struct MatrixAlgebraBasis {
    pub ambient: Ambient,
    pub elements: Vec<Matrix>,
    /// Per element, a matrix position where it has entry 1 and every other
    /// element has entry 0. Coordinates are read off these positions.
    pub leading: Vec<(usize, usize)>,
    /// `structure[u][v]` lists `(w, c)` with `[x_u, x_v] = Σ c · x_w`.
    pub structure: Vec<Vec<Vec<(usize, i64)>>>,
}

impl MatrixAlgebraBasis {
    pub fn dimension(&self) -> usize {
        self.elements.len()
    }

    fn from_elements(
        ambient: Ambient,
        elements: Vec<Matrix>,
        leading: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let dim = elements.len();
        let mut structure = vec![vec![Vec::new(); dim]; dim];
        for u in 0..dim {
            for v in (u + 1)..dim {
                let bracket = elements[u].bracket(&elements[v]);
                if bracket.is_zero() {
                    continue;
                }
                let coeffs: Vec<(usize, i64)> = leading
                    .iter()
                    .enumerate()
                    .map(|(w, &(i, j))| (w, bracket.get(i, j)))
                    .filter(|&(_, c)| c != 0)
                    .collect();
                let mut rebuilt = Matrix::zero(bracket.size());
                for &(w, c) in &coeffs {
                    rebuilt
                        .entries
                        .iter_mut()
                        .zip(&elements[w].entries)
                        .for_each(|(r, e)| *r += c * e);
                }
                if rebuilt != bracket {
                    return Err(Error::NotClosed { left: u, right: v });
                }
                structure[v][u] = coeffs.iter().map(|&(w, c)| (w, -c)).collect();
                structure[u][v] = coeffs;
            }
        }
        Ok(Self {
            ambient,
            elements,
            leading,
            structure,
        })
    }
}

/// Block index (0-based) of every row/column for a composition.
fn blocks(composition: &Composition) -> Vec<usize> {
    composition
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(block, &p)| std::iter::repeat_n(block, p))
        .collect()
}

/// Positions `(i, j)` allowed in both the block-upper parabolic of `top` and
/// the block-lower parabolic of `bottom`.
fn seaweed_positions(top: &Composition, bottom: &Composition) -> Vec<(usize, usize)> {
    let (upper, lower) = (blocks(top), blocks(bottom));
    let size = upper.len();
    let mut positions = Vec::new();
    for i in 0..size {
        for j in 0..size {
            if upper[i] <= upper[j] && lower[i] >= lower[j] {
                positions.push((i, j));
            }
        }
    }
    positions
}

/// Basis `E_ij` of `q^A(a | b) ⊂ gl(N)`.
pub fn build_seaweed_matrices_a(q: &SeaweedA) -> Result<MatrixAlgebraBasis> {
    let size = q.size();
    let positions = seaweed_positions(q.top(), q.bottom());
    let elements = positions
        .iter()
        .map(|&(i, j)| {
            let mut m = Matrix::zero(size);
            m.set(i, j, 1);
            m
        })
        .collect();
    MatrixAlgebraBasis::from_elements(Ambient::Gl, elements, positions)
}

pub fn build_seaweed_matrices(q: &SeaweedC) -> Result<MatrixAlgebraBasis> {
    build_seaweed_matrices_bounded(q, DEFAULT_BOUND)
}

/// Basis of `q = p̃1 ∩ p̃2⁻ ∩ sp(2n)`: positions are paired by
/// `(i, j) -> (j', i')` and each orbit gives one element.
pub fn build_seaweed_matrices_bounded(q: &SeaweedC, bound: usize) -> Result<MatrixAlgebraBasis> {
    let n = q.rank();
    if n > bound {
        return Err(Error::OracleBound { rank: n, bound });
    }
    let sym = q.symmetrize();
    let size = 2 * n;
    let flip = |i: usize| size - 1 - i;
    let positions = seaweed_positions(sym.top(), sym.bottom());

    let mut elements = Vec::new();
    let mut leading = Vec::new();
    for &(i, j) in &positions {
        let partner = (flip(j), flip(i));
        if partner < (i, j) {
            continue;
        }
        let mut m = Matrix::zero(size);
        m.set(i, j, 1);
        if partner != (i, j) {
            let same_half = (i < n) == (j < n);
            m.set(partner.0, partner.1, if same_half { -1 } else { 1 });
        }
        assert!(preserves_symplectic_form(&m), "basis element outside sp");
        elements.push(m);
        leading.push((i, j));
    }
    MatrixAlgebraBasis::from_elements(Ambient::Sp, elements, leading)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankMethod {
    /// Fraction-free (Bareiss) elimination over the integers.
    Exact,
    /// Elimination modulo this many random 30-bit primes, keeping the maximum.
    Modular { primes: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub samples: usize,
    pub bound: usize,
    pub seed: u64,
    /// Independent random stream under the same seed (one per task).
    pub stream: u64,
    pub method: RankMethod,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            samples: 5,
            bound: DEFAULT_BOUND,
            seed: DEFAULT_SEED,
            stream: 0,
            method: RankMethod::Exact,
        }
    }
}

/// The matrix `M(ξ)_{uv} = ξ([x_u, x_v])` for coordinates `ξ_w = ξ(x_w)`.
pub fn kirillov_matrix(basis: &MatrixAlgebraBasis, xi: &[i64]) -> Vec<Vec<i64>> {
    basis
        .structure
        .iter()
        .map(|row| {
            row.iter()
                .map(|coeffs| coeffs.iter().map(|&(w, c)| c * xi[w]).sum())
                .collect()
        })
        .collect()
}

/// Rank by Bareiss elimination with exact integer arithmetic.
pub fn rank_exact(matrix: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut previous = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for i in (rank + 1)..rows {
            for j in (col + 1)..cols {
                let value = (&a[i][j] * &a[rank][col] - &a[i][col] * &a[rank][j]) / &previous;
                a[i][j] = value;
            }
            a[i][col] = BigInt::zero();
        }
        previous = a[rank][col].clone();
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % modulus as u128) as u64;
        }
        base = ((base as u128 * base as u128) % modulus as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Rank over `Z/pZ`; never exceeds the rank over the rationals.
pub fn rank_mod(matrix: &[Vec<i64>], prime: u64) -> usize {
    let p = prime as i128;
    let mut a: Vec<Vec<u64>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| (x as i128).rem_euclid(p) as u64).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mul = |x: u64, y: u64| ((x as u128 * y as u128) % prime as u128) as u64;
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inverse = pow_mod(a[rank][col], prime - 2, prime);
        let (head, below) = a.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in below {
            let factor = mul(row[col], inverse);
            if factor == 0 {
                continue;
            }
            for (x, &p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = (*x + prime - mul(factor, p)) % prime;
            }
        }
        rank += 1;
    }
    rank
}

fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A random prime in `[2^29, 2^30)`.
fn random_prime(rng: &mut impl Rng) -> u64 {
    let mut candidate = rng.gen_range((1u64 << 29)..(1u64 << 30)) | 1;
    while !is_prime(candidate) {
        candidate += 2;
        if candidate >= 1 << 30 {
            candidate = (1 << 29) + 1;
        }
    }
    candidate
}

/// Generic rank of the Kirillov form, estimated from random functionals.
pub fn generic_rank(basis: &MatrixAlgebraBasis, config: &OracleConfig) -> Result<usize> {
    if config.samples == 0 {
        return Err(Error::ZeroSamples);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(config.stream);
    let dim = basis.dimension();
    let mut best = 0;
    for _ in 0..config.samples {
        let xi: Vec<i64> = (0..dim)
            .map(|_| rng.gen_range(-COORDINATE_RANGE..=COORDINATE_RANGE))
            .collect();
        let m = kirillov_matrix(basis, &xi);
        let rank = match config.method {
            RankMethod::Exact => rank_exact(&m),
            RankMethod::Modular { primes } => (0..primes.max(1))
                .map(|_| rank_mod(&m, random_prime(&mut rng)))
                .max()
                .unwrap_or(0),
        };
        best = best.max(rank);
        if best == dim {
            break;
        }
    }
    Ok(best)
}

/// `dim q - max rank M(ξ)` over `samples` random functionals.
pub fn index_oracle(q: &SeaweedC, samples: usize) -> Result<usize> {
    index_oracle_with(
        q,
        &OracleConfig {
            samples,
            ..OracleConfig::default()
        },
    )
}

pub fn index_oracle_with(q: &SeaweedC, config: &OracleConfig) -> Result<usize> {
    if config.samples == 0 {
        return Err(Error::ZeroSamples);
    }
    let basis = build_seaweed_matrices_bounded(q, config.bound)?;
    Ok(basis.dimension() - generic_rank(&basis, config)?)
}

/// Same measurement for a seaweed of `gl(N)`.
pub fn index_oracle_a(q: &SeaweedA, config: &OracleConfig) -> Result<usize> {
    let basis = build_seaweed_matrices_a(q)?;
    Ok(basis.dimension() - generic_rank(&basis, config)?)
}
