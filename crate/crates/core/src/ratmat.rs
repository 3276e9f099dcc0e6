//! Small exact-rational matrices: rank, kernel, inverse.
//!
//! Everything here is Gaussian elimination over `BigRational`. Matrices are
//! tiny (rank at most a dozen or so), so no pivoting strategy beyond "first
//! nonzero" is needed; exact arithmetic makes the results unconditional.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Row-reduce `m` in place to row echelon form; returns the rank.
pub fn row_reduce(m: &mut Vec<Vec<Rat>>) -> usize {
    if m.is_empty() {
        return 0;
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].clone();
        for c in col..cols {
            m[rank][c] = &m[rank][c] / &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..cols {
                    m[r][c] = &m[r][c] - &f * &m[rank][c];
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

pub fn rank(m: &[Vec<Rat>]) -> usize {
    let mut work = m.to_vec();
    row_reduce(&mut work)
}

/// Basis of the right kernel `{x : m x = 0}`.
pub fn kernel_basis(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    if m.is_empty() {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut work = m.to_vec();
    let rank = row_reduce(&mut work);
    // Identify pivot columns of the reduced matrix.
    let mut pivot_cols = Vec::with_capacity(rank);
    let mut col = 0;
    for row in 0..rank {
        while col < cols && work[row][col].is_zero() {
            col += 1;
        }
        pivot_cols.push(col);
        col += 1;
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::one();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -work[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Inverse of a square matrix, or `None` if singular.
pub fn inverse(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut work: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "inverse needs a square matrix");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    // Gauss-Jordan, pivoting only within the left block.
    for col in 0..n {
        let pivot = (col..n).find(|&r| !work[r][col].is_zero())?;
        work.swap(col, pivot);
        let inv = work[col][col].clone();
        for c in 0..2 * n {
            work[col][c] = &work[col][c] / &inv;
        }
        for r in 0..n {
            if r != col && !work[r][col].is_zero() {
                let f = work[r][col].clone();
                for c in 0..2 * n {
                    work[r][c] = &work[r][c] - &f * &work[col][c];
                }
            }
        }
    }
    Some(work.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_vec(m: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn from_i64(m: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    m.iter().map(|row| row.iter().map(|&x| rat(x)).collect()).collect()
}

/// Exact integer extraction; panics if any entry is non-integral.
pub fn to_i64(v: &[Rat]) -> Vec<i64> {
    v.iter()
        .map(|x| {
            assert!(x.is_integer(), "expected integral entry, got {x}");
            let n = x.numer();
            assert!(n.abs() <= BigInt::from(i64::MAX), "entry out of i64 range");
            i64::try_from(n).expect("entry out of i64 range")
        })
        .collect()
}
