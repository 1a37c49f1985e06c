//! Rank distribution of matrices over `F_p` supported on a Ferrers board.

use num_bigint::BigUint;
use rayon::prelude::*;

use super::FerrersBoard;
use crate::combinatorics::is_prime;
use crate::error::{Error, Result};

/// Largest number of matrices [`matrix_rank_counts`] will enumerate.
pub const RANK_COUNT_BUDGET: u128 = 20_000_000;

const CHUNK: u64 = 1 << 16;

fn rank_mod_p(m: &mut [Vec<u64>], p: u64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        for r in rank + 1..rows {
            if m[r][c] == 0 {
                continue;
            }
            let f = m[r][c] * inv % p;
            let (top, bottom) = m.split_at_mut(r);
            for (x, &y) in bottom[0][c..cols].iter_mut().zip(&top[rank][c..cols]) {
                *x = (*x + p - f * y % p) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// `[P_0, P_1, …]`: how many matrices over `F_p` with support inside `b` have
/// each rank, by exhaustive enumeration. The board is placed in an
/// `ambient_n × ambient_n` matrix; the ambient size does not change ranks but
/// must be large enough to hold the board.
///
/// Work is split into fixed chunks across threads and the per-chunk counts
/// are summed, so the result does not depend on scheduling.
pub fn matrix_rank_counts(b: &FerrersBoard, p: u64, ambient_n: usize) -> Result<Vec<BigUint>> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if ambient_n == 0 {
        return Err(Error::domain("ambient size must be positive"));
    }
    if b.num_cols() > ambient_n || b.num_rows() as usize > ambient_n {
        return Err(Error::domain(format!(
            "board with {} columns and {} rows does not fit in {ambient_n}×{ambient_n}",
            b.num_cols(),
            b.num_rows()
        )));
    }
    let cells = b.cells();
    let total = (p as u128)
        .checked_pow(cells.len() as u32)
        .filter(|&t| t <= RANK_COUNT_BUDGET)
        .ok_or(Error::Resource {
            what: "matrices to enumerate",
            limit: RANK_COUNT_BUDGET,
            reached: (p as u128).saturating_pow(cells.len() as u32),
        })? as u64;

    let rows = b.num_rows() as usize;
    let cols = b.num_cols();
    let max_rank = rows.min(cols);
    let chunks = total.div_ceil(CHUNK);
    let counts = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut local = vec![0u64; max_rank + 1];
            let mut m = vec![vec![0u64; cols]; rows];
            for idx in chunk * CHUNK..((chunk + 1) * CHUNK).min(total) {
                for row in m.iter_mut() {
                    row.fill(0);
                }
                let mut x = idx;
                for &(c, r) in &cells {
                    m[r as usize - 1][c as usize - 1] = x % p;
                    x /= p;
                }
                local[rank_mod_p(&mut m, p)] += 1;
            }
            local
        })
        .reduce(
            || vec![0u64; max_rank + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    Ok(counts.into_iter().map(BigUint::from).collect())
}
