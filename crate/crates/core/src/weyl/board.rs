//! Ferrers boards read off words, arbitrary boards, and rook numbers.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// A Ferrers board given by weakly increasing column heights, left to right.
/// Empty columns are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FerrersBoard {
    col_heights: Vec<u32>,
}

impl FerrersBoard {
    pub fn new(mut col_heights: Vec<u32>) -> Result<Self> {
        if col_heights.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::domain(format!(
                "column heights {col_heights:?} are not weakly increasing"
            )));
        }
        col_heights.retain(|&h| h > 0);
        Ok(FerrersBoard { col_heights })
    }

    pub fn col_heights(&self) -> &[u32] {
        &self.col_heights
    }

    pub fn num_cells(&self) -> usize {
        self.col_heights.iter().map(|&h| h as usize).sum()
    }

    pub fn num_rows(&self) -> u32 {
        self.col_heights.last().copied().unwrap_or(0)
    }

    pub fn num_cols(&self) -> usize {
        self.col_heights.len()
    }

    /// Cells as `(column, row)`, both 1-based.
    pub fn cells(&self) -> Vec<(u32, u32)> {
        self.col_heights
            .iter()
            .enumerate()
            .flat_map(|(c, &h)| (1..=h).map(move |r| (c as u32 + 1, r)))
            .collect()
    }

    pub fn to_board(&self) -> Board {
        Board::new(self.cells())
    }
}

/// The board whose upper boundary takes a north step for every `D` and an
/// east step for every `U` of `w`: each `U` contributes a column whose height
/// is the number of `D`s before it.
pub fn ferrers_board(w: &Word) -> FerrersBoard {
    let mut ds = 0u32;
    let mut cols = Vec::new();
    for l in w.letters() {
        match l {
            Letter::D => ds += 1,
            Letter::U if ds > 0 => cols.push(ds),
            Letter::U => {}
        }
    }
    FerrersBoard { col_heights: cols }
}

/// `[r_0, …, r_max_k]` for a Ferrers board.
///
/// Columns are processed shortest first; when a column of height `h` is
/// reached with `j` rooks already placed, those rooks occupy `j` of its rows.
pub fn rook_numbers(board: &FerrersBoard, max_k: usize) -> Vec<BigUint> {
    let mut r = vec![BigUint::zero(); max_k + 1];
    r[0] = BigUint::from(1u32);
    for &h in &board.col_heights {
        for k in (1..=max_k).rev() {
            let free = h as i64 - (k as i64 - 1);
            if free > 0 {
                let add = &r[k - 1] * BigUint::from(free as u64);
                r[k] += add;
            }
        }
    }
    r
}

/// An arbitrary finite set of cells `(column, row)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Board {
    cells: Vec<(u32, u32)>,
}

impl Board {
    pub fn new(cells: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let set: BTreeSet<_> = cells.into_iter().collect();
        Board {
            cells: set.into_iter().collect(),
        }
    }

    pub fn cells(&self) -> &[(u32, u32)] {
        &self.cells
    }

    /// Rook numbers by enumerating every subset of cells. At most 20 cells.
    pub fn rook_numbers_brute_force(&self) -> Result<Vec<u64>> {
        let n = self.cells.len();
        if n > 20 {
            return Err(Error::Resource {
                what: "brute-force rook enumeration cells",
                limit: 20,
                reached: n as u128,
            });
        }
        let mut counts = vec![0u64; n + 1];
        'subsets: for mask in 0u32..1 << n {
            let mut cols = BTreeSet::new();
            let mut rows = BTreeSet::new();
            for (i, &(c, r)) in self.cells.iter().enumerate() {
                if mask >> i & 1 == 1 && (!cols.insert(c) || !rows.insert(r)) {
                    continue 'subsets;
                }
            }
            counts[mask.count_ones() as usize] += 1;
        }
        while counts.len() > 1 && counts.last() == Some(&0) {
            counts.pop();
        }
        Ok(counts)
    }
}
