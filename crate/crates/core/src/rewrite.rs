//! Balanced commutations, balanced flips and irreducible balanced
//! commutations; class closure by BFS and the closed-form class size.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::combinatorics::binomial;
use crate::equivalence::canonical_form;
use crate::error::{Error, Result};
use crate::words::{height_polys, Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveSet {
    /// Swap two adjacent balanced factors: `pyxq -> pxyq`.
    BalancedCommutation,
    /// Replace a balanced factor `x` by `ω(x)`.
    BalancedFlip,
    /// Swap two adjacent irreducible balanced factors with different first
    /// letters.
    IrreducibleCommutation,
}

/// A materialized equivalence class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivClass {
    /// Sorted lexicographically with `D < U`.
    pub members: BTreeSet<Word>,
    pub representative: Word,
}

/// For each position `i`, the positions `j > i` with the same prefix height,
/// in increasing order. Factors `w[i..j]` are exactly the nonempty balanced
/// factors starting at `i`.
fn balanced_ends(heights: &[i64]) -> Vec<Vec<usize>> {
    let n = heights.len();
    let mut out = vec![Vec::new(); n];
    for (i, ends) in out.iter_mut().enumerate() {
        for j in i + 1..n {
            if heights[j] == heights[i] {
                ends.push(j);
            }
        }
    }
    out
}

fn swap_adjacent(w: &[Letter], i: usize, j: usize, k: usize) -> Word {
    let mut out = Vec::with_capacity(w.len());
    out.extend_from_slice(&w[..i]);
    out.extend_from_slice(&w[j..k]);
    out.extend_from_slice(&w[i..j]);
    out.extend_from_slice(&w[k..]);
    Word::from_letters(out)
}

/// All words reachable from `w` by exactly one move of the given kind,
/// excluding `w` itself.
pub fn neighbors(w: &Word, moves: MoveSet) -> BTreeSet<Word> {
    let letters = w.letters();
    let heights = w.prefix_heights();
    let ends = balanced_ends(&heights);
    let mut out = BTreeSet::new();
    match moves {
        MoveSet::BalancedCommutation => {
            for i in 0..letters.len() {
                for &j in &ends[i] {
                    for &k in &ends[j] {
                        out.insert(swap_adjacent(letters, i, j, k));
                    }
                }
            }
        }
        MoveSet::BalancedFlip => {
            for i in 0..letters.len() {
                for &j in &ends[i] {
                    let mut v = letters.to_vec();
                    let flipped = w.factor(i, j).omega();
                    v[i..j].copy_from_slice(flipped.letters());
                    out.insert(Word::from_letters(v));
                }
            }
        }
        MoveSet::IrreducibleCommutation => {
            // The first return to the starting height closes an irreducible
            // factor.
            for i in 0..letters.len() {
                let Some(&j) = ends[i].first() else { continue };
                let Some(&k) = ends[j].first() else { continue };
                if letters[i] != letters[j] {
                    out.insert(swap_adjacent(letters, i, j, k));
                }
            }
        }
    }
    out.remove(w);
    out
}

/// BFS closure of `w` under `moves`, failing once more than `cap` members
/// have been discovered.
pub fn equivalence_class(w: &Word, moves: MoveSet, cap: usize) -> Result<EquivClass> {
    if cap == 0 {
        return Err(Error::domain("cap must be positive"));
    }
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(cur) = queue.pop_front() {
        for next in neighbors(&cur, moves) {
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(Error::Resource {
                        what: "equivalence class size",
                        limit: cap as u128,
                        reached: seen.len() as u128,
                    });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(EquivClass {
        members: seen.into_iter().collect(),
        representative: canonical_form(w),
    })
}

/// Number of words equivalent to `w`, from the NE/SE step-height counts.
///
/// With `a_i` NE-steps and `b_i` SE-steps starting at height `i`, the size is
/// `Π_{i≥0} C(a_i + b_{i+2} − 1, b_{i+2}) · C(b_{−i} + a_{−i−2} − 1, a_{−i−2})`
/// times `C(a_0 + b_0, a_0)`, `C(a_0 + b_0 − 1, b_0)` or
/// `C(a_0 + b_0 − 1, a_0)` for balanced, rising and falling words.
pub fn class_size(w: &Word) -> BigUint {
    let hp = height_polys(w);
    let a = |i: i64| hp.ne.coeff(i).to_i64().expect("step count fits i64");
    let b = |i: i64| hp.se.coeff(i).to_i64().expect("step count fits i64");
    let reach =
        hp.h.min_exponent()
            .unwrap_or(0)
            .abs()
            .max(hp.h.max_exponent().unwrap_or(0).abs())
            + 2;
    let mut size = BigUint::one();
    for i in 0..=reach {
        size *= binomial(a(i) + b(i + 2) - 1, b(i + 2));
        size *= binomial(b(-i) + a(-i - 2) - 1, a(-i - 2));
    }
    let (a0, b0) = (a(0), b(0));
    size *= match w.final_height() {
        0 => binomial(a0 + b0, a0),
        h if h > 0 => binomial(a0 + b0 - 1, b0),
        _ => binomial(a0 + b0 - 1, a0),
    };
    size
}

/// Splits a balanced word at every interior return of its standard path to
/// height 0. Each part is irreducible balanced.
pub fn irreducible_factorization(w: &Word) -> Result<Vec<Word>> {
    if !w.is_balanced() {
        return Err(Error::domain(format!("{w} is not balanced")));
    }
    let mut parts = Vec::new();
    let mut start = 0;
    let mut h = 0i64;
    for (i, l) in w.letters().iter().enumerate() {
        h += l.step();
        if h == 0 {
            parts.push(w.factor(start, i + 1));
            start = i + 1;
        }
    }
    Ok(parts)
}

/// Nonempty, balanced, and touching height 0 only at its ends.
pub fn is_irreducible_balanced(w: &Word) -> bool {
    let heights = w.prefix_heights();
    !w.is_empty() && heights.last() == Some(&0) && heights[1..w.len()].iter().all(|&h| h != 0)
}
