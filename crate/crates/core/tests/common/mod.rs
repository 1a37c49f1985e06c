#![allow(dead_code)]

use std::collections::HashMap;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weylwords::rewrite::{equivalence_class, MoveSet};
use weylwords::words::words_of_length;
use weylwords::{Letter, Word};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_word(rng: &mut impl Rng, len: usize) -> Word {
    Word::from_letters(
        (0..len)
            .map(|_| {
                if rng.gen::<bool>() {
                    Letter::U
                } else {
                    Letter::D
                }
            })
            .collect(),
    )
}

/// Swaps two adjacent balanced factors chosen at random; `w` is returned
/// unchanged when the chosen start has no two returns to its height.
pub fn random_commutation(rng: &mut impl Rng, w: &Word) -> Word {
    let n = w.len();
    if n < 2 {
        return w.clone();
    }
    let heights = w.prefix_heights();
    let i = rng.gen_range(0..n);
    let mut returns = Vec::new();
    for (p, &h) in heights.iter().enumerate().skip(i + 1) {
        if h == heights[i] {
            returns.push(p);
            if returns.len() == 8 {
                break;
            }
        }
    }
    if returns.len() < 2 {
        return w.clone();
    }
    let a = rng.gen_range(0..returns.len() - 1);
    let b = rng.gen_range(a + 1..returns.len());
    let (j, k) = (returns[a], returns[b]);
    let l = w.letters();
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&l[..i]);
    out.extend_from_slice(&l[j..k]);
    out.extend_from_slice(&l[i..j]);
    out.extend_from_slice(&l[k..]);
    Word::from_letters(out)
}

pub fn random_equivalent(rng: &mut impl Rng, w: &Word, steps: usize) -> Word {
    (0..steps).fold(w.clone(), |acc, _| random_commutation(rng, &acc))
}

/// Replaces one `UD` factor by `DU`, which always leaves the class.
pub fn near_miss(rng: &mut impl Rng, w: &Word) -> Option<Word> {
    let l = w.letters();
    let spots: Vec<usize> = (0..l.len().saturating_sub(1))
        .filter(|&i| l[i] == Letter::U && l[i + 1] == Letter::D)
        .collect();
    if spots.is_empty() {
        return None;
    }
    let i = spots[rng.gen_range(0..spots.len())];
    let mut v = l.to_vec();
    v.swap(i, i + 1);
    Some(Word::from_letters(v))
}

/// Labels every word of length `n` by the BFS class it falls in.
pub fn bfs_labels(n: usize, moves: MoveSet) -> HashMap<Word, usize> {
    let mut labels = HashMap::new();
    let mut next = 0;
    for w in words_of_length(n) {
        if labels.contains_key(&w) {
            continue;
        }
        let class = equivalence_class(&w, moves, usize::MAX).expect("uncapped");
        for m in class.members {
            labels.insert(m, next);
        }
        next += 1;
    }
    labels
}
