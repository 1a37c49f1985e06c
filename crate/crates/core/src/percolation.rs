//! Low-density series for directed bond percolation on the diagonal square
//! lattice, optionally with a wall at `x = 0`.
//!
//! Site `(t, x)` has bonds to `(t+1, x−1)` and `(t+1, x+1)`, each open with
//! probability `p`. The source `(0, 0)` is wet; a site is wet when an open
//! bond joins it to a wet site of the previous column. With a wall, sites
//! with `x < 0` are never wet.
//!
//! Column `t` has sites `x = −t, −t+2, …, t`; bit `i` of a mask is site
//! `x = −t + 2i`.

use std::collections::HashMap;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest truncation order accepted.
pub const MAX_ORDER: usize = 14;

/// Polynomial in `p` truncated above `p^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PPoly {
    coeffs: Vec<BigInt>,
}

impl PPoly {
    pub fn zero(order: usize) -> Self {
        PPoly {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::from_coeffs(order, &[1])
    }

    /// Coefficients from `p^0` upward; anything above the order is dropped.
    pub fn from_coeffs(order: usize, coeffs: &[i64]) -> Self {
        let mut out = Self::zero(order);
        for (c, &v) in out.coeffs.iter_mut().zip(coeffs) {
            *c = BigInt::from(v);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn add_assign(&mut self, rhs: &PPoly) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }

    fn scaled_by(&self, popcount: u32) -> PPoly {
        let k = BigInt::from(popcount);
        PPoly {
            coeffs: self.coeffs.iter().map(|c| c * &k).collect(),
        }
    }
}

impl Add for &PPoly {
    type Output = PPoly;

    fn add(self, rhs: &PPoly) -> PPoly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Mul for &PPoly {
    type Output = PPoly;

    fn mul(self, rhs: &PPoly) -> PPoly {
        let order = self.order().min(rhs.order());
        let mut out = PPoly::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

/// One column configuration and its probability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnState {
    pub wet_mask: u64,
    pub probability: PPoly,
}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::Resource {
            what: "percolation series order",
            limit: MAX_ORDER as u128,
            reached: order as u128,
        });
    }
    Ok(())
}

/// Wet/dry factors for a site with 0, 1 or 2 wet parents.
struct Transitions {
    wet: [PPoly; 3],
    dry: [PPoly; 3],
}

impl Transitions {
    fn new(order: usize) -> Self {
        Transitions {
            wet: [
                PPoly::zero(order),
                PPoly::from_coeffs(order, &[0, 1]),
                PPoly::from_coeffs(order, &[0, 2, -1]),
            ],
            dry: [
                PPoly::one(order),
                PPoly::from_coeffs(order, &[1, -1]),
                PPoly::from_coeffs(order, &[1, -2, 1]),
            ],
        }
    }
}

fn insert(map: &mut HashMap<(u64, u64), PPoly>, key: (u64, u64), p: PPoly) {
    if p.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(q) => {
            q.add_assign(&p);
            if q.is_zero() {
                map.remove(&key);
            }
        }
        None => {
            map.insert(key, p);
        }
    }
}

/// Advances the distribution from column `t` to `t + 1`, one new site at a
/// time. While new site `j` is processed the state holds the new bits below
/// `j` and the old bits from `j − 1` up; old bit `j − 1` is dropped afterwards
/// since no later site reads it.
fn advance(
    col: HashMap<u64, PPoly>,
    t: usize,
    wall: bool,
    tr: &Transitions,
) -> HashMap<u64, PPoly> {
    let mut states: HashMap<(u64, u64), PPoly> =
        col.into_iter().map(|(m, p)| ((0u64, m), p)).collect();
    for j in 0..=t + 1 {
        let x = 2 * j as i64 - (t as i64 + 1);
        let mut next = HashMap::with_capacity(states.len() * 2);
        for ((new, old), p) in states {
            let left = j >= 1 && old >> (j - 1) & 1 == 1;
            let right = j <= t && old >> j & 1 == 1;
            let parents = left as usize + right as usize;
            let old_next = if j >= 1 { old & !(1 << (j - 1)) } else { old };
            if wall && x < 0 {
                insert(&mut next, (new, old_next), p);
                continue;
            }
            if parents > 0 {
                insert(&mut next, (new | 1 << j, old_next), &p * &tr.wet[parents]);
            }
            insert(&mut next, (new, old_next), &p * &tr.dry[parents]);
        }
        states = next;
    }
    let mut out: HashMap<u64, PPoly> = HashMap::with_capacity(states.len());
    for ((new, _), p) in states {
        match out.get_mut(&new) {
            Some(q) => q.add_assign(&p),
            None => {
                out.insert(new, p);
            }
        }
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// Calls `visit(t, column)` for `t = 0..=last`.
fn for_each_column(
    last: usize,
    order: usize,
    wall: bool,
    mut visit: impl FnMut(usize, &HashMap<u64, PPoly>),
) {
    let tr = Transitions::new(order);
    let mut col: HashMap<u64, PPoly> = HashMap::from([(1u64, PPoly::one(order))]);
    visit(0, &col);
    for t in 0..last {
        col = advance(col, t, wall, &tr);
        visit(t + 1, &col);
    }
}

/// Distribution of wet masks in column `t`, truncated at `p^order`.
/// States whose probability truncates to zero are omitted.
pub fn column_distribution(t: usize, order: usize, wall: bool) -> Result<Vec<ColumnState>> {
    check_order(order)?;
    if t >= 63 {
        return Err(Error::domain(format!("column {t} too wide for a mask")));
    }
    let mut out = Vec::new();
    for_each_column(t, order, wall, |c, col| {
        if c == t {
            out = col
                .iter()
                .map(|(&wet_mask, p)| ColumnState {
                    wet_mask,
                    probability: p.clone(),
                })
                .collect();
        }
    });
    out.sort_by_key(|s| s.wet_mask);
    Ok(out)
}

/// `C(t, x; p)`, the probability that site `(t, x)` is wet.
pub fn wet_probability(t: usize, x: i64, order: usize, wall: bool) -> Result<PPoly> {
    check_order(order)?;
    if (t as i64 + x).rem_euclid(2) != 0 {
        return Err(Error::domain(format!(
            "t + x must be even, got t={t}, x={x}"
        )));
    }
    if x.abs() > t as i64 || (wall && x < 0) || t > order {
        // Unreachable, or reaching it takes more than `order` open bonds.
        return Ok(PPoly::zero(order));
    }
    let bit = ((x + t as i64) / 2) as u64;
    let mut total = PPoly::zero(order);
    for s in column_distribution(t, order, wall)? {
        if s.wet_mask >> bit & 1 == 1 {
            total.add_assign(&s.probability);
        }
    }
    Ok(total)
}

/// Coefficients of `S(p) = Σ_sites C(t, x; p)` through `p^order`. Columns
/// past the order contribute nothing at this precision.
pub fn mean_size_series(order: usize, wall: bool) -> Result<Vec<BigInt>> {
    check_order(order)?;
    let mut s = PPoly::zero(order);
    for_each_column(order, order, wall, |_, col| {
        for (&mask, p) in col {
            s.add_assign(&p.scaled_by(mask.count_ones()));
        }
    });
    Ok(s.coeffs)
}

/// Sum of all state probabilities in column `t`; `1` up to truncation.
pub fn column_total(t: usize, order: usize, wall: bool) -> Result<PPoly> {
    let mut total = PPoly::zero(order);
    for s in column_distribution(t, order, wall)? {
        total.add_assign(&s.probability);
    }
    Ok(total)
}

/// Whether `p` truncated at its order equals `1`.
pub fn is_one(p: &PPoly) -> bool {
    p.coeffs[0].is_one() && p.coeffs[1..].iter().all(Zero::is_zero)
}
