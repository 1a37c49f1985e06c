//! Counting equivalence classes: closed forms, recursions and an exhaustive
//! partition oracle.

mod series;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::combinatorics::{binomial, fibonacci, PascalCache};
use crate::equivalence::up_normal_form;
use crate::error::{Error, Result};
use crate::words::{Letter, Word};

pub use series::BivariateSeries;

/// Longest word length the exhaustive oracle will enumerate.
pub const BRUTE_FORCE_MAX_N: usize = 20;

fn check_nk(n: i64, k: i64) -> Result<()> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::domain(format!("need 0 ≤ k ≤ n, got n={n}, k={k}")));
    }
    Ok(())
}

/// Number of classes of words with `n` letters, `k` of them `D`.
///
/// Uses `a(n,k) = Σ_{j=0}^{k} (k−j+1)·C(n−k−1, j)` for `k ≤ n/2` and the
/// symmetry `a(n,k) = a(n,n−k)` otherwise.
pub fn count_classes(n: i64, k: i64) -> Result<BigUint> {
    check_nk(n, k)?;
    let k = k.min(n - k);
    Ok((0..=k)
        .map(|j| BigUint::from((k - j + 1) as u64) * binomial(n - k - 1, j))
        .sum())
}

/// Same as [`count_classes`], evaluated through
/// `a(n,k) = a(n−1,k) + a(n−2,k−1)` for `n > 2k`, the central values
/// `a(2k,k) = (k+3)·2^{k−2}` and `a(n,0) = 1`.
pub fn count_classes_recursive(n: i64, k: i64) -> Result<BigUint> {
    check_nk(n, k)?;
    let k = k.min(n - k);
    let mut memo = HashMap::new();
    Ok(classes_rec(n, k, &mut memo))
}

fn classes_rec(n: i64, k: i64, memo: &mut HashMap<(i64, i64), BigUint>) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    if n == 2 * k {
        return (BigUint::from((k + 3) as u64) << k as usize) >> 2usize;
    }
    if let Some(v) = memo.get(&(n, k)) {
        return v.clone();
    }
    let v = classes_rec(n - 1, k, memo) + classes_rec(n - 2, k - 1, memo);
    memo.insert((n, k), v.clone());
    v
}

/// `c · 2^e` for a possibly negative `e`, which must divide exactly.
fn times_pow2(c: u64, e: i64) -> BigUint {
    let c = BigUint::from(c);
    if e >= 0 {
        c << e as usize
    } else {
        let d = BigUint::one() << (-e) as usize;
        assert!((&c % &d).is_zero(), "inexact power-of-two division");
        c / d
    }
}

/// `Σ_k a(n,k)`: `2F_{n+4} − (3n+42)·2^{n/2−3}` for even `n`,
/// `2F_{n+4} − (n+15)·2^{(n−3)/2}` for odd `n`, and `1` for `n = 0`.
pub fn total_classes(n: u64) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let fib = fibonacci(n + 4) * 2u32;
    let corr = if n.is_multiple_of(2) {
        times_pow2(3 * n + 42, n as i64 / 2 - 3)
    } else {
        times_pow2(n + 15, (n as i64 - 3) / 2)
    };
    fib - corr
}

fn check_cdyck(n: i64, k: i64, c: u32) -> Result<()> {
    if c == 0 {
        return Err(Error::domain("c must be a positive integer"));
    }
    if k < 0 || n < (c as i64 + 1) * k {
        return Err(Error::domain(format!(
            "need n ≥ (c+1)k ≥ 0, got n={n}, k={k}, c={c}"
        )));
    }
    Ok(())
}

/// Classes of `c`-Dyck words (every prefix has at least `c` times as many
/// `U`s as `D`s) with `n` letters and `k` `D`s:
/// `C(n−k−1, k) − (c−2)·Σ_{j=0}^{k−1} C(n−k−1, j)`.
pub fn count_classes_cdyck(n: i64, k: i64, c: u32) -> Result<BigUint> {
    check_cdyck(n, k, c)?;
    let mut total = BigInt::from(binomial(n - k - 1, k));
    let tail: BigUint = (0..k).map(|j| binomial(n - k - 1, j)).sum();
    total -= BigInt::from(c as i64 - 2) * BigInt::from(tail);
    total
        .to_biguint()
        .ok_or_else(|| Error::Internal(format!("negative count {total}")))
}

/// Same as [`count_classes_cdyck`] through the recursion
/// `a_c(n,k) = a_c(n−1,k) + a_c(n−2,k−1)` for `n−1 ≥ (c+1)k`, with
/// `a_c((c+1)k, k) = a_c((c+1)k−1, k−1)` and `a_c(n,0) = 1`.
pub fn count_classes_cdyck_recursive(n: i64, k: i64, c: u32) -> Result<BigUint> {
    check_cdyck(n, k, c)?;
    let mut memo = HashMap::new();
    Ok(cdyck_rec(n, k, c as i64 + 1, &mut memo))
}

fn cdyck_rec(n: i64, k: i64, c1: i64, memo: &mut HashMap<(i64, i64), BigUint>) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    if let Some(v) = memo.get(&(n, k)) {
        return v.clone();
    }
    let v = if n == c1 * k {
        cdyck_rec(n - 1, k - 1, c1, memo)
    } else {
        cdyck_rec(n - 1, k, c1, memo) + cdyck_rec(n - 2, k - 1, c1, memo)
    };
    memo.insert((n, k), v.clone());
    v
}

/// `Σ_k a_1(n,k) = F_{n+2} − 2^{⌊(n−1)/2⌋}` for `n ≥ 1`; `1` for `n = 0`.
pub fn total_classes_cdyck1(n: u64) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    fibonacci(n + 2) - (BigUint::one() << ((n - 1) / 2) as usize)
}

/// Counts indexed by `(n, k)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountTable {
    pub entries: BTreeMap<(usize, usize), BigUint>,
}

impl CountTable {
    /// `a(n,k)` for `n ≤ max_n`, all `k`.
    pub fn classes(max_n: usize) -> Self {
        let mut pascal = PascalCache::new();
        let mut entries = BTreeMap::new();
        for n in 0..=max_n {
            for k in 0..=n {
                let kk = k.min(n - k) as i64;
                let v: BigUint = (0..=kk)
                    .map(|j| BigUint::from((kk - j + 1) as u64) * pascal.get(n as i64 - kk - 1, j))
                    .sum();
                entries.insert((n, k), v);
            }
        }
        CountTable { entries }
    }

    /// `a_c(n,k)` for `n ≤ max_n` and `(c+1)k ≤ n`.
    pub fn cdyck(max_n: usize, c: u32) -> Result<Self> {
        if c == 0 {
            return Err(Error::domain("c must be a positive integer"));
        }
        let mut entries = BTreeMap::new();
        for n in 0..=max_n {
            for k in 0..=n / (c as usize + 1) {
                entries.insert((n, k), count_classes_cdyck(n as i64, k as i64, c)?);
            }
        }
        Ok(CountTable { entries })
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&BigUint> {
        self.entries.get(&(n, k))
    }

    /// Entries of row `n` in increasing `k`.
    pub fn row(&self, n: usize) -> Vec<BigUint> {
        self.entries
            .range((n, 0)..=(n, usize::MAX))
            .map(|(_, v)| v.clone())
            .collect()
    }

    pub fn row_sum(&self, n: usize) -> BigUint {
        self.row(n).into_iter().sum()
    }

    pub fn max_n(&self) -> Option<usize> {
        self.entries.keys().next_back().map(|&(n, _)| n)
    }
}

impl fmt::Display for CountTable {
    /// One line per `n`: `n: v_0 v_1 ... | sum`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(max_n) = self.max_n() else {
            return Ok(());
        };
        let min_n = self.entries.keys().next().map_or(0, |&(n, _)| n);
        for n in min_n..=max_n {
            let row = self.row(n);
            if row.is_empty() {
                continue;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{n:>3}: {} | {}", cells.join(" "), self.row_sum(n))?;
        }
        Ok(())
    }
}

fn brute_force_guard(n: usize) -> Result<()> {
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::Resource {
            what: "brute-force word length",
            limit: BRUTE_FORCE_MAX_N as u128,
            reached: n as u128,
        });
    }
    Ok(())
}

/// NE-step height counts of the word encoded by `bits` (bit `i` set means
/// letter `i` is `U`), shifted by `n` so all indices are nonnegative. For a
/// fixed `n` and `D`-count this determines the class.
fn class_key(n: usize, bits: u64) -> Vec<u8> {
    let mut key = vec![0u8; 2 * n + 1];
    let mut h = n;
    for i in 0..n {
        if bits >> i & 1 == 1 {
            key[h] += 1;
            h += 1;
        } else {
            h -= 1;
        }
    }
    key
}

/// Every prefix has `den·#U ≥ num·#D`.
fn in_m_c(n: usize, bits: u64, c: &BigRational) -> bool {
    let num = c.numer();
    let den = c.denom();
    let (mut u, mut d) = (0i64, 0i64);
    for i in 0..n {
        if bits >> i & 1 == 1 {
            u += 1;
        } else {
            d += 1;
        }
        if den * BigInt::from(u) < num * BigInt::from(d) {
            return false;
        }
    }
    true
}

/// Distinct class keys per `D`-count among words accepted by `keep`, split
/// across threads by the top bits of the word.
fn partition_by_k(n: usize, keep: impl Fn(u64) -> bool + Sync) -> Vec<HashSet<Vec<u8>>> {
    let shard_bits = n.min(8);
    let low = n - shard_bits;
    (0..1u64 << shard_bits)
        .into_par_iter()
        .map(|hi| {
            let mut sets = vec![HashSet::new(); n + 1];
            for lo in 0..1u64 << low {
                let bits = hi << low | lo;
                if keep(bits) {
                    let k = n - bits.count_ones() as usize;
                    sets[k].insert(class_key(n, bits));
                }
            }
            sets
        })
        .reduce(
            || vec![HashSet::new(); n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    x.extend(y);
                }
                a
            },
        )
}

/// Row `n` of the class-count table, `[a(n,0), …, a(n,n)]`, by partitioning
/// all `2^n` words by their invariant.
pub fn brute_force_class_counts(n: usize) -> Result<Vec<BigUint>> {
    brute_force_guard(n)?;
    Ok(partition_by_k(n, |_| true)
        .into_iter()
        .map(|s| BigUint::from(s.len()))
        .collect())
}

/// Classes meeting the set of `c`-Dyck words, per `D`-count, by filtering
/// words on the prefix condition. Accepts any positive rational `c`.
pub fn brute_force_cdyck_counts(n: usize, c: &BigRational) -> Result<Vec<BigUint>> {
    brute_force_guard(n)?;
    if !c.is_positive() {
        return Err(Error::domain(format!("c must be positive, got {c}")));
    }
    Ok(partition_by_k(n, |bits| in_m_c(n, bits, c))
        .into_iter()
        .map(|s| BigUint::from(s.len()))
        .collect())
}

/// Classes whose up-normal representative is `c`-Dyck, per `D`-count.
/// For integer `c ≥ 1` this agrees with [`brute_force_cdyck_counts`].
pub fn brute_force_cdyck_counts_by_normal_form(n: usize, c: u32) -> Result<Vec<BigUint>> {
    brute_force_guard(n)?;
    if c == 0 {
        return Err(Error::domain("c must be a positive integer"));
    }
    let ratio = BigRational::from_integer(BigInt::from(c));
    // One representative word per class, rising words only.
    let reps: Vec<HashMap<Vec<u8>, u64>> = (0..=n)
        .into_par_iter()
        .map(|k| {
            let mut m = HashMap::new();
            if 2 * k <= n {
                for bits in 0..1u64 << n {
                    if n - bits.count_ones() as usize == k {
                        m.entry(class_key(n, bits)).or_insert(bits);
                    }
                }
            }
            m
        })
        .collect();
    let mut out = Vec::with_capacity(n + 1);
    for m in reps {
        let mut count = 0u64;
        for &bits in m.values() {
            let t = up_normal_form(&Word::from_bits(n, bits))?;
            let tb = t
                .letters()
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, l)| acc | u64::from(*l == Letter::U) << i);
            if in_m_c(n, tb, &ratio) {
                count += 1;
            }
        }
        out.push(BigUint::from(count));
    }
    Ok(out)
}

/// `Σ_{k ≤ n/2} a(n,k) t^k x^n = (1−tx²)³ / ((1−x−tx²)(1−2tx²)²)`.
pub fn half_table_series(order: usize) -> BivariateSeries {
    let num = BivariateSeries::from_terms(order, [(0, 0, 1), (2, 1, -1)])
        .expect("valid")
        .pow(3);
    let fib =
        BivariateSeries::from_terms(order, [(0, 0, 1), (1, 0, -1), (2, 1, -1)]).expect("valid");
    let dbl = BivariateSeries::from_terms(order, [(0, 0, 1), (2, 1, -2)]).expect("valid");
    num.div(&(&fib * &dbl.pow(2))).expect("unit constant term")
}

/// `Σ a(n,k) t^k x^n` over the whole table:
/// `(1−3tx²+t²x⁴)(1−tx²)² / ((1−tx−tx²)(1−x−tx²)(1−2tx²)²)`.
pub fn full_table_series(order: usize) -> BivariateSeries {
    let a = BivariateSeries::from_terms(order, [(0, 0, 1), (2, 1, -3), (4, 2, 1)]).expect("valid");
    let b = BivariateSeries::from_terms(order, [(0, 0, 1), (2, 1, -1)])
        .expect("valid")
        .pow(2);
    let c = BivariateSeries::from_terms(order, [(0, 0, 1), (1, 1, -1), (2, 1, -1)]).expect("valid");
    let d = BivariateSeries::from_terms(order, [(0, 0, 1), (1, 0, -1), (2, 1, -1)]).expect("valid");
    let e = BivariateSeries::from_terms(order, [(0, 0, 1), (2, 1, -2)])
        .expect("valid")
        .pow(2);
    (&a * &b)
        .div(&(&(&c * &d) * &e))
        .expect("unit constant term")
}

/// `Σ a_1(n,k) t^k x^n = (1−tx²)² / ((1−x−tx²)(1−2tx²))`.
pub fn cdyck1_series(order: usize) -> BivariateSeries {
    let num = BivariateSeries::from_terms(order, [(0, 0, 1), (2, 1, -1)])
        .expect("valid")
        .pow(2);
    let fib =
        BivariateSeries::from_terms(order, [(0, 0, 1), (1, 0, -1), (2, 1, -1)]).expect("valid");
    let dbl = BivariateSeries::from_terms(order, [(0, 0, 1), (2, 1, -2)]).expect("valid");
    num.div(&(&fib * &dbl)).expect("unit constant term")
}

/// Converts a series coefficient that must be a nonnegative count.
pub fn series_count(s: &BivariateSeries, n: usize, k: usize) -> Option<BigUint> {
    s.coeff(n, k).to_biguint()
}

/// Largest `k` with `(c+1)k ≤ n`.
pub fn cdyck_max_k(n: usize, c: u32) -> usize {
    n / (c as usize + 1)
}

/// Exact value of a rational `c`, used for display.
pub fn describe_ratio(c: &BigRational) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parses `"3"` or `"1/2"`.
pub fn parse_ratio(text: &str) -> Result<BigRational> {
    let bad = || Error::domain(format!("bad ratio {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Integer value of `c` if it is a positive integer.
pub fn ratio_as_positive_int(c: &BigRational) -> Option<u32> {
    if c.is_integer() && c.is_positive() {
        c.to_integer().to_u32()
    } else {
        None
    }
}
