//! Binomial coefficients and small number-theoretic helpers.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `C(m, r)` with the conventions used by the counting formulas:
/// `C(m, 0) = 1` for every `m >= -1`, and `0` for any other out-of-range
/// argument (`r < 0`, `r > m`, or `m < -1`).
pub fn binomial(m: i64, r: i64) -> BigUint {
    if r == 0 && m >= -1 {
        return BigUint::one();
    }
    if r < 0 || m < 0 || r > m {
        return BigUint::zero();
    }
    let r = r.min(m - r) as u64;
    let m = m as u64;
    let mut acc = BigUint::one();
    for i in 0..r {
        acc *= m - i;
        acc /= i + 1;
    }
    acc
}

/// `n!`
pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Row-by-row Pascal triangle, grown on demand.
#[derive(Debug, Clone)]
pub struct PascalCache {
    rows: Vec<Vec<BigUint>>,
}

impl Default for PascalCache {
    fn default() -> Self {
        Self::new()
    }
}

impl PascalCache {
    pub fn new() -> Self {
        PascalCache {
            rows: vec![vec![BigUint::one()]],
        }
    }

    fn grow_to(&mut self, m: usize) {
        while self.rows.len() <= m {
            let prev = self.rows.last().expect("row 0 always present");
            let mut row = Vec::with_capacity(prev.len() + 1);
            row.push(BigUint::one());
            for w in prev.windows(2) {
                row.push(&w[0] + &w[1]);
            }
            row.push(BigUint::one());
            self.rows.push(row);
        }
    }

    /// Same conventions as [`binomial`].
    pub fn get(&mut self, m: i64, r: i64) -> BigUint {
        if r == 0 && m >= -1 {
            return BigUint::one();
        }
        if r < 0 || m < 0 || r > m {
            return BigUint::zero();
        }
        self.grow_to(m as usize);
        self.rows[m as usize][r as usize].clone()
    }
}

/// The Fibonacci numbers with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(n: u64) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
