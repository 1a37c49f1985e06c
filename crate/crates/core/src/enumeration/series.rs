//! Truncated bivariate power series in `x` and `t` with integer coefficients.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `Σ c_{n,k} x^n t^k` for `n ≤ order`; the `t`-degree is unbounded but every
/// series built here has `k ≤ n`, so each row stores `n + 1` coefficients.
/// Terms with `k > n` are rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    order: usize,
    rows: Vec<Vec<BigInt>>,
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        BivariateSeries {
            order,
            rows: (0..=order).map(|n| vec![BigInt::zero(); n + 1]).collect(),
        }
    }

    pub fn one(order: usize) -> Self {
        Self::from_terms(order, [(0, 0, 1)]).expect("constant term")
    }

    /// Builds a polynomial from `(n, k, coeff)` triples, dropping terms above
    /// the order.
    pub fn from_terms(
        order: usize,
        terms: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Result<Self> {
        let mut s = Self::zero(order);
        for (n, k, c) in terms {
            if k > n {
                return Err(Error::domain(format!("term x^{n} t^{k} has k > n")));
            }
            if n <= order {
                s.rows[n][k] += c;
            }
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize, k: usize) -> BigInt {
        self.rows
            .get(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_default()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.order), |acc, _| &acc * self)
    }

    /// `self / rhs`, requiring `rhs` to have constant term 1.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if !rhs.coeff(0, 0).is_one() {
            return Err(Error::domain("divisor must have constant term 1"));
        }
        let order = self.order.min(rhs.order);
        let mut q = Self::zero(order);
        for n in 0..=order {
            for k in 0..=n {
                let mut c = self.coeff(n, k);
                for m in 1..=n {
                    for j in 0..=m.min(k) {
                        let r = &rhs.rows[m][j];
                        if !r.is_zero() && k - j <= n - m {
                            c -= r * &q.rows[n - m][k - j];
                        }
                    }
                }
                q.rows[n][k] = c;
            }
        }
        Ok(q)
    }
}

impl Add for &BivariateSeries {
    type Output = BivariateSeries;

    fn add(self, rhs: &BivariateSeries) -> BivariateSeries {
        let mut out = BivariateSeries::zero(self.order.min(rhs.order));
        for (n, row) in out.rows.iter_mut().enumerate() {
            for (k, c) in row.iter_mut().enumerate() {
                *c = &self.rows[n][k] + &rhs.rows[n][k];
            }
        }
        out
    }
}

impl Sub for &BivariateSeries {
    type Output = BivariateSeries;

    fn sub(self, rhs: &BivariateSeries) -> BivariateSeries {
        let mut out = BivariateSeries::zero(self.order.min(rhs.order));
        for (n, row) in out.rows.iter_mut().enumerate() {
            for (k, c) in row.iter_mut().enumerate() {
                *c = &self.rows[n][k] - &rhs.rows[n][k];
            }
        }
        out
    }
}

impl Mul for &BivariateSeries {
    type Output = BivariateSeries;

    fn mul(self, rhs: &BivariateSeries) -> BivariateSeries {
        let order = self.order.min(rhs.order);
        let mut out = BivariateSeries::zero(order);
        for n1 in 0..=order {
            for (k1, a) in self.rows[n1].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for n2 in 0..=order - n1 {
                    for (k2, b) in rhs.rows[n2].iter().enumerate() {
                        if !b.is_zero() {
                            out.rows[n1 + n2][k1 + k2] += a * b;
                        }
                    }
                }
            }
        }
        out
    }
}
