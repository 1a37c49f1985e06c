//! Normal forms of words in the down-up algebra `A(α, β, γ)`.
//!
//! The algebra is generated by `D` and `U` subject to
//! `DDU = α·DUD + β·UDD + γ·D` and `DUU = α·UDU + β·UUD + γ·U`. Reading both
//! relations left to right gives a terminating rewriting system whose
//! irreducible words are those avoiding the factors `DDU` and `DUU`, i.e. the
//! words `U^a (DU)^b D^c`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DownUpParams {
    pub alpha: BigRational,
    pub beta: BigRational,
    pub gamma: BigRational,
}

impl DownUpParams {
    pub fn new(alpha: BigRational, beta: BigRational, gamma: BigRational) -> Self {
        DownUpParams { alpha, beta, gamma }
    }

    pub fn from_ints(alpha: i64, beta: i64, gamma: i64) -> Self {
        let r = |x: i64| BigRational::from_integer(BigInt::from(x));
        Self::new(r(alpha), r(beta), r(gamma))
    }

    /// Parses `"a,b,g"`, each entry an integer or a fraction such as `3/2`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        let [a, b, g] = parts.as_slice() else {
            return Err(Error::domain(format!(
                "expected three comma-separated parameters, got {text:?}"
            )));
        };
        Ok(Self::new(
            parse_rational(a)?,
            parse_rational(b)?,
            parse_rational(g)?,
        ))
    }

    /// `α + β = 1` and `γ − β = 1`.
    pub fn satisfies_weyl_condition(&self) -> bool {
        let one = BigRational::one();
        &self.alpha + &self.beta == one && &self.gamma - &self.beta == one
    }
}

fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::domain(format!("bad parameter {text:?}"));
    let (num, den) = text.split_once('/').unwrap_or((text, "1"));
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for DownUpParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{}",
            fmt_rational(&self.alpha),
            fmt_rational(&self.beta),
            fmt_rational(&self.gamma)
        )
    }
}

/// A linear combination of normal words with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DownUpElement {
    terms: BTreeMap<Word, BigRational>,
}

impl DownUpElement {
    pub fn zero() -> Self {
        Self::default()
    }

    fn add_scaled(&mut self, other: &DownUpElement, factor: &BigRational) {
        if factor.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            let v = c * factor;
            let entry = self
                .terms
                .entry(w.clone())
                .or_insert_with(BigRational::zero);
            *entry += v;
            if entry.is_zero() {
                self.terms.remove(w);
            }
        }
    }

    pub fn coeff(&self, w: &Word) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in increasing word order (`D < U`, shorter words first only
    /// when they are prefixes).
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for DownUpElement {
    /// One `WORD : coeff` line per term; the empty word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (w, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            let word = if w.is_empty() {
                "1".to_string()
            } else {
                w.to_string()
            };
            write!(f, "{word} : {}", fmt_rational(c))?;
        }
        Ok(())
    }
}

/// Position of the first `DDU` or `DUU` factor, if any.
fn first_redex(letters: &[Letter]) -> Option<usize> {
    letters.windows(3).position(is_redex)
}

fn last_redex(letters: &[Letter]) -> Option<usize> {
    letters.windows(3).rposition(is_redex)
}

fn is_redex(f: &[Letter]) -> bool {
    use Letter::{D, U};
    matches!(f, [D, D, U] | [D, U, U])
}

/// True if `w` contains neither `DDU` nor `DUU`.
pub fn is_du_normal(w: &Word) -> bool {
    first_redex(w.letters()).is_none()
}

/// Which redex to rewrite first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Rewrites words to normal form, memoizing the result for every word it
/// meets. The memo lives in the rewriter and is borrowed mutably, so one
/// rewriter is used from a single thread at a time; separate rewriters share
/// nothing.
#[derive(Debug)]
pub struct DownUpRewriter {
    params: DownUpParams,
    strategy: Strategy,
    memo: HashMap<Word, DownUpElement>,
}

impl DownUpRewriter {
    pub fn new(params: DownUpParams, strategy: Strategy) -> Self {
        DownUpRewriter {
            params,
            strategy,
            memo: HashMap::new(),
        }
    }

    pub fn params(&self) -> &DownUpParams {
        &self.params
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn normal_form(&mut self, w: &Word) -> DownUpElement {
        if let Some(e) = self.memo.get(w) {
            return e.clone();
        }
        let letters = w.letters();
        let pos = match self.strategy {
            Strategy::Leftmost => first_redex(letters),
            Strategy::Rightmost => last_redex(letters),
        };
        let out = match pos {
            None => {
                let mut e = DownUpElement::zero();
                e.terms.insert(w.clone(), BigRational::one());
                e
            }
            Some(i) => {
                // DDU -> α DUD + β UDD + γ D;  DUU -> α UDU + β UUD + γ U
                use Letter::{D, U};
                let (a, b, g): (&[Letter], &[Letter], &[Letter]) = if letters[i + 1] == D {
                    (&[D, U, D], &[U, D, D], &[D])
                } else {
                    (&[U, D, U], &[U, U, D], &[U])
                };
                let params = self.params.clone();
                let mut e = DownUpElement::zero();
                for (replacement, coeff) in
                    [(a, &params.alpha), (b, &params.beta), (g, &params.gamma)]
                {
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut v = Vec::with_capacity(letters.len());
                    v.extend_from_slice(&letters[..i]);
                    v.extend_from_slice(replacement);
                    v.extend_from_slice(&letters[i + 3..]);
                    let sub = self.normal_form(&Word::from_letters(v));
                    e.add_scaled(&sub, coeff);
                }
                e
            }
        };
        self.memo.insert(w.clone(), out.clone());
        out
    }
}

/// Normal form of `w` in `A(α, β, γ)`, rewriting leftmost redexes first.
pub fn du_normal_order(w: &Word, params: &DownUpParams) -> DownUpElement {
    DownUpRewriter::new(params.clone(), Strategy::Leftmost).normal_form(w)
}

/// `u` and `v` have the same image in `A(α, β, γ)`.
pub fn du_equivalent(u: &Word, v: &Word, params: &DownUpParams) -> bool {
    let mut r = DownUpRewriter::new(params.clone(), Strategy::Leftmost);
    r.normal_form(u) == r.normal_form(v)
}
