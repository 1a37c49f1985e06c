//! The first Weyl algebra in the normal-ordered basis `U^j D^i`, the Navon
//! rook expansion, the action on Laurent monomials and tensor reduction.

mod board;
mod rank;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{binomial, factorial};
use crate::equivalence::equivalent;
use crate::words::{Letter, Word};

pub use board::{ferrers_board, rook_numbers, Board, FerrersBoard};
pub use rank::matrix_rank_counts;

/// `Σ c_{j,i} U^j D^i`, keyed by `(j, i)` = `(u_power, d_power)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeylElement {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl WeylElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(u_power: u32, d_power: u32, coeff: impl Into<BigInt>) -> Self {
        let mut e = Self::zero();
        e.add_term(u_power, d_power, coeff.into());
        e
    }

    pub fn add_term(&mut self, u_power: u32, d_power: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let key = (u_power, d_power);
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, u_power: u32, d_power: u32) -> BigInt {
        self.terms
            .get(&(u_power, d_power))
            .cloned()
            .unwrap_or_default()
    }

    /// Nonzero terms as `((u_power, d_power), coeff)` in increasing key order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = ((u32, u32), &BigInt)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Right multiplication by one generator.
    pub fn mul_letter(&self, letter: Letter) -> Self {
        let mut out = Self::zero();
        for (&(j, i), c) in &self.terms {
            match letter {
                Letter::D => out.add_term(j, i + 1, c.clone()),
                Letter::U => {
                    out.add_term(j + 1, i, c.clone());
                    if i > 0 {
                        out.add_term(j, i - 1, c * BigInt::from(i));
                    }
                }
            }
        }
        out
    }

    /// Full product, using `D^b U^c = Σ_k k!·C(b,k)·C(c,k)·U^{c−k} D^{b−k}`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &rhs.terms {
                let xy = x * y;
                for k in 0..=b.min(c) {
                    let w = factorial(k as u64)
                        * binomial(b as i64, k as i64)
                        * binomial(c as i64, k as i64);
                    out.add_term(a + c - k, b + d - k, &xy * BigInt::from(w));
                }
            }
        }
        out
    }

    /// Image under the anti-automorphism swapping `U` and `D`, which sends
    /// `U^j D^i` to `U^i D^j`.
    pub fn transpose(&self) -> Self {
        WeylElement {
            terms: self
                .terms
                .iter()
                .map(|(&(j, i), c)| ((i, j), c.clone()))
                .collect(),
        }
    }

    /// Applies the element to `x^s` term by term:
    /// `U^j D^i x^s = s(s−1)⋯(s−i+1) x^{s−i+j}`. Returns exponent → coefficient.
    pub fn act_on_monomial(&self, s: i64) -> BTreeMap<i64, BigInt> {
        let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (&(j, i), c) in &self.terms {
            let mut falling = BigInt::one();
            for t in 0..i as i64 {
                falling *= BigInt::from(s - t);
            }
            let v = c * falling;
            if v.is_zero() {
                continue;
            }
            let e = s - i as i64 + j as i64;
            let entry = out.entry(e).or_insert_with(BigInt::zero);
            *entry += v;
            if entry.is_zero() {
                out.remove(&e);
            }
        }
        out
    }
}

impl fmt::Display for WeylElement {
    /// One `U^j D^i : coeff` line per term, highest `U` power first, then
    /// highest `D` power; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, ((j, i), c)) in self.terms().rev().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "U^{j} D^{i} : {c}")?;
        }
        Ok(())
    }
}

/// `φ(w)` in the `U^j D^i` basis, multiplying in one letter at a time.
pub fn normal_order(w: &Word) -> WeylElement {
    w.letters()
        .iter()
        .fold(WeylElement::one(), |acc, &l| acc.mul_letter(l))
}

/// `Σ_k r_k(B_w) U^{m−k} D^{n−k}` with `m = #U`, `n = #D`.
pub fn navon_expand(w: &Word) -> WeylElement {
    let (m, n) = (w.count_u() as u32, w.count_d() as u32);
    let top = m.min(n);
    let r = rook_numbers(&ferrers_board(w), top as usize);
    let mut out = WeylElement::zero();
    for k in 0..=top {
        out.add_term(m - k, n - k, BigInt::from(r[k as usize].clone()));
    }
    out
}

/// Rook numbers of `B_u` and `B_v` agree for every `k`.
pub fn rook_equivalent(u: &Word, v: &Word) -> bool {
    let top = [u.count_d(), u.count_u(), v.count_d(), v.count_u()]
        .into_iter()
        .max()
        .unwrap_or(0);
    rook_numbers(&ferrers_board(u), top) == rook_numbers(&ferrers_board(v), top)
}

/// `φ(w)(x^s) = coefficient · x^{s + exponent_shift}` for one fixed `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialAction {
    pub coefficient: BigInt,
    pub exponent_shift: i64,
}

/// Each SE-step `p_i → p_{i+1}` of the standard path contributes the factor
/// `s + h_k − h_{i+1}`, where `h_k` is the final height.
pub fn apply_to_monomial(w: &Word, s: i64) -> MonomialAction {
    let heights = w.prefix_heights();
    let end = *heights.last().expect("nonempty");
    let mut coefficient = BigInt::one();
    for (i, l) in w.letters().iter().enumerate() {
        if *l == Letter::D {
            coefficient *= BigInt::from(s + end - heights[i + 1]);
        }
    }
    MonomialAction {
        coefficient,
        exponent_shift: end,
    }
}

/// Compares the actions on `x^0, …, x^{max #D + 1}`. The coefficient is a
/// polynomial in `s` of degree at most `#D`, so these points decide equality.
pub fn actions_agree(u: &Word, v: &Word) -> bool {
    let top = u.count_d().max(v.count_d()) as i64 + 1;
    (0..=top).all(|s| apply_to_monomial(u, s) == apply_to_monomial(v, s))
}

/// Decides `φ(u_1) ⊗ ⋯ ⊗ φ(u_n) = φ(v_1) ⊗ ⋯ ⊗ φ(v_n)` componentwise.
pub fn tensor_equivalent(pairs: &[(Word, Word)]) -> bool {
    pairs.iter().all(|(u, v)| equivalent(u, v))
}

/// True if every nonzero coefficient of `e` is positive.
pub fn has_positive_coefficients(e: &WeylElement) -> bool {
    e.terms().all(|(_, c)| c.is_positive())
}

/// Count of all rook placements, `Σ_k r_k`.
pub fn total_rook_placements(b: &FerrersBoard) -> BigUint {
    rook_numbers(b, b.num_cols()).into_iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::words_of_length;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn elem(terms: &[((u32, u32), i64)]) -> WeylElement {
        let mut e = WeylElement::zero();
        for &((j, i), c) in terms {
            e.add_term(j, i, BigInt::from(c));
        }
        e
    }

    /// `φ(w)(x^s)` evaluated right to left: `D` differentiates, `U`
    /// multiplies by `x`.
    fn act_directly(w: &Word, s: i64) -> (BigInt, i64) {
        let mut c = BigInt::one();
        let mut e = s;
        for l in w.letters().iter().rev() {
            match l {
                Letter::D => {
                    c *= BigInt::from(e);
                    e -= 1;
                }
                Letter::U => e += 1,
            }
        }
        (c, e - s)
    }

    #[test]
    fn normal_order_examples() {
        assert_eq!(normal_order(&w("DU")), elem(&[((1, 1), 1), ((0, 0), 1)]));
        assert_eq!(normal_order(&w("UD")), elem(&[((1, 1), 1)]));
        assert_eq!(
            normal_order(&w("DDUU")),
            elem(&[((2, 2), 1), ((1, 1), 4), ((0, 0), 2)])
        );
        assert_eq!(normal_order(&Word::empty()), WeylElement::one());
    }

    #[test]
    fn navon_examples() {
        assert_eq!(navon_expand(&w("DU")), elem(&[((1, 1), 1), ((0, 0), 1)]));
        assert_eq!(navon_expand(&w("UUU")), elem(&[((3, 0), 1)]));
        assert_eq!(navon_expand(&w("DDUU")), normal_order(&w("DDUU")));
    }

    #[test]
    fn navon_matches_normal_order_exhaustive() {
        for n in 0..=10 {
            for word in words_of_length(n) {
                assert_eq!(navon_expand(&word), normal_order(&word), "{word}");
            }
        }
    }

    #[test]
    fn product_is_associative_and_matches_words() {
        let words: Vec<Word> = words_of_length(4).collect();
        for a in &words {
            for b in &words {
                let lhs = normal_order(a).mul(&normal_order(b));
                assert_eq!(lhs, normal_order(&a.concat(b)));
            }
        }
    }

    #[test]
    fn omega_is_transpose() {
        for n in 0..=8 {
            for word in words_of_length(n) {
                assert_eq!(normal_order(&word.omega()), normal_order(&word).transpose());
            }
        }
    }

    #[test]
    fn leading_coefficient_is_one() {
        for n in 0..=10 {
            for word in words_of_length(n) {
                let e = normal_order(&word);
                let (m, d) = (word.count_u() as u32, word.count_d() as u32);
                assert!(!e.is_zero());
                assert!(e.coeff(m, d).is_one());
                assert!(has_positive_coefficients(&e));
                assert!(e.terms().all(|((j, i), _)| m - j == d - i));
            }
        }
    }

    #[test]
    fn equivalent_iff_same_normal_order() {
        for n in 0..=10 {
            let keyed: Vec<(Word, WeylElement)> = words_of_length(n)
                .map(|u| (u.clone(), normal_order(&u)))
                .collect();
            for (u, eu) in &keyed {
                for (v, ev) in &keyed {
                    assert_eq!(equivalent(u, v), eu == ev, "{u} {v}");
                }
            }
        }
    }

    #[test]
    fn action_examples() {
        for s in -3..6 {
            let a = apply_to_monomial(&w("DUUD"), s);
            assert_eq!(a.coefficient, BigInt::from(s * (s + 1)));
            assert_eq!(a.exponent_shift, 0);
            assert_eq!(
                apply_to_monomial(&w("U"), s),
                MonomialAction {
                    coefficient: BigInt::one(),
                    exponent_shift: 1
                }
            );
        }
        let d0 = apply_to_monomial(&w("D"), 0);
        assert!(d0.coefficient.is_zero());
        assert_eq!(d0.exponent_shift, -1);
    }

    #[test]
    fn action_matches_direct_evaluation_and_expansion() {
        for n in 0..=9 {
            for word in words_of_length(n) {
                let e = normal_order(&word);
                for s in -(n as i64)..=2 * n as i64 {
                    let a = apply_to_monomial(&word, s);
                    let (c, shift) = act_directly(&word, s);
                    assert_eq!((a.coefficient.clone(), a.exponent_shift), (c, shift));
                    let termwise = e.act_on_monomial(s);
                    if a.coefficient.is_zero() {
                        assert!(termwise.is_empty(), "{word} {s}");
                    } else {
                        assert_eq!(termwise.len(), 1);
                        assert_eq!(termwise.get(&(s + shift)), Some(&a.coefficient));
                    }
                }
            }
        }
    }

    #[test]
    fn actions_agree_examples() {
        assert!(actions_agree(&w("DUUD"), &w("UDDU")));
        assert!(!actions_agree(&w("UDUU"), &w("UUDD")));
        assert!(actions_agree(&w("UDUDDU"), &w("UDUDDU")));
    }

    #[test]
    fn actions_agree_iff_equivalent() {
        for n in 0..=8 {
            let words: Vec<Word> = words_of_length(n).collect();
            for u in &words {
                for v in &words {
                    assert_eq!(actions_agree(u, v), equivalent(u, v), "{u} {v}");
                }
            }
        }
    }

    #[test]
    fn rook_equivalence_examples() {
        assert!(rook_equivalent(&w("DUUDU"), &w("DDUU")));
        assert!(!equivalent(&w("DUUDU"), &w("DDUU")));
        for n in 0..=8 {
            for word in words_of_length(n) {
                assert!(rook_equivalent(&word, &word.omega()));
            }
        }
    }

    #[test]
    fn rook_equivalence_decides_same_count_pairs() {
        for n in 0..=10 {
            for k in 0..=n {
                let words: Vec<Word> = crate::words::words_with_counts(n, k).collect();
                for u in &words {
                    for v in &words {
                        assert_eq!(rook_equivalent(u, v), equivalent(u, v), "{u} {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn padding_equalizes_counts() {
        let (u, v) = (w("DUUDU"), w("DDUU"));
        let padded = Word::power(Letter::U, 1).concat(&v);
        assert_eq!(ferrers_board(&padded), ferrers_board(&v));
        assert_eq!(
            (padded.count_u(), padded.count_d()),
            (u.count_u(), u.count_d())
        );
        assert!(rook_equivalent(&u, &padded));
        assert!(equivalent(&u, &padded));
    }

    #[test]
    fn tensor_examples() {
        assert!(tensor_equivalent(&[
            (w("DUUD"), w("UDDU")),
            (w("UD"), w("UD"))
        ]));
        assert!(!tensor_equivalent(&[(w("U"), w("U")), (w("U"), w("D"))]));
        assert!(tensor_equivalent(&[]));
    }

    #[test]
    fn display_orders_terms() {
        assert_eq!(
            normal_order(&w("DDUU")).to_string(),
            "U^2 D^2 : 1\nU^1 D^1 : 4\nU^0 D^0 : 2"
        );
        assert_eq!(WeylElement::zero().to_string(), "0");
    }

    #[test]
    fn total_placements() {
        let b = FerrersBoard::new(vec![2, 2]).unwrap();
        assert_eq!(total_rook_placements(&b), BigUint::from(7u32));
    }
}
