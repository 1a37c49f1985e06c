//! Words over `{D, U}`, their diagonal paths and height polynomials.

mod laurent;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use laurent::LaurentPoly;

/// A single letter. `D` sorts before `U`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Letter {
    D = 0,
    U = 1,
}

impl Letter {
    pub fn toggle(self) -> Letter {
        match self {
            Letter::D => Letter::U,
            Letter::U => Letter::D,
        }
    }

    /// `+1` for `U`, `-1` for `D`.
    pub fn step(self) -> i64 {
        match self {
            Letter::D => -1,
            Letter::U => 1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::D => 'D',
            Letter::U => 'U',
        }
    }
}

/// An element of the free monoid on `{D, U}`.
///
/// Ordering is lexicographic with `D < U`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// `letter^n`
    pub fn power(letter: Letter, n: usize) -> Self {
        Word(vec![letter; n])
    }

    /// The word of length `n` whose `i`-th letter is `U` iff bit `i` of
    /// `bits` is set.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        Word(
            (0..n)
                .map(|i| {
                    if bits >> i & 1 == 1 {
                        Letter::U
                    } else {
                        Letter::D
                    }
                })
                .collect(),
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = Vec::with_capacity(self.len() + other.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        Word(out)
    }

    /// The factor `self[start..end]`.
    pub fn factor(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn count_u(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::U).count()
    }

    pub fn count_d(&self) -> usize {
        self.len() - self.count_u()
    }

    /// `#U − #D`, the height at which the standard path ends.
    pub fn final_height(&self) -> i64 {
        self.0.iter().map(|l| l.step()).sum()
    }

    pub fn is_balanced(&self) -> bool {
        self.final_height() == 0
    }

    /// At least as many `U`s as `D`s.
    pub fn is_rising(&self) -> bool {
        self.final_height() >= 0
    }

    /// At least as many `D`s as `U`s.
    pub fn is_falling(&self) -> bool {
        self.final_height() <= 0
    }

    /// The anti-automorphism that reverses the word and toggles every letter.
    pub fn omega(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.toggle()).collect())
    }

    /// Heights of the standard path's vertices; `len() + 1` entries starting
    /// with `0`.
    pub fn prefix_heights(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut h = 0;
        out.push(h);
        for l in &self.0 {
            h += l.step();
            out.push(h);
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|l| l.as_char()).collect();
        f.write_str(&s)
    }
}

/// Parses a `{D, U}` string, accepting lowercase letters.
pub fn parse_word(text: &str) -> Result<Word> {
    text.chars()
        .enumerate()
        .map(|(position, c)| match c {
            'D' | 'd' => Ok(Letter::D),
            'U' | 'u' => Ok(Letter::U),
            found => Err(Error::Parse { position, found }),
        })
        .collect::<Result<Vec<_>>>()
        .map(Word)
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        parse_word(s)
    }
}

/// All `2^n` words of length `n`, in `from_bits` order.
pub fn words_of_length(n: usize) -> impl Iterator<Item = Word> {
    assert!(n < 64, "word length {n} too large to enumerate");
    (0..1u64 << n).map(move |bits| Word::from_bits(n, bits))
}

/// All words with `n` letters of which exactly `k` are `D`.
pub fn words_with_counts(n: usize, k: usize) -> impl Iterator<Item = Word> {
    assert!(n < 64, "word length {n} too large to enumerate");
    let ups = (n - k.min(n)) as u32;
    (0..1u64 << n)
        .filter(move |bits| k <= n && bits.count_ones() == ups)
        .map(move |bits| Word::from_bits(n, bits))
}

/// A walk on the diagonal lattice: every step is `(+1, +1)` or `(+1, −1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalPath {
    vertices: Vec<(i64, i64)>,
}

impl DiagonalPath {
    pub fn new(vertices: Vec<(i64, i64)>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::domain("a diagonal path needs at least one vertex"));
        }
        for (i, w) in vertices.windows(2).enumerate() {
            let (dx, dy) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
            if dx != 1 || dy.abs() != 1 {
                return Err(Error::domain(format!(
                    "step {i} from {:?} to {:?} is not a diagonal arc",
                    w[0], w[1]
                )));
            }
        }
        Ok(DiagonalPath { vertices })
    }

    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.vertices
    }

    pub fn start(&self) -> (i64, i64) {
        self.vertices[0]
    }

    pub fn end(&self) -> (i64, i64) {
        *self.vertices.last().expect("nonempty")
    }

    pub fn reading_word(&self) -> Word {
        Word(
            self.vertices
                .windows(2)
                .map(|w| {
                    if w[1].1 > w[0].1 {
                        Letter::U
                    } else {
                        Letter::D
                    }
                })
                .collect(),
        )
    }

    /// Height polynomials of this path (not necessarily starting at height 0).
    pub fn height_polys(&self) -> HeightPolys {
        let mut out = HeightPolys::default();
        for (i, &(_, y)) in self.vertices.iter().enumerate() {
            out.h.add_term(y, 1.into());
            if let Some(&(_, next)) = self.vertices.get(i + 1) {
                if next > y {
                    out.ne.add_term(y, 1.into());
                } else {
                    out.se.add_term(y, 1.into());
                }
            }
        }
        out
    }
}

/// The path starting at `(0, 0)` whose reading word is `w`.
pub fn standard_path(w: &Word) -> DiagonalPath {
    let vertices = w
        .prefix_heights()
        .into_iter()
        .enumerate()
        .map(|(x, y)| (x as i64, y))
        .collect();
    DiagonalPath { vertices }
}

/// Vertex heights `H`, NE-step heights `H_NE` and SE-step heights `H_SE`.
///
/// A step's height is the height of the vertex it starts from.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeightPolys {
    pub h: LaurentPoly,
    pub ne: LaurentPoly,
    pub se: LaurentPoly,
}

/// Dense step-height counters relative to the lowest reachable height.
pub(crate) struct StepCounts {
    /// Exponent of index 0.
    pub offset: i64,
    pub vertices: Vec<u64>,
    pub ne: Vec<u64>,
    pub se: Vec<u64>,
}

pub(crate) fn step_counts(w: &Word) -> StepCounts {
    let (mut lo, mut hi, mut h) = (0i64, 0i64, 0i64);
    for l in w.letters() {
        h += l.step();
        lo = lo.min(h);
        hi = hi.max(h);
    }
    let width = (hi - lo + 1) as usize;
    let mut c = StepCounts {
        offset: lo,
        vertices: vec![0; width],
        ne: vec![0; width],
        se: vec![0; width],
    };
    let mut idx = (-lo) as usize;
    c.vertices[idx] += 1;
    for l in w.letters() {
        match l {
            Letter::U => {
                c.ne[idx] += 1;
                idx += 1;
            }
            Letter::D => {
                c.se[idx] += 1;
                idx -= 1;
            }
        }
        c.vertices[idx] += 1;
    }
    c
}

/// The three height polynomials of the standard path of `w`.
pub fn height_polys(w: &Word) -> HeightPolys {
    let c = step_counts(w);
    HeightPolys {
        h: LaurentPoly::from_dense(c.offset, &c.vertices),
        ne: LaurentPoly::from_dense(c.offset, &c.ne),
        se: LaurentPoly::from_dense(c.offset, &c.se),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        use Letter::*;
        assert_eq!(w("DUUD").letters(), &[D, U, U, D]);
        assert!(w("").is_empty());
        assert_eq!(w("duUD"), w("DUUD"));
        assert_eq!(w("duUD").to_string(), "DUUD");
        assert_eq!(
            parse_word("UDxU"),
            Err(Error::Parse {
                position: 2,
                found: 'x'
            })
        );
        assert!(matches!(
            parse_word("U D"),
            Err(Error::Parse { position: 1, .. })
        ));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(w("UDD").omega(), w("UUD"));
        assert_eq!(Word::empty().omega(), Word::empty());
        for word in words_of_length(7) {
            assert_eq!(word.omega().omega(), word);
        }
    }

    #[test]
    fn final_height_examples() {
        assert_eq!(w("UDUUDDD").final_height(), -1);
        assert_eq!(Word::power(Letter::U, 9).final_height(), 9);
        assert_eq!(w("DUDDUU").final_height(), 0);
        let e = Word::empty();
        assert!(e.is_balanced() && e.is_rising() && e.is_falling());
    }

    #[test]
    fn standard_path_examples() {
        assert_eq!(
            standard_path(&w("UD")).vertices(),
            &[(0, 0), (1, 1), (2, 0)]
        );
        assert_eq!(standard_path(&Word::empty()).vertices(), &[(0, 0)]);
        assert_eq!(standard_path(&w("UDUUDDD")).end(), (7, -1));
        for word in words_of_length(6) {
            assert_eq!(standard_path(&word).reading_word(), word);
        }
    }

    #[test]
    fn diagonal_path_validation() {
        assert!(DiagonalPath::new(vec![(0, 0), (1, 0)]).is_err());
        assert!(DiagonalPath::new(vec![(0, 0), (2, 1)]).is_err());
        assert!(DiagonalPath::new(vec![]).is_err());
        let p = DiagonalPath::new(vec![(3, 2), (4, 1), (5, 2)]).unwrap();
        assert_eq!(p.reading_word(), w("DU"));
    }

    #[test]
    fn height_polys_worked_example() {
        let hp = height_polys(&w("UDUUDDD"));
        assert_eq!(
            hp.h,
            LaurentPoly::from_terms([(-1, 1), (0, 3), (1, 3), (2, 1)])
        );
        assert_eq!(hp.ne, LaurentPoly::from_terms([(0, 2), (1, 1)]));
        assert_eq!(hp.se, LaurentPoly::from_terms([(0, 1), (1, 2), (2, 1)]));
    }

    #[test]
    fn height_polys_empty() {
        let hp = height_polys(&Word::empty());
        assert_eq!(hp.h, LaurentPoly::one());
        assert!(hp.ne.is_zero());
        assert!(hp.se.is_zero());
    }

    #[test]
    fn dense_and_path_routes_agree() {
        for n in 0..=9 {
            for word in words_of_length(n) {
                assert_eq!(height_polys(&word), standard_path(&word).height_polys());
            }
        }
    }

    #[test]
    fn coefficient_sums() {
        for word in words_of_length(8) {
            let hp = height_polys(&word);
            assert_eq!(hp.h.eval_at_one(), BigInt::from(word.len() + 1));
            assert_eq!(hp.ne.eval_at_one(), BigInt::from(word.count_u()));
            assert_eq!(hp.se.eval_at_one(), BigInt::from(word.count_d()));
        }
    }

    #[test]
    fn laurent_identities_exhaustive() {
        let one_plus_z = |p: &LaurentPoly| p + &p.shift(1);
        let one_plus_zinv = |p: &LaurentPoly| p + &p.shift(-1);
        for n in 0..=10 {
            for word in words_of_length(n) {
                let b = word.final_height();
                let hp = height_polys(&word);
                let via_ne = &one_plus_z(&hp.ne) + &LaurentPoly::tail_difference(b, 1);
                assert_eq!(hp.h, via_ne, "NE identity for {word}");
                let via_se = &one_plus_zinv(&hp.se) + &LaurentPoly::tail_difference(0, b + 1);
                assert_eq!(hp.h, via_se, "SE identity for {word}");
                let split = &(&hp.ne + &hp.se) + &LaurentPoly::monomial(b, 1);
                assert_eq!(hp.h, split);
            }
        }
    }

    #[test]
    fn omega_reflects_the_path() {
        // Reflect the standard path across a vertical axis, walk it in the
        // forward direction and compare with the polynomials of ω(w).
        for n in 0..=10 {
            for word in words_of_length(n) {
                let path = standard_path(&word);
                let len = word.len() as i64;
                let mut reflected: Vec<(i64, i64)> =
                    path.vertices().iter().map(|&(x, y)| (len - x, y)).collect();
                reflected.reverse();
                let reflected = DiagonalPath::new(reflected).unwrap();
                assert_eq!(reflected.reading_word(), word.omega());
                // Re-based at height 0 it is the standard path of ω(w).
                let b = word.final_height();
                let mine = reflected.height_polys();
                let theirs = height_polys(&word.omega());
                assert_eq!(theirs.h, mine.h.shift(-b));
                assert_eq!(theirs.ne, mine.ne.shift(-b));
                assert_eq!(theirs.se, mine.se.shift(-b));
                // NE-steps of ω(w) are the SE-steps of w read backwards.
                let hp = height_polys(&word);
                assert_eq!(theirs.ne, hp.se.shift(-1 - b));
                assert_eq!(theirs.se, hp.ne.shift(1 - b));
            }
        }
    }
}
