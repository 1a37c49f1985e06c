//! Deciding Weyl equivalence and computing canonical representatives.
//!
//! Two words are equivalent iff they have the same final height and the same
//! multiset of NE-step heights. [`equivalent`] checks this in one streaming
//! pass per word; [`canonical_form`] rebuilds the unique up-normal (or, via
//! `ω`, down-normal) representative directly from the signature.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::words::{height_polys, step_counts, LaurentPoly, Letter, Word};

/// The complete invariant: final height and NE-step height polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EquivSignature {
    pub final_height: i64,
    pub ne_heights: LaurentPoly,
}

pub fn signature(w: &Word) -> EquivSignature {
    let c = step_counts(w);
    EquivSignature {
        final_height: w.final_height(),
        ne_heights: LaurentPoly::from_dense(c.offset, &c.ne),
    }
}

/// Counter array addressable by any integer index, split into a
/// nonnegative half and a negative half.
#[derive(Default)]
struct SignedCounters {
    nonneg: Vec<u64>,
    neg: Vec<u64>,
}

impl SignedCounters {
    fn slot(&mut self, i: i64) -> &mut u64 {
        let (vec, idx) = if i >= 0 {
            (&mut self.nonneg, i as usize)
        } else {
            (&mut self.neg, (-i - 1) as usize)
        };
        if idx >= vec.len() {
            vec.resize(idx + 1, 0);
        }
        &mut vec[idx]
    }

    fn all_zero(&self) -> bool {
        self.nonneg.iter().chain(&self.neg).all(|&c| c == 0)
    }
}

/// Linear-time, linear-space equivalence test.
///
/// The first pass records NE-step heights of `u`; the second pass walks `v`
/// and cancels them, bailing out as soon as `v` visits a height `u` never
/// reached or a counter would go negative.
pub fn equivalent(u: &Word, v: &Word) -> bool {
    if u.len() != v.len() {
        return false;
    }
    let mut counters = SignedCounters::default();
    let (mut lo, mut hi, mut i) = (0i64, 0i64, 0i64);
    for l in u.letters() {
        match l {
            Letter::U => {
                *counters.slot(i) += 1;
                i += 1;
            }
            Letter::D => i -= 1,
        }
        lo = lo.min(i);
        hi = hi.max(i);
    }
    let final_u = i;

    i = 0;
    for l in v.letters() {
        match l {
            Letter::U => {
                let slot = counters.slot(i);
                if *slot == 0 {
                    return false;
                }
                *slot -= 1;
                i += 1;
            }
            Letter::D => i -= 1,
        }
        if i < lo || i > hi {
            return false;
        }
    }
    i == final_u && counters.all_zero()
}

/// True iff the rising word `w` has no factor `U D^k U` with `k ≥ 2`.
pub fn is_up_normal(w: &Word) -> Result<bool> {
    if !w.is_rising() {
        return Err(Error::domain(format!("{w} is not rising")));
    }
    Ok(!has_down_zig(w))
}

fn has_down_zig(w: &Word) -> bool {
    let mut seen_u = false;
    let mut run = 0usize;
    for &l in w.letters() {
        match l {
            Letter::D => run += 1,
            Letter::U => {
                if seen_u && run >= 2 {
                    return true;
                }
                seen_u = true;
                run = 0;
            }
        }
    }
    false
}

/// Assembles `D^a (UD)^{r_1} U ⋯ (UD)^{r_h} U D^b` from a rising signature.
fn up_normal_from_signature(sig: &EquivSignature) -> Result<Word> {
    let ne = &sig.ne_heights;
    let Some(min) = ne.min_exponent() else {
        // No NE-steps: a rising word without U's is empty.
        return if sig.final_height == 0 {
            Ok(Word::empty())
        } else {
            Err(Error::Internal(format!(
                "signature without NE-steps has final height {}",
                sig.final_height
            )))
        };
    };
    let max = ne.max_exponent().expect("nonempty");
    let a = -min;
    let h = (max - min + 1) as usize;
    if a < 0 || ne.num_terms() != h {
        return Err(Error::Internal(format!(
            "NE-heights {ne} of a rising class must cover a contiguous range through 0 or below"
        )));
    }
    let b = -a + h as i64 - sig.final_height;
    if b < 0 {
        return Err(Error::Internal(format!("negative trailing run {b}")));
    }
    let mut out = Word::power(Letter::D, a as usize);
    for (_, mult) in ne.terms() {
        let r = mult.to_usize().expect("multiplicity fits usize") - 1;
        for _ in 0..r {
            out.push(Letter::U);
            out.push(Letter::D);
        }
        out.push(Letter::U);
    }
    out.extend_from(&Word::power(Letter::D, b as usize));
    Ok(out)
}

/// The unique up-normal word equivalent to the rising word `w`.
///
/// Built directly from the signature and then validated; a failed validation
/// is reported as [`Error::Internal`].
pub fn up_normal_form(w: &Word) -> Result<Word> {
    if !w.is_rising() {
        return Err(Error::domain(format!("{w} is not rising")));
    }
    let t = up_normal_from_signature(&signature(w))?;
    if has_down_zig(&t) || !equivalent(&t, w) {
        return Err(Error::Internal(format!(
            "reconstructed {t} is not an up-normal form of {w}"
        )));
    }
    Ok(t)
}

/// Canonical representative of the class of `w`: the up-normal form for
/// rising words, and `ω(up_normal_form(ω(w)))` for falling ones.
pub fn canonical_form(w: &Word) -> Word {
    let res = if w.is_rising() {
        up_normal_form(w)
    } else {
        up_normal_form(&w.omega()).map(|t| t.omega())
    };
    res.expect("every word has a canonical form")
}

/// `(final height, H_SE)`; equal for two words iff they are equivalent.
pub fn se_signature(w: &Word) -> (i64, LaurentPoly) {
    (w.final_height(), height_polys(w).se)
}

/// `(final height, H)`; equal for two words iff they are equivalent.
pub fn height_signature(w: &Word) -> (i64, LaurentPoly) {
    (w.final_height(), height_polys(w).h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::words_of_length;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn signature_examples() {
        let expect = EquivSignature {
            final_height: 0,
            ne_heights: LaurentPoly::from_terms([(-1, 1), (0, 1)]),
        };
        assert_eq!(signature(&w("DUUD")), expect);
        assert_eq!(signature(&w("UDDU")), expect);
        assert_eq!(
            signature(&Word::empty()),
            EquivSignature {
                final_height: 0,
                ne_heights: LaurentPoly::zero()
            }
        );
    }

    #[test]
    fn equivalent_examples() {
        assert!(equivalent(&w("DUUD"), &w("UDDU")));
        assert!(equivalent(&w("DUDDUUDUUD"), &w("DDUUDUUDDU")));
        assert!(!equivalent(&w("U"), &w("D")));
        assert!(!equivalent(&w("UDUU"), &w("UUDD")));
        assert!(equivalent(&Word::empty(), &Word::empty()));
        for word in words_of_length(6) {
            assert!(equivalent(&word, &word));
        }
    }

    #[test]
    fn equal_height_polynomial_is_not_enough() {
        let (a, b) = (w("UDUU"), w("UUDD"));
        assert_eq!(height_polys(&a).h, height_polys(&b).h);
        assert_eq!(
            height_polys(&a).h,
            LaurentPoly::from_terms([(0, 2), (1, 2), (2, 1)])
        );
        assert!(!equivalent(&a, &b));
    }

    #[test]
    fn streaming_early_exits() {
        // v climbs above anything u reached.
        assert!(!equivalent(&w("UDUD"), &w("UUDD")));
        // v dips below anything u reached, then recovers.
        assert!(!equivalent(&w("UDUD"), &w("DUUD")));
        // same NE multiset, different final height is impossible at equal
        // length, but different lengths short-circuit.
        assert!(!equivalent(&w("UD"), &w("UDUD")));
    }

    #[test]
    fn up_normal_examples() {
        assert_eq!(is_up_normal(&w("UUDUDUDD")), Ok(true));
        assert_eq!(is_up_normal(&w("UUDDUU")), Ok(false));
        assert_eq!(is_up_normal(&Word::empty()), Ok(true));
        assert!(matches!(is_up_normal(&w("DDU")), Err(Error::Domain(_))));
        assert!(matches!(up_normal_form(&w("DDU")), Err(Error::Domain(_))));
    }

    #[test]
    fn up_normal_form_examples() {
        // Oracle: BFS over balanced commutations of UUDDUU yields
        // {UUDDUU, UDUUDU} and UDUUDU is the only down-zig-free member.
        assert_eq!(up_normal_form(&w("UUDDUU")).unwrap(), w("UDUUDU"));
        assert_eq!(up_normal_form(&w("UUDUDUDD")).unwrap(), w("UUDUDUDD"));
        for n in 0..6 {
            let un = Word::power(Letter::U, n);
            assert_eq!(up_normal_form(&un).unwrap(), un);
        }
    }

    #[test]
    fn canonical_form_examples() {
        assert_eq!(canonical_form(&w("DUUD")), canonical_form(&w("UDDU")));
        let ddu = w("DDU");
        let c = canonical_form(&ddu);
        assert_eq!(ddu.omega(), w("DUU"));
        assert_eq!(c, up_normal_form(&w("DUU")).unwrap().omega());
        assert!(equivalent(&ddu, &c));
        assert_eq!(canonical_form(&Word::empty()), Word::empty());
        for n in 0..5 {
            let dn = Word::power(Letter::D, n);
            assert_eq!(canonical_form(&dn), dn);
        }
    }

    #[test]
    fn up_normal_forms_are_up_normal_and_equivalent() {
        for n in 0..=12 {
            for word in words_of_length(n).filter(Word::is_rising) {
                let t = up_normal_form(&word).unwrap();
                assert_eq!(is_up_normal(&t), Ok(true));
                assert!(equivalent(&t, &word));
            }
        }
    }

    #[test]
    fn canonical_forms_separate_classes() {
        for n in 0..=10 {
            let keyed: Vec<(Word, EquivSignature)> = words_of_length(n)
                .map(|u| (canonical_form(&u), signature(&u)))
                .collect();
            for (cu, su) in &keyed {
                for (cv, sv) in &keyed {
                    assert_eq!(cu == cv, su == sv);
                }
            }
        }
    }
}
