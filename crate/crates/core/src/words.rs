//! Word-level primitives: subsequence test, arch factorization, universality
//! index and shortest absent subsequences.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use crate::{Error, Result};

/// A letter of the integer alphabet `1..=σ`. `0` is [`EPSILON`].
pub type Letter = u32;

/// The empty-letter sentinel used where "no starting letter" is meant.
pub const EPSILON: Letter = 0;

/// The alphabet `{1, .., σ}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    size: u32,
}

impl Alphabet {
    pub fn new(size: u32) -> Result<Self> {
        if size == 0 {
            return Err(Error::Input("alphabet must have at least one letter".into()));
        }
        Ok(Alphabet { size })
    }

    pub fn size(self) -> u32 {
        self.size
    }

    pub fn letters(self) -> impl Iterator<Item = Letter> + Clone {
        1..=self.size
    }

    pub fn contains(self, letter: Letter) -> bool {
        (1..=self.size).contains(&letter)
    }

    pub fn check_letter(self, letter: Letter) -> Result<()> {
        if self.contains(letter) {
            Ok(())
        } else {
            Err(Error::LetterOutOfRange {
                letter,
                sigma: self.size,
            })
        }
    }

    pub fn check_word(self, w: &[Letter]) -> Result<()> {
        w.iter().try_for_each(|&l| self.check_letter(l))
    }

    pub fn ensure_same(self, other: Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.size,
                right: other.size,
            })
        }
    }

    /// Bit mask with one bit per letter (letter `a` is bit `a - 1`).
    /// Only meaningful for `σ <= 63`.
    pub fn full_mask(self) -> u64 {
        debug_assert!(self.size <= 63);
        (1u64 << self.size) - 1
    }

    /// All words over this alphabet of length exactly `len`, in lexicographic order.
    pub fn words_of_length(self, len: usize) -> impl Iterator<Item = Word> {
        let sigma = self.size;
        let total = (sigma as u128).checked_pow(len as u32);
        let mut current = Some(vec![1; len]);
        let _ = total;
        std::iter::from_fn(move || {
            let out = current.clone()?;
            // increment like an odometer, last position fastest
            let cur = current.as_mut().unwrap();
            let mut i = len;
            loop {
                if i == 0 {
                    current = None;
                    break;
                }
                i -= 1;
                if cur[i] < sigma {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 1;
            }
            Some(Word(out))
        })
    }

    /// All words of length `0..=max_len`, length-lexicographically ordered.
    pub fn words_up_to(self, max_len: usize) -> impl Iterator<Item = Word> {
        (0..=max_len).flat_map(move |len| self.words_of_length(len))
    }

    /// Number of words of length at most `max_len`, saturating at `u128::MAX`.
    pub fn count_words_up_to(self, max_len: usize) -> u128 {
        let mut total: u128 = 0;
        let mut layer: u128 = 1;
        for _ in 0..=max_len {
            total = total.saturating_add(layer);
            layer = layer.saturating_mul(self.size as u128);
        }
        total
    }
}

/// A finite word over the integer alphabet.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Parses lowercase ASCII letters, `a = 1`, `b = 2`, ... The string `ε`
    /// or an empty string denotes the empty word.
    pub fn from_ascii(s: &str) -> Result<Self> {
        if s == "ε" {
            return Ok(Word::empty());
        }
        s.chars()
            .map(|c| {
                if c.is_ascii_lowercase() {
                    Ok(c as u32 - 'a' as u32 + 1)
                } else {
                    Err(Error::Input(format!(
                        "letter `{c}` is not a lowercase ASCII letter"
                    )))
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Parses a comma separated list of positive integers, e.g. `1,2,1`.
    pub fn from_ints(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Word::empty());
        }
        s.split(',')
            .map(|t| {
                let t = t.trim();
                match t.parse::<u32>() {
                    Ok(l) if l >= 1 => Ok(l),
                    _ => Err(Error::Input(format!("`{t}` is not a positive letter"))),
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn concat(&self, other: &[Letter]) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(other);
        Word(v)
    }

    /// The set of letters occurring in the word, ascending.
    pub fn alph(&self) -> Vec<Letter> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn largest_letter(&self) -> Letter {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Word(v.to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Length-lexicographic order: shorter words first, then lexicographic.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Words over at most 26 letters print as lowercase ASCII (`ε` when empty);
/// larger letters fall back to the comma separated integer form.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        if self.0.iter().all(|&l| (1..=26).contains(&l)) {
            for &l in &self.0 {
                write!(f, "{}", (b'a' + (l - 1) as u8) as char)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

/// Greedy left-to-right embedding test: is `v` a subsequence of `w`?
pub fn is_subsequence(v: &[Letter], w: &[Letter]) -> bool {
    let mut it = w.iter();
    v.iter().all(|x| it.any(|y| y == x))
}

/// The arch factorization `w = ar_1 ... ar_ι · r` of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArchFactorization {
    pub arches: Vec<Word>,
    pub rest: Word,
    /// Last letters of the arches, in order.
    pub modus: Word,
    pub iota: usize,
}

impl ArchFactorization {
    /// Concatenation of arches and rest; equals the factorized word.
    pub fn reconstruct(&self) -> Word {
        self.arches
            .iter()
            .flat_map(|a| a.iter().copied())
            .chain(self.rest.iter().copied())
            .collect()
    }
}

/// Greedy arch factorization: an arch closes at the first position where
/// every letter of the alphabet has been seen since the arch began.
pub fn arch_factorization(w: &[Letter], sigma: Alphabet) -> Result<ArchFactorization> {
    sigma.check_word(w)?;
    let n = sigma.size() as usize;
    let mut seen = vec![false; n + 1];
    let mut distinct = 0usize;
    let mut arches = Vec::new();
    let mut modus = Vec::new();
    let mut start = 0usize;
    for (i, &l) in w.iter().enumerate() {
        if !seen[l as usize] {
            seen[l as usize] = true;
            distinct += 1;
            if distinct == n {
                arches.push(Word::from(&w[start..=i]));
                modus.push(l);
                start = i + 1;
                seen.iter_mut().for_each(|s| *s = false);
                distinct = 0;
            }
        }
    }
    let iota = arches.len();
    Ok(ArchFactorization {
        arches,
        rest: Word::from(&w[start..]),
        modus: Word(modus),
        iota,
    })
}

/// The largest `k` such that every word of `Σ^k` is a subsequence of `w`.
pub fn universality_index(w: &[Letter], sigma: Alphabet) -> Result<usize> {
    sigma.check_word(w)?;
    let n = sigma.size() as usize;
    let mut seen = vec![false; n + 1];
    let mut distinct = 0;
    let mut iota = 0;
    for &l in w {
        if !seen[l as usize] {
            seen[l as usize] = true;
            distinct += 1;
            if distinct == n {
                iota += 1;
                seen.iter_mut().for_each(|s| *s = false);
                distinct = 0;
            }
        }
    }
    Ok(iota)
}

/// `m(w) · a` for the smallest letter `a` missing from the rest of `w`.
pub fn shortest_absent_subsequence(w: &[Letter], sigma: Alphabet) -> Result<Word> {
    let fact = arch_factorization(w, sigma)?;
    let in_rest = fact.rest.alph();
    let missing = sigma
        .letters()
        .find(|a| in_rest.binary_search(a).is_err())
        .ok_or_else(|| Error::Invariant("rest of an arch factorization is universal".into()))?;
    let mut out = fact.modus;
    out.push(missing);
    Ok(out)
}

/// Length of a shortest absent subsequence, or the "no such word" sentinel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SasLength {
    Finite(u64),
    Infinite,
}

impl SasLength {
    pub fn is_finite(self) -> bool {
        matches!(self, SasLength::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            SasLength::Finite(v) => Some(v),
            SasLength::Infinite => None,
        }
    }

    /// `self + other - 1`, the length of two absent words glued on a shared letter.
    pub fn glue(self, other: SasLength) -> SasLength {
        match (self, other) {
            (SasLength::Finite(a), SasLength::Finite(b)) => SasLength::Finite(a + b - 1),
            _ => SasLength::Infinite,
        }
    }

    pub fn plus(self, extra: u64) -> SasLength {
        match self {
            SasLength::Finite(a) => SasLength::Finite(a + extra),
            SasLength::Infinite => SasLength::Infinite,
        }
    }
}

impl Ord for SasLength {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (SasLength::Finite(a), SasLength::Finite(b)) => a.cmp(b),
            (SasLength::Finite(_), SasLength::Infinite) => Ordering::Less,
            (SasLength::Infinite, SasLength::Finite(_)) => Ordering::Greater,
            (SasLength::Infinite, SasLength::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for SasLength {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SasLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SasLength::Finite(v) => write!(f, "{v}"),
            SasLength::Infinite => f.write_str("+inf"),
        }
    }
}

/// Length of the shortest word that starts with `a` (unconstrained when
/// `a == EPSILON`), ends with `b` and is not a subsequence of `w`.
///
/// With `a != EPSILON` the word must contain `a`; otherwise the result is
/// [`SasLength::Infinite`].
pub fn sas_ab_length(w: &[Letter], a: Letter, b: Letter, sigma: Alphabet) -> Result<SasLength> {
    sigma.check_word(w)?;
    sigma.check_letter(b)?;
    if a != EPSILON {
        sigma.check_letter(a)?;
        return Ok(match w.iter().position(|&x| x == a) {
            Some(p) => SasLength::Finite(1 + ending_with(&w[p + 1..], b, sigma)),
            None => SasLength::Infinite,
        });
    }
    Ok(SasLength::Finite(ending_with(w, b, sigma)))
}

// Shortest absent subsequence of `u` whose last letter is `b`.
// h[i] is the answer for the suffix u[i..]; next[i][c] is the first
// position >= i holding c.
fn ending_with(u: &[Letter], b: Letter, sigma: Alphabet) -> u64 {
    let n = u.len();
    let s = sigma.size() as usize;
    let mut next = vec![n; s + 1];
    let mut h = vec![0u64; n + 1];
    h[n] = 1;
    for i in (0..n).rev() {
        next[u[i] as usize] = i;
        let mut best = u64::MAX;
        let mut some_missing_other = false;
        for c in 1..=s {
            let p = next[c];
            if p == n {
                if c as Letter == b {
                    best = best.min(1);
                } else {
                    some_missing_other = true;
                }
            } else {
                best = best.min(1 + h[p + 1]);
            }
        }
        if some_missing_other {
            best = best.min(2);
        }
        h[i] = best;
    }
    h[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_ascii(s).unwrap()
    }

    fn abc(n: u32) -> Alphabet {
        Alphabet::new(n).unwrap()
    }

    #[test]
    fn subsequence_examples() {
        assert!(is_subsequence(&[], &w("bcaaccabcabb")));
        assert!(is_subsequence(&w("abb"), &w("bcaaccabcabb")));
        assert!(!is_subsequence(&w("abba"), &w("bcaaccabcabb")));
    }

    #[test]
    fn factorization_of_running_example() {
        let f = arch_factorization(&w("bcaaccabcabb"), abc(3)).unwrap();
        assert_eq!(f.arches, vec![w("bca"), w("accab"), w("cab")]);
        assert_eq!(f.rest, w("b"));
        assert_eq!(f.iota, 3);
        assert_eq!(f.modus, w("abb"));
        assert_eq!(f.reconstruct(), w("bcaaccabcabb"));
    }

    #[test]
    fn factorization_edge_cases() {
        let f = arch_factorization(&[], abc(2)).unwrap();
        assert!(f.arches.is_empty() && f.rest.is_empty() && f.modus.is_empty());
        assert_eq!(f.iota, 0);

        let f = arch_factorization(&w("abab"), abc(2)).unwrap();
        assert_eq!(f.arches, vec![w("ab"), w("ab")]);
        assert_eq!(f.modus, w("bb"));
        assert!(f.rest.is_empty());
    }

    #[test]
    fn letter_out_of_range_is_an_error() {
        assert_eq!(
            arch_factorization(&w("abc"), abc(2)),
            Err(Error::LetterOutOfRange { letter: 3, sigma: 2 })
        );
        assert!(universality_index(&[0], abc(2)).is_err());
    }

    #[test]
    fn universality_examples() {
        assert_eq!(universality_index(&w("bcaaccabcabb"), abc(3)).unwrap(), 3);
        assert_eq!(universality_index(&w("a"), abc(2)).unwrap(), 0);
        assert_eq!(universality_index(&w("abab"), abc(2)).unwrap(), 2);
    }

    #[test]
    fn sas_examples() {
        assert_eq!(shortest_absent_subsequence(&w("bcaaccabcabb"), abc(3)).unwrap(), w("abba"));
        assert_eq!(shortest_absent_subsequence(&[], abc(2)).unwrap(), w("a"));
        // ι(ab) = 1, m = b, rest empty, so the smallest missing letter is a
        assert_eq!(shortest_absent_subsequence(&w("ab"), abc(2)).unwrap(), w("ba"));
    }

    #[test]
    fn sas_ab_examples() {
        let s = abc(2);
        assert_eq!(sas_ab_length(&w("a"), EPSILON, 2, s).unwrap(), SasLength::Finite(1));
        assert_eq!(sas_ab_length(&w("a"), 1, 2, s).unwrap(), SasLength::Finite(2));
        assert_eq!(sas_ab_length(&w("abab"), 1, 1, s).unwrap(), SasLength::Finite(3));
        assert_eq!(sas_ab_length(&w("bb"), 1, 2, s).unwrap(), SasLength::Infinite);
        assert!(sas_ab_length(&w("ab"), 3, 1, s).is_err());
    }

    #[test]
    fn word_order_is_length_lex() {
        let mut v = vec![w("ba"), w("b"), w("ab"), Word::empty(), w("a")];
        v.sort();
        assert_eq!(v, vec![Word::empty(), w("a"), w("b"), w("ab"), w("ba")]);
    }

    #[test]
    fn enumerates_words_in_order() {
        let all: Vec<Word> = abc(2).words_up_to(2).collect();
        assert_eq!(all.len(), 7);
        assert!(all.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(abc(2).count_words_up_to(2), 7);
        assert_eq!(abc(3).words_of_length(0).count(), 1);
    }
}
