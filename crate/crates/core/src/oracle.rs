//! Brute-force reference implementations.
//!
//! Everything here works by enumerating words up to a length bound, so the
//! answers are exact only for what that bound can see. Every search takes an
//! explicit budget and fails with a resource error instead of answering
//! partially.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::automata::{complement, k_universal_dfa, Dfa, Nfa};
use crate::grammar::{cyk_member, enumerate_language, intersect_dfa, CnfGrammar};
use crate::tfa::Tfa;
use crate::words::{is_subsequence, universality_index, Alphabet, Letter, Word, EPSILON};
use crate::{Error, Result};

/// Default cap on enumerated words.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A language given by any supported machine, seen only through membership
/// and bounded enumeration.
#[derive(Clone, Debug)]
pub enum LanguageHandle {
    Nfa(Nfa),
    Dfa(Dfa),
    Cnf(CnfGrammar),
    Tfa(Tfa),
}

impl LanguageHandle {
    pub fn alphabet(&self) -> Alphabet {
        match self {
            LanguageHandle::Nfa(a) => a.alphabet(),
            LanguageHandle::Dfa(d) => d.alphabet(),
            LanguageHandle::Cnf(g) => g.alphabet(),
            LanguageHandle::Tfa(t) => t.alphabet(),
        }
    }

    pub fn member(&self, w: &[Letter]) -> Result<bool> {
        match self {
            LanguageHandle::Nfa(a) => a.accepts(w),
            LanguageHandle::Dfa(d) => d.accepts(w),
            LanguageHandle::Cnf(g) => cyk_member(g, w),
            LanguageHandle::Tfa(t) => t.accepts(w),
        }
    }

    /// Members of length at most `max_len`, length-lexicographically.
    pub fn enumerate(&self, max_len: usize, budget: u64) -> Result<Vec<Word>> {
        if let LanguageHandle::Cnf(g) = self {
            return enumerate_language(g, max_len, budget);
        }
        let total = self.alphabet().count_words_up_to(max_len);
        if total > budget as u128 {
            return Err(Error::resource("enumerated words", total, budget));
        }
        let mut out = Vec::new();
        for w in self.alphabet().words_up_to(max_len) {
            if self.member(&w)? {
                out.push(w);
            }
        }
        Ok(out)
    }
}

/// The largest universality index among the members up to `max_len`.
/// Only a lower bound on the supremum over the whole language.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IotaLowerBound {
    pub value: usize,
    pub max_len: usize,
}

pub fn brute_iota_exists(h: &LanguageHandle, max_len: usize, budget: u64) -> Result<IotaLowerBound> {
    let sigma = h.alphabet();
    let mut value = 0;
    for w in h.enumerate(max_len, budget)? {
        value = value.max(universality_index(&w, sigma)?);
    }
    Ok(IotaLowerBound { value, max_len })
}

/// The smallest universality index among the members up to `max_len`.
pub fn brute_iota_forall(h: &LanguageHandle, max_len: usize, budget: u64) -> Result<usize> {
    let sigma = h.alphabet();
    let mut best: Option<usize> = None;
    for w in h.enumerate(max_len, budget)? {
        let i = universality_index(&w, sigma)?;
        best = Some(best.map_or(i, |b| b.min(i)));
    }
    best.ok_or_else(|| Error::Input(format!("no member of length at most {max_len}")))
}

/// Universality index by testing every word of each length as a subsequence.
pub fn brute_universality_index(w: &[Letter], sigma: Alphabet, budget: u64) -> Result<usize> {
    sigma.check_word(w)?;
    let mut tested: u64 = 0;
    let mut k = 0;
    loop {
        let next = k + 1;
        let mut all = true;
        for v in sigma.words_of_length(next) {
            tested += 1;
            if tested > budget {
                return Err(Error::resource("tested subsequences", tested, budget));
            }
            if !is_subsequence(&v, w) {
                all = false;
                break;
            }
        }
        if !all {
            return Ok(k);
        }
        k = next;
    }
}

/// Length-lexicographically least word that is not a subsequence of `w`.
/// With `ends = Some((a, b))` the word must start with `a` and end with `b`;
/// [`EPSILON`] leaves that end free.
pub fn brute_sas(
    w: &[Letter],
    ends: Option<(Letter, Letter)>,
    sigma: Alphabet,
    budget: u64,
) -> Result<Word> {
    sigma.check_word(w)?;
    let (a, b) = ends.unwrap_or((EPSILON, EPSILON));
    for x in [a, b] {
        if x != EPSILON {
            sigma.check_letter(x)?;
        }
    }
    let mut tested: u64 = 0;
    // a word of length |w| + 2 with both ends fixed always exists and is absent
    for len in 1..=w.len() + 2 {
        for v in sigma.words_of_length(len) {
            tested += 1;
            if tested > budget {
                return Err(Error::resource("tested candidates", tested, budget));
            }
            let first_ok = a == EPSILON || v[0] == a;
            let last_ok = b == EPSILON || v[len - 1] == b;
            if first_ok && last_ok && !is_subsequence(&v, w) {
                return Ok(v);
            }
        }
    }
    unreachable!("a word longer than w is never a subsequence of w")
}

/// Is `w` a subsequence of some member of length at most `max_len`?
pub fn brute_exists_supersequence(
    h: &LanguageHandle,
    w: &[Letter],
    max_len: usize,
    budget: u64,
) -> Result<bool> {
    h.alphabet().check_word(w)?;
    Ok(h.enumerate(max_len, budget)?.iter().any(|u| is_subsequence(w, u)))
}

/// Is `w` a subsequence of every member of length at most `max_len`?
pub fn brute_forall_supersequence(
    h: &LanguageHandle,
    w: &[Letter],
    max_len: usize,
    budget: u64,
) -> Result<bool> {
    h.alphabet().check_word(w)?;
    Ok(h.enumerate(max_len, budget)?.iter().all(|u| is_subsequence(w, u)))
}

/// `ι_∃` of a grammar by intersecting with `k`-universal automata for
/// `k = 1, 2, …, cap`. Returns `None` when the language still contains a
/// `cap`-universal word.
pub fn iota_exists_by_intersection(g: &CnfGrammar, cap: u32) -> Result<Option<u32>> {
    for k in 1..=cap {
        let d = k_universal_dfa(g.alphabet(), &BigUint::from(k))?;
        if intersect_dfa(g, &d)?.is_empty() {
            return Ok(Some(k - 1));
        }
    }
    Ok(None)
}

/// `ι_∀` of a nonempty grammar: the least `k` such that some member is not
/// `(k+1)`-universal. Returns `None` if every member is `cap`-universal.
pub fn iota_forall_by_intersection(g: &CnfGrammar, cap: u32) -> Result<Option<u32>> {
    for k in 0..cap {
        let d = complement(&k_universal_dfa(g.alphabet(), &BigUint::from(k + 1))?);
        if !intersect_dfa(g, &d)?.is_empty() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// `result[i - 1][A]`: the words derived from `A` by derivation trees of
/// depth at most `i` (a terminal rule alone has depth 1), for `i ≤ depth`.
/// `budget` caps the total number of words held.
pub fn derivable_words(g: &CnfGrammar, depth: usize, budget: u64) -> Result<Vec<Vec<BTreeSet<Word>>>> {
    let n = g.nonterminal_count();
    let mut layers: Vec<Vec<BTreeSet<Word>>> = Vec::new();
    for i in 1..=depth {
        let mut cur: Vec<BTreeSet<Word>> = match layers.last() {
            Some(prev) => prev.clone(),
            None => vec![BTreeSet::new(); n],
        };
        let mut held: u64 = cur.iter().map(|s| s.len() as u64).sum();
        if i == 1 {
            for &(x, a) in g.terminal() {
                cur[x].insert(Word::new(vec![a]));
            }
        } else {
            let prev = layers.last().expect("previous layer");
            for &(x, b, c) in g.binary() {
                for u in &prev[b] {
                    for v in &prev[c] {
                        if cur[x].insert(u.concat(v)) {
                            held += 1;
                            if held > budget {
                                return Err(Error::resource("derived words", held, budget));
                            }
                        }
                    }
                }
            }
        }
        layers.push(cur);
    }
    Ok(layers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::{to_cnf, Cfg};

    fn w(s: &str) -> Word {
        Word::from_ascii(s).unwrap()
    }

    fn cnf(rules: &str) -> CnfGrammar {
        let g = Cfg::from_rules(Alphabet::new(2).unwrap(), rules).unwrap();
        to_cnf(&g).unwrap().grammar().unwrap()
    }

    #[test]
    fn grammar_oracles() {
        let g1 = LanguageHandle::Cnf(cnf("S -> A T | a\nT -> B S\nA -> a\nB -> b"));
        assert_eq!(brute_iota_exists(&g1, 5, DEFAULT_BUDGET).unwrap().value, 2);
        assert_eq!(brute_iota_forall(&g1, 3, DEFAULT_BUDGET).unwrap(), 0);
        let ab = LanguageHandle::Cnf(cnf("S -> A B\nA -> a\nB -> b"));
        assert_eq!(brute_iota_exists(&ab, 4, DEFAULT_BUDGET).unwrap().value, 1);
        assert_eq!(brute_iota_forall(&ab, 2, DEFAULT_BUDGET).unwrap(), 1);
        assert!(brute_iota_forall(&ab, 1, DEFAULT_BUDGET).is_err());
        let anbn = LanguageHandle::Cnf(cnf("S -> A B | A C\nC -> S B\nA -> a\nB -> b"));
        assert_eq!(brute_iota_forall(&anbn, 8, DEFAULT_BUDGET).unwrap(), 1);
        assert!(brute_exists_supersequence(&anbn, &w("ab"), 4, DEFAULT_BUDGET).unwrap());
        assert!(!brute_exists_supersequence(&anbn, &w("ba"), 10, DEFAULT_BUDGET).unwrap());
        assert!(brute_forall_supersequence(&anbn, &w("ab"), 10, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn sas_oracle() {
        let s3 = Alphabet::new(3).unwrap();
        assert_eq!(brute_sas(&w("bcaaccabcabb"), None, s3, DEFAULT_BUDGET).unwrap().len(), 4);
        assert_eq!(brute_sas(&[], None, Alphabet::new(1).unwrap(), 10).unwrap(), w("a"));
        let s2 = Alphabet::new(2).unwrap();
        assert_eq!(brute_sas(&w("ab"), Some((1, 1)), s2, 100).unwrap(), w("aa"));
        assert_eq!(brute_sas(&w("ab"), None, s2, 100).unwrap(), w("aa"));
    }

    #[test]
    fn brute_index_matches_arches() {
        let s3 = Alphabet::new(3).unwrap();
        for v in s3.words_up_to(7) {
            assert_eq!(
                brute_universality_index(&v, s3, DEFAULT_BUDGET).unwrap(),
                universality_index(&v, s3).unwrap()
            );
        }
    }

    #[test]
    fn intersection_route() {
        let g1 = cnf("S -> A T | a\nT -> B S\nA -> a\nB -> b");
        assert_eq!(iota_exists_by_intersection(&g1, 4).unwrap(), None);
        assert_eq!(iota_forall_by_intersection(&g1, 4).unwrap(), Some(0));
        let anbn = cnf("S -> A B | A C\nC -> S B\nA -> a\nB -> b");
        assert_eq!(iota_exists_by_intersection(&anbn, 4).unwrap(), Some(1));
        assert_eq!(iota_forall_by_intersection(&anbn, 4).unwrap(), Some(1));
    }
}
