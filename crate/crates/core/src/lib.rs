//! Subsequence matching and universality problems for formal languages.
//!
//! Given a language `L` (an NFA/DFA, a context-free grammar, or a deterministic
//! finite automaton with translucent letters) this crate decides the five
//! classic questions about the subsequences of its words:
//!
//! | problem               | question                                              |
//! |-----------------------|-------------------------------------------------------|
//! | `exists-subseq`       | is `w` a subsequence of some word of `L`?             |
//! | `forall-subseq`       | is `w` a subsequence of every word of `L`?            |
//! | `exists-k-universal`  | does some word of `L` contain all of `Σ^k`?           |
//! | `forall-k-universal`  | does every word of `L` contain all of `Σ^k`?          |
//! | `infinity-universal`  | does `L` contain words of unbounded universality?     |
//!
//! Letters are the integers `1..=σ`; `0` is reserved for the empty-letter
//! sentinel used by endpoint-constrained absent subsequences.
//!
//! Module map:
//!
//! * [`words`] – word level primitives (arch factorization, universality index,
//!   shortest absent subsequences).
//! * [`automata`] – DFA/NFA, the supersequence and `k`-universal DFAs, products
//!   and the regular-language decision procedures.
//! * [`grammar`] – context-free grammars, CNF conversion, CYK, enumeration and
//!   the grammar × DFA triple construction.
//! * [`cfl`] – the context-free decision procedures, including the arch-count
//!   and absent-subsequence dynamic programs.
//! * [`tfa`] – translucent automata, the binary-alphabet pushdown simulation and
//!   the Hamiltonian-cycle gadget.
//! * [`oracle`] – brute-force reference implementations used to referee the
//!   fast paths.

pub mod automata;
pub mod cfl;
mod error;
pub mod grammar;
pub mod oracle;
pub mod tfa;
pub mod words;

pub use error::{Error, Result};
pub use words::{Alphabet, Letter, Word, EPSILON};

use std::fmt;
use std::str::FromStr;

/// The five decision problems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Problem {
    ExistsSubseq,
    ForallSubseq,
    ExistsKUniversal,
    ForallKUniversal,
    InfinityUniversal,
}

impl Problem {
    pub const ALL: [Problem; 5] = [
        Problem::ExistsSubseq,
        Problem::ForallSubseq,
        Problem::ExistsKUniversal,
        Problem::ForallKUniversal,
        Problem::InfinityUniversal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Problem::ExistsSubseq => "exists-subseq",
            Problem::ForallSubseq => "forall-subseq",
            Problem::ExistsKUniversal => "exists-k-universal",
            Problem::ForallKUniversal => "forall-k-universal",
            Problem::InfinityUniversal => "infinity-universal",
        }
    }

    pub fn needs_word(self) -> bool {
        matches!(self, Problem::ExistsSubseq | Problem::ForallSubseq)
    }

    pub fn needs_k(self) -> bool {
        matches!(self, Problem::ExistsKUniversal | Problem::ForallKUniversal)
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Problem::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown problem `{s}`")))
    }
}

/// The argument attached to a problem instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Query {
    Word(Word),
    K(num_bigint::BigUint),
    None,
}

impl Query {
    /// Checks that the argument kind matches what `problem` expects.
    pub fn check(&self, problem: Problem) -> Result<()> {
        let ok = match self {
            Query::Word(_) => problem.needs_word(),
            Query::K(k) => problem.needs_k() && !num_traits::Zero::is_zero(k),
            Query::None => problem == Problem::InfinityUniversal,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Input(format!(
                "problem {problem} does not take argument {self:?} (word for *-subseq, k >= 1 for *-k-universal, nothing for infinity-universal)"
            )))
        }
    }
}
