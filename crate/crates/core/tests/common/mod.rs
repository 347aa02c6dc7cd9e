#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use subseq_core::grammar::{to_cnf, Cfg, CnfGrammar};
use subseq_core::tfa::Tfa;
use subseq_core::{Alphabet, Word};

pub const NAMES: [&str; 6] = ["S", "A", "B", "C", "D", "E"];

pub fn w(s: &str) -> Word {
    Word::from_ascii(s).unwrap()
}

pub fn cnf(sigma: u32, rules: &str) -> CnfGrammar {
    let g = Cfg::from_rules(Alphabet::new(sigma).unwrap(), rules).unwrap();
    to_cnf(&g).unwrap().grammar().unwrap()
}

pub fn g1() -> CnfGrammar {
    cnf(2, "S -> A T | a\nT -> B S\nA -> a\nB -> b")
}

pub fn anbn() -> CnfGrammar {
    cnf(2, "S -> A B | A C\nC -> S B\nA -> a\nB -> b")
}

/// Hand-written grammars with small nonterminal counts and finite `ι_∃`.
pub fn named_corpus() -> Vec<(&'static str, CnfGrammar)> {
    vec![
        ("anbn", anbn()),
        ("single ab", cnf(2, "S -> A B\nA -> a\nB -> b")),
        ("a or b", cnf(2, "S -> a | b")),
        ("ab or ba", cnf(2, "S -> A B | B A\nA -> a\nB -> b")),
        ("anbn over three letters", cnf(3, "S -> A B | A C\nC -> S B\nA -> a\nB -> b")),
        ("abc", cnf(3, "S -> A T\nT -> B C\nA -> a\nB -> b\nC -> c")),
        ("a^n c b^n", cnf(3, "S -> A T | c\nT -> S B\nA -> a\nB -> b")),
        ("ab then c", cnf(3, "S -> T C | C T\nT -> A B\nA -> a\nB -> b\nC -> c")),
        ("palindromes of ab", cnf(2, "S -> A B | B A | A T\nT -> S A\nA -> a\nB -> b")),
        ("abab squared", cnf(2, "S -> T T\nT -> A B\nA -> a\nB -> b")),
        ("a b^n", cnf(2, "S -> A | S B\nA -> a\nB -> b")),
        ("b^n a^n b", cnf(2, "S -> T B\nT -> B A | B U\nU -> T A\nA -> a\nB -> b")),
    ]
}

/// Random grammar with up to `n` nonterminals; `None` if the language is empty.
pub fn random_grammar(rng: &mut StdRng, n: usize, sigma: u32) -> Option<CnfGrammar> {
    let letters: Vec<char> = (0..sigma).map(|i| (b'a' + i as u8) as char).collect();
    let mut lines = Vec::new();
    for name in NAMES.iter().take(n) {
        let count = rng.gen_range(1..=3);
        let mut alts = Vec::new();
        for _ in 0..count {
            if rng.gen_bool(0.35) {
                alts.push(letters[rng.gen_range(0..letters.len())].to_string());
            } else {
                let x = NAMES[rng.gen_range(0..n)];
                let y = NAMES[rng.gen_range(0..n)];
                alts.push(format!("{x} {y}"));
            }
        }
        lines.push(format!("{name} -> {}", alts.join(" | ")));
    }
    let g = Cfg::from_rules(Alphabet::new(sigma).unwrap(), &lines.join("\n")).ok()?;
    to_cnf(&g).unwrap().grammar()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Pairs automaton over a=1 b=2 c=3 d=4: q0 -a-> q1 -c-> q0,
/// q0 -b-> q2 -d-> q0, q1 -d-> sink, q2 -c-> sink; q0 final.
pub fn pairs_tfa() -> Tfa {
    let mut t = Tfa::new(Alphabet::new(4).unwrap(), 4, 0).unwrap();
    for (p, a, q) in [(0, 1, 1), (1, 3, 0), (0, 2, 2), (2, 4, 0), (1, 4, 3), (2, 3, 3)] {
        t.set_transition(p, a, q).unwrap();
    }
    t.set_final(0).unwrap();
    t
}

/// Random partial TFA.
pub fn random_tfa(rng: &mut StdRng, states: usize, sigma: u32, density: f64) -> Tfa {
    let mut t = Tfa::new(Alphabet::new(sigma).unwrap(), states, 0).unwrap();
    for q in 0..states {
        for a in 1..=sigma {
            if rng.gen_bool(density) {
                t.set_transition(q, a, rng.gen_range(0..states)).unwrap();
            }
        }
        if rng.gen_bool(0.4) {
            t.set_final(q).unwrap();
        }
    }
    t
}

/// Random NFA; every state has a chance to be final.
pub fn random_nfa(rng: &mut StdRng, states: usize, sigma: u32, edges: usize) -> subseq_core::automata::Nfa {
    let mut a = subseq_core::automata::Nfa::new(Alphabet::new(sigma).unwrap(), states, 0).unwrap();
    for _ in 0..edges {
        let (p, x, q) = (rng.gen_range(0..states), rng.gen_range(1..=sigma), rng.gen_range(0..states));
        a.add_transition(p, x, q).unwrap();
    }
    for q in 0..states {
        if rng.gen_bool(0.4) {
            a.set_final(q).unwrap();
        }
    }
    a
}

/// Random ε-free grammar with right-hand sides of length 1 to 3 mixing
/// letters and nonterminals (so unit rules and long rules both occur).
pub fn random_cfg(rng: &mut StdRng, n: usize, sigma: u32) -> Cfg {
    let letters: Vec<char> = (0..sigma).map(|i| (b'a' + i as u8) as char).collect();
    let mut lines = Vec::new();
    for name in NAMES.iter().take(n) {
        let mut alts = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let len = rng.gen_range(1..=3);
            let syms: Vec<String> = (0..len)
                .map(|_| {
                    if rng.gen_bool(0.5) {
                        letters[rng.gen_range(0..letters.len())].to_string()
                    } else {
                        NAMES[rng.gen_range(0..n)].to_string()
                    }
                })
                .collect();
            alts.push(syms.join(" "));
        }
        lines.push(format!("{name} -> {}", alts.join(" | ")));
    }
    Cfg::from_rules(Alphabet::new(sigma).unwrap(), &lines.join("\n")).unwrap()
}
