//! Line-oriented text formats for machines, grammars and graphs.
//!
//! Every file starts with a header naming its kind; `#` starts a comment.
//!
//! ```text
//! nfa 2 3            dfa 2 2            tfa 4 4            cfg 2            graph 3
//! start 0            start 0            start 0            start S          edge 1 2
//! final 2            final 1            final 0            S -> A T | a     edge 2 3
//! trans 0 a 1        trans 0 a 1        trans 0 a 1        T -> B S
//! ```
//!
//! Letters are written `a`, `b`, … when σ ≤ 26 and as integers otherwise;
//! both spellings are accepted on input.

use std::fmt::Write as _;

use subseq_core::automata::{Dfa, Nfa};
use subseq_core::grammar::{Cfg, CfgBuilder, Symbol};
use subseq_core::tfa::{Graph, StackOp, StackTop, Tfa, UnaryPda};
use subseq_core::{Alphabet, Letter, Word};

use crate::CliError;

/// Which kind of object a file holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    Nfa,
    Dfa,
    Cfg,
    Tfa,
    Graph,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Nfa => "nfa",
            Kind::Dfa => "dfa",
            Kind::Cfg => "cfg",
            Kind::Tfa => "tfa",
            Kind::Graph => "graph",
        }
    }
}

/// A parsed input file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Machine {
    Nfa(Nfa),
    Dfa(Dfa),
    Cfg(Cfg),
    Tfa(Tfa),
    Graph(Graph),
}

impl Machine {
    pub fn kind(&self) -> Kind {
        match self {
            Machine::Nfa(_) => Kind::Nfa,
            Machine::Dfa(_) => Kind::Dfa,
            Machine::Cfg(_) => Kind::Cfg,
            Machine::Tfa(_) => Kind::Tfa,
            Machine::Graph(_) => Kind::Graph,
        }
    }

    pub fn alphabet(&self) -> Option<Alphabet> {
        match self {
            Machine::Nfa(a) => Some(a.alphabet()),
            Machine::Dfa(d) => Some(d.alphabet()),
            Machine::Cfg(g) => Some(g.alphabet()),
            Machine::Tfa(t) => Some(t.alphabet()),
            Machine::Graph(_) => None,
        }
    }
}

// Content lines with their 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn at<T>(line: usize, r: subseq_core::Result<T>) -> Result<T, CliError> {
    r.map_err(|e| CliError::at_line(line, e))
}

fn bad(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Input(format!("line {line}: {}", msg.into()))
}

fn number<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T, CliError> {
    tok.parse()
        .map_err(|_| bad(line, format!("expected {what}, found `{tok}`")))
}

fn letter(line: usize, tok: &str, sigma: Alphabet) -> Result<Letter, CliError> {
    let mut chars = tok.chars();
    let a = match (chars.next(), chars.next()) {
        (Some(c), None) if c.is_ascii_lowercase() => c as u32 - 'a' as u32 + 1,
        _ => number(line, tok, "a letter")?,
    };
    at(line, sigma.check_letter(a))?;
    Ok(a)
}

pub fn letter_name(a: Letter, sigma: Alphabet) -> String {
    if sigma.size() <= 26 {
        char::from(b'a' + (a - 1) as u8).to_string()
    } else {
        a.to_string()
    }
}

/// Formats a word with the file letter convention (`ε` when empty).
pub fn word_text(w: &[Letter], sigma: Alphabet) -> String {
    if w.is_empty() {
        return "ε".into();
    }
    if sigma.size() <= 26 {
        w.iter().map(|&a| letter_name(a, sigma)).collect()
    } else {
        w.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Reads the header's kind without parsing the body.
pub fn detect_kind(text: &str) -> Result<Kind, CliError> {
    let (line, header) = lines(text)
        .next()
        .ok_or_else(|| CliError::Input("empty input".into()))?;
    let word = header.split_whitespace().next().unwrap_or("");
    match word {
        "nfa" => Ok(Kind::Nfa),
        "dfa" => Ok(Kind::Dfa),
        "cfg" => Ok(Kind::Cfg),
        "tfa" => Ok(Kind::Tfa),
        "graph" => Ok(Kind::Graph),
        "csg" | "csl" | "lba" => Err(bad(
            line,
            "context-sensitive inputs are rejected: all five problems are undecidable for the \
             class of context-sensitive languages",
        )),
        other => Err(bad(line, format!("unknown header `{other}`"))),
    }
}

/// Parses a file; `kind` overrides the header word when given.
pub fn parse(text: &str, kind: Option<Kind>) -> Result<Machine, CliError> {
    let detected = detect_kind(text);
    let kind = match (kind, detected) {
        (Some(k), Ok(_)) => k,
        (Some(_), Err(e)) | (None, Err(e)) => return Err(e),
        (None, Ok(k)) => k,
    };
    let mut it = lines(text);
    let (hl, header) = it.next().expect("checked by detect_kind");
    let fields: Vec<&str> = header.split_whitespace().collect();
    match kind {
        Kind::Nfa | Kind::Dfa | Kind::Tfa => {
            if fields.len() != 3 {
                return Err(bad(hl, format!("expected `{} <sigma> <states>`", kind.name())));
            }
            let sigma = at(hl, Alphabet::new(number(hl, fields[1], "an alphabet size")?))?;
            let states: usize = number(hl, fields[2], "a state count")?;
            parse_automaton(kind, sigma, states, hl, it)
        }
        Kind::Cfg => {
            if fields.len() != 2 {
                return Err(bad(hl, "expected `cfg <sigma>`"));
            }
            let sigma = at(hl, Alphabet::new(number(hl, fields[1], "an alphabet size")?))?;
            let mut b = CfgBuilder::new(sigma);
            let mut last = hl;
            for (line, l) in it {
                last = line;
                let mut toks = l.split_whitespace();
                match toks.next() {
                    Some("start") if !l.contains("->") => {
                        let name = toks.next().ok_or_else(|| bad(line, "missing start symbol"))?;
                        at(line, b.set_start(name))?;
                    }
                    Some("nonterminals") if !l.contains("->") => {
                        for name in toks {
                            at(line, b.declare(name).map(|_| ()))?;
                        }
                    }
                    _ => at(line, b.add_rule_line(l))?,
                }
            }
            Ok(Machine::Cfg(at(last, b.build())?))
        }
        Kind::Graph => {
            if fields.len() != 2 {
                return Err(bad(hl, "expected `graph <n>`"));
            }
            let n: usize = number(hl, fields[1], "a vertex count")?;
            let mut edges = Vec::new();
            for (line, l) in it {
                let toks: Vec<&str> = l.split_whitespace().collect();
                match toks.as_slice() {
                    ["edge", u, v] => {
                        let e = (number(line, u, "a vertex")?, number(line, v, "a vertex")?);
                        at(line, Graph::new(n, &[e]))?;
                        edges.push(e);
                    }
                    _ => return Err(bad(line, format!("expected `edge <i> <j>`, found `{l}`"))),
                }
            }
            Ok(Machine::Graph(at(hl, Graph::new(n, &edges))?))
        }
    }
}

fn parse_automaton<'a>(
    kind: Kind,
    sigma: Alphabet,
    states: usize,
    hl: usize,
    body: impl Iterator<Item = (usize, &'a str)>,
) -> Result<Machine, CliError> {
    let mut start = None;
    let mut finals = Vec::new();
    let mut trans = Vec::new();
    let state = |line: usize, tok: &str| -> Result<usize, CliError> {
        let q: usize = number(line, tok, "a state")?;
        if q >= states {
            return Err(bad(line, format!("state {q} out of range 0..{states}")));
        }
        Ok(q)
    };
    for (line, l) in body {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.as_slice() {
            ["start", q] => {
                if start.replace(state(line, q)?).is_some() {
                    return Err(bad(line, "start state given twice"));
                }
            }
            ["final", qs @ ..] => {
                for q in qs {
                    finals.push(state(line, q)?);
                }
            }
            ["trans", p, a, q] => trans.push((line, state(line, p)?, letter(line, a, sigma)?, state(line, q)?)),
            _ => return Err(bad(line, format!("unrecognized line `{l}`"))),
        }
    }
    let start = start.ok_or_else(|| bad(hl, "missing `start` line"))?;
    match kind {
        Kind::Nfa => {
            let mut a = at(hl, Nfa::new(sigma, states, start))?;
            for (line, p, x, q) in trans {
                at(line, a.add_transition(p, x, q))?;
            }
            for f in finals {
                at(hl, a.set_final(f))?;
            }
            Ok(Machine::Nfa(a))
        }
        Kind::Dfa => {
            let s = sigma.size() as usize;
            let mut delta: Vec<Option<usize>> = vec![None; states * s];
            for (line, p, x, q) in trans {
                let slot = &mut delta[p * s + (x - 1) as usize];
                if slot.is_some_and(|old| old != q) {
                    return Err(bad(line, format!("second transition for ({p}, {})", letter_name(x, sigma))));
                }
                *slot = Some(q);
            }
            let delta = delta
                .iter()
                .enumerate()
                .map(|(i, t)| {
                    t.ok_or_else(|| {
                        bad(hl, format!(
                            "dfa is not total: no transition for ({}, {})",
                            i / s,
                            letter_name((i % s) as Letter + 1, sigma)
                        ))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Machine::Dfa(at(hl, Dfa::new(sigma, states, start, &finals, delta))?))
        }
        Kind::Tfa => {
            let mut t = at(hl, Tfa::new(sigma, states, start))?;
            for (line, p, x, q) in trans {
                at(line, t.set_transition(p, x, q))?;
            }
            for f in finals {
                at(hl, t.set_final(f))?;
            }
            Ok(Machine::Tfa(t))
        }
        Kind::Cfg | Kind::Graph => unreachable!("not an automaton kind"),
    }
}

fn automaton_text(
    kind: &str,
    sigma: Alphabet,
    states: usize,
    start: usize,
    finals: impl Iterator<Item = usize>,
    trans: impl Iterator<Item = (usize, Letter, usize)>,
) -> String {
    let mut out = format!("{kind} {} {states}\nstart {start}\n", sigma.size());
    let finals: Vec<String> = finals.map(|f| f.to_string()).collect();
    if !finals.is_empty() {
        writeln!(out, "final {}", finals.join(" ")).unwrap();
    }
    for (p, a, q) in trans {
        writeln!(out, "trans {p} {} {q}", letter_name(a, sigma)).unwrap();
    }
    out
}

/// Canonical text of a machine; `parse(print(m)) == m`.
pub fn print(m: &Machine) -> String {
    match m {
        Machine::Nfa(a) => automaton_text("nfa", a.alphabet(), a.state_count(), a.start(), a.finals(), a.transitions()),
        Machine::Dfa(d) => {
            let sigma = d.alphabet();
            let trans = (0..d.state_count()).flat_map(|q| sigma.letters().map(move |x| (q, x, d.next(q, x))));
            automaton_text("dfa", sigma, d.state_count(), d.start(), d.finals(), trans)
        }
        Machine::Tfa(t) => automaton_text("tfa", t.alphabet(), t.state_count(), t.start(), t.finals(), t.transitions()),
        Machine::Cfg(g) => cfg_text(g),
        Machine::Graph(g) => {
            let mut out = format!("graph {}\n", g.vertex_count());
            for (u, v) in g.edges() {
                writeln!(out, "edge {u} {v}").unwrap();
            }
            out
        }
    }
}

fn cfg_text(g: &Cfg) -> String {
    let sigma = g.alphabet();
    let mut out = format!("cfg {}\n", sigma.size());
    writeln!(out, "nonterminals {}", g.names().join(" ")).unwrap();
    writeln!(out, "start {}", g.names()[g.start()]).unwrap();
    let prods = g.productions();
    let mut i = 0;
    while i < prods.len() {
        let lhs = prods[i].lhs;
        let alts: Vec<String> = prods[i..]
            .iter()
            .take_while(|p| p.lhs == lhs)
            .map(|p| {
                p.rhs
                    .iter()
                    .map(|s| match *s {
                        Symbol::Nt(x) => g.names()[x].clone(),
                        Symbol::T(a) => letter_name(a, sigma),
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        i += alts.len();
        writeln!(out, "{} -> {}", g.names()[lhs], alts.join(" | ")).unwrap();
    }
    out
}

/// Text of the pushdown simulation: `rule <from> <top> <input> <to> <op>`
/// where `_` is the bottom marker, `-` an ε-move, and op is `keep`, `pop`
/// or `push <letter>`.
pub fn pda_text(p: &UnaryPda) -> String {
    let sigma = p.alphabet;
    let mut out = format!("pda {} {}\nstart {}\naccept {}\n", sigma.size(), p.state_count, p.start, p.accept);
    for r in &p.rules {
        let top = match r.top {
            StackTop::Bottom => "_".to_string(),
            StackTop::Letter(x) => letter_name(x, sigma),
        };
        let input = r.input.map_or("-".to_string(), |a| letter_name(a, sigma));
        let op = match r.op {
            StackOp::Keep => "keep".to_string(),
            StackOp::Pop => "pop".to_string(),
            StackOp::Push(x) => format!("push {}", letter_name(x, sigma)),
        };
        writeln!(out, "rule {} {top} {input} {} {op}", r.from, r.to).unwrap();
    }
    out
}

/// Parses a command-line word: lowercase letters (or `ε`) by default, or a
/// comma-separated list of integers.
pub fn parse_word(text: &str, ints: bool) -> Result<Word, CliError> {
    let r = if ints { Word::from_ints(text) } else { Word::from_ascii(text) };
    r.map_err(CliError::from)
}
