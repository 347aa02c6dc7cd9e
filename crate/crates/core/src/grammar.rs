//! Context-free grammars: Chomsky normal form, CYK, bounded enumeration and
//! the intersection with a DFA via state triples.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::automata::Dfa;
use crate::words::{Alphabet, Letter, Word};
use crate::{Error, Result};

pub type Nonterminal = usize;

/// Default cap on the number of words materialized by [`enumerate_language`].
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Nt(Nonterminal),
    T(Letter),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Production {
    pub lhs: Nonterminal,
    pub rhs: Vec<Symbol>,
}

/// An ε-free context-free grammar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cfg {
    alphabet: Alphabet,
    names: Vec<String>,
    start: Nonterminal,
    // grouped by lhs, stable within a group
    productions: Vec<Production>,
}

impl Cfg {
    pub fn new(
        alphabet: Alphabet,
        names: Vec<String>,
        start: Nonterminal,
        mut productions: Vec<Production>,
    ) -> Result<Self> {
        let n = names.len();
        if start >= n {
            return Err(Error::Input(format!("start nonterminal {start} out of range")));
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            check_name(name)?;
            if !seen.insert(name.as_str()) {
                return Err(Error::Input(format!("duplicate nonterminal `{name}`")));
            }
        }
        for p in &productions {
            if p.lhs >= n {
                return Err(Error::Input(format!("nonterminal {} out of range", p.lhs)));
            }
            if p.rhs.is_empty() {
                return Err(Error::Input(format!(
                    "ε-production for `{}`: languages are taken to be ε-free",
                    names[p.lhs]
                )));
            }
            for s in &p.rhs {
                match *s {
                    Symbol::Nt(x) if x >= n => {
                        return Err(Error::Input(format!("nonterminal {x} out of range")))
                    }
                    Symbol::T(a) => alphabet.check_letter(a)?,
                    _ => {}
                }
            }
        }
        productions.sort_by_key(|p| p.lhs);
        let mut dedup = Vec::with_capacity(productions.len());
        for p in productions {
            if !dedup.contains(&p) {
                dedup.push(p);
            }
        }
        Ok(Cfg {
            alphabet,
            names,
            start,
            productions: dedup,
        })
    }

    /// Parses rules such as `S -> A T | a`, one per line or separated by
    /// `;`. The first left-hand side is the start symbol.
    pub fn from_rules(alphabet: Alphabet, rules: &str) -> Result<Self> {
        let mut b = CfgBuilder::new(alphabet);
        for line in rules.split(['\n', ';']) {
            b.add_rule_line(line)?;
        }
        b.build()
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn start(&self) -> Nonterminal {
        self.start
    }

    pub fn productions(&self) -> &[Production] {
        &self.productions
    }

    pub fn nonterminal_count(&self) -> usize {
        self.names.len()
    }

    /// Nonterminals that derive at least one terminal word.
    pub fn generating(&self) -> Vec<bool> {
        let mut gen = vec![false; self.names.len()];
        let mut changed = true;
        while changed {
            changed = false;
            for p in &self.productions {
                if !gen[p.lhs]
                    && p.rhs.iter().all(|s| match *s {
                        Symbol::Nt(x) => gen[x],
                        Symbol::T(_) => true,
                    })
                {
                    gen[p.lhs] = true;
                    changed = true;
                }
            }
        }
        gen
    }

    /// True iff the grammar generates no word.
    pub fn is_empty(&self) -> bool {
        !self.generating()[self.start]
    }

    /// Membership for arbitrary ε-free grammars (no normal form needed).
    pub fn derives(&self, w: &[Letter]) -> bool {
        let n = w.len();
        if n == 0 {
            return false;
        }
        let nts = self.names.len();
        // table[i][len] : which nonterminals derive w[i..i+len]
        let mut table = vec![vec![vec![false; nts]; n + 1]; n];
        for len in 1..=n {
            for i in 0..=n - len {
                // unit productions need a fixpoint inside one span
                loop {
                    let mut changed = false;
                    for p in &self.productions {
                        if !table[i][len][p.lhs] && self.splits(&table, w, &p.rhs, i, len) {
                            table[i][len][p.lhs] = true;
                            changed = true;
                        }
                    }
                    if !changed {
                        break;
                    }
                }
            }
        }
        table[0][n][self.start]
    }

    fn splits(&self, table: &[Vec<Vec<bool>>], w: &[Letter], rhs: &[Symbol], i: usize, len: usize) -> bool {
        let Some((first, rest)) = rhs.split_first() else {
            return len == 0;
        };
        if len < rhs.len() {
            return false;
        }
        let max_first = len - rest.len();
        (1..=max_first).any(|l| {
            let ok = match *first {
                Symbol::T(a) => l == 1 && w[i] == a,
                Symbol::Nt(x) => table[i][l][x],
            };
            ok && self.splits(table, w, rest, i + l, len - l)
        })
    }
}

fn check_name(name: &str) -> Result<()> {
    let mut chars = name.chars();
    let ok = chars.next().is_some_and(|c| c.is_ascii_uppercase())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'');
    if ok {
        Ok(())
    } else {
        Err(Error::Input(format!(
            "`{name}` is not a nonterminal (expected a capitalized identifier)"
        )))
    }
}

/// Incremental construction of a [`Cfg`] from textual rules.
#[derive(Clone, Debug)]
pub struct CfgBuilder {
    alphabet: Alphabet,
    names: Vec<String>,
    index: HashMap<String, Nonterminal>,
    productions: Vec<Production>,
    start: Option<Nonterminal>,
}

impl CfgBuilder {
    pub fn new(alphabet: Alphabet) -> Self {
        CfgBuilder {
            alphabet,
            names: Vec::new(),
            index: HashMap::new(),
            productions: Vec::new(),
            start: None,
        }
    }

    /// Interns a nonterminal name, returning its id.
    pub fn declare(&mut self, name: &str) -> Result<Nonterminal> {
        if let Some(&id) = self.index.get(name) {
            return Ok(id);
        }
        check_name(name)?;
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), self.names.len() - 1);
        Ok(self.names.len() - 1)
    }

    pub fn set_start(&mut self, name: &str) -> Result<()> {
        self.start = Some(self.declare(name)?);
        Ok(())
    }

    /// Parses `LHS -> X Y | a | ...`. Blank lines and `#` comments are skipped.
    pub fn add_rule_line(&mut self, line: &str) -> Result<()> {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            return Ok(());
        }
        let (lhs, rhs) = line
            .split_once("->")
            .ok_or_else(|| Error::Input(format!("expected `NT -> ...` in `{line}`")))?;
        let lhs_tokens: Vec<&str> = lhs.split_whitespace().collect();
        if lhs_tokens.len() != 1 {
            return Err(Error::Input(format!(
                "left-hand side `{}` is not a single nonterminal; context-sensitive rules are not \
                 supported because the problems are undecidable for context-sensitive languages",
                lhs.trim()
            )));
        }
        let lhs = self.declare(lhs_tokens[0])?;
        if self.start.is_none() {
            self.start = Some(lhs);
        }
        for alt in rhs.split('|') {
            let rhs = alt
                .split_whitespace()
                .map(|tok| self.symbol(tok))
                .collect::<Result<Vec<_>>>()?;
            if rhs.is_empty() {
                return Err(Error::Input(format!(
                    "empty alternative for `{}`: languages are taken to be ε-free",
                    self.names[lhs]
                )));
            }
            self.productions.push(Production { lhs, rhs });
        }
        Ok(())
    }

    fn symbol(&mut self, tok: &str) -> Result<Symbol> {
        let first = tok.chars().next().expect("non-empty token");
        if first.is_ascii_uppercase() {
            return Ok(Symbol::Nt(self.declare(tok)?));
        }
        let letter = if tok.len() == 1 && first.is_ascii_lowercase() {
            first as u32 - 'a' as u32 + 1
        } else if tok == "ε" || tok == "eps" {
            return Err(Error::Input(
                "ε-productions are not allowed: languages are taken to be ε-free".into(),
            ));
        } else {
            tok.parse::<u32>()
                .map_err(|_| Error::Input(format!("`{tok}` is neither a nonterminal nor a letter")))?
        };
        self.alphabet.check_letter(letter)?;
        Ok(Symbol::T(letter))
    }

    pub fn build(self) -> Result<Cfg> {
        let start = self
            .start
            .ok_or_else(|| Error::Input("grammar has no nonterminals".into()))?;
        Cfg::new(self.alphabet, self.names, start, self.productions)
    }
}

/// A grammar in Chomsky normal form in which every nonterminal is useful.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfGrammar {
    alphabet: Alphabet,
    names: Vec<String>,
    start: Nonterminal,
    binary: Vec<(Nonterminal, Nonterminal, Nonterminal)>,
    terminal: Vec<(Nonterminal, Letter)>,
}

impl CnfGrammar {
    pub fn new(
        alphabet: Alphabet,
        names: Vec<String>,
        start: Nonterminal,
        mut binary: Vec<(Nonterminal, Nonterminal, Nonterminal)>,
        mut terminal: Vec<(Nonterminal, Letter)>,
    ) -> Result<Self> {
        if alphabet.size() < 2 {
            return Err(Error::Input(
                "unary context-free languages are regular; use an automaton input instead".into(),
            ));
        }
        binary.sort_unstable();
        binary.dedup();
        terminal.sort_unstable();
        terminal.dedup();
        let g = CnfGrammar {
            alphabet,
            names,
            start,
            binary,
            terminal,
        };
        let as_cfg = g.to_cfg()?;
        let gen = as_cfg.generating();
        let reach = reachable(&as_cfg);
        if let Some(x) = (0..g.names.len()).find(|&x| !gen[x] || !reach[x]) {
            return Err(Error::Input(format!("nonterminal `{}` is useless", g.names[x])));
        }
        Ok(g)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn start(&self) -> Nonterminal {
        self.start
    }

    pub fn nonterminal_count(&self) -> usize {
        self.names.len()
    }

    /// Productions `A -> B C` as `(A, B, C)`, sorted.
    pub fn binary(&self) -> &[(Nonterminal, Nonterminal, Nonterminal)] {
        &self.binary
    }

    /// Productions `A -> a` as `(A, a)`, sorted.
    pub fn terminal(&self) -> &[(Nonterminal, Letter)] {
        &self.terminal
    }

    pub fn to_cfg(&self) -> Result<Cfg> {
        let productions = self
            .binary
            .iter()
            .map(|&(a, b, c)| Production {
                lhs: a,
                rhs: vec![Symbol::Nt(b), Symbol::Nt(c)],
            })
            .chain(self.terminal.iter().map(|&(a, t)| Production {
                lhs: a,
                rhs: vec![Symbol::T(t)],
            }))
            .collect();
        Cfg::new(self.alphabet, self.names.clone(), self.start, productions)
    }
}

impl fmt::Display for CnfGrammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in 0..self.names.len() {
            let mut alts: Vec<String> = self
                .binary
                .iter()
                .filter(|p| p.0 == a)
                .map(|&(_, b, c)| format!("{} {}", self.names[b], self.names[c]))
                .collect();
            alts.extend(
                self.terminal
                    .iter()
                    .filter(|p| p.0 == a)
                    .map(|&(_, t)| Word::new(vec![t]).to_string()),
            );
            writeln!(f, "{} -> {}", self.names[a], alts.join(" | "))?;
        }
        Ok(())
    }
}

fn reachable(g: &Cfg) -> Vec<bool> {
    let mut seen = vec![false; g.names.len()];
    seen[g.start] = true;
    let mut stack = vec![g.start];
    while let Some(x) = stack.pop() {
        for p in g.productions.iter().filter(|p| p.lhs == x) {
            for s in &p.rhs {
                if let Symbol::Nt(y) = *s {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
    }
    seen
}

/// Result of a normal-form conversion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CnfOutcome {
    Grammar(CnfGrammar),
    /// The grammar generates no word, so no useful start symbol exists.
    EmptyLanguage,
}

impl CnfOutcome {
    pub fn grammar(self) -> Option<CnfGrammar> {
        match self {
            CnfOutcome::Grammar(g) => Some(g),
            CnfOutcome::EmptyLanguage => None,
        }
    }
}

struct Names {
    names: Vec<String>,
    taken: BTreeSet<String>,
}

impl Names {
    fn fresh(&mut self, base: &str) -> Nonterminal {
        let mut name = base.to_string();
        let mut i = 2;
        while self.taken.contains(&name) {
            name = format!("{base}_{i}");
            i += 1;
        }
        self.taken.insert(name.clone());
        self.names.push(name);
        self.names.len() - 1
    }
}

/// Converts to Chomsky normal form: terminal isolation, binarization, unit
/// elimination, then removal of useless nonterminals.
///
/// Nonterminal order is the original order followed by auxiliaries in
/// creation order, with useless ones dropped.
pub fn to_cnf(g: &Cfg) -> Result<CnfOutcome> {
    if g.alphabet.size() < 2 {
        return Err(Error::Input(
            "unary context-free languages are regular; use an automaton input instead".into(),
        ));
    }
    let mut names = Names {
        names: g.names.clone(),
        taken: g.names.iter().cloned().collect(),
    };

    // TERM
    let mut term_nt: HashMap<Letter, Nonterminal> = HashMap::new();
    let mut prods: Vec<Production> = Vec::new();
    let mut extra: Vec<Production> = Vec::new();
    for p in &g.productions {
        if p.rhs.len() == 1 {
            prods.push(p.clone());
            continue;
        }
        let rhs = p
            .rhs
            .iter()
            .map(|s| match *s {
                Symbol::T(a) => {
                    let x = *term_nt.entry(a).or_insert_with(|| {
                        let base = if a <= 26 {
                            format!("T_{}", (b'a' + (a - 1) as u8) as char)
                        } else {
                            format!("T_{a}")
                        };
                        let x = names.fresh(&base);
                        extra.push(Production {
                            lhs: x,
                            rhs: vec![Symbol::T(a)],
                        });
                        x
                    });
                    Symbol::Nt(x)
                }
                nt => nt,
            })
            .collect();
        prods.push(Production { lhs: p.lhs, rhs });
    }
    prods.extend(extra);

    // BIN
    let mut binarized = Vec::new();
    for p in prods {
        if p.rhs.len() <= 2 {
            binarized.push(p);
            continue;
        }
        let base = names.names[p.lhs].clone();
        let mut lhs = p.lhs;
        let m = p.rhs.len();
        for i in 0..m - 2 {
            let next = names.fresh(&format!("{base}_{}", i + 1));
            binarized.push(Production {
                lhs,
                rhs: vec![p.rhs[i], Symbol::Nt(next)],
            });
            lhs = next;
        }
        binarized.push(Production {
            lhs,
            rhs: vec![p.rhs[m - 2], p.rhs[m - 1]],
        });
    }

    // UNIT
    let n = names.names.len();
    let mut unit = vec![vec![false; n]; n];
    for (x, row) in unit.iter_mut().enumerate() {
        row[x] = true;
    }
    for p in &binarized {
        if let [Symbol::Nt(y)] = p.rhs[..] {
            unit[p.lhs][y] = true;
        }
    }
    for k in 0..n {
        for i in 0..n {
            if unit[i][k] {
                for j in 0..n {
                    if unit[k][j] {
                        unit[i][j] = true;
                    }
                }
            }
        }
    }
    let mut binary = Vec::new();
    let mut terminal = Vec::new();
    for (x, row) in unit.iter().enumerate() {
        for p in binarized.iter().filter(|p| row[p.lhs]) {
            match p.rhs[..] {
                [Symbol::T(a)] => terminal.push((x, a)),
                [Symbol::Nt(b), Symbol::Nt(c)] => binary.push((x, b, c)),
                [Symbol::Nt(_)] => {}
                _ => return Err(Error::Invariant("production not binarized".into())),
            }
        }
    }

    // usefulness
    let cfg = Cfg::new(
        g.alphabet,
        names.names.clone(),
        g.start,
        binary
            .iter()
            .map(|&(a, b, c)| Production {
                lhs: a,
                rhs: vec![Symbol::Nt(b), Symbol::Nt(c)],
            })
            .chain(terminal.iter().map(|&(a, t)| Production {
                lhs: a,
                rhs: vec![Symbol::T(t)],
            }))
            .collect(),
    )?;
    let gen = cfg.generating();
    if !gen[g.start] {
        return Ok(CnfOutcome::EmptyLanguage);
    }
    binary.retain(|&(a, b, c)| gen[a] && gen[b] && gen[c]);
    terminal.retain(|&(a, _)| gen[a]);
    let pruned = Cfg::new(
        g.alphabet,
        names.names.clone(),
        g.start,
        binary
            .iter()
            .map(|&(a, b, c)| Production {
                lhs: a,
                rhs: vec![Symbol::Nt(b), Symbol::Nt(c)],
            })
            .collect(),
    )?;
    let reach = reachable(&pruned);
    let keep: Vec<bool> = (0..n).map(|x| gen[x] && reach[x]).collect();
    let mut new_id = vec![usize::MAX; n];
    let mut new_names = Vec::new();
    for x in (0..n).filter(|&x| keep[x]) {
        new_id[x] = new_names.len();
        new_names.push(names.names[x].clone());
    }
    let binary = binary
        .into_iter()
        .filter(|&(a, _, _)| keep[a])
        .map(|(a, b, c)| (new_id[a], new_id[b], new_id[c]))
        .collect();
    let terminal = terminal
        .into_iter()
        .filter(|&(a, _)| keep[a])
        .map(|(a, t)| (new_id[a], t))
        .collect();
    CnfGrammar::new(g.alphabet, new_names, new_id[g.start], binary, terminal).map(CnfOutcome::Grammar)
}

/// Cubic-time membership test.
pub fn cyk_member(g: &CnfGrammar, w: &[Letter]) -> Result<bool> {
    g.alphabet.check_word(w)?;
    if w.is_empty() {
        return Ok(false);
    }
    Ok(cyk_table(g, w)[0][w.len()][g.start])
}

// table[i][len][A]: A derives w[i..i+len]
fn cyk_table(g: &CnfGrammar, w: &[Letter]) -> Vec<Vec<Vec<bool>>> {
    let n = w.len();
    let nts = g.names.len();
    let mut t = vec![vec![vec![false; nts]; n + 1]; n];
    for (i, &a) in w.iter().enumerate() {
        for &(x, b) in &g.terminal {
            if a == b {
                t[i][1][x] = true;
            }
        }
    }
    for len in 2..=n {
        for i in 0..=n - len {
            for l in 1..len {
                for &(x, b, c) in &g.binary {
                    if !t[i][len][x] && t[i][l][b] && t[i + l][len - l][c] {
                        t[i][len][x] = true;
                    }
                }
            }
        }
    }
    t
}

/// All words of `L(g)` of length at most `max_len`, in length-lexicographic
/// order. Words are built bottom-up per nonterminal and length; `budget`
/// caps the total number of words held in that table.
pub fn enumerate_language(g: &CnfGrammar, max_len: usize, budget: u64) -> Result<Vec<Word>> {
    let nts = g.names.len();
    // words[A][len]
    let mut words: Vec<Vec<BTreeSet<Vec<Letter>>>> = vec![vec![BTreeSet::new(); max_len + 1]; nts];
    let mut held: u64 = 0;
    if max_len >= 1 {
        for &(x, a) in &g.terminal {
            if words[x][1].insert(vec![a]) {
                held += 1;
            }
        }
    }
    for len in 2..=max_len {
        for &(x, b, c) in &g.binary {
            for l in 1..len {
                if words[b][l].is_empty() || words[c][len - l].is_empty() {
                    continue;
                }
                let mut fresh = Vec::new();
                for u in &words[b][l] {
                    for v in &words[c][len - l] {
                        let mut uv = u.clone();
                        uv.extend_from_slice(v);
                        if !words[x][len].contains(&uv) {
                            fresh.push(uv);
                        }
                    }
                }
                for uv in fresh {
                    if words[x][len].insert(uv) {
                        held += 1;
                        if held > budget {
                            return Err(Error::resource("enumerated words", held, budget));
                        }
                    }
                }
            }
        }
    }
    Ok(words[g.start]
        .iter()
        .flat_map(|set| set.iter().cloned().map(Word::new))
        .collect())
}

/// Grammar for `L(g) ∩ L(d)` with nonterminals `(q, A, q')` meaning "A
/// derives a word leading `d` from q to q'". Only triples that are both
/// generating and reachable are emitted; the new start symbol comes first,
/// then triples ordered by `(q, A, q')`.
pub fn intersect_dfa(g: &CnfGrammar, d: &Dfa) -> Result<Cfg> {
    g.alphabet.ensure_same(d.alphabet())?;
    let s = d.state_count();
    let nts = g.names.len();
    // gen[A][q][q']
    let mut gen = vec![vec![vec![false; s]; s]; nts];
    for &(x, a) in &g.terminal {
        for q in 0..s {
            gen[x][q][d.next(q, a)] = true;
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        for &(x, b, c) in &g.binary {
            for q in 0..s {
                for mid in 0..s {
                    if !gen[b][q][mid] {
                        continue;
                    }
                    for q2 in 0..s {
                        if gen[c][mid][q2] && !gen[x][q][q2] {
                            gen[x][q][q2] = true;
                            changed = true;
                        }
                    }
                }
            }
        }
    }

    // reachability from the new start over generating triples
    let mut reach = vec![vec![vec![false; s]; s]; nts];
    let mut stack = Vec::new();
    for f in d.finals() {
        if gen[g.start][d.start()][f] && !reach[g.start][d.start()][f] {
            reach[g.start][d.start()][f] = true;
            stack.push((d.start(), g.start, f));
        }
    }
    while let Some((q, x, q2)) = stack.pop() {
        for &(_, b, c) in g.binary.iter().filter(|p| p.0 == x) {
            for mid in 0..s {
                if gen[b][q][mid] && gen[c][mid][q2] {
                    for (p, y, p2) in [(q, b, mid), (mid, c, q2)] {
                        if !reach[y][p][p2] {
                            reach[y][p][p2] = true;
                            stack.push((p, y, p2));
                        }
                    }
                }
            }
        }
    }

    let mut taken: BTreeSet<String> = BTreeSet::new();
    let mut names = Vec::new();
    let mut fresh = |base: String, names: &mut Vec<String>| {
        let mut name = base.clone();
        let mut i = 2;
        while taken.contains(&name) {
            name = format!("{base}_{i}");
            i += 1;
        }
        taken.insert(name.clone());
        names.push(name);
        names.len() - 1
    };
    let start = fresh("Start".into(), &mut names);
    let mut id: HashMap<(usize, Nonterminal, usize), Nonterminal> = HashMap::new();
    for q in 0..s {
        for x in 0..nts {
            for q2 in 0..s {
                if reach[x][q][q2] {
                    let nt = fresh(format!("{}_{q}_{q2}", g.names[x]), &mut names);
                    id.insert((q, x, q2), nt);
                }
            }
        }
    }
    let mut productions = Vec::new();
    for f in d.finals() {
        if let Some(&t) = id.get(&(d.start(), g.start, f)) {
            productions.push(Production {
                lhs: start,
                rhs: vec![Symbol::Nt(t)],
            });
        }
    }
    let mut triples: Vec<_> = id.iter().map(|(&k, &v)| (v, k)).collect();
    triples.sort_unstable();
    for (nt, (q, x, q2)) in triples {
        for &(_, b, c) in g.binary.iter().filter(|p| p.0 == x) {
            for mid in 0..s {
                if let (Some(&l), Some(&r)) = (id.get(&(q, b, mid)), id.get(&(mid, c, q2))) {
                    productions.push(Production {
                        lhs: nt,
                        rhs: vec![Symbol::Nt(l), Symbol::Nt(r)],
                    });
                }
            }
        }
        for &(_, a) in g.terminal.iter().filter(|p| p.0 == x) {
            if d.next(q, a) == q2 {
                productions.push(Production {
                    lhs: nt,
                    rhs: vec![Symbol::T(a)],
                });
            }
        }
    }
    Cfg::new(g.alphabet, names, start, productions)
}
