//! Decision procedures for context-free inputs given in Chomsky normal form.
//!
//! * Problems 1 and 2 go through the triple construction and emptiness.
//! * Infinite existential universality is detected by searching for a
//!   nonterminal with a 1-universal cycle `X ⇒* w₁ X w₂`.
//! * The largest universality index is computed by [`ArchCountTable`], a
//!   dynamic program over derivation depth, nonterminal and the alphabets of
//!   the non-arch prefix and suffix.
//! * The smallest universality index is computed by [`SasTable`], a dynamic
//!   program over the shortest absent subsequence with fixed first and last
//!   letter.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::automata::{complement, supersequence_dfa};
use crate::grammar::{intersect_dfa, CnfGrammar, Nonterminal};
use crate::words::{Letter, SasLength, Word, EPSILON};
use crate::{Error, Problem, Query, Result};

/// Cap on the worst-case step count of the arch-count program.
pub const ARCH_DP_WORK_LIMIT: f64 = 1e11;

/// `∃v ∈ L(g): w ≤ v`.
pub fn exists_supersequence_cfl(g: &CnfGrammar, w: &[Letter]) -> Result<bool> {
    let d = supersequence_dfa(w, g.alphabet())?;
    Ok(!intersect_dfa(g, &d)?.is_empty())
}

/// `∀v ∈ L(g): w ≤ v`.
pub fn forall_supersequence_cfl(g: &CnfGrammar, w: &[Letter]) -> Result<bool> {
    let d = complement(&supersequence_dfa(w, g.alphabet())?);
    Ok(intersect_dfa(g, &d)?.is_empty())
}

/// A derivation `X ⇒* left · X · right` where `left` or `right` is 1-universal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalCycle {
    pub nonterminal: Nonterminal,
    pub left: Word,
    pub right: Word,
}

/// Which side of the cycle carries every letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

struct GrammarGraph<'g> {
    g: &'g CnfGrammar,
    // reach[A][B]: A ⇒* αBβ with terminal α, β (reflexive)
    reach: Vec<Vec<bool>>,
    // has_letter[A][a-1]: A ⇒* αaβ
    has_letter: Vec<Vec<bool>>,
    shortest: Vec<Vec<Letter>>,
}

impl<'g> GrammarGraph<'g> {
    fn new(g: &'g CnfGrammar) -> Self {
        let n = g.nonterminal_count();
        let s = g.alphabet().size() as usize;
        let mut reach = vec![vec![false; n]; n];
        for (x, row) in reach.iter_mut().enumerate() {
            row[x] = true;
        }
        for &(a, b, c) in g.binary() {
            reach[a][b] = true;
            reach[a][c] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if reach[i][k] {
                    for j in 0..n {
                        if reach[k][j] {
                            reach[i][j] = true;
                        }
                    }
                }
            }
        }
        let mut has_letter = vec![vec![false; s]; n];
        for (x, row) in has_letter.iter_mut().enumerate() {
            for &(y, t) in g.terminal() {
                if reach[x][y] {
                    row[(t - 1) as usize] = true;
                }
            }
        }
        GrammarGraph {
            g,
            reach,
            has_letter,
            shortest: shortest_words(g),
        }
    }

    /// Terminal contexts `(α, β)` with `from ⇒* α to β`.
    fn context(&self, from: Nonterminal, to: Nonterminal) -> (Vec<Letter>, Vec<Letter>) {
        let n = self.g.nonterminal_count();
        // parent[y] = (x, went_left, sibling)
        let mut parent: Vec<Option<(Nonterminal, bool, Nonterminal)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                break;
            }
            for &(_, b, c) in self.g.binary().iter().filter(|p| p.0 == x) {
                for (child, left, sib) in [(b, true, c), (c, false, b)] {
                    if !seen[child] {
                        seen[child] = true;
                        parent[child] = Some((x, left, sib));
                        queue.push_back(child);
                    }
                }
            }
        }
        assert!(seen[to], "context requested along a missing path");
        let mut steps = Vec::new();
        let mut cur = to;
        while cur != from {
            let (x, left, sib) = parent[cur].expect("bfs parent");
            steps.push((left, sib));
            cur = x;
        }
        steps.reverse();
        let mut alpha = Vec::new();
        let mut beta_parts = Vec::new();
        for (left, sib) in steps {
            if left {
                beta_parts.push(self.shortest[sib].clone());
            } else {
                alpha.extend_from_slice(&self.shortest[sib]);
            }
        }
        let beta = beta_parts.into_iter().rev().flatten().collect();
        (alpha, beta)
    }

    /// A word derived from `x` that contains `a`.
    fn word_with(&self, x: Nonterminal, a: Letter) -> Vec<Letter> {
        let &(y, _) = self
            .g
            .terminal()
            .iter()
            .find(|&&(y, t)| t == a && self.reach[x][y])
            .expect("letter derivable");
        let (alpha, beta) = self.context(x, y);
        let mut w = alpha;
        w.push(a);
        w.extend(beta);
        w
    }

    // A production `Y -> B C` on a cycle through `x` whose off-path child
    // derives `a`, returned as (Y, on-path child, off-path child).
    fn cycle_step(&self, x: Nonterminal, a: Letter, side: Side) -> Option<(Nonterminal, Nonterminal, Nonterminal)> {
        let ai = (a - 1) as usize;
        self.g.binary().iter().find_map(|&(y, b, c)| {
            let (on, off) = match side {
                Side::Left => (c, b),
                Side::Right => (b, c),
            };
            (self.reach[x][y] && self.reach[on][x] && self.has_letter[off][ai]).then_some((y, on, off))
        })
    }

    fn cycle(&self, x: Nonterminal, side: Side) -> Option<UniversalCycle> {
        let mut left = Vec::new();
        let mut right_parts: Vec<Vec<Letter>> = Vec::new();
        for a in self.g.alphabet().letters() {
            let (y, on, off) = self.cycle_step(x, a, side)?;
            let (l1, r1) = self.context(x, y);
            let (l2, r2) = self.context(on, x);
            let wa = self.word_with(off, a);
            // x ⇒* l1 y r1 ⇒ ... ⇒* u x v
            let (u, v) = match side {
                Side::Left => ([l1, wa, l2].concat(), [r2, r1].concat()),
                Side::Right => ([l1, l2].concat(), [r2, wa, r1].concat()),
            };
            left.extend(u);
            right_parts.push(v);
        }
        let right: Vec<Letter> = right_parts.into_iter().rev().flatten().collect();
        Some(UniversalCycle {
            nonterminal: x,
            left: Word::new(left),
            right: Word::new(right),
        })
    }
}

/// Shortest word derivable from each nonterminal (smallest letters on ties
/// are not guaranteed, only minimal length).
fn shortest_words(g: &CnfGrammar) -> Vec<Vec<Letter>> {
    let n = g.nonterminal_count();
    let mut best: Vec<Option<Vec<Letter>>> = vec![None; n];
    for &(x, a) in g.terminal() {
        if best[x].is_none() {
            best[x] = Some(vec![a]);
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        for &(a, b, c) in g.binary() {
            if let (Some(u), Some(v)) = (&best[b], &best[c]) {
                let len = u.len() + v.len();
                if best[a].as_ref().is_none_or(|cur| cur.len() > len) {
                    best[a] = Some([u.as_slice(), v.as_slice()].concat());
                    changed = true;
                }
            }
        }
    }
    best.into_iter()
        .map(|w| w.expect("every nonterminal of a CNF grammar is generating"))
        .collect()
}

/// A nonterminal with a 1-universal cycle, with its witness contexts, if any.
/// Left contexts are tried before right contexts, nonterminals in id order.
pub fn one_universal_cycle(g: &CnfGrammar) -> Option<UniversalCycle> {
    let graph = GrammarGraph::new(g);
    (0..g.nonterminal_count()).find_map(|x| {
        graph
            .cycle(x, Side::Left)
            .or_else(|| graph.cycle(x, Side::Right))
    })
}

/// True iff `L(g)` contains words of unbounded universality index.
pub fn iota_exists_infinite(g: &CnfGrammar) -> bool {
    one_universal_cycle(g).is_some()
}

/// Entry of [`ArchCountTable`]: a number of arches or "no such tree".
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArchCount {
    NegInfinity,
    Count(BigUint),
}

impl ArchCount {
    fn zero() -> Self {
        ArchCount::Count(BigUint::zero())
    }

    fn is_zero(&self) -> bool {
        matches!(self, ArchCount::Count(c) if c.is_zero())
    }

    fn plus(&self, other: &ArchCount, extra: u32) -> ArchCount {
        match (self, other) {
            (ArchCount::Count(a), ArchCount::Count(b)) => ArchCount::Count(a + b + extra),
            _ => ArchCount::NegInfinity,
        }
    }
}

impl fmt::Display for ArchCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArchCount::NegInfinity => f.write_str("-inf"),
            ArchCount::Count(c) => write!(f, "{c}"),
        }
    }
}

/// How the arch-count program decides that a subtree contributes no arch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroArchRule {
    /// A subtree counts as arch-free when the table maximum for its
    /// signature is 0.
    MaxIsZero,
    /// A separate table records which signatures admit an arch-free tree,
    /// independently of the maximum.
    Tracked,
}

/// `M[i, A, Sp, Ss]`: the most arches found between a prefix with alphabet
/// `Sp ⊊ Σ` and a suffix with alphabet `Ss ⊊ Σ`, over derivation trees
/// rooted in `A` of depth at most `i`.
#[derive(Clone, Debug)]
pub struct ArchCountTable {
    sigma: u32,
    nonterminals: usize,
    depth_bound: usize,
    // layers[i - 1]; once two consecutive layers agree the rest are equal
    // and are not stored
    layers: Vec<Vec<ArchCount>>,
}

impl ArchCountTable {
    fn subsets(&self) -> usize {
        (1usize << self.sigma) - 1
    }

    fn idx(&self, a: Nonterminal, sp: usize, ss: usize) -> usize {
        let p = self.subsets();
        (a * p + sp) * p + ss
    }

    pub fn depth_bound(&self) -> usize {
        self.depth_bound
    }

    /// Layers actually computed before the table became stationary.
    pub fn computed_layers(&self) -> usize {
        self.layers.len()
    }

    /// Entry for depth `i ∈ 1..=depth_bound`; masks are bit sets (letter `a`
    /// is bit `a - 1`) and must be strict subsets of Σ.
    pub fn get(&self, i: usize, a: Nonterminal, sp: u64, ss: u64) -> &ArchCount {
        assert!(i >= 1 && i <= self.depth_bound, "depth out of range");
        let p = self.subsets() as u64;
        assert!(sp < p && ss < p, "masks must be strict subsets");
        let layer = &self.layers[i.min(self.layers.len()) - 1];
        &layer[self.idx(a, sp as usize, ss as usize)]
    }

    /// Checks that every entry is nondecreasing in the depth.
    pub fn check_monotone(&self) -> Result<()> {
        for w in self.layers.windows(2) {
            if w[0].iter().zip(&w[1]).any(|(lo, hi)| lo > hi) {
                return Err(Error::Invariant("arch-count table decreases with depth".into()));
            }
        }
        Ok(())
    }
}

/// Fills the arch-count table up to depth `4nσ`.
pub fn arch_count_table(g: &CnfGrammar, rule: ZeroArchRule) -> Result<ArchCountTable> {
    let sigma = g.alphabet().size();
    let n = g.nonterminal_count();
    let depth_bound = 4 * n * sigma as usize;
    let subsets = (1usize << sigma.min(62)) - 1;
    let work = (subsets as f64).powi(4) * g.binary().len().max(1) as f64 * depth_bound as f64;
    if sigma > 20 || work > ARCH_DP_WORK_LIMIT {
        return Err(Error::resource(
            "arch-count table steps",
            format!("{work:.3e}"),
            format!("{ARCH_DP_WORK_LIMIT:.0e}"),
        ));
    }
    let full = subsets; // bit mask of Σ
    let mut table = ArchCountTable {
        sigma,
        nonterminals: n,
        depth_bound,
        layers: Vec::new(),
    };
    let size = n * subsets * subsets;
    let mut first = vec![ArchCount::NegInfinity; size];
    let mut zero = vec![false; size];
    for &(x, a) in g.terminal() {
        let bit = 1usize << (a - 1);
        for (sp, ss) in [(bit, 0), (0, bit)] {
            let k = table.idx(x, sp, ss);
            first[k] = ArchCount::zero();
            zero[k] = true;
        }
    }
    table.layers.push(first);
    for _ in 2..=depth_bound {
        let prev = table.layers.last().expect("layer");
        let mut cur = prev.clone();
        let mut next_zero = zero.clone();
        // finite entries per nonterminal: (sp, ss, value, arch-free?)
        let live: Vec<Vec<(usize, usize, &ArchCount, bool)>> = (0..n)
            .map(|x| {
                let mut v = Vec::new();
                for sp in 0..subsets {
                    for ss in 0..subsets {
                        let k = table.idx(x, sp, ss);
                        let z = match rule {
                            ZeroArchRule::MaxIsZero => prev[k].is_zero(),
                            ZeroArchRule::Tracked => zero[k],
                        };
                        if prev[k] != ArchCount::NegInfinity {
                            v.push((sp, ss, &prev[k], z));
                        }
                    }
                }
                v
            })
            .collect();
        let raise = |cur: &mut Vec<ArchCount>, k: usize, t: ArchCount| {
            if t > cur[k] {
                cur[k] = t;
            }
        };
        for &(a, b, c) in g.binary() {
            for &(s1, s2, mb, zb) in &live[b] {
                for &(s3, s4, mc, zc) in &live[c] {
                    if zb && zc {
                        let all = s1 | s2 | s3 | s4;
                        let mut zero_sigs = Vec::new();
                        if all != full {
                            zero_sigs.push((all, 0));
                            zero_sigs.push((0, all));
                        }
                        if s1 | s2 | s3 != full {
                            zero_sigs.push((s1 | s2 | s3, s4));
                        }
                        if s1 | s2 != full && s3 | s4 != full {
                            zero_sigs.push((s1 | s2, s3 | s4));
                        }
                        if s2 | s3 | s4 != full {
                            zero_sigs.push((s1, s2 | s3 | s4));
                        }
                        for (sp, ss) in zero_sigs {
                            let k = table.idx(a, sp, ss);
                            next_zero[k] = true;
                            raise(&mut cur, k, ArchCount::zero());
                        }
                    }
                    let k = table.idx(a, s1, s4);
                    if s2 | s3 != full {
                        raise(&mut cur, k, mb.plus(mc, 0));
                        if zb && zc {
                            next_zero[k] = true;
                        }
                        if s1 | s2 | s3 != full && zb {
                            let k2 = table.idx(a, s1 | s2 | s3, s4);
                            raise(&mut cur, k2, mc.clone());
                            if zc {
                                next_zero[k2] = true;
                            }
                        }
                        if s2 | s3 | s4 != full && zc {
                            let k2 = table.idx(a, s1, s2 | s3 | s4);
                            raise(&mut cur, k2, mb.clone());
                            if zb {
                                next_zero[k2] = true;
                            }
                        }
                    } else {
                        raise(&mut cur, k, mb.plus(mc, 1));
                    }
                }
            }
        }
        let stationary = cur == *prev && next_zero == zero;
        zero = next_zero;
        if stationary {
            break;
        }
        table.layers.push(cur);
    }
    table.check_monotone()?;
    Ok(table)
}

/// The existential universality index of a context-free language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UniversalityVerdict {
    Finite(BigUint),
    Infinite,
}

impl fmt::Display for UniversalityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UniversalityVerdict::Finite(v) => write!(f, "{v}"),
            UniversalityVerdict::Infinite => f.write_str("infinite"),
        }
    }
}

/// `sup { ι(w) : w ∈ L(g) }`.
pub fn max_universality(g: &CnfGrammar) -> Result<UniversalityVerdict> {
    max_universality_with(g, ZeroArchRule::Tracked)
}

pub fn max_universality_with(g: &CnfGrammar, rule: ZeroArchRule) -> Result<UniversalityVerdict> {
    if iota_exists_infinite(g) {
        return Ok(UniversalityVerdict::Infinite);
    }
    let t = arch_count_table(g, rule)?;
    let p = (1u64 << g.alphabet().size()) - 1;
    let best = (0..p)
        .map(|ss| t.get(t.depth_bound(), g.start(), 0, ss))
        .max()
        .expect("at least one suffix set");
    match best {
        ArchCount::Count(q) => Ok(UniversalityVerdict::Finite(q.clone())),
        ArchCount::NegInfinity => Err(Error::Invariant(
            "start symbol derives no word within the depth bound".into(),
        )),
    }
}

/// `∃w ∈ L(g): ι(w) ≥ k`.
pub fn exists_k_universal_cfl(g: &CnfGrammar, k: &BigUint) -> Result<bool> {
    Ok(match max_universality(g)? {
        UniversalityVerdict::Infinite => true,
        UniversalityVerdict::Finite(q) => *k <= q,
    })
}

/// How the absent-subsequence program combines the two halves of `w₁w₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SasRule {
    /// Split letters are restricted by whether *every* right-hand word
    /// contains them; a letter missing from the right half only counts when
    /// it is the final letter.
    Gated,
    /// Every split letter is tried; a letter missing from the right half
    /// contributes 1 (if it is the final letter) or 2 more letters.
    Exact,
}

/// `M[i, A, a, b]`: over words derived from `A` by trees of depth at most
/// `i`, the shortest absent subsequence starting with `a` (any start when
/// `a = ε`) and ending with `b`.
#[derive(Clone, Debug)]
pub struct SasTable {
    sigma: u32,
    depth_bound: usize,
    layers: Vec<Vec<SasLength>>,
}

impl SasTable {
    fn idx(sigma: u32, x: Nonterminal, a: Letter, b: Letter) -> usize {
        let s = sigma as usize;
        (x * (s + 1) + a as usize) * s + (b - 1) as usize
    }

    pub fn depth_bound(&self) -> usize {
        self.depth_bound
    }

    /// Entry for depth `i ∈ 1..=depth_bound`, `a ∈ {ε} ∪ Σ`, `b ∈ Σ`.
    pub fn get(&self, i: usize, x: Nonterminal, a: Letter, b: Letter) -> SasLength {
        assert!(i >= 1 && i <= self.depth_bound, "depth out of range");
        assert!(a <= self.sigma && b >= 1 && b <= self.sigma, "letter out of range");
        self.layers[i - 1][Self::idx(self.sigma, x, a, b)]
    }

    /// Checks that entries never grow with depth and respect the length floor.
    pub fn check_invariants(&self) -> Result<()> {
        for w in self.layers.windows(2) {
            if w[0].iter().zip(&w[1]).any(|(hi, lo)| lo > hi) {
                return Err(Error::Invariant("absent-subsequence table grows with depth".into()));
            }
        }
        let s = self.sigma;
        for layer in &self.layers {
            for (k, v) in layer.iter().enumerate() {
                let a = (k / s as usize) % (s as usize + 1);
                let floor = if a == 0 { 1 } else { 2 };
                if v.finite().is_some_and(|v| v < floor) {
                    return Err(Error::Invariant(format!("table entry {v} below {floor}")));
                }
            }
        }
        Ok(())
    }
}

fn sas_add(x: SasLength, y: SasLength) -> Result<SasLength> {
    Ok(match (x, y) {
        (SasLength::Finite(p), SasLength::Finite(q)) => SasLength::Finite(
            (p + q)
                .checked_sub(1)
                .filter(|_| p.checked_add(q).is_some())
                .ok_or_else(|| Error::resource("absent-subsequence length", "more than 64 bits", "u64"))?,
        ),
        _ => SasLength::Infinite,
    })
}

/// Fills the absent-subsequence table up to depth `n`.
pub fn sas_table(g: &CnfGrammar, rule: SasRule) -> Result<SasTable> {
    let s = g.alphabet().size();
    let n = g.nonterminal_count();
    let idx = |x, a, b| SasTable::idx(s, x, a, b);
    let size = n * (s as usize + 1) * s as usize;
    let mut first = vec![SasLength::Infinite; size];
    for &(x, t) in g.terminal() {
        for b in 1..=s {
            first[idx(x, t, b)] = SasLength::Finite(2);
            let e = idx(x, EPSILON, b);
            let v = match rule {
                SasRule::Gated if b == t => SasLength::Infinite,
                _ if b == t => SasLength::Finite(2),
                _ => SasLength::Finite(1),
            };
            first[e] = first[e].min(v);
        }
    }
    let mut layers = vec![first];
    for _ in 2..=n {
        let prev = layers.last().expect("layer");
        let mut cur = prev.clone();
        let lacks = |x: Nonterminal, c: Letter| prev[idx(x, EPSILON, c)] == SasLength::Finite(1);
        for &(a_nt, b_nt, c_nt) in g.binary() {
            // right-half cost of continuing from split letter x to final b
            let tail = |x: Letter, b: Letter| -> SasLength {
                let through = prev[idx(c_nt, x, b)];
                match rule {
                    SasRule::Gated => through,
                    SasRule::Exact if lacks(c_nt, x) => {
                        through.min(SasLength::Finite(if x == b { 1 } else { 2 }))
                    }
                    SasRule::Exact => through,
                }
            };
            for first_letter in 0..=s {
                for b in 1..=s {
                    let mut best = SasLength::Infinite;
                    let head = |x: Letter| prev[idx(b_nt, first_letter, x)];
                    match rule {
                        SasRule::Exact => {
                            if first_letter != EPSILON && lacks(b_nt, first_letter) {
                                best = best.min(prev[idx(c_nt, first_letter, b)]);
                            }
                            for x in 1..=s {
                                best = best.min(sas_add(head(x), tail(x, b))?);
                            }
                        }
                        SasRule::Gated => {
                            let all_have = |x| !lacks(c_nt, x);
                            if first_letter == EPSILON || !lacks(b_nt, first_letter) {
                                for x in (1..=s).filter(|&x| all_have(x)) {
                                    best = best.min(sas_add(head(x), tail(x, b))?);
                                }
                                if lacks(c_nt, b) {
                                    best = best.min(head(b));
                                }
                            } else {
                                best = best.min(prev[idx(c_nt, first_letter, b)]);
                            }
                        }
                    }
                    let k = idx(a_nt, first_letter, b);
                    cur[k] = cur[k].min(best);
                }
            }
        }
        layers.push(cur);
    }
    let t = SasTable {
        sigma: s,
        depth_bound: n,
        layers,
    };
    t.check_invariants()?;
    Ok(t)
}

/// `min { ι(w) : w ∈ L(g) }`.
pub fn min_universality(g: &CnfGrammar) -> Result<u64> {
    min_universality_with(g, SasRule::Exact)
}

pub fn min_universality_with(g: &CnfGrammar, rule: SasRule) -> Result<u64> {
    let t = sas_table(g, rule)?;
    let s = g.alphabet().size();
    let best = (0..=s)
        .flat_map(|a| (1..=s).map(move |b| (a, b)))
        .map(|(a, b)| t.get(t.depth_bound(), g.start(), a, b))
        .min()
        .expect("nonempty alphabet");
    best.finite()
        .map(|v| v - 1)
        .ok_or_else(|| Error::Invariant("no absent subsequence found for any word".into()))
}

/// `∀w ∈ L(g): ι(w) ≥ k`.
pub fn forall_k_universal_cfl(g: &CnfGrammar, k: &BigUint) -> Result<bool> {
    let m = min_universality(g)?;
    Ok(*k <= BigUint::from(m))
}

/// Decides one of the five problems for `L(g)`.
pub fn cfl_decide(problem: Problem, g: &CnfGrammar, query: &Query) -> Result<bool> {
    query.check(problem)?;
    match (problem, query) {
        (Problem::ExistsSubseq, Query::Word(w)) => exists_supersequence_cfl(g, w),
        (Problem::ForallSubseq, Query::Word(w)) => forall_supersequence_cfl(g, w),
        (Problem::ExistsKUniversal, Query::K(k)) => exists_k_universal_cfl(g, k),
        (Problem::ForallKUniversal, Query::K(k)) => forall_k_universal_cfl(g, k),
        (Problem::InfinityUniversal, Query::None) => Ok(iota_exists_infinite(g)),
        _ => unreachable!("checked by Query::check"),
    }
}

impl ArchCountTable {
    /// Number of nonterminals the table is indexed by.
    pub fn nonterminal_count(&self) -> usize {
        self.nonterminals
    }
}
