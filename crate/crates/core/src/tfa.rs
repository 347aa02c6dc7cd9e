//! Deterministic finite automata with translucent letters.
//!
//! In each step the machine reads the leftmost remaining letter for which
//! the current state has a transition; letters before it stay on the tape.
//! A word is accepted when the tape is empty in a final state.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use crate::words::{is_subsequence, Alphabet, Letter, Word};
use crate::{Error, Result};

pub type State = usize;

/// Default cap on configurations explored by [`exists_supersequence_tfa`].
pub const DEFAULT_SEARCH_BUDGET: u64 = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tfa {
    alphabet: Alphabet,
    state_count: usize,
    start: State,
    finals: Vec<bool>,
    // delta[q * σ + (a - 1)]
    delta: Vec<Option<State>>,
}

impl Tfa {
    pub fn new(alphabet: Alphabet, state_count: usize, start: State) -> Result<Self> {
        if state_count == 0 {
            return Err(Error::Input("an automaton needs at least one state".into()));
        }
        check_state(start, state_count)?;
        Ok(Tfa {
            alphabet,
            state_count,
            start,
            finals: vec![false; state_count],
            delta: vec![None; state_count * alphabet.size() as usize],
        })
    }

    /// Defines `δ(from, a) = to`. Redefining with a different target is an error.
    pub fn set_transition(&mut self, from: State, a: Letter, to: State) -> Result<()> {
        check_state(from, self.state_count)?;
        check_state(to, self.state_count)?;
        self.alphabet.check_letter(a)?;
        let i = self.idx(from, a);
        match self.delta[i] {
            Some(old) if old != to => Err(Error::Input(format!(
                "transition ({from}, {a}) already leads to {old}"
            ))),
            _ => {
                self.delta[i] = Some(to);
                Ok(())
            }
        }
    }

    pub fn set_final(&mut self, q: State) -> Result<()> {
        check_state(q, self.state_count)?;
        self.finals[q] = true;
        Ok(())
    }

    fn idx(&self, q: State, a: Letter) -> usize {
        q * self.alphabet.size() as usize + (a - 1) as usize
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn start(&self) -> State {
        self.start
    }

    pub fn is_final(&self, q: State) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> impl Iterator<Item = State> + '_ {
        (0..self.state_count).filter(|&q| self.finals[q])
    }

    pub fn next(&self, q: State, a: Letter) -> Option<State> {
        self.delta[self.idx(q, a)]
    }

    /// All defined transitions `(q, a, q')` in ascending order.
    pub fn transitions(&self) -> impl Iterator<Item = (State, Letter, State)> + '_ {
        (0..self.state_count).flat_map(move |q| {
            self.alphabet
                .letters()
                .filter_map(move |a| self.next(q, a).map(|t| (q, a, t)))
        })
    }

    pub fn is_total(&self) -> bool {
        self.delta.iter().all(Option::is_some)
    }

    /// Performs one step from `c`.
    pub fn step(&self, c: &TfaConfiguration) -> StepOutcome {
        let found = c
            .remaining
            .iter()
            .enumerate()
            .find_map(|(i, &a)| self.next(c.state, a).map(|q| (i, q)));
        match found {
            Some((i, q)) => {
                let mut rest = c.remaining.clone().into_letters();
                rest.remove(i);
                StepOutcome::Moved(TfaConfiguration {
                    state: q,
                    remaining: Word::new(rest),
                })
            }
            None => StepOutcome::Stuck,
        }
    }

    /// Runs to completion and reports whether the tape empties in a final state.
    pub fn accepts(&self, w: &[Letter]) -> Result<bool> {
        self.alphabet.check_word(w)?;
        let mut c = TfaConfiguration {
            state: self.start,
            remaining: Word::from(w),
        };
        while !c.remaining.is_empty() {
            match self.step(&c) {
                StepOutcome::Moved(next) => c = next,
                StepOutcome::Stuck => return Ok(false),
            }
        }
        Ok(self.finals[c.state])
    }

    /// Accepted words of length at most `max_len`, length-lexicographically.
    pub fn enumerate_accepted(&self, max_len: usize, budget: u64) -> Result<Vec<Word>> {
        let total = self.alphabet.count_words_up_to(max_len);
        if total > budget as u128 {
            return Err(Error::resource("enumerated words", total, budget));
        }
        let mut out = Vec::new();
        for w in self.alphabet.words_up_to(max_len) {
            if self.accepts(&w)? {
                out.push(w);
            }
        }
        Ok(out)
    }

    /// States from which a final state is reachable.
    fn coreachable(&self) -> Vec<bool> {
        let mut rev: Vec<Vec<State>> = vec![Vec::new(); self.state_count];
        for (q, _, t) in self.transitions() {
            rev[t].push(q);
        }
        let mut seen = self.finals.clone();
        let mut stack: Vec<State> = self.finals().collect();
        while let Some(q) = stack.pop() {
            for &p in &rev[q] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen
    }
}

fn check_state(q: State, count: usize) -> Result<()> {
    if q < count {
        Ok(())
    } else {
        Err(Error::Input(format!("state {q} out of range 0..{count}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TfaConfiguration {
    pub state: State,
    pub remaining: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepOutcome {
    Moved(TfaConfiguration),
    Stuck,
}

/// Upper bound on reads, `None` meaning unbounded.
type ReadBound = Option<u64>;

// For every state p and letter c: the most c-reads on any run from p that
// ends in a final state (None = unbounded), and the longest such run.
struct ReadBounds {
    per_letter: Vec<Vec<ReadBound>>,
    total: Vec<ReadBound>,
}

fn read_bounds(t: &Tfa, useful: &[bool]) -> ReadBounds {
    let n = t.state_count;
    let s = t.alphabet.size() as usize;
    let mut graph = DiGraph::<State, Letter>::new();
    let nodes: Vec<_> = (0..n).map(|q| graph.add_node(q)).collect();
    for (p, a, q) in t.transitions() {
        if useful[p] && useful[q] {
            graph.add_edge(nodes[p], nodes[q], a);
        }
    }
    // tarjan_scc yields components in reverse topological order: successors
    // come before the components that reach them
    let sccs = tarjan_scc(&graph);
    let mut comp = vec![usize::MAX; n];
    for (ci, members) in sccs.iter().enumerate() {
        for &m in members {
            comp[graph[m]] = ci;
        }
    }
    // label None = counts every letter (total length)
    let solve = |label: Option<Letter>| -> Vec<ReadBound> {
        let weight = |a: Letter| u64::from(label.is_none_or(|l| l == a));
        let mut best: Vec<Option<ReadBound>> = vec![None; sccs.len()];
        for (ci, members) in sccs.iter().enumerate() {
            let mut unbounded = false;
            let mut value: Option<u64> = members.iter().any(|&m| t.finals[graph[m]]).then_some(0);
            for &m in members {
                let p = graph[m];
                for a in t.alphabet.letters() {
                    let Some(q) = t.next(p, a) else { continue };
                    if !useful[q] {
                        continue;
                    }
                    if comp[q] == ci {
                        if weight(a) > 0 {
                            unbounded = true;
                        }
                    } else {
                        match best[comp[q]].expect("successor solved first") {
                            None => unbounded = true,
                            Some(v) => value = Some(value.unwrap_or(0).max(v + weight(a))),
                        }
                    }
                }
            }
            best[ci] = Some(if unbounded { None } else { value });
        }
        (0..n)
            .map(|q| if useful[q] { best[comp[q]].expect("solved") } else { Some(0) })
            .collect()
    };
    let per_letter_by_letter: Vec<Vec<ReadBound>> =
        (1..=s as Letter).map(|a| solve(Some(a))).collect();
    let per_letter = (0..n)
        .map(|q| per_letter_by_letter.iter().map(|v| v[q]).collect())
        .collect();
    ReadBounds {
        per_letter,
        total: solve(None),
    }
}

fn within(bound: ReadBound, count: usize) -> bool {
    bound.is_none_or(|b| count as u64 <= b)
}

/// Search state: machine state, letters appended but not yet readable (all
/// translucent for `state`), and how much of `w` the appended word covers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct SearchNode {
    state: State,
    pending: Vec<Letter>,
    matched: usize,
}

/// Length bound `(|w| + 1) · states` on a shortest accepted supersequence.
pub fn supersequence_length_bound(t: &Tfa, w: &[Letter]) -> usize {
    (w.len() + 1) * t.state_count
}

/// Looks for an accepted word containing `w` as a subsequence, of length at
/// most `(|w| + 1) · states`, and returns a shortest one.
///
/// Words are built one letter at a time. Appending a letter either lets the
/// machine read it at once (it is the leftmost enabled letter whatever
/// follows) or leaves it pending; pending letters are read as soon as a state
/// enables one of them. Two prefixes leading to the same search state have
/// the same set of accepted continuations, so the search is breadth-first
/// over search states. `budget` caps the number of search states.
pub fn exists_supersequence_tfa(t: &Tfa, w: &[Letter], budget: u64) -> Result<Option<Word>> {
    t.alphabet.check_word(w)?;
    let bound = supersequence_length_bound(t, w);
    let useful = t.coreachable();
    if !useful[t.start] {
        return Ok(None);
    }
    let rb = read_bounds(t, &useful);
    let s = t.alphabet.size() as usize;

    let admissible = |node: &SearchNode, appended: usize| -> bool {
        if !useful[node.state] || appended + (w.len() - node.matched) > bound {
            return false;
        }
        if !within(rb.total[node.state], node.pending.len()) {
            return false;
        }
        let mut counts = vec![0usize; s];
        for &a in &node.pending {
            counts[(a - 1) as usize] += 1;
        }
        counts
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || within(rb.per_letter[node.state][i], c))
    };

    let root = SearchNode {
        state: t.start,
        pending: Vec::new(),
        matched: 0,
    };
    let mut nodes = vec![root.clone()];
    let mut parent: Vec<Option<(usize, Letter)>> = vec![None];
    let mut index: HashMap<SearchNode, usize> = HashMap::from([(root, 0)]);
    let mut depth = vec![0usize];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let node = nodes[i].clone();
        if node.pending.is_empty() && node.matched == w.len() && t.finals[node.state] {
            let mut out = Vec::new();
            let mut cur = i;
            while let Some((p, a)) = parent[cur] {
                out.push(a);
                cur = p;
            }
            out.reverse();
            return Ok(Some(Word::new(out)));
        }
        if depth[i] == bound {
            continue;
        }
        for c in t.alphabet.letters() {
            let mut next = node.clone();
            if next.matched < w.len() && w[next.matched] == c {
                next.matched += 1;
            }
            match t.next(next.state, c) {
                Some(q) => {
                    next.state = q;
                    drain(t, &mut next);
                }
                None => next.pending.push(c),
            }
            if !admissible(&next, depth[i] + 1) || index.contains_key(&next) {
                continue;
            }
            if nodes.len() as u64 >= budget {
                return Err(Error::resource(
                    format!("supersequence search (length bound {bound})"),
                    format!("more than {budget} configurations"),
                    budget,
                ));
            }
            index.insert(next.clone(), nodes.len());
            nodes.push(next);
            parent.push(Some((i, c)));
            depth.push(depth[i] + 1);
            queue.push_back(nodes.len() - 1);
        }
    }
    Ok(None)
}

// Reads pending letters while the current state enables one of them.
fn drain(t: &Tfa, node: &mut SearchNode) {
    while let Some((i, q)) = node
        .pending
        .iter()
        .enumerate()
        .find_map(|(i, &a)| t.next(node.state, a).map(|q| (i, q)))
    {
        node.pending.remove(i);
        node.state = q;
    }
}

/// Checks a claimed witness independently of the search.
pub fn is_accepted_supersequence(t: &Tfa, w: &[Letter], u: &[Letter]) -> Result<bool> {
    Ok(is_subsequence(w, u) && t.accepts(u)?)
}

/// Top-of-stack symbol of the pushdown simulation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StackTop {
    Bottom,
    Letter(Letter),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StackOp {
    Keep,
    Push(Letter),
    /// Removes the top symbol; on the bottom marker this empties the stack.
    Pop,
}

/// One rule `δ'(from, top, input) = (to, op)`; `input == None` is an ε-move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PdaRule {
    pub from: State,
    pub top: StackTop,
    pub input: Option<Letter>,
    pub to: State,
    pub op: StackOp,
}

/// Pushdown automaton over two letters whose stack never mixes letters.
/// Accepts by reaching `accept` with the input consumed and the stack empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnaryPda {
    pub alphabet: Alphabet,
    pub state_count: usize,
    pub start: State,
    pub accept: State,
    pub rules: Vec<PdaRule>,
}

/// Simulates a TFA over `{1, 2}` with a pushdown automaton that stacks the
/// letters read out of order. The TFA's states keep their ids; the extra
/// accepting state is `state_count`.
pub fn binary_tfa_to_pda(t: &Tfa) -> Result<UnaryPda> {
    if t.alphabet.size() != 2 {
        return Err(Error::Input(format!(
            "the pushdown simulation needs a two-letter alphabet, got {}",
            t.alphabet.size()
        )));
    }
    let accept = t.state_count;
    let mut rules = BTreeSet::new();
    let other = |x: Letter| 3 - x;
    for p in 0..t.state_count {
        for x in 1..=2 {
            rules.insert(PdaRule {
                from: p,
                top: StackTop::Letter(x),
                input: Some(x),
                to: p,
                op: StackOp::Pop,
            });
            let y = other(x);
            match (t.next(p, x), t.next(p, y)) {
                (None, Some(q)) => {
                    // y read past a block of x's, matched later from the stack
                    rules.insert(PdaRule {
                        from: p,
                        top: StackTop::Bottom,
                        input: None,
                        to: q,
                        op: StackOp::Push(y),
                    });
                    rules.insert(PdaRule {
                        from: p,
                        top: StackTop::Letter(y),
                        input: None,
                        to: q,
                        op: StackOp::Push(y),
                    });
                    rules.insert(PdaRule {
                        from: p,
                        top: StackTop::Letter(x),
                        input: Some(y),
                        to: q,
                        op: StackOp::Keep,
                    });
                }
                (Some(q), Some(_)) => {
                    rules.insert(PdaRule {
                        from: p,
                        top: StackTop::Bottom,
                        input: Some(x),
                        to: q,
                        op: StackOp::Keep,
                    });
                    rules.insert(PdaRule {
                        from: p,
                        top: StackTop::Letter(y),
                        input: Some(x),
                        to: q,
                        op: StackOp::Keep,
                    });
                }
                _ => {}
            }
        }
    }
    for f in t.finals() {
        rules.insert(PdaRule {
            from: f,
            top: StackTop::Bottom,
            input: None,
            to: accept,
            op: StackOp::Pop,
        });
    }
    Ok(UnaryPda {
        alphabet: t.alphabet,
        state_count: t.state_count + 1,
        start: t.start,
        accept,
        rules: rules.into_iter().collect(),
    })
}

/// Stack as `(letter, count)` above the bottom marker; `None` once the
/// marker itself was popped.
type UnaryStack = Option<(Letter, usize)>;

fn top_of(stack: UnaryStack) -> Option<StackTop> {
    match stack {
        None => None,
        Some((_, 0)) => Some(StackTop::Bottom),
        Some((x, _)) => Some(StackTop::Letter(x)),
    }
}

/// Breadth-first search over `(state, position, stack)`. Pushed letters must
/// all be matched by input, so the stack height never exceeds the unread
/// input and the search is finite.
pub fn pda_accepts(p: &UnaryPda, w: &[Letter]) -> Result<bool> {
    p.alphabet.check_word(w)?;
    let mut by_state: Vec<Vec<&PdaRule>> = vec![Vec::new(); p.state_count];
    for r in &p.rules {
        by_state[r.from].push(r);
    }
    let start = (p.start, 0usize, Some((0 as Letter, 0usize)) as UnaryStack);
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some((q, pos, stack)) = queue.pop_front() {
        if q == p.accept && pos == w.len() && stack.is_none() {
            return Ok(true);
        }
        let Some(top) = top_of(stack) else { continue };
        let (letter, count) = stack.expect("stack present");
        for r in by_state[q].iter().filter(|r| r.top == top) {
            let pos2 = match r.input {
                None => pos,
                Some(a) if pos < w.len() && w[pos] == a => pos + 1,
                Some(_) => continue,
            };
            let stack2 = match r.op {
                StackOp::Keep => Some((letter, count)),
                StackOp::Pop if count == 0 => None,
                StackOp::Pop => Some((if count == 1 { 0 } else { letter }, count - 1)),
                StackOp::Push(x) => {
                    if count > 0 && x != letter {
                        return Err(Error::Invariant(format!(
                            "stack would hold two letters ({letter} and {x}) in state {q}"
                        )));
                    }
                    Some((x, count + 1))
                }
            };
            if let Some((_, c)) = stack2 {
                if c > w.len() - pos2 {
                    continue;
                }
            }
            let cfg = (r.to, pos2, stack2);
            if seen.insert(cfg) {
                queue.push_back(cfg);
            }
        }
    }
    Ok(false)
}

/// A simple undirected graph on vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::Input(format!("edge {u}-{v} outside vertices 1..={n}")));
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Brute-force Hamiltonian cycle test (for small graphs).
    pub fn is_hamiltonian(&self) -> bool {
        fn extend(g: &Graph, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
            if path.len() == g.n {
                return g.has_edge(*path.last().expect("nonempty"), 1);
            }
            for v in 2..=g.n {
                if !used[v] && g.has_edge(*path.last().expect("nonempty"), v) {
                    used[v] = true;
                    path.push(v);
                    if extend(g, path, used) {
                        return true;
                    }
                    path.pop();
                    used[v] = false;
                }
            }
            false
        }
        if self.n < 3 {
            return false;
        }
        let mut used = vec![false; self.n + 1];
        used[1] = true;
        extend(self, &mut vec![1], &mut used)
    }
}

/// State layout of [`hcp_gadget`].
///
/// With `d = ⌈log₂ n⌉` every gadget `i ∈ 1..=n` spans `n·2^d` states
/// starting at `(i-1)·n·2^d`: first `v_{i,1..n}`, then `w_{i,1..n}`, then for
/// each `j` the `2^d - 2` inner nodes of the tree under `v_{i,j}` (heap
/// order, root excluded). The final state `v_{n+1,1}` and the sink follow
/// the last gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GadgetLayout {
    pub n: usize,
    pub depth: u32,
}

impl GadgetLayout {
    pub fn new(n: usize) -> Self {
        let depth = usize::BITS - (n - 1).leading_zeros();
        GadgetLayout { n, depth }
    }

    fn leaves(&self) -> usize {
        1 << self.depth
    }

    pub fn gadget_size(&self) -> usize {
        self.n * self.leaves()
    }

    pub fn v(&self, i: usize, j: usize) -> State {
        if i == self.n + 1 {
            assert_eq!(j, 1, "only v_(n+1,1) exists");
            return self.final_state();
        }
        (i - 1) * self.gadget_size() + (j - 1)
    }

    pub fn w(&self, i: usize, k: usize) -> State {
        (i - 1) * self.gadget_size() + self.n + (k - 1)
    }

    /// Inner node with heap index `h ∈ 2..2^d` of the tree under `v_{i,j}`.
    pub fn inner(&self, i: usize, j: usize, h: usize) -> State {
        (i - 1) * self.gadget_size() + 2 * self.n + (j - 1) * (self.leaves() - 2) + (h - 2)
    }

    pub fn final_state(&self) -> State {
        self.n * self.gadget_size()
    }

    pub fn sink(&self) -> State {
        self.final_state() + 1
    }

    pub fn state_count(&self) -> usize {
        self.final_state() + 2
    }

    /// Letter of vertex `j`; the two code letters are `n + 1` and `n + 2`.
    pub fn vertex_letter(&self, j: usize) -> Letter {
        j as Letter
    }

    /// The code `u_k`: the k-th word of length `d` over the code letters in
    /// lexicographic order.
    pub fn code(&self, k: usize) -> Word {
        let a = self.n as Letter + 1;
        (0..self.depth)
            .rev()
            .map(|bit| if (k - 1) >> bit & 1 == 0 { a } else { a + 1 })
            .collect()
    }
}

/// Builds the Hamiltonian-cycle gadget: a TFA that accepts a supersequence
/// of `v₁⋯vₙ` iff some closed walk of `n` steps from vertex 1 visits every
/// vertex. Returns the machine and the query word.
pub fn hcp_gadget(g: &Graph) -> Result<(Tfa, Word)> {
    let n = g.n;
    if n < 2 {
        return Err(Error::Input("the gadget needs at least two vertices".into()));
    }
    let lay = GadgetLayout::new(n);
    let sigma = Alphabet::new(n as u32 + 2)?;
    let (a, b) = (n as Letter + 1, n as Letter + 2);
    let mut t = Tfa::new(sigma, lay.state_count(), lay.v(1, 1))?;
    t.set_final(lay.final_state())?;
    let leaves = lay.leaves();
    for i in 1..=n {
        for j in 1..=n {
            // heap index h: 1 is the root v_{i,j}; leaves are leaves..2·leaves
            let node = |h: usize| -> State {
                if h == 1 {
                    lay.v(i, j)
                } else if h < leaves {
                    lay.inner(i, j, h)
                } else {
                    let k = h - leaves + 1;
                    if k <= n && g.has_edge(j, k) {
                        lay.w(i, k)
                    } else {
                        lay.sink()
                    }
                }
            };
            for h in 1..leaves {
                t.set_transition(node(h), a, node(2 * h))?;
                t.set_transition(node(h), b, node(2 * h + 1))?;
            }
        }
        for k in 1..=n {
            if i < n {
                t.set_transition(lay.w(i, k), lay.vertex_letter(k), lay.v(i + 1, k))?;
            } else if k == 1 {
                t.set_transition(lay.w(n, 1), lay.vertex_letter(1), lay.final_state())?;
            }
        }
    }
    let query = (1..=n).map(|j| lay.vertex_letter(j)).collect();
    Ok((t, query))
}

impl fmt::Display for StackTop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StackTop::Bottom => f.write_str("_"),
            StackTop::Letter(x) => write!(f, "{x}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_ascii(s).unwrap()
    }

    // a=1 b=2 c=3 d=4: q0 -a-> q1 -c-> q0, q0 -b-> q2 -d-> q0,
    // q1 -d-> sink, q2 -c-> sink; q0 final
    fn pairs() -> Tfa {
        let mut t = Tfa::new(Alphabet::new(4).unwrap(), 4, 0).unwrap();
        for (p, a, q) in [(0, 1, 1), (1, 3, 0), (0, 2, 2), (2, 4, 0), (1, 4, 3), (2, 3, 3)] {
            t.set_transition(p, a, q).unwrap();
        }
        t.set_final(0).unwrap();
        t
    }

    #[test]
    fn steps() {
        let t = pairs();
        let c = TfaConfiguration { state: 0, remaining: w("acbd") };
        assert_eq!(t.step(&c), StepOutcome::Moved(TfaConfiguration { state: 1, remaining: w("cbd") }));
        let c = TfaConfiguration { state: 1, remaining: w("bd") };
        assert_eq!(t.step(&c), StepOutcome::Moved(TfaConfiguration { state: 3, remaining: w("b") }));
        let c = TfaConfiguration { state: 2, remaining: Word::empty() };
        assert_eq!(t.step(&c), StepOutcome::Stuck);
    }

    #[test]
    fn acceptance() {
        let t = pairs();
        assert!(t.accepts(&w("acbd")).unwrap());
        assert!(t.accepts(&[]).unwrap());
        assert!(!t.accepts(&w("adbc")).unwrap());
        // the translucent reading also accepts the pairs in swapped order
        let short = t.enumerate_accepted(2, 1000).unwrap();
        assert_eq!(short, vec![Word::empty(), w("ac"), w("bd"), w("ca"), w("db")]);
    }

    #[test]
    fn supersequence_search() {
        let t = pairs();
        let u = exists_supersequence_tfa(&t, &w("ab"), DEFAULT_SEARCH_BUDGET).unwrap().unwrap();
        assert!(is_accepted_supersequence(&t, &w("ab"), &u).unwrap());
        assert_eq!(u.len(), 4);
        assert_eq!(exists_supersequence_tfa(&t, &[], 100).unwrap(), Some(Word::empty()));
        // ca itself is accepted
        assert_eq!(exists_supersequence_tfa(&t, &w("ca"), 1000).unwrap(), Some(w("ca")));
        // every accepted word has as many a's as c's
        assert_eq!(exists_supersequence_tfa(&t, &w("cc"), 100_000).unwrap().map(|u| u.len()), Some(4));
    }

    #[test]
    fn gadget_layout() {
        let lay = GadgetLayout::new(4);
        assert_eq!(lay.depth, 2);
        assert_eq!(lay.state_count(), 66);
        assert_eq!(lay.code(1), Word::new(vec![5, 5]));
        assert_eq!(lay.code(4), Word::new(vec![6, 6]));
        assert_eq!(GadgetLayout::new(3).code(3), Word::new(vec![5, 4]));
    }

    #[test]
    fn small_gadgets() {
        let k3 = Graph::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        let (t, q) = hcp_gadget(&k3).unwrap();
        let u = exists_supersequence_tfa(&t, &q, DEFAULT_SEARCH_BUDGET).unwrap().unwrap();
        assert!(is_accepted_supersequence(&t, &q, &u).unwrap());
        let path = Graph::new(3, &[(1, 2), (2, 3)]).unwrap();
        let (t, q) = hcp_gadget(&path).unwrap();
        assert_eq!(exists_supersequence_tfa(&t, &q, DEFAULT_SEARCH_BUDGET).unwrap(), None);
        assert!(Graph::new(3, &[(2, 2)]).is_err());
    }

    #[test]
    fn pda_rejects_wrong_alphabet() {
        assert!(binary_tfa_to_pda(&pairs()).is_err());
    }
}
