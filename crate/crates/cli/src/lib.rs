//! Command-line front end for `subseq-core`.
//!
//! Exit codes: 0 when the command ran (whatever the verdict), 2 for bad
//! input, 3 when a search or construction hit its resource limit, 1 for an
//! internal error.

pub mod format;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};
use subseq_core::automata::{k_universal_dfa, reg_decide, supersequence_dfa};
use subseq_core::cfl::{
    cfl_decide, max_universality, min_universality, one_universal_cycle,
};
use subseq_core::grammar::{to_cnf, CnfOutcome};
use subseq_core::tfa::{binary_tfa_to_pda, exists_supersequence_tfa, hcp_gadget, DEFAULT_SEARCH_BUDGET};
use subseq_core::{Alphabet, Problem, Query};
use thiserror::Error;

use format::{parse, parse_word, print, word_text, Kind, Machine};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] subseq_core::Error),
}

impl CliError {
    pub(crate) fn at_line(line: usize, e: subseq_core::Error) -> Self {
        match e {
            subseq_core::Error::Resource { .. } | subseq_core::Error::Invariant(_) => CliError::Core(e),
            other => CliError::Input(format!("line {line}: {other}")),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Core(subseq_core::Error::Resource { .. }) => 3,
            CliError::Core(subseq_core::Error::Invariant(_)) => 1,
            CliError::Core(_) => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "subseq", version, about = "Subsequence and universality problems for regular, context-free and translucent-automaton languages")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide one problem for one input file, or a batch of instances.
    Decide(DecideArgs),
    /// Print a constructed machine in the file format.
    #[command(subcommand)]
    Construct(Construct),
    /// Print an automaton or graph as Graphviz DOT.
    ExportDot {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct DecideArgs {
    /// Input file (`-` for standard input).
    #[arg(required_unless_present = "batch")]
    pub file: Option<PathBuf>,
    #[arg(long, value_parser = parse_problem, required_unless_present = "batch")]
    pub problem: Option<Problem>,
    #[command(flatten)]
    pub word: WordArg,
    /// Universality level, any non-negative decimal integer.
    #[arg(long)]
    pub k: Option<BigUint>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
    /// Limit on explored configurations for translucent-automaton searches.
    #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
    pub budget: u64,
    /// Override the kind named in the file header.
    #[arg(long, value_enum)]
    pub kind: Option<Kind>,
    /// File with one instance per line: `<id> <file> <problem> [<word or k>]`.
    #[arg(long, conflicts_with_all = ["file", "problem"])]
    pub batch: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct WordArg {
    /// Word in letters a, b, c, ... (`ε` for the empty word).
    #[arg(long)]
    pub word: Option<String>,
    /// Word as comma-separated letter numbers, e.g. `1,2,1`.
    #[arg(long)]
    pub word_ints: Option<String>,
}

impl WordArg {
    fn parse(&self) -> Result<Option<subseq_core::Word>, CliError> {
        match (&self.word, &self.word_ints) {
            (Some(w), _) => parse_word(w, false).map(Some),
            (_, Some(w)) => parse_word(w, true).map(Some),
            _ => Ok(None),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// DFA of all supersequences of a word.
    SupersequenceDfa {
        #[command(flatten)]
        word: WordArg,
        /// Alphabet size (defaults to the largest letter of the word).
        #[arg(long)]
        sigma: Option<u32>,
    },
    /// DFA of all k-universal words.
    KUniversalDfa {
        #[arg(long)]
        sigma: u32,
        #[arg(long)]
        k: BigUint,
    },
    /// Translucent automaton reducing Hamiltonicity to a subsequence query.
    HcpGadget {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Pushdown automaton equivalent to a two-letter translucent automaton.
    TfaToPda { file: PathBuf },
}

fn parse_problem(s: &str) -> Result<Problem, String> {
    s.parse().map_err(|e: subseq_core::Error| e.to_string())
}

fn read(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| CliError::Input(format!("reading standard input: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn load(path: &Path, kind: Option<Kind>) -> Result<Machine, CliError> {
    let text = read(path)?;
    parse(&text, kind).map_err(|e| match e {
        CliError::Input(m) => CliError::Input(format!("{}: {m}", path.display())),
        other => other,
    })
}

/// Outcome of one decision.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub problem: Problem,
    pub verdict: bool,
    pub detail: Value,
}

impl Verdict {
    pub fn to_json(&self) -> Value {
        json!({ "problem": self.problem.name(), "verdict": self.verdict, "detail": self.detail })
    }

    pub fn text(&self) -> String {
        let mut out = String::from(if self.verdict { "YES" } else { "NO" });
        if let Value::Object(fields) = &self.detail {
            for (k, v) in fields {
                let v = v.as_str().map_or_else(|| v.to_string(), str::to_string);
                write!(out, "\n{k}: {v}").unwrap();
            }
        }
        out
    }
}

fn unsupported(kind: Kind, problem: Problem) -> CliError {
    let status = match kind {
        Kind::Tfa => {
            "for translucent automata only exists-subseq is decided (it is NP-complete); the other \
             problems are open beyond two letters, and for two letters would need a pushdown-to-grammar \
             conversion that is not provided"
        }
        Kind::Graph => "graphs are inputs to `construct hcp-gadget`, not languages",
        _ => "unsupported",
    };
    CliError::Input(format!("{} is not available for {} input: {status}", problem.name(), kind.name()))
}

/// Decides `problem` for `m`.
pub fn decide(m: &Machine, problem: Problem, query: &Query, budget: u64) -> Result<Verdict, CliError> {
    query.check(problem)?;
    if let (Query::Word(w), Some(sigma)) = (query, m.alphabet()) {
        sigma.check_word(w)?;
    }
    let mut detail = json!({});
    let verdict = match m {
        Machine::Nfa(a) => reg_decide(problem, a, query)?,
        Machine::Dfa(d) => reg_decide(problem, &d.to_nfa(), query)?,
        Machine::Cfg(g) => match to_cnf(g)? {
            // every universal statement holds vacuously
            CnfOutcome::EmptyLanguage => {
                detail = json!({ "language": "empty" });
                matches!(problem, Problem::ForallSubseq | Problem::ForallKUniversal)
            }
            CnfOutcome::Grammar(c) => {
                match problem {
                    Problem::ExistsKUniversal => {
                        detail = json!({ "max_universality": max_universality(&c)?.to_string() });
                    }
                    Problem::ForallKUniversal => {
                        detail = json!({ "min_universality": min_universality(&c)?.to_string() });
                    }
                    Problem::InfinityUniversal => {
                        if let Some(cyc) = one_universal_cycle(&c) {
                            let sigma = c.alphabet();
                            detail = json!({
                                "cycle_nonterminal": c.names()[cyc.nonterminal],
                                "cycle_left": word_text(&cyc.left, sigma),
                                "cycle_right": word_text(&cyc.right, sigma),
                            });
                        }
                    }
                    _ => {}
                }
                cfl_decide(problem, &c, query)?
            }
        },
        Machine::Tfa(t) => match (problem, query) {
            (Problem::ExistsSubseq, Query::Word(w)) => {
                let found = exists_supersequence_tfa(t, w, budget)?;
                if let Some(u) = &found {
                    detail = json!({ "witness": word_text(u, t.alphabet()) });
                }
                found.is_some()
            }
            _ => return Err(unsupported(Kind::Tfa, problem)),
        },
        Machine::Graph(_) => return Err(unsupported(Kind::Graph, problem)),
    };
    Ok(Verdict { problem, verdict, detail })
}

fn make_query(problem: Problem, word: Option<subseq_core::Word>, k: Option<BigUint>) -> Result<Query, CliError> {
    let q = match (problem.needs_word(), problem.needs_k(), word, k) {
        (true, _, Some(w), None) => Query::Word(w),
        (_, true, None, Some(k)) => Query::K(k),
        (false, false, None, None) => Query::None,
        _ => {
            return Err(CliError::Input(format!(
                "{} needs {}",
                problem.name(),
                if problem.needs_word() {
                    "--word or --word-ints (and no --k)"
                } else if problem.needs_k() {
                    "--k (and no word)"
                } else {
                    "neither a word nor --k"
                }
            )))
        }
    };
    q.check(problem)?;
    Ok(q)
}

/// Graphviz text for an automaton or a graph.
pub fn dot(m: &Machine) -> Result<String, CliError> {
    let (name, sigma, states, start, finals, trans): (_, Alphabet, usize, usize, Vec<usize>, Vec<(usize, u32, usize)>) = match m {
        Machine::Nfa(a) => ("nfa", a.alphabet(), a.state_count(), a.start(), a.finals().collect(), a.transitions().collect()),
        Machine::Dfa(d) => {
            let sigma = d.alphabet();
            let trans = (0..d.state_count()).flat_map(|q| sigma.letters().map(move |x| (q, x, d.next(q, x)))).collect();
            ("dfa", sigma, d.state_count(), d.start(), d.finals().collect(), trans)
        }
        Machine::Tfa(t) => ("tfa", t.alphabet(), t.state_count(), t.start(), t.finals().collect(), t.transitions().collect()),
        Machine::Graph(g) => {
            let mut out = String::from("graph G {\n");
            for v in 1..=g.vertex_count() {
                writeln!(out, "  {v};").unwrap();
            }
            for (u, v) in g.edges() {
                writeln!(out, "  {u} -- {v};").unwrap();
            }
            out.push_str("}\n");
            return Ok(out);
        }
        Machine::Cfg(_) => {
            return Err(CliError::Input("export-dot takes an automaton or a graph, not a grammar".into()))
        }
    };
    let mut out = format!("digraph {name} {{\n  rankdir=LR;\n  __start [shape=point];\n");
    for q in 0..states {
        let shape = if finals.contains(&q) { "doublecircle" } else { "circle" };
        writeln!(out, "  q{q} [shape={shape}];").unwrap();
    }
    writeln!(out, "  __start -> q{start};").unwrap();
    // one edge per (source, target), letters joined in ascending order
    let mut grouped: std::collections::BTreeMap<(usize, usize), Vec<String>> = Default::default();
    for (p, a, q) in trans {
        grouped.entry((p, q)).or_default().push(format::letter_name(a, sigma));
    }
    for ((p, q), letters) in grouped {
        writeln!(out, "  q{p} -> q{q} [label=\"{}\"];", letters.join(",")).unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

fn construct(c: &Construct) -> Result<String, CliError> {
    match c {
        Construct::SupersequenceDfa { word, sigma } => {
            let w = word
                .parse()?
                .ok_or_else(|| CliError::Input("supersequence-dfa needs --word or --word-ints".into()))?;
            let s = sigma.unwrap_or_else(|| w.largest_letter().max(1));
            let d = supersequence_dfa(&w, Alphabet::new(s)?)?;
            Ok(print(&Machine::Dfa(d)))
        }
        Construct::KUniversalDfa { sigma, k } => {
            let d = k_universal_dfa(Alphabet::new(*sigma)?, k)?;
            Ok(print(&Machine::Dfa(d)))
        }
        Construct::HcpGadget { graph } => match load(graph, Some(Kind::Graph))? {
            Machine::Graph(g) => {
                let (t, q) = hcp_gadget(&g)?;
                let sigma = t.alphabet();
                let mut out = print(&Machine::Tfa(t));
                writeln!(out, "# query {}", word_text(&q, sigma)).unwrap();
                Ok(out)
            }
            _ => unreachable!("kind forced to graph"),
        },
        Construct::TfaToPda { file } => match load(file, Some(Kind::Tfa))? {
            Machine::Tfa(t) => Ok(format::pda_text(&binary_tfa_to_pda(&t)?)),
            _ => unreachable!("kind forced to tfa"),
        },
    }
}

fn batch(path: &Path, format: OutputFormat, budget: u64) -> Result<(String, i32), CliError> {
    let text = read(path)?;
    let base = path.parent().unwrap_or(Path::new("."));
    let mut jobs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if !(3..=4).contains(&toks.len()) {
            return Err(CliError::Input(format!(
                "{}: line {}: expected `<id> <file> <problem> [<word or k>]`",
                path.display(),
                i + 1
            )));
        }
        jobs.push(toks.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    }
    let run_one = |job: &[String]| -> Result<Verdict, CliError> {
        let problem: Problem = job[2].parse()?;
        let arg = job.get(3);
        let (word, k) = match arg {
            Some(a) if problem.needs_k() => (
                None,
                Some(a.parse::<BigUint>().map_err(|_| CliError::Input(format!("`{a}` is not a valid k")))?),
            ),
            Some(a) => (Some(parse_word(a, a.contains(',') || a.parse::<u32>().is_ok())?), None),
            None => (None, None),
        };
        let query = make_query(problem, word, k)?;
        let m = load(&base.join(&job[1]), None)?;
        decide(&m, problem, &query, budget)
    };
    let results: Vec<Result<Verdict, CliError>> = std::thread::scope(|s| {
        let handles: Vec<_> = jobs.iter().map(|j| s.spawn(|| run_one(j))).collect();
        handles.into_iter().map(|h| h.join().expect("instance thread")).collect()
    });
    let mut code = 0;
    let mut out = String::new();
    let mut json_rows = Vec::new();
    for (job, r) in jobs.iter().zip(results) {
        let id = &job[0];
        match (format, r) {
            (OutputFormat::Text, Ok(v)) => writeln!(out, "{id} {}", if v.verdict { "YES" } else { "NO" }).unwrap(),
            (OutputFormat::Json, Ok(v)) => {
                let mut obj = v.to_json();
                obj["id"] = json!(id);
                json_rows.push(obj);
            }
            (fmt, Err(e)) => {
                if code == 0 {
                    code = e.exit_code();
                }
                match fmt {
                    OutputFormat::Text => writeln!(out, "{id} ERROR {e}").unwrap(),
                    OutputFormat::Json => json_rows.push(json!({ "id": id, "error": e.to_string() })),
                }
            }
        }
    }
    if format == OutputFormat::Json {
        out = serde_json::to_string_pretty(&Value::Array(json_rows)).expect("json") + "\n";
    }
    Ok((out, code))
}

/// Runs a parsed command, returning standard output and the exit code.
pub fn run(cli: &Cli) -> Result<(String, i32), CliError> {
    match &cli.command {
        Command::Decide(a) => {
            if let Some(b) = &a.batch {
                return batch(b, a.format, a.budget);
            }
            let (Some(file), Some(problem)) = (&a.file, a.problem) else {
                return Err(CliError::Input("decide needs a file and --problem".into()));
            };
            let query = make_query(problem, a.word.parse()?, a.k.clone())?;
            let m = load(file, a.kind)?;
            let v = decide(&m, problem, &query, a.budget)?;
            let out = match a.format {
                OutputFormat::Text => v.text() + "\n",
                OutputFormat::Json => serde_json::to_string(&v.to_json()).expect("json") + "\n",
            };
            Ok((out, 0))
        }
        Command::Construct(c) => Ok((construct(c)?, 0)),
        Command::ExportDot { file, kind } => Ok((dot(&load(file, *kind)?)?, 0)),
    }
}
