use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name);
    p.to_str().unwrap().to_string()
}

struct Out {
    stdout: String,
    stderr: String,
    code: i32,
}

fn run(args: &[&str], stdin: Option<&str>) -> Out {
    let mut child = Command::new(env!("CARGO_BIN_EXE_subseq"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(s) = stdin {
        child.stdin.take().unwrap().write_all(s.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    let out = child.wait_with_output().unwrap();
    Out {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap(),
    }
}

fn subseq(args: &[&str]) -> Out {
    run(args, None)
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let out = subseq(&a);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn negative_verdicts_exit_zero() {
    let out = subseq(&["decide", &data("anbn.cfg"), "--problem", "exists-subseq", "--word", "ba"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().next(), Some("NO"));
}

#[test]
fn json_has_fixed_shape() {
    let cases: Vec<Vec<String>> = vec![
        vec![data("anbn.cfg"), "--problem".into(), "forall-subseq".into(), "--word".into(), "ab".into()],
        vec![data("g1.cfg"), "--problem".into(), "exists-k-universal".into(), "--k".into(), "7".into()],
        vec![data("ab_star.nfa"), "--problem".into(), "infinity-universal".into()],
        vec![data("even_a.dfa"), "--problem".into(), "forall-k-universal".into(), "--k".into(), "1".into()],
        vec![data("pairs.tfa"), "--problem".into(), "exists-subseq".into(), "--word".into(), "ba".into()],
    ];
    for case in cases {
        let mut args = vec!["decide"];
        args.extend(case.iter().map(String::as_str));
        let v = json(&args);
        let obj = v.as_object().unwrap();
        let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        keys.sort();
        assert_eq!(keys, ["detail", "problem", "verdict"], "{case:?}");
        assert!(obj["verdict"].is_boolean());
        assert!(obj["detail"].is_object());
        assert_eq!(obj["problem"], case[2].as_str());
    }
}

#[test]
fn verdicts_and_details() {
    let v = json(&["decide", &data("g1.cfg"), "--problem", "exists-k-universal", "--k", "7"]);
    assert_eq!(v["verdict"], true);
    let v = json(&["decide", &data("anbn.cfg"), "--problem", "exists-k-universal", "--k", "2"]);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["detail"]["max_universality"], "1");
    let v = json(&["decide", &data("pairs.tfa"), "--problem", "exists-subseq", "--word", "ab"]);
    assert_eq!(v["detail"]["witness"], "abcd");
    let v = json(&["decide", &data("pairs.tfa"), "--problem", "exists-subseq", "--word", "ba"]);
    assert_eq!(v["verdict"], true);
    // ε is a member of (ab)*
    let v = json(&["decide", &data("ab_star.nfa"), "--problem", "forall-k-universal", "--k", "1"]);
    assert_eq!(v["verdict"], false);
    let v = json(&["decide", &data("empty_finals.nfa"), "--problem", "forall-subseq", "--word", "ab"]);
    assert_eq!(v["verdict"], true);
    let v = json(&["decide", &data("empty_finals.nfa"), "--problem", "exists-subseq", "--word", ""]);
    assert_eq!(v["verdict"], false);
}

#[test]
fn integer_words() {
    let v = json(&["decide", &data("abc.cfg"), "--problem", "exists-subseq", "--word-ints", "1,3"]);
    let w = json(&["decide", &data("abc.cfg"), "--problem", "exists-subseq", "--word", "ac"]);
    assert_eq!(v, w);
}

#[test]
fn input_errors_exit_two() {
    let cases: Vec<Vec<String>> = vec![
        vec![data("pairs.tfa"), "--problem".into(), "forall-subseq".into(), "--word".into(), "ab".into()],
        vec![data("copy.csg"), "--problem".into(), "exists-subseq".into(), "--word".into(), "ab".into()],
        vec![data("k3.graph"), "--problem".into(), "infinity-universal".into()],
        vec![data("anbn.cfg"), "--problem".into(), "exists-subseq".into(), "--word".into(), "az".into()],
        vec![data("anbn.cfg"), "--problem".into(), "exists-k-universal".into()],
        vec![data("missing.cfg"), "--problem".into(), "infinity-universal".into()],
    ];
    for case in cases {
        let mut args = vec!["decide"];
        args.extend(case.iter().map(String::as_str));
        let out = subseq(&args);
        assert_eq!(out.code, 2, "{case:?}: {}", out.stderr);
        assert!(out.stderr.starts_with("error: "), "{case:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn parse_errors_name_the_line() {
    let out = run(&["decide", "-", "--problem", "infinity-universal"], Some("nfa 2 2\nstart 0\nfinal 5\n"));
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 3"), "{}", out.stderr);
}

#[test]
fn resource_limit_exits_three() {
    let out = subseq(&["construct", "k-universal-dfa", "--sigma", "3", "--k", "100000000000000000000"]);
    assert_eq!(out.code, 3, "{}", out.stderr);
    let out = subseq(&["decide", &data("pairs.tfa"), "--problem", "exists-subseq", "--word", "abab", "--budget", "1"]);
    assert_eq!(out.code, 3, "{}", out.stderr);
}

#[test]
fn dot_export() {
    let built = subseq(&["construct", "supersequence-dfa", "--word", "ab", "--sigma", "2"]);
    assert_eq!(built.code, 0);
    let dot = run(&["export-dot", "-"], Some(&built.stdout));
    assert_eq!(dot.code, 0, "{}", dot.stderr);
    let nodes = |s: &str| s.lines().filter(|l| l.trim_start().starts_with('q') && !l.contains("->")).count();
    assert!(dot.stdout.starts_with("digraph"));
    assert_eq!(nodes(&dot.stdout), 3);
    assert_eq!(dot.stdout.matches("doublecircle").count(), 1);

    let pairs = subseq(&["export-dot", &data("pairs.tfa")]);
    assert_eq!(nodes(&pairs.stdout), 4);
    let empty = subseq(&["export-dot", &data("empty_finals.nfa")]);
    assert!(!empty.stdout.contains("doublecircle"));
    let graph = subseq(&["export-dot", &data("k3.graph")]);
    assert!(graph.stdout.starts_with("graph"));
    assert_eq!(graph.stdout.matches(" -- ").count(), 3);
    assert_eq!(subseq(&["export-dot", &data("anbn.cfg")]).code, 2);
}

#[test]
fn constructions_parse_back() {
    let k = subseq(&["construct", "k-universal-dfa", "--sigma", "2", "--k", "2"]);
    assert_eq!(k.code, 0);
    let v = run(&["decide", "-", "--problem", "forall-k-universal", "--k", "2", "--format", "json"], Some(&k.stdout));
    assert_eq!(serde_json::from_str::<Value>(&v.stdout).unwrap()["verdict"], true);

    let gadget = subseq(&["construct", "hcp-gadget", "--graph", &data("k3.graph")]);
    assert_eq!(gadget.code, 0);
    let query = gadget.stdout.lines().find_map(|l| l.strip_prefix("# query ")).unwrap().to_string();
    let v = run(&["decide", "-", "--problem", "exists-subseq", "--word", &query], Some(&gadget.stdout));
    assert_eq!(v.code, 0, "{}", v.stderr);
    assert_eq!(v.stdout.lines().next(), Some("YES"));

    let pda = subseq(&["construct", "tfa-to-pda", &data("balanced.tfa")]);
    assert_eq!(pda.code, 0);
    assert!(pda.stdout.lines().any(|l| l.starts_with("rule ")));
    assert_eq!(subseq(&["construct", "tfa-to-pda", &data("pairs.tfa")]).code, 2);
}

#[test]
fn batch_keeps_order() {
    let out = subseq(&["decide", "--batch", &data("batch.txt")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 4);
    let ids: Vec<&str> = lines.iter().map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(ids, ["anbn-forall-k", "anbn-ba", "g1-infinite", "pairs-ab"]);
    let v: Value = serde_json::from_str(&subseq(&["decide", "--batch", &data("batch.txt"), "--format", "json"]).stdout).unwrap();
    let verdicts: Vec<bool> = v.as_array().unwrap().iter().map(|x| x["verdict"].as_bool().unwrap()).collect();
    assert_eq!(verdicts, [true, false, true, true]);
}
