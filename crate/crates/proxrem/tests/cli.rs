// Binary-level tests: the exit taxonomy (0 clean / 1 certified or proposition
// violation / 2 usage or parse error / 3 stated-form discrepancy only), the
// documented example invocations, and the stdout/stderr split that keeps
// pipelines machine-readable.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_proxrem")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().unwrap()
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_str(&stdout_of(out)).unwrap()
}

fn rat<'v>(v: &'v Value, field: &str) -> (i64, i64) {
    let r = &v[field];
    (r["num"].as_i64().unwrap(), r["den"].as_i64().unwrap())
}

fn graph_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("proxrem-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

const P5: &str = "0 1\n1 2\n2 3\n3 4\n";
const K33: &str = "0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n";

#[test]
fn metrics_reports_exact_rationals() {
    let p5 = graph_file("p5.txt", P5);
    let out = run(&["metrics", p5.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["n"], 5);
    assert_eq!(v["m"], 4);
    assert_eq!(v["radius"], 2);
    assert_eq!(v["diameter"], 4);
    assert_eq!(rat(&v, "proximity"), (3, 2));
    assert_eq!(rat(&v, "remoteness"), (5, 2));
    assert_eq!(v["triangle_free"], true);
    assert_eq!(v["c4_free"], true);

    let k33 = graph_file("k33.txt", K33);
    let v = json_of(&run(&["metrics", k33.to_str().unwrap()]));
    assert_eq!(v["n"], 6);
    assert_eq!(v["min_degree"], 3);
    assert_eq!(rat(&v, "proximity"), (7, 5));
    assert_eq!(rat(&v, "remoteness"), (7, 5));
    assert_eq!(v["triangle_free"], true);
    assert_eq!(v["c4_free"], false);
}

#[test]
fn parse_errors_exit_two_and_name_the_line() {
    let bad = graph_file("bad-id.txt", "0 1\n1 x\n");
    let out = run(&["metrics", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_of(&out);
    assert!(err.contains("line 2"), "stderr was: {err}");
    assert!(err.contains("bad vertex id"), "stderr was: {err}");

    let short = graph_file("short.txt", "0 1\n2\n");
    let out = run(&["metrics", short.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("line 2"));

    let out = run(&["metrics", "/nonexistent/graph.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_emits_documented_sequences() {
    let out = run(&["construct", "z", "--n", "16", "--delta", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).trim(), "1,1,6,1,1,1,1,4");

    let out = run(&["construct", "x", "--n", "18", "--delta", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).trim(), "1,3,2,1,1,2,2,1,3,2");

    // The block sequence needs a positive delta*-8 entry, so delta 3 is
    // rejected up front with a usage error.
    let out = run(&["construct", "w", "--n", "16", "--delta", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("delta >= 4"));

    // Sequence on stdout, construction note on stderr.
    let out = run(&["construct", "y", "--n", "68", "--delta", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out).trim(),
        "1,2,2,3,2,2,2,2,2,2,2,10,2,2,2,2,2,2,2,2,2,2,16"
    );
    let note = stderr_of(&out);
    assert!(note.contains("# p = 1, n_r = 16"), "note was: {note}");

    let out = run(&["construct", "z", "--delta", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("--n"));
}

#[test]
fn construct_polarity_q2_is_the_seven_vertex_plane() {
    let out = run(&["construct", "polarity", "--q", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n 7"));
    let edges: Vec<&str> = lines.collect();
    assert_eq!(edges.len(), 9);

    let f = graph_file("pol2.txt", &text);
    let v = json_of(&run(&["metrics", f.to_str().unwrap()]));
    assert_eq!(v["n"], 7);
    assert_eq!(v["m"], 9);
    assert_eq!(v["min_degree"], 2);
    assert_eq!(v["c4_free"], true);
}

#[test]
fn maximize_rederives_canonical_sequences_exhaustively() {
    let out = run(&["maximize", "--family", "a", "--n", "18", "--delta", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["best_g"], 85);
    assert_eq!(v["exhaustive"], true);
    assert_eq!(v["optima_count"], 1);
    let best: Vec<u64> = v["best_seq"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    let x = stdout_of(&run(&["construct", "x", "--n", "18", "--delta", "3"]));
    let x: Vec<u64> = x.trim().split(',').map(|s| s.parse().unwrap()).collect();
    assert_eq!(best, x);

    let v = json_of(&run(&["maximize", "--family", "c", "--n", "16", "--delta", "3"]));
    assert_eq!(v["best_g"], 59);
    assert_eq!(v["exhaustive"], true);
}

#[test]
fn localopt_confirms_y_68_4_and_requires_the_order() {
    let y = stdout_of(&run(&["construct", "y", "--n", "68", "--delta", "4"]));
    let out = run(&[
        "localopt", "--family", "b", "--n", "68", "--delta", "4", "--seq",
        y.trim(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["base_g"], 905);
    assert_eq!(v["locally_optimal"], true);
    assert_eq!(v["beating"].as_array().unwrap().len(), 0);
    assert!(v["moves_feasible"].as_u64().unwrap() > 0);

    let out = run(&["localopt", "--family", "b", "--delta", "4", "--seq", "1,2,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn audit_separates_certified_from_stated_failures() {
    // Layered join of X_18_3: remoteness attains its certificate, proximity
    // exceeds the stated small-order form; informational exit, not a failure.
    let gx = stdout_of(&run(&["construct", "gx", "--n", "18", "--delta", "3"]));
    let f = graph_file("gx18.txt", &gx);
    let out = run(&["audit", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let v = json_of(&out);
    assert_eq!(v["certified_violation"], false);
    assert_eq!(v["closed_form_discrepancy"], true);
    assert_eq!(rat(&v, "remoteness"), (5, 1));
    let violated: Vec<&str> = v["bounds"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["violated"] == true)
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    assert_eq!(violated, ["pi_triangle_free"]);

    // K_3_3 trips the same stated proximity form at order 6.
    let k33 = graph_file("k33-audit.txt", K33);
    let out = run(&["audit", k33.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let v = json_of(&out);
    assert_eq!(v["certified_violation"], false);

    // C_5 and P_4 satisfy everything that applies to them.
    let c5 = graph_file("c5.txt", "0 1\n1 2\n2 3\n3 4\n4 0\n");
    assert_eq!(run(&["audit", c5.to_str().unwrap()]).status.code(), Some(0));
    let p4 = graph_file("p4.txt", "0 1\n1 2\n2 3\n");
    assert_eq!(run(&["audit", p4.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn props_checks_the_right_families_per_class() {
    let k33 = graph_file("k33-props.txt", K33);
    let out = run(&["props", k33.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    let runs = v["runs"].as_array().unwrap();
    let applicable: Vec<(&str, bool)> = runs
        .iter()
        .map(|r| (r["family"].as_str().unwrap(), r["applicable"].as_bool().unwrap()))
        .collect();
    assert_eq!(
        applicable,
        [("a", true), ("c", false), ("b", true), ("d", false)]
    );

    let out = run(&["props", "--vertex", k33.to_str().unwrap()]);
    let v = json_of(&out);
    let fams: Vec<&str> = v["runs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["family"].as_str().unwrap())
        .collect();
    assert_eq!(fams, ["a", "c"]);
}

#[test]
fn constructed_graphs_round_trip_through_metrics() {
    // (construct args, n, m, min degree, triangle-free, C4-free)
    let cases: &[(&[&str], i64, i64, i64, bool, bool)] = &[
        (&["construct", "gx", "--n", "18", "--delta", "3"], 18, 29, 3, true, false),
        (&["construct", "palindrome", "--delta", "3", "--k", "4"], 26, 41, 3, true, false),
        (&["construct", "polarity", "--q", "3"], 13, 24, 3, false, true),
        (&["construct", "pruned", "--q", "3"], 12, 18, 2, false, true),
        (&["construct", "chain", "--q", "5", "--k", "2"], 60, 161, 4, false, true),
    ];
    for (args, n, m, delta, tf, c4f) in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let f = graph_file(&format!("rt-{}.txt", args[1]), &stdout_of(&out));
        let v = json_of(&run(&["metrics", f.to_str().unwrap()]));
        assert_eq!(v["n"].as_i64().unwrap(), *n, "{args:?}");
        assert_eq!(v["m"].as_i64().unwrap(), *m, "{args:?}");
        assert_eq!(v["min_degree"].as_i64().unwrap(), *delta, "{args:?}");
        assert_eq!(v["triangle_free"].as_bool().unwrap(), *tf, "{args:?}");
        assert_eq!(v["c4_free"].as_bool().unwrap(), *c4f, "{args:?}");
    }

    // The layered join realizes its sequence's invariants exactly.
    let gx = stdout_of(&run(&["construct", "gx", "--n", "18", "--delta", "3"]));
    let f = graph_file("rt-gx-inv.txt", &gx);
    let v = json_of(&run(&["metrics", f.to_str().unwrap()]));
    assert_eq!(rat(&v, "remoteness"), (5, 1));
    assert_eq!(rat(&v, "proximity"), (49, 17));
}

#[test]
fn sweep_emits_one_csv_row_per_applicable_bound() {
    let out = run(&["sweep", "--kind", "chain", "--q", "5", "--k", "2..8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("kind,params,n,delta,invariant,bound_name,bound_num,bound_den,margin_sign")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 55);
    for row in &rows {
        assert!(row.starts_with("chain,q=5;k="), "row: {row}");
        assert!(
            row.ends_with(",+") || row.ends_with(",-") || row.ends_with(",0"),
            "row: {row}"
        );
    }
    for k in 2..=8 {
        let tag = format!("k={k}");
        assert!(rows.iter().any(|r| r.contains(&tag)), "missing {tag}");
    }

    // Triangle-free layered joins at small order trip the stated proximity
    // form: the aggregate exit is informational, never a hard failure.
    let out = run(&["sweep", "--kind", "x", "--delta", "3", "--n", "18..26"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout_of(&out).lines().any(|l| l.ends_with(",-")));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["maximize", "--n", "18", "--delta", "3"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "x", "--n", "17", "--delta", "3"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--kind", "x", "--delta", "3"]).status.code(), Some(2));
}
