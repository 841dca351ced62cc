//! End-to-end runs of the `domset` binary.

use std::path::Path;
use std::process::{Command, Output};

use domset::format::{parse_edge_list, read_edge_list};
use domset_core::Graph;

fn domset(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domset")).current_dir(dir).args(args).env_remove("DOMSET_SEED").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) {
    std::fs::write(dir.join(name), text).unwrap();
}

#[test]
fn gen_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let a = domset(d, &["gen", "regular", "--n", "10", "--d", "3", "--seed", "7"]);
    let b = domset(d, &["gen", "regular", "--n", "10", "--d", "3", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let g = read_edge_list(&stdout(&a)).unwrap();
    assert!(g.n() == 10 && g.is_regular(3));

    let odd = domset(d, &["gen", "regular", "--n", "5", "--d", "3"]);
    assert_eq!(odd.status.code(), Some(2));

    write(d, "h.gr", &stdout(&a));
    let line = domset(d, &["gen", "line", "--input", "h.gr", "--out", "l.gr"]);
    assert!(line.status.success());
    let lg = read_edge_list(&std::fs::read_to_string(d.join("l.gr")).unwrap()).unwrap();
    assert_eq!(lg, g.line_graph().unwrap());

    let bip = domset(d, &["gen", "bipartite", "--n1", "3", "--n2", "4", "--p", "1/2", "--seed", "1"]);
    assert_eq!(parse_edge_list(&stdout(&bip)).unwrap().left_part, Some(3));
}

#[test]
fn solve_reports_and_witness_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    write(d, "c4.gr", "p 4 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n");

    let o = domset(d, &["solve", "c4.gr", "--spec", "k=2", "--solver", "exact", "--witness", "w.txt"]);
    assert!(o.status.success());
    let r = json(&o);
    assert_eq!(r["optimum"], 2);
    assert_eq!(r["size"], 2);
    assert_eq!(std::fs::read_to_string(d.join("w.txt")).unwrap(), "0\n2\n");
    assert_eq!(domset(d, &["verify", "c4.gr", "--spec", "k=2", "--set", "w.txt"]).status.code(), Some(0));

    let o = domset(d, &["solve", "c4.gr", "--spec", "alpha=1/2", "--solver", "claw", "--p", "3", "--oracle"]);
    let r = json(&o);
    assert!(o.status.success());
    // max{p - 1, ⌈δ/2⌉} = max{2, 1}
    assert_eq!(r["bound"], 2.0);
    assert_eq!(r["claw_p"], 3);
    assert_eq!(r["ratio"], 1.0);

    let o = domset(d, &["solve", "c4.gr", "--spec", "f=half", "--solver", "greedy"]);
    let bound = json(&o)["bound"].as_f64().unwrap();
    assert!((bound - (4f64.ln() + 1.0)).abs() < 1e-12);

    let o = domset(d, &["solve", "c4.gr", "--spec", "f=half", "--solver", "claw", "--p", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let o = domset(d, &["solve", "c4.gr", "--spec", "k=2", "--solver", "claw"]);
    assert_eq!(o.status.code(), Some(1));
    let o = domset(d, &["solve", "missing.gr", "--spec", "k=2", "--solver", "exact"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn solve_budget_has_its_own_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let g = domset_core::graph::random_graph(20, 1, 4, 1).unwrap();
    write(d, "g.gr", &domset::format::write_edge_list(&g));
    let o = domset(d, &["solve", "g.gr", "--spec", "k=2", "--solver", "exact", "--budget", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json(&o)["optimum"], serde_json::Value::Null);
}

#[test]
fn verify_lists_deficient_vertices() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    write(d, "c4.gr", "p 4 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n");
    write(d, "one.txt", "0\n");
    write(d, "all.txt", "0\n1\n2\n3\n");
    write(d, "bad.txt", "0\nx\n");
    let o = domset(d, &["verify", "c4.gr", "--spec", "k=2", "--set", "one.txt"]);
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("vertex ")).count(), 3);
    assert_eq!(domset(d, &["verify", "c4.gr", "--spec", "f=half", "--set", "all.txt"]).status.code(), Some(0));
    assert_eq!(domset(d, &["verify", "c4.gr", "--spec", "k=2", "--set", "bad.txt"]).status.code(), Some(1));
}

#[test]
fn reduce_writes_gadget_and_metadata() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    write(d, "c4.gr", "p 4 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n");
    write(d, "k4.gr", &domset::format::write_edge_list(&Graph::complete(4).unwrap()));

    let o = domset(d, &["reduce", "pendant", "--k", "2", "c4.gr"]);
    assert!(o.status.success());
    assert_eq!(read_edge_list(&stdout(&o)).unwrap().n(), 8);

    let o = domset(d, &["reduce", "fdm", "--f", "half", "--x", "1", "--y", "2", "k4.gr", "--check", "--out", "fdm.gr"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("holds: gamma_f(G') = 2 == x + gamma(G) = 2"));
    let meta = std::fs::read_to_string(d.join("fdm.gr.meta")).unwrap();
    assert!(meta.contains("construction=fdm\n") && meta.contains("group.U=4..5\n"));
    assert_eq!(read_edge_list(&std::fs::read_to_string(d.join("fdm.gr")).unwrap()).unwrap().n(), 7);

    let o = domset(d, &["reduce", "fdm", "--f", "half", "--x", "2", "--y", "2", "k4.gr"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("x < y violated"));

    let o = domset(d, &["reduce", "bipartite-k", "--k", "2", "c4.gr", "--check", "--out", "b.gr"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let parsed = parse_edge_list(&std::fs::read_to_string(d.join("b.gr")).unwrap()).unwrap();
    assert!(domset_core::Bipartition::two_color(&parsed.graph).is_some());

    let o = domset(d, &["reduce", "alpha", "--alpha", "1/2", "c4.gr", "--check", "--out", "a.gr"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));

    let o = domset(d, &["reduce", "bipartite-k", "--k", "2", "k4.gr"]);
    assert_eq!(o.status.code(), Some(2));
    let o = domset(d, &["reduce", "pendant", "c4.gr"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn experiment_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    write(
        d,
        "exp.conf",
        "generator = regular\nn = 10\nd = 3\ncount = 6\nseed = 3\nspecs = k=2\nsolvers = exact, claw\nclaw_p = auto\nrequire_exact = true\noutput = out.csv\n",
    );
    let run = |extra: &[&str]| {
        let mut args = vec!["experiment", "exp.conf"];
        args.extend_from_slice(extra);
        let o = domset(d, &args);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        std::fs::read_to_string(d.join("out.csv")).unwrap()
    };
    let a = run(&["--no-timing"]);
    let b = run(&["--no-timing"]);
    assert_eq!(a, b);
    assert_eq!(a.lines().filter(|l| !l.starts_with('#')).count(), 1 + 12);
    assert!(a.contains("# violations,0"));
    let timed = run(&[]);
    assert!(timed.lines().next().unwrap().ends_with(",wall_ms"));

    let env = Command::new(env!("CARGO_BIN_EXE_domset"))
        .current_dir(d)
        .args(["experiment", "exp.conf", "--no-timing", "--out", "env.csv"])
        .env("DOMSET_SEED", "99")
        .output()
        .unwrap();
    assert!(env.status.success());
    assert_ne!(std::fs::read_to_string(d.join("env.csv")).unwrap(), a);

    write(d, "big.conf", "generator = random\nn = 40\nedge_p = 1/4\ncount = 1\nspecs = k=2\nsolvers = exact\nbudget = 20\nrequire_exact = true\n");
    assert_eq!(domset(d, &["experiment", "big.conf"]).status.code(), Some(3));
    write(d, "bad.conf", "generator = regular\ncount = 1\n");
    assert_eq!(domset(d, &["experiment", "bad.conf"]).status.code(), Some(1));
}

#[test]
fn find_xy_table() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let half = stdout(&domset(d, &["find-xy", "half", "50"]));
    assert!(half.lines().any(|l| l == "(1, 2)"));
    assert!(stdout(&domset(d, &["find-xy", "sqrt_plus_one", "50"])).lines().any(|l| l == "(3, 4)"));
    assert!(stdout(&domset(d, &["find-xy", "two_log_half"])).lines().any(|l| l == "(2, 3)"));
    assert_eq!(domset(d, &["find-xy", "cube"]).status.code(), Some(1));
    assert_eq!(domset(d, &["frobnicate"]).status.code(), Some(1));
    assert_eq!(domset(d, &["--help"]).status.code(), Some(0));
}
