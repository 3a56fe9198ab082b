use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cfcolor"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn result_line(o: &Output) -> String {
    stdout(o).lines().last().unwrap_or_default().to_string()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const C4: &str = "4 4\n0 1\n1 2\n2 3\n0 3\n";

#[test]
fn exact_chi_with_one_color_on_c4_is_infeasible() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c4.txt", C4);
    let o = run(&["exact", "chi", "--k", "1", "--graph", s(&g)]);
    assert_eq!(code(&o), 1);
    assert!(result_line(&o).starts_with("RESULT infeasible"));
    let o = run(&["exact", "chi", "--graph", s(&g)]);
    assert_eq!(code(&o), 0);
    assert_eq!(result_line(&o), "RESULT feasible colors=2 colored=2");
}

#[test]
fn dp_on_p9_colors_three_vertices() {
    let dir = TempDir::new().unwrap();
    let p9 = dir.path().join("p9.txt");
    assert_eq!(code(&run(&["gen", "path", "--n", "9", "--out", s(&p9)])), 0);
    let out = dir.path().join("chi.txt");
    let o = run(&["dp", "--graph", s(&p9), "--k", "1", "--minimize", "--out", s(&out)]);
    assert_eq!(code(&o), 0);
    assert_eq!(result_line(&o), "RESULT feasible colors=1 colored=3");
    let v = run(&["verify", "--graph", s(&p9), "--coloring", s(&out)]);
    assert_eq!(code(&v), 0);
}

#[test]
fn dp_reports_infeasible_and_rejects_bad_input() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c4.txt", C4);
    assert_eq!(code(&run(&["dp", "--graph", s(&g), "--k", "1"])), 1);
    let o = run(&["dp", "--graph", s(&g), "--k", "2", "--minimize", "--stats"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8(o.stderr).unwrap().contains("ATOM component=0"));
    assert_eq!(code(&run(&["dp", "--graph", s(&g), "--k", "3"])), 2);
    let k4 = dir.path().join("k4.txt");
    run(&["gen", "complete", "--n", "4", "--out", s(&k4)]);
    assert_eq!(code(&run(&["dp", "--graph", s(&k4), "--k", "2"])), 2);
}

#[test]
fn verify_proper_and_improper_colorings() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c4.txt", C4);
    let proper = write(&dir, "proper.txt", "0 1\n1 2\n2 1\n3 2\n");
    assert_eq!(code(&run(&["verify", "--graph", s(&g), "--coloring", s(&proper), "--mode", "closed"])), 0);
    let bad = write(&dir, "bad.txt", "0 1\n2 1\n");
    let o = run(&["verify", "--graph", s(&g), "--coloring", s(&bad)]);
    assert_eq!(code(&o), 1);
    assert!(result_line(&o).starts_with("RESULT invalid"));
}

#[test]
fn usage_and_input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["heuristic"])), 2);
    let missing = dir.path().join("missing.txt");
    assert_eq!(code(&run(&["heuristic", "--graph", s(&missing)])), 2);
    let garbage = write(&dir, "bad.txt", "3 1\n0 9\n");
    let o = run(&["heuristic", "--graph", s(&garbage)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8(o.stderr).unwrap().contains("line 2"));
    let g = write(&dir, "c4.txt", C4);
    assert_eq!(code(&run(&["exact", "gamma", "--graph", s(&g)])), 2);
    assert_eq!(code(&run(&["exact", "chi", "--graph", s(&g), "--node-budget", "0"])), 2);
}

#[test]
fn budget_exhaustion_exits_3() {
    let dir = TempDir::new().unwrap();
    let g3 = dir.path().join("g3.txt");
    assert_eq!(code(&run(&["gen", "gk", "--n", "3", "--out", s(&g3)])), 0);
    let o = run(&["exact", "chi", "--k", "2", "--graph", s(&g3), "--node-budget", "10"]);
    assert_eq!(code(&o), 3);
    assert!(result_line(&o).starts_with("RESULT budget-exceeded"));
}

#[test]
fn heuristic_and_constructions() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("op.txt");
    run(&["gen", "random-outerplanar", "--n", "20", "--seed", "4", "--out", s(&g)]);
    let chi = dir.path().join("chi.txt");
    let o = run(&["heuristic", "--graph", s(&g), "--out", s(&chi)]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&run(&["verify", "--graph", s(&g), "--coloring", s(&chi)])), 0);
    for c in ["cf4", "cf3", "open8"] {
        let o = run(&["dominate-color", c, "--graph", s(&g), "--out", s(&chi)]);
        assert_eq!(code(&o), 0, "{c}");
        let mode = if c == "open8" { "open" } else { "closed" };
        assert_eq!(code(&run(&["verify", "--graph", s(&g), "--coloring", s(&chi), "--mode", mode])), 0);
    }
    let c5 = dir.path().join("c5.txt");
    run(&["gen", "cycle", "--n", "5", "--out", s(&c5)]);
    assert_eq!(code(&run(&["dominate-color", "open4", "--graph", s(&c5)])), 2);
}

#[test]
fn gen_round_trips_and_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = run(&["gen", "random-planar", "--n", "15", "--seed", "9"]);
    let b = run(&["gen", "random-planar", "--n", "15", "--seed", "9"]);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
    let file = dir.path().join("g.txt");
    run(&["gen", "random-planar", "--n", "15", "--seed", "9", "--out", s(&file)]);
    let text = fs::read_to_string(&file).unwrap();
    assert!(stdout(&a).starts_with(&text));
    let g = cfcolor::io::parse_graph(&text).unwrap();
    assert_eq!(cfcolor::io::write_graph(&g), text);
    for fam in ["gk", "knm3", "path", "cycle", "star", "complete", "random-outerplanar"] {
        assert_eq!(code(&run(&["gen", fam])), 0, "{fam}");
    }
}

#[test]
fn reduction_with_roles() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "f.txt", "3 1\n1 2 3\n");
    let out = dir.path().join("r.txt");
    let roles = dir.path().join("roles.txt");
    let o = run(&["gen", "reduction1", "--formula", s(&f), "--out", s(&out), "--roles", s(&roles)]);
    assert_eq!(code(&o), 0);
    assert_eq!(result_line(&o), "RESULT ok n=40 m=43");
    let labels = fs::read_to_string(&roles).unwrap();
    assert!(labels.starts_with("0 z:1:1:true\n"));
    assert!(labels.contains("36 c:1:1\n"));
    let o = run(&["exact", "chi", "--k", "1", "--graph", s(&out)]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&run(&["gen", "reduction1"])), 2);
}
