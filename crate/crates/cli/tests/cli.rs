use std::process::{Command, Output};

fn qfab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfab")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn nakayama_reduce_ends_self_injective() {
    let o = qfab(&["nakayama", "--n", "2", "--kupisch", "4,3,3,3", "--reduce"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("terminal_vertices = 6\n"));
    assert!(s.contains("terminal_labels = 12,13,23,25,35,36\n"));
    assert!(s.contains("terminal: self-injective"));
}

#[test]
fn fabric_on_fixture() {
    let o = qfab(&["fabric", "apt-example", "--f", "2,3,5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("e = {1,3,4}\n"));
    assert!(s.contains("fab_dim = 1\n"));
    assert!(s.contains("tilting.passes = true\n"));
}

#[test]
fn fabric_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("apt.qf");
    let p = qfab(&["build", "apt-example", "--print"]);
    std::fs::write(&path, &p.stdout).unwrap();
    let o = qfab(&["fabric", path.to_str().unwrap(), "--f", "2,3,5", "--sequential"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("e = {1,3,4}\n"));
}

#[test]
fn not_fabric_exits_one() {
    let o = qfab(&["fabric", "apt-example", "--f", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn single_vertex_build() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.qf");
    std::fs::write(&path, "field Q\nvertex 1\n").unwrap();
    let o = qfab(&["build", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dimension = 1\n"));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.qf");
    std::fs::write(&path, "vertex 1\narrow a: 1 -> 2\n").unwrap();
    assert_eq!(qfab(&["build", path.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&path, "vertex 1\nvertex 2\narrow a: 1 -> 2\nrelation a a\n").unwrap();
    let o = qfab(&["build", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4, column 12"));
    assert_eq!(qfab(&["nakayama", "--n", "2", "--kupisch", "2,4"]).status.code(), Some(2));
    assert_eq!(qfab(&["build", "no-such-fixture"]).status.code(), Some(2));
    assert_eq!(qfab(&["resolve", "apt-example", "--module", "top:1"]).status.code(), Some(2));
}

#[test]
fn resolve_with_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("r.dot");
    let o = qfab(&["resolve", "apt-example", "--module", "inj:3", "--steps", "4", "--dot", dot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("term.0 = P3\nterm.1 = P1 + P4\nterm.2 = P2 + P5\n"));
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("digraph resolution {"));
}

#[test]
fn reports_are_reproducible() {
    let args = ["analyze", "two-ag-square", "--seed", "5", "--cutoff", "12"];
    let a = qfab(&args);
    let b = qfab(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let s = stdout(&a);
    assert!(s.contains("seed = 5\n") && s.contains("cutoff = 12\n"));
}

#[test]
fn field_override() {
    let o = qfab(&["analyze", "apt-example", "--field", "F7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("field = F 7\n"));
}
