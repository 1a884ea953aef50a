use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn sofai(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sofai")).args(args).env_remove("S1_ENDPOINT").output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = sofai(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn gen_bench_report_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let d = |p: &str| dir.path().join(p).to_str().unwrap().to_owned();
    ok(&["gen", "--n", "5,6", "--p", "0.5", "--mix", "50,50", "--count", "4", "--seed", "3", "--out", &d("ds")]);
    assert_eq!(fs::read_dir(d("ds")).unwrap().count(), 9);

    let table = ok(&[
        "bench",
        "--dataset",
        &d("ds"),
        "--solver",
        "MC-S1-I3",
        "--time-limit",
        "5",
        "--trials",
        "2",
        "--out",
        &d("r.jsonl"),
        "--mock-strategy",
        "exact",
    ]);
    assert!(table.contains("MC-S1-I3"));
    assert_eq!(fs::read_to_string(d("r.jsonl")).unwrap().lines().count(), 16);

    let csv = ok(&["report", "--in", &d("r.jsonl"), "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,p,mix,solver,success %,avg time s,N");
    assert_eq!(lines.len(), 3);
    // The exact mock solves SAT instances and declares UNSAT ones NOT SOLVABLE,
    // which MC-S1 does not trust: half of each cell.
    assert!(lines[1].starts_with("5,0.5,\"50,50\",MC-S1-I3,50.0,"), "{}", lines[1]);
}

#[test]
fn solve_reads_k_from_file_or_flag() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.col");
    fs::write(&path, "c k 3\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n").unwrap();
    let p = path.to_str().unwrap();
    let out = ok(&["solve", "--solver", "S2", "--instance", p]);
    assert!(out.starts_with("SAT\n(1 1)"));
    assert_eq!(out.lines().count(), 6);
    assert_eq!(ok(&["solve", "--solver", "SOFAI-v2", "--instance", p, "--k", "2"]), "UNSAT\n");
}

#[test]
fn bad_input_is_reported_not_panicked() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.col");
    fs::write(&path, "p edge 2 1\ne 1 1\n").unwrap();
    let out = sofai(&["solve", "--solver", "S2", "--instance", path.to_str().unwrap(), "--k", "2"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));

    let out = sofai(&["solve", "--solver", "S9", "--instance", "x"]);
    assert!(!out.status.success());
    assert!(!Path::new("x").exists());
}
