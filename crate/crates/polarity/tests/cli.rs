use std::io::Write;
use std::process::{Command, Output, Stdio};

use polarity::gen::{random_p4_sparse, rng};
use polarity::obstructions::Catalog;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_polarity"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn recognize_plain_and_json() {
    let o = run(&["recognize"], "A_\n");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "cograph: yes\nsparse: yes\nextendible: yes\n");
    let o = run(&["recognize", "--json"], "A_\n");
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["p4_sparse"], true);
    // P5 is neither, and says why
    let o = run(&["recognize", "--json"], "Dhc\nDQo\n");
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["cograph"], false);
}

#[test]
fn edge_list_input() {
    let o = run(&["recognize", "--format", "edgelist"], "2 1\n0 1\n");
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("cograph: yes"));
}

#[test]
fn bad_input_exits_2() {
    let o = run(&["recognize"], "zz\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("graph6"));
    // C5 with a pendant P3 is outside both classes
    let o = run(&["max", "--property", "MP"], "Ghe?GC\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not P4-sparse or P4-extendible"));
}

#[test]
fn max_examples() {
    let o = run(&["max", "--property", "MU", "--verify"], "Dhc\n");
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("size 4"), "{s}");
    assert!(s.contains("verified"));
    let o = run(&["max", "--property", "MC", "--json"], "Dhc\n");
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["size"], 2);
}

#[test]
fn max_verify_random_sparse() {
    let mut r = rng(31);
    let g6: String = (0..5).map(|_| random_p4_sparse(10, &mut r).to_graph6() + "\n").collect();
    for p in ["MP", "MS", "McU", "MM"] {
        let o = run(&["max", "--property", p, "--verify"], &g6);
        assert!(o.status.success(), "{p}: {}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(stdout(&o).matches("verified").count(), 5);
    }
}

#[test]
fn check2polar_examples() {
    let cat = Catalog::builtin();
    let f26 = cat.get("F26").unwrap().graph.to_graph6();
    let o = run(&["check2polar"], &format!("{f26}\n"));
    assert!(stdout(&o).starts_with("NOT 2-polar: contains F26"), "{}", stdout(&o));
    let f13 = cat.get("F13").unwrap().graph.to_graph6();
    let o = run(&["check2polar", "--json"], &format!("{f13}\n"));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["two_polar"], false);
    assert_eq!(v["obstruction"], "F13");
    let k33 = polarity::Graph::complete_bipartite(3, 3).to_graph6();
    let o = run(&["check2polar"], &format!("{k33}\n"));
    assert!(stdout(&o).starts_with("2-polar"), "{}", stdout(&o));
}

#[test]
fn catalog_verify_both_families() {
    let o = run(&["catalog-verify"], "");
    assert!(o.status.success());
    assert!(stdout(&o).contains("50 P4-sparse, 82 P4-extendible, OK"), "{}", stdout(&o));
    let o = run(&["catalog-verify", "--family", "2,1"], "");
    assert!(o.status.success());
    assert!(stdout(&o).contains("9 P4-sparse"), "{}", stdout(&o));
}

#[test]
fn tampered_catalog_fails_and_names_entry() {
    let text = Catalog::builtin().to_text();
    let f1 = Catalog::builtin().get("F1").unwrap().g6.clone();
    // K7 is 2-polar, so F1 stops being an obstruction
    let bad = text.replacen(&format!(" {f1} "), &format!(" {} ", polarity::Graph::complete(7).to_graph6()), 1);
    assert_ne!(bad, text);
    let path = std::env::temp_dir().join(format!("polarity-tampered-{}.txt", std::process::id()));
    std::fs::write(&path, bad).unwrap();
    let o = run(&["catalog-verify", "--catalog", path.to_str().unwrap()], "");
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("F1"), "{}", stdout(&o));
}

#[test]
fn mine_order_7_and_cap() {
    let o = run(&["mine", "-n", "7"], "");
    assert!(o.status.success());
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines.len(), 11, "{s}");
    assert_eq!(lines[10], "order 7: 10 minimal obstructions");
    for l in &lines[..10] {
        assert!(l.split_whitespace().next().unwrap().contains('F'), "{l}");
    }
    let o = run(&["mine", "-n", "10"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tree_round_trips_through_text() {
    let o = run(&["tree", "--kind", "ps"], "Dhc\n");
    assert_eq!(o.status.code(), Some(2), "C5 has no ps-tree");
    let o = run(&["tree"], "Dhc\n");
    assert!(o.status.success());
    let t = polarity::decomposition::DecompTree::from_text(&stdout(&o)).unwrap();
    assert_eq!(t.to_graph(), polarity::Graph::cycle(5));
}
