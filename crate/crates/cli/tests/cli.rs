use std::io::Write;
use std::process::{Command, Output, Stdio};

fn andor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_andor"))
        .args(args)
        .env_remove("ANDOR_MAX_ORACLE_N")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn counts_examples() {
    let out = andor(&["count", "(2,1,1,3,2,1)", "[3,1,1,3,2,2]", "(inf)", "(...)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "13\n11\n2\ninfinite\n");
}

#[test]
fn enumerate_lists_sorted_fixed_points() {
    let out = andor(&["enumerate", "(2,1,1,3,2,1)"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 13);
    assert!(lines.contains(&"000001110011"));
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted);
}

#[test]
fn enumerate_ring_keeps_the_given_node_order() {
    let out = andor(&["enumerate", "@&&&|&|||&&||"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 11);
    // every listed state must be a fixed point of the ring as written
    let ops: Vec<bool> = "&&&|&|||&&||".chars().map(|c| c == '|').collect();
    let n = ops.len();
    for line in text.lines() {
        let x: Vec<bool> = line.chars().map(|c| c == '1').collect();
        for i in 0..n {
            let (l, r) = (x[(i + n - 1) % n], x[(i + 1) % n]);
            let v = if ops[i] { l || r } else { l && r };
            assert_eq!(v, x[i], "{line}");
        }
    }
}

#[test]
fn json_lines_parse() {
    let out = andor(&["--json", "count", "(2,1)", "[2,2]!|"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let recs: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[0]["count"], "3");
    assert_eq!(recs[0]["kind"], "open");
    assert_eq!(recs[0]["n"], 5);
    assert_eq!(recs[1]["spec"], "[2,2]!|");
}

#[test]
fn oracle_agrees() {
    let out = andor(&["oracle", "[3,1,1,3,2,2]"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("AGREES"));
}

#[test]
fn check_small_sweep() {
    let out = andor(&["check", "--max-n", "12"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn bounds_and_sequences() {
    let out = andor(&["bounds", "4"]);
    assert_eq!(stdout(&out), "(9, 21)\n");
    let out = andor(&["bounds", "4", "--closed"]);
    assert_eq!(stdout(&out), "(5, 18)\n");
    let out = andor(&["seq", "fibonacci", "6"]);
    assert_eq!(stdout(&out), "1\n1\n2\n3\n5\n8\n13\n");
}

#[test]
fn batch_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_andor"))
        .arg("count")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"# header\n(1,1)\n\n[2,2,2,2] # ring\n(inf,1,inf)\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3\n7\n4\n");
}

#[test]
fn exit_codes() {
    assert_eq!(andor(&["count", "(1,0,1)"]).status.code(), Some(2));
    assert_eq!(andor(&["count", "(1,inf,1)"]).status.code(), Some(2));
    assert_eq!(andor(&["count", "[1,2,3]"]).status.code(), Some(2));
    assert_eq!(andor(&["enumerate", "(inf)"]).status.code(), Some(2));
    assert_eq!(andor(&["check", "--max-n", "64"]).status.code(), Some(3));
    let big = format!("({})", vec!["1"; 40].join(","));
    assert_eq!(andor(&["oracle", &big]).status.code(), Some(3));
    assert_eq!(andor(&["--inject-fault", "oracle", "(2,1)"]).status.code(), Some(4));
    assert_eq!(andor(&["--inject-fault", "check", "--max-n", "4"]).status.code(), Some(4));
}
