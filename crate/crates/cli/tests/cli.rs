use std::io::Write;
use std::process::{Command, Output, Stdio};

fn vantage(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vantage")).args(args).output().unwrap()
}

fn piped(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_vantage"))
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
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(key).map(|r| r.split_whitespace().next().unwrap_or("").to_string()))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
}

#[test]
fn formula_values() {
    let o = vantage(&["formula", "max", "5", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "46");
    assert_eq!(stdout(&vantage(&["formula", "velo", "8"])).trim(), "94");
    assert_eq!(stdout(&vantage(&["formula", "parallel-lines", "1", "3", "1"])).trim(), "16");
    let t = stdout(&vantage(&["formula", "table", "--csv"]));
    assert!(t.lines().any(|l| l == "Max,6,18,46,101,197,351"), "{t}");
    assert_eq!(vantage(&["formula", "nonsense", "1"]).status.code(), Some(3));
}

#[test]
fn construct_pipes_into_count() {
    let gap = vantage(&["construct", "gap1d", "-n", "8", "-k", "20"]);
    assert!(gap.status.success());
    let o = piped(&["count-regions"], &stdout(&gap));
    assert_eq!(field(&stdout(&o), "regions"), "20");
    let o = piped(&["count-regions", "-", "--summary-json"], &stdout(&gap));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["regions"], 20);
}

#[test]
fn written_configurations_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for p in [&a, &b] {
        let o = vantage(&["construct", "near-max", "-n", "6", "-k", "2", "--seed", "5", "-o", p.to_str().unwrap()]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let parsed = vantage_core::geometry::parse_config(&text).unwrap();
    assert_eq!(parsed.to_text(), text);
    let o = vantage(&["count-regions", a.to_str().unwrap()]);
    assert_eq!(field(&stdout(&o), "regions"), "99");
}

#[test]
fn sphere_commands() {
    let ico = vantage(&["construct", "platonic", "icosahedron"]);
    assert!(stdout(&ico).starts_with("dim=3 field=Q(sqrt5) sphere=1"));
    let o = piped(&["count-sphere"], &stdout(&ico));
    assert_eq!(field(&stdout(&o), "regions"), "240");
    let t = stdout(&vantage(&["platonic-table", "--csv"]));
    assert!(t.lines().any(|l| l == "cube,8,13,96,646"), "{t}");
}

#[test]
fn orderings() {
    let cfg = "dim=1 field=Q sphere=0\n0\n10\n";
    let o = piped(&["ordering", "--from", "1", "--and", "3"], cfg);
    assert_eq!(stdout(&o).trim(), "1 2");
    let o = piped(&["ordering", "--from", "1", "--and", "3"], "dim=1 field=Q sphere=0\n0\n4\n");
    assert_eq!(stdout(&o).trim(), "{1 2}");
    let o = piped(&["ordering", "--from", "-1/2"], "dim=1 field=Q sphere=0\n0\n4\n-2\n");
    assert_eq!(stdout(&o).trim(), "1 3 2");
}

#[test]
fn two_vantage_on_a_line() {
    let cfg = "dim=2 field=Q sphere=0\n1 0\n2 0\n3 0\n4 0\n5 0\n";
    let o = piped(&["two-vantage", "-", "--budget", "50000", "--seed", "3", "--collinear-checks"], cfg);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(field(&out, "distinct orderings"), "16");
    assert_eq!(field(&out, "violations"), "0");
    let o = piped(&["two-vantage", "-", "--budget", "100", "--seed", "3", "--collinear-checks"], "dim=2 field=Q sphere=0\n0 0\n1 0\n0 1\n");
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn search_store_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("w.jsonl");
    let s = store.to_str().unwrap();
    let one = vantage(&["--jobs", "1", "search-achievable", "-n", "4", "--budget", "4000", "--seed", "2"]);
    let many = vantage(&["--jobs", "4", "search-achievable", "-n", "4", "--budget", "4000", "--seed", "2", "--store", s]);
    let achieved = |o: &Output| stdout(o).lines().find(|l| l.starts_with("achieved")).map(String::from);
    assert_eq!(achieved(&one), achieved(&many));
    assert!(achieved(&one).is_some());
    let o = vantage(&["report", "--store", s]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("61.53%"));

    let text = std::fs::read_to_string(&store).unwrap();
    std::fs::write(&store, text.replacen("\\n", "7\\n", 2)).unwrap();
    let o = vantage(&["report", "--store", s]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    assert_eq!(vantage(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(vantage(&["count-regions", "/nonexistent/file"]).status.code(), Some(3));
    assert_eq!(piped(&["count-regions"], "dim=2 field=Q sphere=0\n1 2 3\n").status.code(), Some(3));
    assert_eq!(vantage(&["construct", "free", "-n", "3"]).status.code(), Some(3));
    let o = vantage(&["verify", "--criterion", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("PASS"));
    assert_eq!(vantage(&["verify", "--criterion", "11"]).status.code(), Some(3));
}
