use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use vantage_core::formulas::max_orderings;
use vantage_core::par::Exec;
use vantage_core::search::*;

fn run(n: usize, budget: u64, seed: u64, strategy: Strategy, exec: Exec) -> SearchRun {
    search_achievable(n, budget, seed, strategy, &SearchParams::default(), exec).unwrap()
}

fn keys(r: &SearchRun) -> BTreeSet<u64> {
    r.achieved.keys().copied().collect()
}

#[test]
fn small_n_sets() {
    let r3 = run(3, 5_000, 1, Strategy::Mixed, Exec::Parallel);
    assert_eq!(keys(&r3), BTreeSet::from([4, 6]));
    let c = coverage_report(&r3).unwrap();
    assert_eq!((c.min, c.max, c.percentage().as_str()), (4, 6, "66.66%"));
    let r4 = run(4, 20_000, 1, Strategy::Mixed, Exec::Parallel);
    let want: BTreeSet<u64> = (6..=18).filter(|k| ![9, 11, 13, 14, 15].contains(k)).collect();
    assert_eq!(keys(&r4), want);
    assert_eq!(coverage_report(&r4).unwrap().percentage(), "61.53%");
    assert_eq!(missing(&r4), vec![9, 11, 13, 14, 15]);
    assert!(reverify(&r4).is_empty());
}

#[test]
fn five_points_cover_most_values() {
    let r = run(5, 20_000, 2, Strategy::Mixed, Exec::Parallel);
    let c = coverage_report(&r).unwrap();
    assert_eq!((c.min, c.max, c.interval), (8, 46, 39));
    assert!(c.fraction >= 0.61, "{}", c.percentage());
    assert!(reverify(&r).is_empty());
}

#[test]
fn degenerate_pair() {
    let r = run(2, 100, 0, Strategy::Uniform, Exec::Sequential);
    let c = coverage_report(&r).unwrap();
    assert_eq!((c.min, c.max, c.percentage().as_str()), (2, 2, "100.00%"));
}

#[test]
fn deterministic_across_execution_modes() {
    let a = run(5, 3_000, 9, Strategy::Mixed, Exec::Parallel);
    let b = run(5, 3_000, 9, Strategy::Mixed, Exec::Sequential);
    assert_eq!(a.achieved, b.achieved);
    let c = run(5, 3_000, 10, Strategy::Uniform, Exec::Parallel);
    assert!(!c.achieved.is_empty());
}

#[test]
fn structured_candidates_fill_both_end_ranges() {
    // at n = 3 the top range would contain 5, which no triangle attains
    let r3 = run(3, 0, 4, Strategy::Structured, Exec::Parallel);
    assert_eq!(keys(&r3), BTreeSet::from([4, 6]));
    for n in 4..=10usize {
        let r = run(n, 0, 4, Strategy::Structured, Exec::Parallel);
        let m = max_orderings(n as u64, 2).to_u64().unwrap();
        let low = (2 * n as u64 - 2)..=((n * n - n + 2) / 2) as u64;
        let high = (m - n as u64 / 2)..=m;
        for k in low.chain(high) {
            assert!(r.achieved.contains_key(&k), "n={n} k={k}");
        }
        assert!(reverify(&r).is_empty());
    }
}

#[test]
fn witness_store_round_trip_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("witnesses.jsonl");
    let r4 = run(4, 2_000, 1, Strategy::Mixed, Exec::Parallel);
    let r5 = run(5, 2_000, 1, Strategy::Mixed, Exec::Parallel);
    assert_eq!(append_to_store(&path, &r4).unwrap(), r4.achieved.len());
    append_to_store(&path, &r5).unwrap();
    let rep = verify_witness_store(&path).unwrap();
    assert_eq!(rep.records, r4.achieved.len() + r5.achieved.len());
    assert!(rep.mismatches.is_empty(), "{:?}", rep.mismatches);
    let table = report_from_store(&path, false).unwrap();
    assert!(table.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["4", "6", "18", "8", "13", "61.53%"]), "{table}");
    let csv = report_from_store(&path, true).unwrap();
    assert!(csv.lines().any(|l| l == "4,6,18,8,13,61.53%"));

    // change one coordinate of the first witness
    let text = std::fs::read_to_string(&path).unwrap();
    let mut recs = load_store(&path).unwrap();
    let cfg = recs[0].config.clone();
    let mut lines: Vec<String> = cfg.lines().map(String::from).collect();
    lines[1] = lines[1]
        .split_whitespace()
        .enumerate()
        .map(|(i, x)| if i == 0 { format!("{x}1") } else { x.to_string() })
        .collect::<Vec<_>>()
        .join(" ");
    recs[0].config = lines.join("\n") + "\n";
    let tampered: String = recs.iter().map(|r| serde_json::to_string(r).unwrap() + "\n").collect();
    assert_ne!(tampered, text);
    std::fs::write(&path, tampered).unwrap();
    let rep = verify_witness_store(&path).unwrap();
    assert_eq!(rep.mismatches.len(), 1);
    assert_eq!(rep.mismatches[0].record, 1);
}

#[test]
fn unreadable_store() {
    assert!(verify_witness_store(std::path::Path::new("/nonexistent/store.jsonl")).is_err());
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.jsonl");
    std::fs::write(&path, "{not json}\n").unwrap();
    assert!(verify_witness_store(&path).is_err());
}
