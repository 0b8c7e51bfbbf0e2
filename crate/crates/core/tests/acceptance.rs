use vantage_core::acceptance::run_all;
use vantage_core::par::Exec;

#[test]
fn acceptance_suite() {
    let reports = run_all(Exec::Parallel);
    for r in &reports {
        println!("{r}");
    }
    let failed: Vec<u8> = reports.iter().filter(|r| !r.passed()).map(|r| r.id).collect();
    assert_eq!(reports.len(), 10);
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
