//! Runs every acceptance criterion and prints one line per criterion.

use std::io::Write;

use xclab_core::acceptance::{run_all, AcceptanceConfig, Status};

#[test]
fn all_criteria() {
    let results = run_all(&AcceptanceConfig::default());
    // Written to the raw handle so the lines show up even when libtest
    // captures output of passing tests.
    let mut err = std::io::stderr().lock();
    for r in &results {
        writeln!(err, "{}", r.line()).unwrap();
    }
    let passed = results.iter().filter(|r| r.status == Status::Pass).count();
    writeln!(err, "{passed}/{} criteria passed", results.len()).unwrap();
    drop(err);
    let failed: Vec<String> = results.iter().filter(|r| r.status != Status::Pass).map(|r| r.line()).collect();
    assert!(failed.is_empty(), "criteria not passing:\n{}", failed.join("\n"));
}
