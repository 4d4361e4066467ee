//! Acceptance suite: runs every battery criterion at its pinned tolerance
//! and prints one pass/fail line per criterion. `cargo test --test
//! acceptance -- --nocapture` shows the table.

use obstk_core::verify::{run_criterion, CRITERION_COUNT};

fn check(id: usize) {
    let report = run_criterion(id);
    println!("{report}");
    assert!(report.pass, "{report}");
}

#[test]
fn criterion_01_treewidth_pins() {
    check(1);
}

#[test]
fn criterion_02_wall_pins() {
    check(2);
}

#[test]
fn criterion_03_array_properties() {
    check(3);
}

#[test]
fn criterion_04_clean_verdicts() {
    check(4);
}

#[test]
fn criterion_05_array_construction() {
    check(5);
}

#[test]
fn criterion_06_nine_strings() {
    check(6);
}

#[test]
fn criterion_07_padded_strand_families() {
    check(7);
}

#[test]
fn criterion_08_oracle_equivalence() {
    check(8);
}

#[test]
fn criterion_09_spike_family() {
    check(9);
}

#[test]
fn criterion_10_menger_consistency() {
    check(10);
}

#[test]
fn criterion_11_cluster_extraction() {
    check(11);
}

#[test]
fn criterion_12_walk_tassel() {
    check(12);
}

#[test]
fn criterion_13_td_verifier() {
    check(13);
}

#[test]
fn criterion_ids_cover_the_battery() {
    assert_eq!(CRITERION_COUNT, 13);
}
