//! Acceptance suite: every exhaustive desk-scale criterion, one test and one
//! printed pass/fail line per criterion. All checks are exact; a criterion
//! passes only with zero violations at its stated bounds.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use hypercr::verify::{
    desk_counting_equivalence, desk_decomposition_identities, desk_digraph_checks,
    desk_edge_size_recovery, desk_incidence_equivalence, desk_interpolation,
    desk_local_bijective_agreement, desk_refinement_table, desk_slice_identity,
    desk_tree_dp_bridge, desk_triangularity, CheckReport, DeskConfig,
};

fn config() -> DeskConfig {
    // All cores; the fixed seed keeps the randomized triples reproducible.
    DeskConfig { workers: 0, seed: 1 }
}

fn assert_criterion(number: &str, report: CheckReport) {
    let verdict = if report.ok { "PASS" } else { "FAIL" };
    println!(
        "criterion {number} [{}]: {verdict} — {}",
        report.check,
        report.detail.as_deref().unwrap_or("")
    );
    assert!(
        report.ok,
        "criterion {number} ({}) failed: {}",
        report.check,
        report.detail.unwrap_or_default()
    );
}

#[test]
fn criterion_1_refinement_round_table() {
    assert_criterion("1", desk_refinement_table());
}

#[test]
fn criterion_2_incidence_equivalence_and_round_identity() {
    assert_criterion("2", desk_incidence_equivalence(&config()));
}

#[test]
fn criterion_3_decomposition_identities() {
    assert_criterion("3", desk_decomposition_identities(&config()));
}

#[test]
fn criterion_4_triangularity_and_diagonals() {
    assert_criterion("4", desk_triangularity());
}

#[test]
fn criterion_5_edge_size_recovery_round_trip() {
    assert_criterion("5", desk_edge_size_recovery());
}

#[test]
fn criterion_6_counting_equivalence_sweeps() {
    assert_criterion("6", desk_counting_equivalence(&config()));
}

#[test]
fn criterion_7_interpolation_checks() {
    assert_criterion("7", desk_interpolation(&config()));
}

#[test]
fn criterion_8_digraph_checks() {
    assert_criterion("8", desk_digraph_checks(&config()));
}

#[test]
fn criterion_9_tree_dp_and_incidence_bridge() {
    assert_criterion("9", desk_tree_dp_bridge(&config()));
}

#[test]
fn supplement_bounded_slice_identity() {
    assert_criterion("S1", desk_slice_identity());
}

#[test]
fn supplement_local_bijective_agreement() {
    assert_criterion("S2", desk_local_bijective_agreement());
}
