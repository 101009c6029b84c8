//! Full reconciliation of the printed coefficient tables against the
//! expansion engine.
//!
//! Every closed-form coefficient is evaluated at randomized admissible
//! relaxation draws and compared with the matching slot of the engine's
//! momentum expansion.  Six rows are *expected* to disagree: the printed
//! tables contain internal inconsistencies (pairs of lines that cannot both
//! hold), and the engine adjudicates each one.  Those adjudications are
//! frozen here by name so that any drift — a new disagreement, or an old
//! one silently disappearing — fails the suite.

use std::collections::BTreeSet;

use taylor_analysis::tables::{
    reconcile, reconcile_rows, rows, Printed, RowOutcome, TableRow, Verdict, DEFAULT_DRAWS,
};

/// Rows whose printed closed form loses its adjudication to the engine.
///
/// * `jy0_dy_rho_elim` — the steady normal equation repeats the raw
///   `-(dx/12)(alpha+4)` density-gradient coefficient, but time elimination
///   of the (confirmed) raw line cancels that term exactly.
/// * `jx1_dx_rho` — printed as a tangential `d_y rho` term, which parity
///   forbids; the engine produces `-(lambda dx/2)(4+alpha) d_x rho`.
/// * `beta1_xy` — the first-order constant 12 loses to the generalized
///   table's 11 (their `a = 1` reductions conflict).
/// * `gamma1_xy` — sign conflict with the generalized table; the
///   generalized sign wins.
/// * `theta2_tx` — sign conflict with the first-order table; the
///   first-order sign wins.
/// * `zeta2_xx` — factor `-1/2` conflict with the first-order table; the
///   first-order value wins.
const EXPECTED_FAILS: [&str; 6] = [
    "jy0_dy_rho_elim",
    "jx1_dx_rho",
    "beta1_xy",
    "gamma1_xy",
    "theta2_tx",
    "zeta2_xx",
];

/// Slots the source tables leave without a closed form.
const EXPECTED_INFO: [&str; 3] = ["eta1_tt", "eta2_tt", "eta2_xx"];

fn names_with(outcomes: &[RowOutcome], verdict: Verdict) -> BTreeSet<&'static str> {
    outcomes.iter().filter(|o| o.verdict == verdict).map(|o| o.name).collect()
}

#[test]
fn every_printed_coefficient_reconciles_or_carries_an_adjudication() {
    let outcomes = reconcile(42, DEFAULT_DRAWS);

    let fails = names_with(&outcomes, Verdict::Fail);
    let expected: BTreeSet<&str> = EXPECTED_FAILS.iter().copied().collect();
    assert_eq!(
        fails, expected,
        "the set of adjudicated disagreements must not drift"
    );

    let infos = names_with(&outcomes, Verdict::Info);
    let expected_info: BTreeSet<&str> = EXPECTED_INFO.iter().copied().collect();
    assert_eq!(infos, expected_info, "info rows must not drift");

    for o in &outcomes {
        if o.verdict == Verdict::Fail {
            assert!(
                o.note.is_some(),
                "row {} disagrees with the engine but has no written adjudication",
                o.name
            );
        }
    }

    let pass = outcomes.iter().filter(|o| o.verdict == Verdict::Pass).count();
    let graded = outcomes.iter().filter(|o| o.verdict != Verdict::Info).count();
    assert!(
        pass as f64 >= 0.9 * graded as f64,
        "pass rate {pass}/{graded} fell below 90%"
    );
}

#[test]
fn reconciliation_is_deterministic_for_a_fixed_seed() {
    let a = reconcile(7, 4);
    let b = reconcile(7, 4);
    assert_eq!(a.len(), b.len(), "same seed must grade the same rows");
    for (x, y) in a.iter().zip(b.iter()) {
        assert_eq!(x.name, y.name, "row order must be stable");
        assert_eq!(x.verdict, y.verdict, "verdict of {} must be reproducible", x.name);
        assert!(
            (x.max_abs_diff - y.max_abs_diff).abs() == 0.0,
            "diff of {} must be bit-reproducible",
            x.name
        );
    }
}

#[test]
fn a_perturbed_closed_form_is_flagged() {
    // Sensitivity check: corrupt one known-good closed form and make sure
    // the comparison machinery actually catches it.
    let mut corrupted: Vec<TableRow> = rows()
        .into_iter()
        .filter(|r| r.name == "eta0_tt" || r.name == "theta0_xy")
        .collect();
    assert_eq!(corrupted.len(), 2, "both probe rows exist");
    for row in &mut corrupted {
        if row.name == "eta0_tt" {
            // Printed value is 1/(8 lambda^2); misprint the 8 as a 6.
            row.printed = Printed::Value(|d| 1.0 / (6.0 * d.lambda * d.lambda));
        }
    }
    let outcomes = reconcile_rows(&corrupted, 42, 4);
    let eta = outcomes.iter().find(|o| o.name == "eta0_tt").expect("graded");
    let theta = outcomes.iter().find(|o| o.name == "theta0_xy").expect("graded");
    assert_eq!(eta.verdict, Verdict::Fail, "misprinted coefficient must be flagged");
    assert_eq!(theta.verdict, Verdict::Pass, "untouched coefficient still passes");
}
