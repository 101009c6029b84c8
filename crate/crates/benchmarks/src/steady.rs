//! Fixed-point driver for steady benchmark runs.
//!
//! Both benchmark flows are steady states of the discrete scheme; the
//! driver advances a [`Simulation`] in blocks and watches the cell momentum
//! until one block changes it by less than a relative tolerance:
//!
//! ```text
//!   max_cells |j(t + block) - j(t)|  <=  tol * max_cells |j(t + block)|
//! ```
//!
//! The max norm runs over both momentum components of every cell.  A field
//! whose momentum does not move at all (a rest state) counts as steady even
//! though the right-hand side is zero.

use lattice_core::Simulation;

/// Outcome of [`run_to_steady`].
#[derive(Debug, Clone, Copy)]
pub struct SteadyReport {
    /// Steps taken by the driver (multiple of the check interval).
    pub steps: u64,
    /// Last observed relative momentum change per check interval.
    pub rel_change: f64,
    /// Whether the tolerance was met before the step cap.
    pub converged: bool,
}

/// Advances `sim` until the momentum field stops moving.
///
/// Checks every `check_every` steps against `rel_tol`, giving up after
/// `max_steps`.  The caller decides whether a non-converged report is an
/// error; the field is left in its final state either way.
pub fn run_to_steady(
    sim: &mut Simulation,
    check_every: u64,
    rel_tol: f64,
    max_steps: u64,
) -> SteadyReport {
    assert!(check_every > 0, "check interval must be positive");
    let lambda = sim.params().lambda();
    let mut prev = sim.populations().clone();
    let mut steps = 0;
    let mut rel = f64::INFINITY;
    while steps < max_steps {
        sim.advance(check_every);
        steps += check_every;
        let (max_j, max_dj) = sim.populations().momentum_change(&prev, lambda);
        if !max_j.is_finite() || !max_dj.is_finite() {
            // A blown-up field must never read as converged.
            return SteadyReport {
                steps,
                rel_change: f64::INFINITY,
                converged: false,
            };
        }
        // 0/0 is a rest state holding still: steady by any standard.
        rel = if max_dj == 0.0 { 0.0 } else { max_dj / max_j };
        if rel <= rel_tol {
            return SteadyReport {
                steps,
                rel_change: rel,
                converged: true,
            };
        }
        prev.clone_from(sim.populations());
    }
    SteadyReport {
        steps,
        rel_change: rel,
        converged: false,
    }
}
