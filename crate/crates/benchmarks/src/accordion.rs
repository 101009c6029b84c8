//! Cosine-wall channel benchmark with mesh-convergence sweep.
//!
//! Both walls of a periodic strip inject the tangential momentum wave
//! `Jx = J0 cos(Kx)` (see [`crate::reference`] for the exact solution the
//! flow relaxes to).  The wall closures place their effective boundary only
//! approximately at the wall, so the first row of cells — half a cell above
//! the bottom wall — is where their accuracy shows:
//!
//! ```text
//!                 exact J at the node     <- reference "exact"
//!   y = dx/2  o----o----o----o----o       first row of cells
//!                 wall data at the wall   <- reference "wall data"
//!   y = 0    ======================       Jx = J0 cos(Kx)
//! ```
//!
//! Two more references come from the Taylor analysis of the closure: the
//! momentum the closure itself predicts for the first row, truncated after
//! first order ("series, first order") or kept through second order in its
//! steady form ("series, second order"), with every derivative supplied by
//! the exact solution.  All errors are RMS over the first row, normalised
//! by the RMS magnitude of the exact momentum on that row; a sweep over
//! meshes then fits the convergence rate of the "exact" reference errors.

use boundary_schemes::{WallData, WallPass, WallScheme};
use lattice_core::moments::equilibrium_populations;
use lattice_core::{BoundaryPass, Edge, EdgeTags, PopulationField, SchemeParams, Simulation};
use taylor_analysis::{ClosureExpansion, ClosureKind, DerivativeJet, Field};

use crate::rate::fit_rate;
use crate::reference::AccordionSolution;
use crate::steady::{run_to_steady, SteadyReport};
use crate::{STEADY_CHECK_EVERY, STEADY_MAX_STEPS, STEADY_REL_TOL};

/// One cosine-wall run: geometry, drive, wall closure, relaxation rates.
#[derive(Debug, Clone)]
pub struct AccordionConfig {
    /// Cells along the wall; the cell count across follows from the aspect
    /// ratio and must come out whole.
    pub cells_x: usize,
    /// Domain length along the wall.
    pub length: f64,
    /// Wall separation.
    pub height: f64,
    /// Wall momentum amplitude `J0`.
    pub amplitude: f64,
    /// Wall closure applied on both walls.
    pub scheme: WallScheme,
    /// Relaxation rates `(s3, s4, s7, s8)`; the unit scales are acoustic,
    /// `dt = dx` (lambda = 1), at the standard equilibrium coefficients.
    pub rates: (f64, f64, f64, f64),
}

impl AccordionConfig {
    /// Acceptance geometry: `L = 2`, `h = 1`, `J0 = 1e-2`, rates
    /// `s3 = s4 = 1`, `s7 = 8/7`, `s8 = 1`.
    pub fn acceptance(cells_x: usize, scheme: WallScheme) -> Self {
        Self {
            cells_x,
            length: 2.0,
            height: 1.0,
            amplitude: 1e-2,
            scheme,
            rates: (1.0, 1.0, 8.0 / 7.0, 1.0),
        }
    }

    /// Mesh step `dx = L / cells_x`.
    pub fn dx(&self) -> f64 {
        self.length / self.cells_x as f64
    }
}

/// First-row momentum errors of one run, all RMS over the row and
/// normalised by the RMS exact momentum magnitude on the row, as
/// `(tangential, normal)` pairs.
#[derive(Debug, Clone, Copy)]
pub struct AccordionErrors {
    /// Cells along the wall.
    pub cells_x: usize,
    /// Mesh step of the run.
    pub mesh: f64,
    /// Against the wall data itself (distance `dx/2` ignored).
    pub versus_wall_data: (f64, f64),
    /// Against the closure's own first-order momentum series.
    pub versus_series_first: (f64, f64),
    /// Against the closure's second-order steady momentum series.
    pub versus_series_second: (f64, f64),
    /// Against the exact solution at the node — the discretisation error.
    pub versus_exact: (f64, f64),
    /// Against the exact solution, each component normalised by its own
    /// RMS instead of the momentum magnitude.
    pub self_relative: (f64, f64),
    /// How the steady state was reached.
    pub steady: SteadyReport,
}

/// Convergence sweep over a mesh sequence.
#[derive(Debug, Clone)]
pub struct AccordionSweep {
    /// Per-mesh errors, in the order the meshes were given.
    pub errors: Vec<AccordionErrors>,
    /// Fitted convergence rate of the tangential error against the exact
    /// solution.
    pub rate_jx: f64,
    /// Fitted convergence rate of the normal error against the exact
    /// solution.
    pub rate_jy: f64,
}

/// The closure kind whose Taylor expansion describes `scheme`.
fn closure_kind(scheme: &WallScheme, p: &SchemeParams) -> ClosureKind {
    match scheme {
        WallScheme::Classical => ClosureKind::Classical,
        WallScheme::FirstOrder => ClosureKind::first_order(p.alpha(), p.beta()),
        WallScheme::Generalized(gp) => ClosureKind::Corrected(gp.clone()),
    }
}

/// Evaluates a momentum jet at wall position `x`, feeding every term the
/// matching exact-solution derivative.
///
/// Momentum symbols are anchored on the wall, density symbols at the first
/// row node; time derivatives vanish on the steady solution and are
/// skipped.  Terms above `grade_cap` are dropped — that is how the
/// first-order reference truncates the series.
fn evaluate_jet(
    jet: &DerivativeJet,
    sol: &AccordionSolution,
    dx: f64,
    x: f64,
    grade_cap: usize,
) -> f64 {
    let mut acc = 0.0;
    for (grade, field, (a, bx, by), value) in jet.terms() {
        if grade > grade_cap || a > 0 {
            continue;
        }
        let y = match field {
            Field::Rho => 0.5 * dx,
            Field::Jx | Field::Jy => 0.0,
        };
        acc += value * dx.powi(grade as i32) * sol.derivative(field, bx, by, x, y);
    }
    acc
}

/// Runs one mesh to its steady state and measures the first-row errors.
///
/// # Panics
///
/// Panics when the aspect ratio does not yield a whole cell count across,
/// when the simulation cannot be built, or when the run hits the step cap.
pub fn run(cfg: &AccordionConfig) -> AccordionErrors {
    let dx = cfg.dx();
    let ny_exact = cfg.height / dx;
    let ny = ny_exact.round() as usize;
    assert!(
        (ny_exact - ny as f64).abs() < 1e-9 && ny >= 2,
        "aspect ratio must give a whole cell count across, got {ny_exact}"
    );
    let (s3, s4, s7, s8) = cfg.rates;
    let p = SchemeParams::new(dx, dx, -2.0, 1.0, s3, s4, s7, s8).expect("valid parameters");
    let sol = AccordionSolution::new(
        cfg.amplitude,
        cfg.length,
        cfg.height,
        p.viscosity(),
        p.c0_squared(),
    );

    // Start on the exact solution; the walls then carve in their own
    // boundary layer and the bulk re-adjusts to the discrete steady state.
    let field = PopulationField::from_fn(cfg.cells_x, ny, EdgeTags::channel(), |i, j| {
        let x = (i as f64 + 0.5) * dx;
        let y = (j as f64 + 0.5) * dx;
        equilibrium_populations(sol.rho(x, y), sol.jx(x, y), sol.jy(x, y), &p)
    })
    .expect("valid accordion field");

    let kap = sol.wavenumber();
    let j0 = cfg.amplitude;
    let wall_data = || WallData::new(move |s, _| j0 * (kap * s).cos(), |_, _| 0.0);
    let passes: Vec<Box<dyn BoundaryPass>> = vec![
        Box::new(WallPass::new(Edge::YLo, cfg.scheme.clone(), wall_data())),
        Box::new(WallPass::new(Edge::YHi, cfg.scheme.clone(), wall_data())),
    ];
    let mut sim = Simulation::new(p, field, passes).expect("valid accordion simulation");
    let steady = run_to_steady(&mut sim, STEADY_CHECK_EVERY, STEADY_REL_TOL, STEADY_MAX_STEPS);
    assert!(
        steady.converged,
        "accordion failed to reach a steady state in {} steps (rel change {})",
        steady.steps, steady.rel_change
    );

    // Taylor series of the first-row momentum, as the closure predicts it.
    let expansion =
        ClosureExpansion::new(&p, &closure_kind(&cfg.scheme, &p)).expect("closure expands");
    let series_x_raw = expansion.momentum_x().clone();
    let series_y_raw = expansion.momentum_y().clone();
    let series_x_steady = expansion.momentum_x_steady();
    let series_y_steady = expansion.momentum_y_steady();

    let lambda = p.lambda();
    let y0 = 0.5 * dx;
    let nx = cfg.cells_x;
    // Accumulated squared errors per reference, (tangential, normal).
    let mut sq = [[0.0_f64; 2]; 4];
    let mut sq_exact_mag = 0.0_f64;
    let mut sq_exact = [0.0_f64; 2];
    for i in 0..nx {
        let x = (i as f64 + 0.5) * dx;
        let (jx, jy) = sim.populations().momentum(i, 0, lambda);
        let exact = (sol.jx(x, y0), sol.jy(x, y0));
        let refs = [
            (j0 * (kap * x).cos(), 0.0),
            (
                evaluate_jet(&series_x_raw, &sol, dx, x, 1),
                evaluate_jet(&series_y_raw, &sol, dx, x, 1),
            ),
            (
                evaluate_jet(&series_x_steady, &sol, dx, x, 2),
                evaluate_jet(&series_y_steady, &sol, dx, x, 2),
            ),
            exact,
        ];
        for (slot, (rx, ry)) in refs.iter().enumerate() {
            sq[slot][0] += (jx - rx) * (jx - rx);
            sq[slot][1] += (jy - ry) * (jy - ry);
        }
        sq_exact_mag += exact.0 * exact.0 + exact.1 * exact.1;
        sq_exact[0] += exact.0 * exact.0;
        sq_exact[1] += exact.1 * exact.1;
    }
    let denom = (sq_exact_mag / nx as f64).sqrt();
    let pair = |slot: usize| -> (f64, f64) {
        (
            (sq[slot][0] / nx as f64).sqrt() / denom,
            (sq[slot][1] / nx as f64).sqrt() / denom,
        )
    };

    AccordionErrors {
        cells_x: nx,
        mesh: dx,
        versus_wall_data: pair(0),
        versus_series_first: pair(1),
        versus_series_second: pair(2),
        versus_exact: pair(3),
        self_relative: (
            (sq[3][0] / sq_exact[0]).sqrt(),
            (sq[3][1] / sq_exact[1]).sqrt(),
        ),
        steady,
    }
}

/// Runs `base` on each mesh of `meshes` and fits the convergence rates of
/// the errors against the exact solution.
pub fn sweep(base: &AccordionConfig, meshes: &[usize]) -> AccordionSweep {
    let errors: Vec<AccordionErrors> = meshes
        .iter()
        .map(|&cells_x| {
            run(&AccordionConfig {
                cells_x,
                ..base.clone()
            })
        })
        .collect();
    let samples = |pick: fn(&AccordionErrors) -> f64| -> Vec<(f64, f64)> {
        errors.iter().map(|e| (e.mesh, pick(e))).collect()
    };
    let rate_jx = fit_rate(&samples(|e| e.versus_exact.0));
    let rate_jy = fit_rate(&samples(|e| e.versus_exact.1));
    AccordionSweep {
        errors,
        rate_jx,
        rate_jy,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_coarse_classical_run_settles_and_reports_sane_errors() {
        let errors = run(&AccordionConfig::acceptance(8, WallScheme::Classical));
        assert!(errors.steady.converged, "coarse run must settle");
        assert_eq!(errors.cells_x, 8);
        for (label, (ex, ey)) in [
            ("wall data", errors.versus_wall_data),
            ("series first", errors.versus_series_first),
            ("series second", errors.versus_series_second),
            ("exact", errors.versus_exact),
        ] {
            assert!(
                ex.is_finite() && ey.is_finite() && ex >= 0.0 && ey >= 0.0,
                "{label} errors must be finite, got ({ex}, {ey})"
            );
        }
        // Only the exact solution is a fair yardstick on a coarse mesh: the
        // profile decays so fast off the wall that the wall-data reference
        // differs from the first-row momentum by more than the row signal.
        let (ex, ey) = errors.versus_exact;
        assert!(
            ex < 0.5 && ey < 0.5,
            "first-row momentum must track the exact solution, got ({ex}, {ey})"
        );
    }

    #[test]
    fn the_closure_series_beats_the_wall_data_as_a_reference() {
        // The wall data ignores the dx/2 offset entirely; the second-order
        // series accounts for it, so the measured distance must shrink.
        let errors = run(&AccordionConfig::acceptance(16, WallScheme::Classical));
        assert!(
            errors.versus_series_second.0 < 0.3 * errors.versus_wall_data.0,
            "series reference should sit much closer to the run: series {:?}, wall {:?}",
            errors.versus_series_second,
            errors.versus_wall_data
        );
    }

    #[test]
    fn aspect_ratios_that_do_not_tile_are_rejected() {
        let cfg = AccordionConfig {
            height: 0.73,
            ..AccordionConfig::acceptance(16, WallScheme::Classical)
        };
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run(&cfg)));
        assert!(outcome.is_err(), "non-tiling aspect ratio must be refused");
    }
}
