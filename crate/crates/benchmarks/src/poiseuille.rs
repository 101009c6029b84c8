//! Pressure-driven channel benchmark.
//!
//! A channel of `nx x ny` cells runs between two still walls; the open ends
//! hold the density at `1 +- delta_p / c0^2`:
//!
//! ```text
//!    y=H  =================================   wall (closure under test)
//!         p+dp  -->  -->  -->  -->    p-dp
//!         p+dp  -->  -->  -->  -->    p-dp
//!    y=0  =================================   wall (closure under test)
//!         x=0                          x=L
//! ```
//!
//! The steady solution of the continuous problem is the parabola
//! `Jx = A y (H - y)` with `A = delta_p / (nu L)` (the end pressures sit on
//! the channel mouths at `x = 0` and `x = L`, half a cell outside the
//! extreme columns, so the gradient is `-2 delta_p / L`).  For the right
//! relaxation/closure loci the *discrete* steady state is that parabola with
//! roots exactly half a cell outside the walls — to rounding, not merely to
//! truncation order.  The harness therefore fits `A` by least squares over
//! all cells and reports the worst deviation from the fit, normalised by
//! the profile peak; on-locus runs sit below 1e-8, off-locus runs show
//! their `O(dx^2)` defect clearly.

use boundary_schemes::{PressurePass, WallPass, WallScheme};
use lattice_core::moments::equilibrium_populations;
use lattice_core::{BoundaryPass, Edge, EdgeTags, PopulationField, SchemeParams, Simulation};

use crate::steady::{run_to_steady, SteadyReport};
use crate::{STEADY_CHECK_EVERY, STEADY_MAX_STEPS, STEADY_REL_TOL};

/// One channel run: grid, drive strength, wall closure, scheme parameters.
#[derive(Debug, Clone)]
pub struct PoiseuilleConfig {
    /// Cells along the channel.
    pub nx: usize,
    /// Cells across the channel.
    pub ny: usize,
    /// Half the end-to-end pressure difference; the ends are set to
    /// `1 +- delta_p / c0^2` in density.
    pub delta_p: f64,
    /// Wall closure applied on both walls.
    pub scheme: WallScheme,
    /// Mesh and relaxation parameters.
    pub params: SchemeParams,
}

impl PoiseuilleConfig {
    /// The default drive used by the acceptance runs.
    pub const DEFAULT_DELTA_P: f64 = 1e-5;

    /// Acceptance-sized channel (`32 x 16`) for `scheme` at `params`.
    pub fn acceptance(scheme: WallScheme, params: SchemeParams) -> Self {
        Self {
            nx: 32,
            ny: 16,
            delta_p: Self::DEFAULT_DELTA_P,
            scheme,
            params,
        }
    }
}

/// Measured outcome of a channel run.
#[derive(Debug, Clone, Copy)]
pub struct PoiseuilleReport {
    /// Least-squares amplitude `A` of the fitted parabola `A y (H - y)`.
    pub amplitude: f64,
    /// Continuum amplitude `delta_p / (nu L)`.
    pub amplitude_theory: f64,
    /// Worst deviation from the fitted parabola over all cells, relative to
    /// the tallest fitted profile value.
    pub max_rel_dev: f64,
    /// Largest absolute cross-channel momentum (zero for the exact flow).
    pub max_abs_transverse: f64,
    /// How the steady state was reached.
    pub steady: SteadyReport,
}

/// Runs the channel to its steady state and fits the parabola.
///
/// # Panics
///
/// Panics when the field or simulation cannot be built from the config, or
/// when the run hits the step cap before reaching the steady tolerance.
pub fn run(cfg: &PoiseuilleConfig) -> PoiseuilleReport {
    let p = cfg.params;
    let c0sq = p.c0_squared();
    let field = PopulationField::from_fn(cfg.nx, cfg.ny, EdgeTags::pressure_channel(), |_, _| {
        equilibrium_populations(1.0, 0.0, 0.0, &p)
    })
    .expect("valid channel field");
    // Wall passes come last so the closure under test owns the corner cells.
    let passes: Vec<Box<dyn BoundaryPass>> = vec![
        Box::new(PressurePass::new(Edge::XLo, 1.0 + cfg.delta_p / c0sq)),
        Box::new(PressurePass::new(Edge::XHi, 1.0 - cfg.delta_p / c0sq)),
        Box::new(WallPass::still(Edge::YLo, cfg.scheme.clone())),
        Box::new(WallPass::still(Edge::YHi, cfg.scheme.clone())),
    ];
    let mut sim = Simulation::new(p, field, passes).expect("valid channel simulation");
    let steady = run_to_steady(&mut sim, STEADY_CHECK_EVERY, STEADY_REL_TOL, STEADY_MAX_STEPS);
    assert!(
        steady.converged,
        "channel failed to reach a steady state in {} steps (rel change {})",
        steady.steps, steady.rel_change
    );

    let (dx, lambda) = (p.dx(), p.lambda());
    let height = cfg.ny as f64 * dx;
    let length = cfg.nx as f64 * dx;
    // Parabola weight of each row: w(y) = y (H - y) at the cell node.
    let w: Vec<f64> = (0..cfg.ny)
        .map(|j| {
            let y = (j as f64 + 0.5) * dx;
            y * (height - y)
        })
        .collect();

    let f = sim.populations();
    let (mut num, mut den) = (0.0, 0.0);
    let mut max_abs_transverse = 0.0_f64;
    for j in 0..cfg.ny {
        for i in 0..cfg.nx {
            let (jx, jy) = f.momentum(i, j, lambda);
            num += w[j] * jx;
            den += w[j] * w[j];
            max_abs_transverse = max_abs_transverse.max(jy.abs());
        }
    }
    let amplitude = num / den;

    let tallest = w.iter().fold(0.0_f64, |a, &v| a.max(v)) * amplitude.abs();
    let mut max_dev = 0.0_f64;
    for j in 0..cfg.ny {
        for i in 0..cfg.nx {
            let (jx, _) = f.momentum(i, j, lambda);
            max_dev = max_dev.max((jx - amplitude * w[j]).abs());
        }
    }

    PoiseuilleReport {
        amplitude,
        amplitude_theory: cfg.delta_p / (p.viscosity() * length),
        max_rel_dev: max_dev / tallest,
        max_abs_transverse,
        steady,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use boundary_schemes::{classical_quartic_sigma7, GeneralizedParams};

    /// Exactness bound for on-locus runs; limited by the steady tolerance,
    /// not by the schemes.
    const EXACT_TOL: f64 = 1e-8;

    fn small(scheme: WallScheme, params: SchemeParams) -> PoiseuilleConfig {
        PoiseuilleConfig {
            nx: 16,
            ny: 8,
            delta_p: PoiseuilleConfig::DEFAULT_DELTA_P,
            scheme,
            params,
        }
    }

    #[test]
    fn classical_walls_on_the_quartic_locus_give_an_exact_parabola() {
        // sigma4 = 1/2 and sigma4 sigma7 = 3/16: s4 = 1, s7 = 8/7.
        let sigma7 = classical_quartic_sigma7(-2.0, 1.0, 0.5).expect("locus exists");
        assert!((sigma7 - 3.0 / 8.0).abs() < 1e-15, "locus sanity");
        let params = SchemeParams::standard(1.0, 1.0, 8.0 / 7.0, 1.0).unwrap();
        let report = run(&small(WallScheme::Classical, params));
        assert!(
            report.max_rel_dev < EXACT_TOL,
            "on-locus profile must be a parabola to rounding, got {}",
            report.max_rel_dev
        );
        assert!(
            report.max_abs_transverse < 1e-12,
            "cross-channel momentum must vanish, got {}",
            report.max_abs_transverse
        );
        let rel_amp = (report.amplitude / report.amplitude_theory - 1.0).abs();
        assert!(
            rel_amp < 1e-3,
            "fitted amplitude should track delta_p / (nu L), off by {rel_amp}"
        );
    }

    #[test]
    fn classical_walls_off_the_locus_show_their_truncation_defect() {
        // Same viscosity, sigma7 off the locus: s7 = 4/3 gives sigma7 = 1/4.
        let params = SchemeParams::standard(1.0, 1.0, 4.0 / 3.0, 1.0).unwrap();
        let report = run(&small(WallScheme::Classical, params));
        assert!(
            report.max_rel_dev > 1e-6,
            "off-locus run should visibly bend the parabola, got {}",
            report.max_rel_dev
        );
    }

    #[test]
    fn first_order_walls_are_exact_at_sigma4_one_quarter() {
        // sigma4 = 1/4: s4 = 4/3; sigma7 is free for this closure.
        let params = SchemeParams::standard(1.0, 4.0 / 3.0, 8.0 / 7.0, 1.0).unwrap();
        let report = run(&small(WallScheme::FirstOrder, params));
        assert!(
            report.max_rel_dev < EXACT_TOL,
            "first-order closure at sigma4 = 1/4 must be exact, got {}",
            report.max_rel_dev
        );
    }

    #[test]
    fn generalized_walls_on_their_locus_are_exact_away_from_the_classical_point() {
        // a5 = -1 moves the locus to sigma7 = 5/16 (s7 = 16/13) at
        // sigma4 = 1/2; the artifact-free weights at alpha = -2, beta = 1
        // are k2 = 4, k5 = k6 = 1.
        let gp = GeneralizedParams {
            a2: -1.0,
            a5: -1.0,
            a6: -1.0,
            k2: 4.0,
            k5: 1.0,
            k6: 1.0,
        };
        let params = SchemeParams::standard(1.0, 1.0, 16.0 / 13.0, 1.0).unwrap();
        let report = run(&small(WallScheme::Generalized(gp), params));
        assert!(
            report.max_rel_dev < EXACT_TOL,
            "generalized closure on its locus must be exact, got {}",
            report.max_rel_dev
        );
    }
}
