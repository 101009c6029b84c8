//! Reference flows and convergence harnesses for the lattice kernels.
//!
//! The crate drives [`lattice_core::Simulation`] against two flows with
//! known closed-form solutions and measures how the wall closures of
//! [`boundary_schemes`] converge towards them:
//!
//! * [`poiseuille`] — a pressure-driven channel whose steady profile is an
//!   exact parabola for the right parameter loci; the harness fits the
//!   parabola and reports the deviation, which sits at rounding level when
//!   the locus is hit.
//! * [`accordion`] — a periodic channel whose walls inject a cosine
//!   momentum profile, admitting an exact Stokes stream-function solution;
//!   the harness measures first-row momentum errors on a mesh sequence and
//!   fits convergence rates.
//!
//! Supporting modules: [`reference`] holds the closed-form Stokes solution
//! (with a finite-difference self-check), [`steady`] the fixed-point
//! driver, and [`rate`] the log-log slope fit used for convergence orders.

pub mod accordion;
pub mod poiseuille;
pub mod rate;
pub mod reference;
pub mod steady;

pub use accordion::{AccordionConfig, AccordionErrors, AccordionSweep};
pub use poiseuille::{PoiseuilleConfig, PoiseuilleReport};
pub use rate::fit_rate;
pub use reference::AccordionSolution;
pub use steady::{run_to_steady, SteadyReport};

/// Relative momentum change (per check interval) below which a run is
/// declared steady.  The weakest drives peak near `1e-4` in momentum, so
/// rounding noise alone moves the field by a few parts in `1e-12` per
/// check; the tolerance sits above that plateau while leaving the stopped
/// transient orders of magnitude below the `1e-8` exactness bounds.
pub const STEADY_REL_TOL: f64 = 1e-11;

/// Steps between two steadiness checks.
pub const STEADY_CHECK_EVERY: u64 = 100;

/// Hard cap on steps before a steady run is abandoned.
pub const STEADY_MAX_STEPS: u64 = 1_000_000;
