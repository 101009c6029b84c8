//! Core D2Q9 lattice kernel with multiple-relaxation-time (MRT) collision.
//!
//! The crate provides the pieces every flow solver in this workspace shares:
//!
//! * the nine-velocity stencil, its raw-moment transform and the closed-form
//!   inverse of that transform ([`stencil`]);
//! * linearised equilibria, moment-space relaxation and the equivalent 9x9
//!   population-space collision matrix ([`moments`]);
//! * a structured population field with two-buffer pull streaming, edge tags
//!   and a boundary-pass hook that lets closure schemes overwrite the
//!   populations streaming would have needed from outside the grid
//!   ([`field`]);
//! * a validated parameter bundle ([`params`]).
//!
//! # Lattice
//!
//! The nine velocities, indexed `0..9`:
//!
//! ```text
//!        6   2   5
//!          \ | /
//!        3 - 0 - 1          v_j = lambda * e_j,   lambda = dx / dt
//!          / | \
//!        7   4   8
//! ```
//!
//! Opposite pairs are `1<->3`, `2<->4`, `5<->7`, `6<->8`.
//!
//! # Moments
//!
//! Populations `f` map to raw moments `m = M f` ordered as
//!
//! ```text
//! m0 = rho    m1 = jx     m2 = jy      (conserved)
//! m3 = e      m4 = xx     m5 = xy      (second order)
//! m6 = qx     m7 = qy     m8 = ee      (third / fourth order)
//! ```
//!
//! Collision relaxes the non-conserved moments towards linearised equilibria
//! controlled by the coefficients `alpha` (energy) and `beta` (fourth-order
//! energy): `m3_eq = alpha lambda^2 rho`, `m6_eq = -lambda^2 jx`,
//! `m7_eq = -lambda^2 jy`, `m8_eq = beta lambda^4 rho`, and `m4_eq = m5_eq = 0`.
//! Everything in this workspace works with the momentum `j` directly (the
//! scheme is linear in `(rho, jx, jy)`), so there is no low-Mach nonlinearity
//! anywhere in the collision.

pub mod field;
pub mod moments;
pub mod params;
pub mod stencil;

pub use field::{BoundaryPass, Edge, EdgeTag, EdgeTags, PopulationField, Simulation};
pub use params::SchemeParams;

use thiserror::Error;

/// Errors reported by the lattice kernel.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum LatticeError {
    /// Grid spacing or time step is not a positive finite number.
    #[error("grid spacing and time step must be positive and finite (dx = {dx}, dt = {dt})")]
    InvalidStep {
        /// Offending grid spacing.
        dx: f64,
        /// Offending time step.
        dt: f64,
    },
    /// A relaxation rate lies outside the stable interval `(0, 2]`.
    #[error("relaxation rate {name} = {value} outside the stable range (0, 2]")]
    RateOutOfRange {
        /// Name of the rate, e.g. `"s4"`.
        name: &'static str,
        /// Offending value.
        value: f64,
    },
    /// `alpha <= -4` makes the model sound speed imaginary.
    #[error("energy equilibrium coefficient alpha = {alpha} must exceed -4 for a real sound speed")]
    DegenerateSoundSpeed {
        /// Offending value.
        alpha: f64,
    },
    /// A coefficient that must be finite is NaN or infinite.
    #[error("coefficient {name} = {value} must be finite")]
    NonFinite {
        /// Name of the coefficient.
        name: &'static str,
        /// Offending value.
        value: f64,
    },
    /// The grid is too small for the stencil and its boundary closures.
    #[error("grid must be at least 2x2 cells (got {nx} x {ny})")]
    GridTooSmall {
        /// Cells along x.
        nx: usize,
        /// Cells along y.
        ny: usize,
    },
    /// A non-periodic edge has no boundary pass assigned to it.
    #[error("edge {edge:?} is not periodic and no boundary pass covers it")]
    UnresolvedEdge {
        /// The uncovered edge.
        edge: Edge,
    },
    /// A boundary pass was assigned to an edge tagged periodic.
    #[error("boundary pass assigned to periodic edge {edge:?}")]
    PassOnPeriodicEdge {
        /// The offending edge.
        edge: Edge,
    },
}
