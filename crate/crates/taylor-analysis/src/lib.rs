//! Taylor-expansion analysis of lattice wall closures.
//!
//! The flow crates (`lattice-core`, `boundary-schemes`) *run* a D2Q9 channel
//! with a wall closure; this crate *analyses* one.  Every closure studied here
//! writes the three populations a bottom wall cut off as a linear combination
//! of the cell's own post-collision state plus prescribed wall data, so a
//! steady boundary layer obeys a fixed-point equation in moment space.
//! Expanding that equation in powers of the mesh step turns it into a graded
//! linear system
//!
//! ```text
//!   K m = M xi  -  dt (d_t + B^a d_a) m  -  dt^2/2 d_t^2 m
//!                +  dt^2/2 (Bxx d_x^2 + 2 Bxy d_x d_y + Byy d_y^2) m
//! ```
//!
//! whose unknown `m` is a vector of nine *derivative jets*: truncated Taylor
//! series in the wall data `(rho, Jx, Jy)` and their space/time derivatives.
//! Solving grade by grade yields closed-form accuracy tables for the cell
//! momentum next to the wall — the mechanical counterpart of pages of hand
//! algebra.
//!
//! Module map:
//!
//! ```text
//!   jet       dense truncated series in d_t^a d_x^b d_y^c {rho, Jx, Jy}
//!   matrices  K, Sigma, advection matrices, kernel structure per closure
//!   xi        the inhomogeneous data jets a closure injects
//!   expand    the graded solver and the time-elimination rewrite
//!   kfit      least-squares fit of the density-difference weights
//!   tables    printed coefficient tables and the reconciliation driver
//! ```
//!
//! All computations are numeric (`f64`) at fixed scheme parameters; exactness
//! claims are checked by reconciling against the closed forms at many random
//! parameter draws.

pub mod expand;
pub mod jet;
pub mod kfit;
pub mod matrices;
pub mod tables;
pub mod xi;

pub use expand::{eliminate_time, steady_data_reduce, ClosureExpansion};
pub use jet::{Axis, DerivativeJet, Field, GRADES, MONOMIALS};
pub use kfit::{artifact_free_k, artifact_free_k_closed};
pub use matrices::{closed_forms, ClosureKind, SchemeMatrices};
pub use tables::{reconcile, rows, CoefficientDraw, RowOutcome, TableRow, Verdict};

/// Errors surfaced while assembling or solving a closure expansion.
#[derive(Debug, thiserror::Error)]
pub enum AnalysisError {
    /// The invertible block of the closure matrix is numerically singular.
    #[error("closure matrix has a singular invertible block (rates too close to degenerate)")]
    SingularBlock,
    /// The closure matrix kernel is not one-dimensional.
    #[error("closure matrix kernel has dimension {0}, expected 1")]
    KernelDimension(usize),
    /// A least-squares fit left a residual above tolerance.
    #[error("least-squares fit residual {0:.3e} exceeds tolerance")]
    FitResidual(f64),
}
