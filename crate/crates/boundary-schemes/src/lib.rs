//! Boundary closures for the D2Q9 MRT kernel.
//!
//! After streaming, the cells along a non-periodic edge are missing the
//! populations whose source lay outside the grid. This crate supplies the
//! passes that reconstruct them:
//!
//! * [`WallPass`] — a solid wall half a cell outside the boundary nodes,
//!   with prescribed wall momentum, in one of three interchangeable
//!   flavours ([`WallScheme`]):
//!   * **classical** bounce back: reflect the opposite post-collision
//!     population and add the wall-momentum source, sampled at the
//!     half-step time `t + dt/2` and, for the diagonal populations, half a
//!     cell along the wall;
//!   * **first-order** bounce back: data sampled at time `t`, plus local
//!     third-order-moment corrections and neighbour density differences
//!     with fixed coefficients;
//!   * **generalized** bounce back: the same structure with freely chosen
//!     coefficients `a2, a5, a6` (moment corrections) and `k2, k5, k6`
//!     (density differences). Zero coefficients recover the classical
//!     closure; `a = 1` with the first-order `k` values recovers the
//!     first-order closure.
//! * [`PressurePass`] — anti bounce back against a prescribed boundary
//!   density, the standard way to drive a channel by a pressure difference.
//!
//! The closures are written once in a wall-local frame (wall below the
//! fluid, `+y` into the fluid) in [`kernels`]; [`orientation`] maps each of
//! the four grid edges onto that frame with a signed permutation of the
//! stencil, so every scheme works on any edge.
//!
//! [`orientation`]: crate::orient::orientation

pub mod kernels;
pub mod orient;
pub mod pressure;
pub mod wall;

pub use kernels::{
    classical_bounce_back, first_order_bounce_back, generalized_bounce_back, WallCellContext,
};
pub use orient::{orientation, Orientation};
pub use pressure::PressurePass;
pub use wall::{WallData, WallPass};

use thiserror::Error;

/// Errors raised by boundary-scheme construction and parameter relations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundaryError {
    /// The fourth-order accuracy relation for the generalized scheme
    /// degenerates at `a5 = 1` (the first-order preset), where no finite
    /// `sigma7` satisfies it.
    #[error("no finite sigma7 satisfies the fourth-order relation at a5 = {a5}")]
    QuarticDegenerate {
        /// Offending coefficient.
        a5: f64,
    },
    /// The classical fourth-order relation needs `alpha + 2 beta != 4`.
    #[error(
        "no finite sigma7 satisfies the classical fourth-order relation at \
         alpha = {alpha}, beta = {beta} (alpha + 2 beta = 4)"
    )]
    ClassicalQuarticDegenerate {
        /// Energy coefficient.
        alpha: f64,
        /// Fourth-order energy coefficient.
        beta: f64,
    },
    /// The relations divide by `sigma4`; `s4 = 2` makes it zero.
    #[error("sigma4 = 0 (s4 = 2) leaves the fourth-order relation without a solution")]
    SigmaFourZero,
}

/// Coefficients of the generalized bounce-back closure.
///
/// `a2, a5, a6` scale the local third-order-moment corrections of the
/// normal (`f2`) and diagonal (`f5`, `f6`) populations; `k2, k5, k6` scale
/// the neighbour density differences. All six set to zero reproduce the
/// classical closure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralizedParams {
    /// Moment-correction weight of the wall-normal population.
    pub a2: f64,
    /// Moment-correction weight of the `+x +y` diagonal population.
    pub a5: f64,
    /// Moment-correction weight of the `-x +y` diagonal population.
    pub a6: f64,
    /// Density-difference weight of the wall-normal population.
    pub k2: f64,
    /// Density-difference weight of the `+x +y` diagonal population.
    pub k5: f64,
    /// Density-difference weight of the `-x +y` diagonal population.
    pub k6: f64,
}

impl GeneralizedParams {
    /// All-zero coefficients: exactly the classical closure.
    pub fn classical() -> Self {
        Self {
            a2: 0.0,
            a5: 0.0,
            a6: 0.0,
            k2: 0.0,
            k5: 0.0,
            k6: 0.0,
        }
    }

    /// The first-order preset: `a = 1`,
    /// `k2 = 4 - alpha - 2 beta`, `k5 = k6 = 4 + 2 alpha + beta`.
    pub fn first_order(alpha: f64, beta: f64) -> Self {
        Self {
            a2: 1.0,
            a5: 1.0,
            a6: 1.0,
            k2: 4.0 - alpha - 2.0 * beta,
            k5: 4.0 + 2.0 * alpha + beta,
            k6: 4.0 + 2.0 * alpha + beta,
        }
    }
}

/// Wall-closure flavour used by [`WallPass`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WallScheme {
    /// Classical bounce back with half-step data sampling.
    Classical,
    /// First-order corrected bounce back (fixed coefficients).
    FirstOrder,
    /// Generalized bounce back with explicit coefficients.
    Generalized(GeneralizedParams),
}

/// Density-difference coefficients that remove the first-order wall
/// artifacts for given moment-correction coefficients, as a closed form in
/// `(a5, a2, alpha, beta, sigma7)`. Returns `(k2, k5, k6)` with `k6 = k5`.
///
/// ```text
/// k5 = (3a + 2b + 4)(1 - a5) sigma7 + (3a + 2b + 5) a5 / 2 + (a + 4) / 2
/// k2 = 2 (3a + 2b + 4)(a2 - 1) sigma7 - (3a + 2b + 4) a2 + 2 (a + 4)
/// ```
///
/// At `a5 = a2 = 1` this reduces to `k5 = (3 alpha + 2 beta + 5) / 2 +
/// (alpha + 4) / 2` and `k2 = 4 - alpha - 2 beta`. The analysis engine in
/// the `taylor-analysis` crate solves the same cancellation directly from
/// the Taylor expansion; see its `artifact_free_k`, which differs from this
/// closed form in the `a5`-linear term (the benchmarks use the engine
/// values, and the reconciliation report records the comparison).
pub fn constrained_k(a5: f64, a2: f64, alpha: f64, beta: f64, sigma7: f64) -> (f64, f64, f64) {
    let g = 3.0 * alpha + 2.0 * beta + 4.0;
    let k5 = g * (1.0 - a5) * sigma7 + 0.5 * (3.0 * alpha + 2.0 * beta + 5.0) * a5
        + 0.5 * (alpha + 4.0);
    let k2 = 2.0 * g * (a2 - 1.0) * sigma7 - g * a2 + 2.0 * (alpha + 4.0);
    (k2, k5, k5)
}

/// The `sigma7` that makes the generalized closure fourth-order accurate on
/// a steady parabolic profile, for a given `a5` and `sigma4`:
/// `sigma4 sigma7 = (8 a5 sigma4 + 4 sigma4 - 3) / (16 (a5 - 1))`.
///
/// # Errors
///
/// [`BoundaryError::QuarticDegenerate`] at `a5 = 1`,
/// [`BoundaryError::SigmaFourZero`] at `sigma4 = 0`.
pub fn quartic_sigma7(a5: f64, sigma4: f64) -> Result<f64, BoundaryError> {
    if a5 == 1.0 {
        return Err(BoundaryError::QuarticDegenerate { a5 });
    }
    if sigma4 == 0.0 {
        return Err(BoundaryError::SigmaFourZero);
    }
    Ok((8.0 * a5 * sigma4 + 4.0 * sigma4 - 3.0) / (16.0 * (a5 - 1.0) * sigma4))
}

/// The `sigma7` that makes the *classical* closure fourth-order accurate on
/// a steady parabolic profile:
/// `sigma4 sigma7 = -(3/8) (alpha + 4) / (alpha + 2 beta - 4)`.
///
/// # Errors
///
/// [`BoundaryError::ClassicalQuarticDegenerate`] when `alpha + 2 beta = 4`,
/// [`BoundaryError::SigmaFourZero`] at `sigma4 = 0`.
pub fn classical_quartic_sigma7(
    alpha: f64,
    beta: f64,
    sigma4: f64,
) -> Result<f64, BoundaryError> {
    let denom = alpha + 2.0 * beta - 4.0;
    if denom == 0.0 {
        return Err(BoundaryError::ClassicalQuarticDegenerate { alpha, beta });
    }
    if sigma4 == 0.0 {
        return Err(BoundaryError::SigmaFourZero);
    }
    Ok(-(3.0 / 8.0) * (alpha + 4.0) / (denom * sigma4))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-14;

    #[test]
    fn constrained_k_reference_values() {
        // Standard coefficients, a = 1: k2 = 4, k5 = 3/2.
        let (k2, k5, k6) = constrained_k(1.0, 1.0, -2.0, 1.0, 0.77);
        assert!((k2 - 4.0).abs() <= TOL, "k2 = {k2}, expected 4");
        assert!((k5 - 1.5).abs() <= TOL, "k5 = {k5}, expected 3/2");
        assert_eq!(k5, k6, "k6 mirrors k5");
        // Standard coefficients, a = 0, sigma7 = 1/2: k2 = 4, k5 = 1.
        let (k2, k5, _) = constrained_k(0.0, 0.0, -2.0, 1.0, 0.5);
        assert!((k2 - 4.0).abs() <= TOL, "k2 = {k2}, expected 4");
        assert!((k5 - 1.0).abs() <= TOL, "k5 = {k5}, expected 1");
        // alpha = -4, beta = 2, a = 1: k2 = 4, k5 = -3/2.
        let (k2, k5, _) = constrained_k(1.0, 1.0, -4.0, 2.0, 0.31);
        assert!((k2 - 4.0).abs() <= TOL, "k2 = {k2}, expected 4");
        assert!((k5 + 1.5).abs() <= TOL, "k5 = {k5}, expected -3/2");
    }

    #[test]
    fn quartic_sigma7_reference_values() {
        let s7 = quartic_sigma7(-1.0, 0.5).unwrap();
        assert!((s7 - 5.0 / 16.0).abs() <= TOL, "sigma7 = {s7}, expected 5/16");
        let s7 = quartic_sigma7(0.0, 0.75).unwrap();
        assert!(s7.abs() <= TOL, "sigma7 = {s7}, expected 0");
        assert!(matches!(
            quartic_sigma7(1.0, 0.5),
            Err(BoundaryError::QuarticDegenerate { .. })
        ));
    }

    #[test]
    fn classical_quartic_sigma7_reference_values() {
        let s7 = classical_quartic_sigma7(-2.0, 1.0, 0.5).unwrap();
        assert!((s7 - 3.0 / 8.0).abs() <= TOL, "sigma7 = {s7}, expected 3/8");
        let s7 = classical_quartic_sigma7(-4.0, 1.0, 0.5).unwrap();
        assert!(s7.abs() <= TOL, "sigma7 = {s7}, expected 0 at alpha = -4");
        assert!(matches!(
            classical_quartic_sigma7(-2.0, 3.0, 0.5),
            Err(BoundaryError::ClassicalQuarticDegenerate { .. })
        ));
    }

    #[test]
    fn first_order_preset_at_standard_coefficients() {
        let gp = GeneralizedParams::first_order(-2.0, 1.0);
        assert_eq!(gp.k2, 4.0, "k2 = 4 - alpha - 2 beta");
        assert_eq!(gp.k5, 1.0, "k5 = 4 + 2 alpha + beta");
        assert_eq!(gp.k6, 1.0);
        assert_eq!((gp.a2, gp.a5, gp.a6), (1.0, 1.0, 1.0));
    }
}
