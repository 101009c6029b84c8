//! Frame-local wall closures.
//!
//! Everything in this module is written for a wall *below* the fluid: the
//! wall lies at distance `dx/2` below the node, `+y` points into the fluid,
//! and the missing populations are `2` (up), `5` (up-right) and `6`
//! (up-left). [`crate::orient`] reduces the other three edges to this frame.
//!
//! The three closures share the bounce-back backbone
//!
//! ```text
//! f2 <- f4* + (2 / 3 lambda) Jy                  (wall foot of the node)
//! f5 <- f7* + (1 / 6 lambda) (Jx + Jy)           (foot shifted -dx/2)
//! f6 <- f8* + (1 / 6 lambda) (-Jx + Jy)          (foot shifted +dx/2)
//! ```
//!
//! where `J` is the prescribed wall momentum. They differ in when the data
//! is sampled (classical: `t + dt/2`; the others: `t`) and in the extra
//! corrections built from the cell's own post-collision moments and from
//! neighbour density differences.

use crate::GeneralizedParams;
use lattice_core::moments::{momentum, scaled_heat_flux};
use lattice_core::stencil::Q;
use lattice_core::SchemeParams;

/// Everything a wall closure needs about one boundary cell, already mapped
/// into the wall-local frame.
///
/// The momentum samples `j_*` are the wall data evaluated by the caller at
/// the appropriate time (`t + dt/2` for the classical closure, `t`
/// otherwise) and tangential position (`mid` at the node's foot, `left` at
/// `-dx/2`, `right` at `+dx/2`).
#[derive(Debug, Clone, Copy)]
pub struct WallCellContext {
    /// Post-collision populations of the cell, frame-indexed.
    pub f_star: [f64; Q],
    /// Wall momentum `(Jx, Jy)` at the node's foot.
    pub j_mid: (f64, f64),
    /// Wall momentum at tangential offset `-dx/2`.
    pub j_left: (f64, f64),
    /// Wall momentum at tangential offset `+dx/2`.
    pub j_right: (f64, f64),
    /// Cell density.
    pub rho: f64,
    /// Density one cell into the fluid (`+y`).
    pub rho_n: f64,
    /// Density one cell diagonally `+x +y`.
    pub rho_ne: f64,
    /// Density one cell diagonally `-x +y`.
    pub rho_nw: f64,
}

impl WallCellContext {
    /// Context with only populations and wall data; densities default to the
    /// cell's own density (making every density difference vanish).
    pub fn without_density_differences(
        f_star: [f64; Q],
        j_mid: (f64, f64),
        j_left: (f64, f64),
        j_right: (f64, f64),
    ) -> Self {
        let rho: f64 = f_star.iter().sum();
        Self {
            f_star,
            j_mid,
            j_left,
            j_right,
            rho,
            rho_n: rho,
            rho_ne: rho,
            rho_nw: rho,
        }
    }
}

/// Classical bounce back. Returns the reconstructed `(f2, f5, f6)`.
///
/// The caller must sample the wall data of `ctx` at the half-step time
/// `t + dt/2`; the density fields of `ctx` are ignored.
pub fn classical_bounce_back(ctx: &WallCellContext, p: &SchemeParams) -> [f64; 3] {
    let lambda = p.lambda();
    let fs = &ctx.f_star;
    [
        fs[4] + 2.0 / (3.0 * lambda) * ctx.j_mid.1,
        fs[7] + (ctx.j_left.0 + ctx.j_left.1) / (6.0 * lambda),
        fs[8] + (-ctx.j_right.0 + ctx.j_right.1) / (6.0 * lambda),
    ]
}

/// Shared implementation of the corrected closures.
fn corrected_bounce_back(
    ctx: &WallCellContext,
    gp: &GeneralizedParams,
    p: &SchemeParams,
) -> [f64; 3] {
    let lambda = p.lambda();
    let fs = &ctx.f_star;
    let (qx, qy) = scaled_heat_flux(fs);
    let (jx, jy) = momentum(fs, lambda);
    let (ux, uy) = (jx / lambda, jy / lambda);
    [
        fs[4] + 2.0 / (3.0 * lambda) * ctx.j_mid.1
            - gp.a2 / 3.0 * (qy + uy)
            + gp.k2 / 36.0 * (ctx.rho - ctx.rho_n),
        fs[7] + (ctx.j_left.0 + ctx.j_left.1) / (6.0 * lambda)
            + gp.a5 / 6.0 * (qx + qy + ux + uy)
            + gp.k5 / 36.0 * (ctx.rho - ctx.rho_ne),
        fs[8] + (-ctx.j_right.0 + ctx.j_right.1) / (6.0 * lambda)
            + gp.a6 / 6.0 * (-qx + qy - ux + uy)
            + gp.k6 / 36.0 * (ctx.rho - ctx.rho_nw),
    ]
}

/// First-order corrected bounce back: `a = 1` and the preset density
/// coefficients `k2 = 4 - alpha - 2 beta`, `k5 = k6 = 4 + 2 alpha + beta`.
///
/// Wall data of `ctx` must be sampled at time `t`.
pub fn first_order_bounce_back(ctx: &WallCellContext, p: &SchemeParams) -> [f64; 3] {
    let gp = GeneralizedParams::first_order(p.alpha(), p.beta());
    corrected_bounce_back(ctx, &gp, p)
}

/// Generalized bounce back with explicit coefficients.
///
/// Wall data of `ctx` must be sampled at time `t`.
pub fn generalized_bounce_back(
    ctx: &WallCellContext,
    gp: &GeneralizedParams,
    p: &SchemeParams,
) -> [f64; 3] {
    corrected_bounce_back(ctx, gp, p)
}
