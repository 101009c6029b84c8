//! Inhomogeneous data jets a wall closure injects into the boundary cell.
//!
//! The closure writes the three cut-off populations as `T f* + xi`, where
//! `xi` collects everything that is *prescribed* rather than reconstructed:
//! the wall momentum data `J` (sampled where and when each formula says) and
//! the neighbour density differences.  Expanding those samples around the
//! foot of the wall-normal through the cell centre — `J`-terms anchored at
//! the wall point, density terms at the cell node — turns `xi` into three
//! derivative jets:
//!
//! ```text
//!   classical (data at t + dt/2, tangential shifts +-dx/2):
//!     xi2 = 2/(3l) [ Jy + dt/2 d_t Jy + dt^2/8 d_t^2 Jy ]
//!     xi5 = 1/(6l) [ 1 - dx/2 d_x + dt/2 d_t + dx^2/8 d_x^2
//!                      - dx dt/4 d_x d_t + dt^2/8 d_t^2 ] (Jx + Jy)
//!     xi6 =  ... mirror image with +dx/2 d_x ...          (-Jx + Jy)
//!
//!   corrected (data at t, density differences to the diagonal neighbours):
//!     xi2 = 2/(3l) Jy + k2/36 [ -dx d_y - dx^2/2 d_y^2 ] rho
//!     xi5 = 1/(6l) [ 1 - dx/2 d_x + dx^2/8 d_x^2 ] (Jx + Jy)
//!           + k5/36 [ -dx (d_x + d_y) - dx^2/2 (d_x + d_y)^2 ] rho
//!     xi6 = 1/(6l) [ 1 + dx/2 d_x + dx^2/8 d_x^2 ] (-Jx + Jy)
//!           + k6/36 [ +dx (d_x - d_y) - dx^2/2 (d_x - d_y)^2 ] rho
//! ```
//!
//! with `l = lambda` and `dt = dx / lambda`.  The remaining six components
//! of `xi` are zero.

use lattice_core::{stencil::Q, SchemeParams};

use crate::jet::{Axis, DerivativeJet, Field};
use crate::matrices::ClosureKind;

/// Expands `base` sampled at `(x + ex dx/2, t + et dt/2)` to second order:
/// `[1 + (ex/2 d_x + et/(2 lambda) d_t) dx + ...] base`, as a jet.
fn shifted_sample(base: &DerivativeJet, ex: f64, et: f64, lambda: f64) -> DerivativeJet {
    let cx = 0.5 * ex;
    let ct = 0.5 * et / lambda;
    let mut out = base.clone();
    out.add_scaled(&base.d(Axis::X).shift_grade(1), cx);
    out.add_scaled(&base.d(Axis::T).shift_grade(1), ct);
    out.add_scaled(&base.d(Axis::X).d(Axis::X).shift_grade(2), 0.5 * cx * cx);
    out.add_scaled(&base.d(Axis::X).d(Axis::T).shift_grade(2), cx * ct);
    out.add_scaled(&base.d(Axis::T).d(Axis::T).shift_grade(2), 0.5 * ct * ct);
    out
}

/// Density difference `rho(node) - rho(node + (ex, 1) dx)` as a jet.
fn density_difference(ex: f64) -> DerivativeJet {
    let rho = DerivativeJet::symbol(Field::Rho);
    let dir = {
        // rho(x + d) = rho + (ex d_x + d_y) rho dx + 1/2 (ex d_x + d_y)^2 rho dx^2
        let grad = {
            let mut g = rho.d(Axis::Y);
            g.add_scaled(&rho.d(Axis::X), ex);
            g
        };
        let hess = {
            let mut h = rho.d(Axis::Y).d(Axis::Y);
            h.add_scaled(&rho.d(Axis::X).d(Axis::Y), 2.0 * ex);
            h.add_scaled(&rho.d(Axis::X).d(Axis::X), ex * ex);
            h
        };
        let mut shifted = rho.clone();
        shifted.add_scaled(&grad.shift_grade(1), 1.0);
        shifted.add_scaled(&hess.shift_grade(2), 0.5);
        shifted
    };
    let mut diff = rho;
    diff.add_scaled(&dir, -1.0);
    diff
}

/// Builds the nine data jets of `kind` at parameters `p`.
pub fn closure_data_jets(kind: &ClosureKind, p: &SchemeParams) -> [DerivativeJet; Q] {
    let lambda = p.lambda();
    let jx = DerivativeJet::symbol(Field::Jx);
    let jy = DerivativeJet::symbol(Field::Jy);
    let sum = {
        let mut s = jx.clone();
        s.add_scaled(&jy, 1.0);
        s
    };
    let diff = {
        let mut d = jy.clone();
        d.add_scaled(&jx, -1.0);
        d
    };

    let mut xi: [DerivativeJet; Q] = std::array::from_fn(|_| DerivativeJet::zero());
    match kind {
        ClosureKind::Classical => {
            // Data sampled at t + dt/2; the diagonal links also shift by
            // -+ dx/2 along the wall.
            xi[2] = shifted_sample(&jy, 0.0, 1.0, lambda).scaled(2.0 / (3.0 * lambda));
            xi[5] = shifted_sample(&sum, -1.0, 1.0, lambda).scaled(1.0 / (6.0 * lambda));
            xi[6] = shifted_sample(&diff, 1.0, 1.0, lambda).scaled(1.0 / (6.0 * lambda));
        }
        ClosureKind::Corrected(gp) => {
            // Data sampled at t; density differences point to the straight
            // and diagonal upward neighbours.
            xi[2] = shifted_sample(&jy, 0.0, 0.0, lambda).scaled(2.0 / (3.0 * lambda));
            xi[2].add_scaled(&density_difference(0.0), gp.k2 / 36.0);
            xi[5] = shifted_sample(&sum, -1.0, 0.0, lambda).scaled(1.0 / (6.0 * lambda));
            xi[5].add_scaled(&density_difference(1.0), gp.k5 / 36.0);
            xi[6] = shifted_sample(&diff, 1.0, 0.0, lambda).scaled(1.0 / (6.0 * lambda));
            xi[6].add_scaled(&density_difference(-1.0), gp.k6 / 36.0);
        }
    }
    xi
}
