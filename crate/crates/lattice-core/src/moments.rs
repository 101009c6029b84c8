//! Moment algebra: transforms, linearised equilibria and MRT relaxation.
//!
//! The collision used throughout this workspace is linear in `(rho, jx, jy)`.
//! In moment space it reads `m* = J0 m` with
//!
//! ```text
//! m0* = m0                     m1* = m1                    m2* = m2
//! m3* = m3 + s3 (alpha lambda^2 m0 - m3)
//! m4* = (1 - s4) m4            m5* = (1 - s4) m5
//! m6* = m6 + s7 (-lambda^2 m1 - m6)
//! m7* = m7 + s7 (-lambda^2 m2 - m7)
//! m8* = m8 + s8 (beta lambda^4 m0 - m8)
//! ```
//!
//! The population-space equivalent is the constant matrix
//! `C = M^-1 J0 M`, which [`collision_matrix`] precomputes so the hot loop
//! is a single 9x9 mat-vec per cell.

use crate::params::SchemeParams;
use crate::stencil::{
    inverse_moment_matrix, mat_mul, mat_vec, moment_matrix, Mat9, DIR, Q,
};

/// Raw moments `m = M f`.
pub fn moments_from_populations(f: &[f64; Q], lambda: f64) -> [f64; Q] {
    let l2 = lambda * lambda;
    let l3 = l2 * lambda;
    let l4 = l2 * l2;
    let diag = f[5] + f[6] + f[7] + f[8];
    let axis = f[1] + f[2] + f[3] + f[4];
    [
        f[0] + axis + diag,
        lambda * (f[1] - f[3] + f[5] - f[6] - f[7] + f[8]),
        lambda * (f[2] - f[4] + f[5] + f[6] - f[7] - f[8]),
        l2 * (-4.0 * f[0] - axis + 2.0 * diag),
        l2 * (f[1] - f[2] + f[3] - f[4]),
        l2 * (f[5] - f[6] + f[7] - f[8]),
        l3 * (-2.0 * f[1] + 2.0 * f[3] + f[5] - f[6] - f[7] + f[8]),
        l3 * (-2.0 * f[2] + 2.0 * f[4] + f[5] + f[6] - f[7] - f[8]),
        l4 * (4.0 * f[0] - 2.0 * axis + diag),
    ]
}

/// Populations `f = M^-1 m`.
pub fn populations_from_moments(m: &[f64; Q], lambda: f64) -> [f64; Q] {
    mat_vec(&inverse_moment_matrix(lambda), m)
}

/// Density `rho = sum_j f_j`.
#[inline]
pub fn density(f: &[f64; Q]) -> f64 {
    f.iter().sum()
}

/// Momentum `(jx, jy) = lambda sum_j e_j f_j`.
#[inline]
pub fn momentum(f: &[f64; Q], lambda: f64) -> (f64, f64) {
    let jx = f[1] - f[3] + f[5] - f[6] - f[7] + f[8];
    let jy = f[2] - f[4] + f[5] + f[6] - f[7] - f[8];
    (lambda * jx, lambda * jy)
}

/// Equilibrium moments for the conserved state `(rho, jx, jy)`:
/// `(rho, jx, jy, alpha lambda^2 rho, 0, 0, -lambda^2 jx, -lambda^2 jy,
/// beta lambda^4 rho)`.
pub fn equilibrium_moments(rho: f64, jx: f64, jy: f64, p: &SchemeParams) -> [f64; Q] {
    let l2 = p.lambda() * p.lambda();
    let l4 = l2 * l2;
    [
        rho,
        jx,
        jy,
        p.alpha() * l2 * rho,
        0.0,
        0.0,
        -l2 * jx,
        -l2 * jy,
        p.beta() * l4 * rho,
    ]
}

/// Equilibrium populations, linear in `(rho, jx, jy)`.
///
/// Closed form (equivalent to `M^-1` applied to [`equilibrium_moments`]):
///
/// ```text
/// f0_eq = rho (1 - alpha + beta) / 9
/// f1_eq = rho (4 - alpha - 2 beta) / 36 + jx / (3 lambda)      (2,3,4 alike)
/// f5_eq = rho (4 + 2 alpha + beta) / 36 + (jx + jy) / (12 lambda)  (6,7,8 alike)
/// ```
///
/// At `alpha = -2`, `beta = 1` the density parts are the familiar weights
/// 4/9, 1/9, 1/36.
pub fn equilibrium_populations(rho: f64, jx: f64, jy: f64, p: &SchemeParams) -> [f64; Q] {
    let lambda = p.lambda();
    let alpha = p.alpha();
    let beta = p.beta();
    let w0 = rho * (1.0 - alpha + beta) / 9.0;
    let wa = rho * (4.0 - alpha - 2.0 * beta) / 36.0;
    let wd = rho * (4.0 + 2.0 * alpha + beta) / 36.0;
    let ax = jx / (3.0 * lambda);
    let ay = jy / (3.0 * lambda);
    let dxy = (jx + jy) / (12.0 * lambda);
    let dyx = (-jx + jy) / (12.0 * lambda);
    [
        w0,
        wa + ax,
        wa + ay,
        wa - ax,
        wa - ay,
        wd + dxy,
        wd + dyx,
        wd - dxy,
        wd - dyx,
    ]
}

/// Moment-space relaxation `m* = m + S (m_eq(m) - m)` with per-moment rates
/// `(s3, s4, s4, s7, s7, s8)`; the conserved moments are untouched.
pub fn relax(m: &[f64; Q], p: &SchemeParams) -> [f64; Q] {
    let meq = equilibrium_moments(m[0], m[1], m[2], p);
    let s = [
        0.0,
        0.0,
        0.0,
        p.s3(),
        p.s4(),
        p.s4(),
        p.s7(),
        p.s7(),
        p.s8(),
    ];
    let mut out = *m;
    for k in 3..Q {
        out[k] = m[k] + s[k] * (meq[k] - m[k]);
    }
    out
}

/// Moment-space collision matrix `J0`, so that `relax(m) = J0 m`.
pub fn relaxation_matrix(p: &SchemeParams) -> Mat9 {
    let l2 = p.lambda() * p.lambda();
    let l4 = l2 * l2;
    let mut j0 = [[0.0; Q]; Q];
    // Conserved moments.
    j0[0][0] = 1.0;
    j0[1][1] = 1.0;
    j0[2][2] = 1.0;
    // Energy relaxes towards alpha lambda^2 rho.
    j0[3][0] = p.alpha() * p.s3() * l2;
    j0[3][3] = 1.0 - p.s3();
    // Second-order moments relax towards zero.
    j0[4][4] = 1.0 - p.s4();
    j0[5][5] = 1.0 - p.s4();
    // Third-order moments relax towards -lambda^2 j.
    j0[6][1] = -p.s7() * l2;
    j0[6][6] = 1.0 - p.s7();
    j0[7][2] = -p.s7() * l2;
    j0[7][7] = 1.0 - p.s7();
    // Fourth-order energy relaxes towards beta lambda^4 rho.
    j0[8][0] = p.beta() * p.s8() * l4;
    j0[8][8] = 1.0 - p.s8();
    j0
}

/// Population-space collision matrix `C = M^-1 J0 M`.
pub fn collision_matrix(p: &SchemeParams) -> Mat9 {
    let m = moment_matrix(p.lambda());
    let minv = inverse_moment_matrix(p.lambda());
    mat_mul(&minv, &mat_mul(&relaxation_matrix(p), &m))
}

/// Third-order moment pair `(qx, qy) = (m6, m7) / lambda^3`, the combination
/// the wall closures consume. The lattice speed cancels, so no parameter is
/// needed.
#[inline]
pub fn scaled_heat_flux(f: &[f64; Q]) -> (f64, f64) {
    let qx = -2.0 * f[1] + 2.0 * f[3] + f[5] - f[6] - f[7] + f[8];
    let qy = -2.0 * f[2] + 2.0 * f[4] + f[5] + f[6] - f[7] - f[8];
    (qx, qy)
}

/// First-order velocity moment of a population set along `e_j`, used by
/// conservation diagnostics: `sum_j f_j e_j`.
pub fn direction_sum(f: &[f64; Q]) -> (f64, f64) {
    let mut sx = 0.0;
    let mut sy = 0.0;
    for j in 0..Q {
        sx += f[j] * DIR[j][0] as f64;
        sy += f[j] * DIR[j][1] as f64;
    }
    (sx, sy)
}
