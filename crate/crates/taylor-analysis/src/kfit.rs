//! Fitting density-difference weights that remove first-order wall
//! artifacts.
//!
//! For the corrected closure the steady (time-eliminated) momentum jets are
//! affine in the density-difference weights `k = (k2, k5, k6)`.  Exactness
//! at first order demands that every grade-one coefficient vanish except the
//! geometric Taylor terms `dx/2 d_y Jx` and `dx/2 d_y Jy` (each 1/2):
//! any surviving density gradient or momentum-gradient coefficient is a
//! numerical wall artifact.  Probing the map `k -> grade-one coefficients`
//! at four points turns that demand into a small least-squares problem.
//!
//! The solution matches the closed form
//!
//! ```text
//!   k5 = k6 = (3a+2b+4)(1 - a5) sigma7 + (3a+2b+4) a5 / 2 + (a+4) / 2
//!   k2      = 2 (3a+2b+4)(a2 - 1) sigma7 - (3a+2b+4) a2 + 2 (a+4)
//! ```
//!
//! (`a = alpha`, `b = beta`), which at the reference equilibrium
//! `alpha = -2`, `beta = 1` collapses to `k2 = 4`, `k5 = k6 = 1` for every
//! `a5`.

use boundary_schemes::GeneralizedParams;
use lattice_core::SchemeParams;

use crate::expand::ClosureExpansion;
use crate::jet::{DerivativeJet, Field};
use crate::matrices::ClosureKind;
use crate::AnalysisError;

/// Residual tolerance above which the fit is rejected.
const FIT_TOL: f64 = 1e-10;

/// Grade-one coefficients of the steady momentum jets, with the exact
/// Taylor targets subtracted: identically zero means "no wall artifact".
fn artifact_vector(jx: &DerivativeJet, jy: &DerivativeJet) -> Vec<f64> {
    let mut out = Vec::with_capacity(12);
    // After time elimination only d_x and d_y monomials survive at grade 1.
    for mono in [(0, 1, 0), (0, 0, 1)] {
        for field in [Field::Rho, Field::Jx, Field::Jy] {
            let target = if field == Field::Jx && mono == (0, 0, 1) {
                0.5
            } else {
                0.0
            };
            out.push(jx.get(1, field, mono) - target);
            let target = if field == Field::Jy && mono == (0, 0, 1) {
                0.5
            } else {
                0.0
            };
            out.push(jy.get(1, field, mono) - target);
        }
    }
    out
}

fn artifacts_at(
    p: &SchemeParams,
    a: (f64, f64, f64),
    k: (f64, f64, f64),
) -> Result<Vec<f64>, AnalysisError> {
    let gp = GeneralizedParams {
        a2: a.0,
        a5: a.1,
        a6: a.2,
        k2: k.0,
        k5: k.1,
        k6: k.2,
    };
    let e = ClosureExpansion::new(p, &ClosureKind::Corrected(gp))?;
    Ok(artifact_vector(
        &e.momentum_x_steady(),
        &e.momentum_y_steady(),
    ))
}

/// Density-difference weights `(k2, k5, k6)` that cancel every grade-one
/// wall artifact of the corrected closure with moment coefficients
/// `(a2, a5, a6)`, found by least squares over the probed affine map.
///
/// # Errors
///
/// Fails if an expansion cannot be assembled or if the best fit still
/// leaves an artifact above `1e-10` — i.e. no weight choice is exact.
pub fn artifact_free_k(
    p: &SchemeParams,
    a2: f64,
    a5: f64,
    a6: f64,
) -> Result<(f64, f64, f64), AnalysisError> {
    let a = (a2, a5, a6);
    let base = artifacts_at(p, a, (0.0, 0.0, 0.0))?;
    let n = base.len();
    let mut columns = Vec::with_capacity(3);
    for probe in [(1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)] {
        let shifted = artifacts_at(p, a, probe)?;
        columns.push(
            shifted
                .iter()
                .zip(base.iter())
                .map(|(s, b)| s - b)
                .collect::<Vec<f64>>(),
        );
    }

    let a_mat = nalgebra::DMatrix::<f64>::from_fn(n, 3, |r, c| columns[c][r]);
    let rhs = nalgebra::DVector::<f64>::from_fn(n, |r, _| -base[r]);
    let solution = a_mat
        .clone()
        .svd(true, true)
        .solve(&rhs, 1e-14)
        .map_err(|_| AnalysisError::SingularBlock)?;
    let k = (solution[0], solution[1], solution[2]);

    // The fit must be exact, not merely optimal.
    let residual = artifacts_at(p, a, k)?
        .iter()
        .fold(0.0_f64, |acc, v| acc.max(v.abs()));
    if residual > FIT_TOL {
        return Err(AnalysisError::FitResidual(residual));
    }
    Ok(k)
}

/// Closed-form artifact-free weights; see the module docs.
pub fn artifact_free_k_closed(
    a2: f64,
    a5: f64,
    alpha: f64,
    beta: f64,
    sigma7: f64,
) -> (f64, f64, f64) {
    let g = 3.0 * alpha + 2.0 * beta + 4.0;
    let k5 = g * (1.0 - a5) * sigma7 + 0.5 * g * a5 + 0.5 * (alpha + 4.0);
    let k2 = 2.0 * g * (a2 - 1.0) * sigma7 - g * a2 + 2.0 * (alpha + 4.0);
    (k2, k5, k5)
}
