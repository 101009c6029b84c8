//! Moment-space matrices describing one wall closure.
//!
//! After one full update the populations of a boundary cell on the bottom
//! wall read
//!
//! ```text
//!   f(x, t + dt) = U f*(x - v dt, t)  +  T f*(x, t)  +  xi(x, t)
//! ```
//!
//! where `U` selects the six populations that stream in from the fluid, `T`
//! is the local reconstruction part of the closure (bounce back plus any
//! moment corrections), and `xi` collects the prescribed-data terms.  In
//! moment space, with `f* = Minv J0 M f` the linearised collision, a steady
//! boundary layer satisfies the graded equation stated in the crate docs;
//! this module assembles every matrix appearing there:
//!
//! ```text
//!   K     = I - M (T + U) Minv J0          closure matrix
//!   B^a   = M U V^a Minv J0                first-order advection
//!   B^ab  = M U V^a V^b Minv J0            second-order advection
//!   Sigma = pseudo-solver: rows/cols 0 zero, inverse of K[1:, 1:]
//! ```
//!
//! `K` is singular by construction — mass leaves the cell only through the
//! wall balance, which is the compatibility condition — with kernel spanned
//! by the equilibrium direction `mu0 = (1, 0, 0, alpha l^2, 0, 0, 0, 0,
//! beta l^4)`.

use lattice_core::{
    stencil::{identity, mat_mul, Mat9, DIR, Q},
    SchemeParams,
};

use boundary_schemes::GeneralizedParams;

use crate::AnalysisError;

/// Wall closure flavour from the analysis point of view.
///
/// The classical closure samples wall data at the half step and carries no
/// density differences; every corrected closure (the first-order preset
/// included) samples at the full step and is parameterised by
/// [`GeneralizedParams`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClosureKind {
    /// Classical bounce back.
    Classical,
    /// Moment-corrected bounce back with density differences.
    Corrected(GeneralizedParams),
}

impl ClosureKind {
    /// The first-order preset as a corrected closure.
    pub fn first_order(alpha: f64, beta: f64) -> Self {
        ClosureKind::Corrected(GeneralizedParams::first_order(alpha, beta))
    }

    /// Density-difference weights `(k2, k5, k6)`; zero for the classical
    /// closure.
    pub fn density_weights(&self) -> (f64, f64, f64) {
        match self {
            ClosureKind::Classical => (0.0, 0.0, 0.0),
            ClosureKind::Corrected(gp) => (gp.k2, gp.k5, gp.k6),
        }
    }
}

/// Relative singular-value threshold below which a direction counts as
/// kernel.
const KERNEL_TOL: f64 = 1e-9;

/// Every matrix the graded solver needs, assembled for one closure at one
/// set of scheme parameters.
#[derive(Debug, Clone)]
pub struct SchemeMatrices {
    /// Moment map `M`.
    pub m: Mat9,
    /// Inverse moment map.
    pub m_inv: Mat9,
    /// Moment-space collision `J0`.
    pub j0: Mat9,
    /// Diagonal selector of the populations streaming in from the fluid.
    pub u: Mat9,
    /// Local reconstruction part of the closure.
    pub t: Mat9,
    /// Closure matrix `K = I - M (T + U) Minv J0`.
    pub k: Mat9,
    /// Pseudo-solver of `K m = g` ignoring the mass row.
    pub sigma: Mat9,
    /// First-order advection matrices `B^x`, `B^y`.
    pub bx: Mat9,
    /// See `bx`.
    pub by: Mat9,
    /// Second-order advection matrices.
    pub bxx: Mat9,
    /// See `bxx`.
    pub bxy: Mat9,
    /// See `bxx`.
    pub byy: Mat9,
    /// Kernel direction of `K`: the equilibrium moment profile.
    pub mu0: [f64; Q],
    /// Unit left-null vector of `K` (sign unspecified).
    pub left_null: [f64; Q],
    /// Numerical kernel dimension of `K`.
    pub kernel_dim: usize,
}

/// Diagonal matrix from a vector.
fn diag(v: [f64; Q]) -> Mat9 {
    let mut out = [[0.0; Q]; Q];
    for (i, &x) in v.iter().enumerate() {
        out[i][i] = x;
    }
    out
}

/// Selector of the populations that stream in from interior neighbours of a
/// bottom-wall cell: all but the three upward ones `{2, 5, 6}`.
fn streaming_selector() -> Mat9 {
    diag([1.0, 1.0, 0.0, 1.0, 1.0, 0.0, 0.0, 1.0, 1.0])
}

/// Local reconstruction matrix of a closure.
///
/// Row `d` expresses the reconstructed population `f_d` as a combination of
/// the cell's own post-collision populations.  Plain bounce back reflects
/// the opposite population; the corrected closures add multiples of
/// `q*_t + u_t` (third-order moment plus velocity) per direction.  The
/// classical matrix is the corrected one at `a = 0`.
fn reconstruction(kind: &ClosureKind) -> Mat9 {
    let (a2, a5, a6) = match kind {
        ClosureKind::Classical => (0.0, 0.0, 0.0),
        ClosureKind::Corrected(gp) => (gp.a2, gp.a5, gp.a6),
    };
    let mut t = [[0.0; Q]; Q];
    // f2 = f*4 - a2/3 (q*_y + u_y)
    t[2] = [
        0.0,
        0.0,
        a2 / 3.0,
        0.0,
        1.0 - a2 / 3.0,
        -2.0 * a2 / 3.0,
        -2.0 * a2 / 3.0,
        2.0 * a2 / 3.0,
        2.0 * a2 / 3.0,
    ];
    // f5 = f*7 + a5/6 (q*_x + q*_y + u_x + u_y)
    t[5] = [
        0.0,
        -a5 / 6.0,
        -a5 / 6.0,
        a5 / 6.0,
        a5 / 6.0,
        2.0 * a5 / 3.0,
        0.0,
        1.0 - 2.0 * a5 / 3.0,
        0.0,
    ];
    // f6 = f*8 + a6/6 (-q*_x + q*_y - u_x + u_y)
    t[6] = [
        0.0,
        a6 / 6.0,
        -a6 / 6.0,
        -a6 / 6.0,
        a6 / 6.0,
        0.0,
        2.0 * a6 / 3.0,
        0.0,
        1.0 - 2.0 * a6 / 3.0,
    ];
    t
}

fn to_na(m: &Mat9) -> nalgebra::SMatrix<f64, 9, 9> {
    nalgebra::SMatrix::<f64, 9, 9>::from_fn(|r, c| m[r][c])
}

impl SchemeMatrices {
    /// Assembles all matrices for `kind` at parameters `p`.
    ///
    /// Fails if the invertible block of `K` is numerically singular or the
    /// kernel of `K` is not one-dimensional (both indicate degenerate
    /// relaxation rates rather than a closure property).
    pub fn new(p: &SchemeParams, kind: &ClosureKind) -> Result<Self, AnalysisError> {
        let lambda = p.lambda();
        let m = lattice_core::stencil::moment_matrix(lambda);
        let m_inv = lattice_core::stencil::inverse_moment_matrix(lambda);
        let j0 = lattice_core::moments::relaxation_matrix(p);
        let u = streaming_selector();
        let t = reconstruction(kind);

        // Post-collision map in moment space, reused by every product.
        let minv_j0 = mat_mul(&m_inv, &j0);

        // K = I - M (T + U) Minv J0
        let mut t_plus_u = t;
        for (row, u_row) in t_plus_u.iter_mut().zip(u.iter()) {
            for (dst, src) in row.iter_mut().zip(u_row.iter()) {
                *dst += src;
            }
        }
        let closure = mat_mul(&m, &mat_mul(&t_plus_u, &minv_j0));
        let mut k = identity();
        for (k_row, c_row) in k.iter_mut().zip(closure.iter()) {
            for (dst, src) in k_row.iter_mut().zip(c_row.iter()) {
                *dst -= src;
            }
        }

        // Advection matrices carry the streaming selector and velocity
        // diagonals; the local part T never multiplies a gradient.
        let vx = diag(std::array::from_fn(|d| lambda * DIR[d][0] as f64));
        let vy = diag(std::array::from_fn(|d| lambda * DIR[d][1] as f64));
        let advection = |vel: &Mat9| mat_mul(&m, &mat_mul(&u, &mat_mul(vel, &minv_j0)));
        let bx = advection(&vx);
        let by = advection(&vy);
        let bxx = advection(&mat_mul(&vx, &vx));
        let bxy = advection(&mat_mul(&vx, &vy));
        let byy = advection(&mat_mul(&vy, &vy));

        // Sigma: drop the mass row and column, invert the rest.
        let block = nalgebra::SMatrix::<f64, 8, 8>::from_fn(|r, c| k[r + 1][c + 1]);
        let inv = block.try_inverse().ok_or(AnalysisError::SingularBlock)?;
        let mut sigma = [[0.0; Q]; Q];
        for r in 0..8 {
            for c in 0..8 {
                sigma[r + 1][c + 1] = inv[(r, c)];
            }
        }

        // Kernel structure by singular values.
        let svd = to_na(&k).svd(true, false);
        let s_max = svd.singular_values.iter().fold(0.0_f64, |a, &v| a.max(v));
        let mut kernel_dim = 0;
        let mut min_idx = 0;
        let mut min_sv = f64::INFINITY;
        for (i, &sv) in svd.singular_values.iter().enumerate() {
            if sv < KERNEL_TOL * s_max {
                kernel_dim += 1;
            }
            if sv < min_sv {
                min_sv = sv;
                min_idx = i;
            }
        }
        if kernel_dim != 1 {
            return Err(AnalysisError::KernelDimension(kernel_dim));
        }
        let u_cols = svd.u.expect("svd requested u");
        let left_null = std::array::from_fn(|r| u_cols[(r, min_idx)]);

        let l2 = lambda * lambda;
        let mu0 = [
            1.0,
            0.0,
            0.0,
            p.alpha() * l2,
            0.0,
            0.0,
            0.0,
            0.0,
            p.beta() * l2 * l2,
        ];

        Ok(SchemeMatrices {
            m,
            m_inv,
            j0,
            u,
            t,
            k,
            sigma,
            bx,
            by,
            bxx,
            bxy,
            byy,
            mu0,
            left_null,
            kernel_dim,
        })
    }

    /// `K mu0` — zero for every closure, any parameters.
    pub fn kernel_defect(&self) -> f64 {
        lattice_core::stencil::mat_vec(&self.k, &self.mu0)
            .iter()
            .fold(0.0_f64, |a, v| a.max(v.abs()))
    }
}

/// Hand-expanded closed forms of the closure matrix `K` and pseudo-solver
/// `Sigma` for the two fixed-coefficient closures.
///
/// These were worked out entry by entry, independently of the matrix
/// products in [`SchemeMatrices::new`]; the assembly must reproduce them
/// exactly (to rounding).  Both the unit tests and the acceptance harness
/// check that agreement.
pub mod closed_forms {
    use super::{Mat9, Q, SchemeParams};

    /// Closed-form classical closure matrix.
    pub fn classical_k(p: &SchemeParams) -> Mat9 {
        let l = p.lambda();
        let (s3, s4, s7, s8) = (p.s3(), p.s4(), p.s7(), p.s8());
        let (alpha, beta) = (p.alpha(), p.beta());
        let mut k = [[0.0; Q]; Q];
        k[0][2] = 1.0 / l;
        k[1][1] = (2.0 - s7) / 3.0;
        k[1][6] = (1.0 - s7) / (3.0 * l * l);
        k[2][2] = 1.0;
        k[3][0] = -s3 * alpha * l * l;
        k[3][2] = l * (1.0 - s7);
        k[3][3] = s3;
        k[3][7] = (1.0 - s7) / l;
        k[4][2] = -l * (1.0 + s7) / 3.0;
        k[4][4] = s4;
        k[4][7] = (1.0 - s7) / (3.0 * l);
        k[5][1] = l * (2.0 - s7) / 3.0;
        k[5][5] = s4;
        k[5][6] = (1.0 - s7) / (3.0 * l);
        k[6][1] = 2.0 * l * l * (1.0 + s7) / 3.0;
        k[6][6] = (1.0 + 2.0 * s7) / 3.0;
        k[7][7] = 1.0;
        k[8][0] = -beta * s8 * l.powi(4);
        k[8][2] = -s7 * l.powi(3);
        k[8][7] = l * (1.0 - s7);
        k[8][8] = s8;
        k
    }

    /// Closed-form first-order closure matrix.
    pub fn first_order_k(p: &SchemeParams) -> Mat9 {
        let l = p.lambda();
        let (s3, s4, s7, s8) = (p.s3(), p.s4(), p.s7(), p.s8());
        let (alpha, beta) = (p.alpha(), p.beta());
        let mut k = [[0.0; Q]; Q];
        k[0][2] = 1.0 / l;
        k[1][1] = 1.0 / 3.0;
        k[2][2] = 1.0;
        k[3][0] = -s3 * alpha * l * l;
        k[3][3] = s3;
        k[4][2] = -2.0 * l / 3.0;
        k[4][4] = s4;
        k[5][1] = l / 3.0;
        k[5][5] = s4;
        k[6][1] = l * l * (1.0 + 3.0 * s7) / 3.0;
        k[6][6] = s7;
        k[7][2] = l * l * (s7 - 1.0);
        k[7][7] = s7;
        k[8][0] = -beta * s8 * l.powi(4);
        k[8][2] = -l.powi(3);
        k[8][8] = s8;
        k
    }

    /// Closed-form classical pseudo-solver.
    pub fn classical_sigma(p: &SchemeParams) -> Mat9 {
        let l = p.lambda();
        let (s3, s4, s7, s8) = (p.s3(), p.s4(), p.s7(), p.s8());
        let mut s = [[0.0; Q]; Q];
        s[1][1] = 2.0 + 1.0 / s7;
        s[1][6] = (1.0 - 1.0 / s7) / (l * l);
        s[2][2] = 1.0;
        s[3][2] = l * (s7 - 1.0) / s3;
        s[3][3] = 1.0 / s3;
        s[3][7] = (s7 - 1.0) / (l * s3);
        s[4][2] = l * (1.0 + s7) / (3.0 * s4);
        s[4][4] = 1.0 / s4;
        s[4][7] = (s7 - 1.0) / (3.0 * l * s4);
        s[5][1] = -l / s4;
        s[5][5] = 1.0 / s4;
        s[6][1] = -2.0 * l * l * (1.0 + 1.0 / s7);
        s[6][6] = 2.0 / s7 - 1.0;
        s[7][7] = 1.0;
        s[8][2] = l.powi(3) * s7 / s8;
        s[8][7] = l * (s7 - 1.0) / s8;
        s[8][8] = 1.0 / s8;
        s
    }

    /// Closed-form first-order pseudo-solver.
    pub fn first_order_sigma(p: &SchemeParams) -> Mat9 {
        let l = p.lambda();
        let (s3, s4, s7, s8) = (p.s3(), p.s4(), p.s7(), p.s8());
        let mut s = [[0.0; Q]; Q];
        s[1][1] = 3.0;
        s[2][2] = 1.0;
        s[3][3] = 1.0 / s3;
        s[4][2] = 2.0 * l / (3.0 * s4);
        s[4][4] = 1.0 / s4;
        s[5][1] = -l / s4;
        s[5][5] = 1.0 / s4;
        s[6][1] = -l * l * (1.0 + 3.0 * s7) / s7;
        s[6][6] = 1.0 / s7;
        s[7][2] = -l * l * (s7 - 1.0) / s7;
        s[7][7] = 1.0 / s7;
        s[8][2] = l.powi(3) / s8;
        s[8][8] = 1.0 / s8;
        s
    }
}
