//! The D2Q9 stencil and its raw-moment transform.
//!
//! The moment matrix `M` used throughout the workspace has mutually
//! orthogonal rows (with respect to the uniform weight), so its inverse is
//! the closed form `M^-1 = M^T D^-1` where `D = diag(M M^T)`. No numerical
//! inversion is ever needed.

/// Number of velocities.
pub const Q: usize = 9;

/// A dense 9x9 matrix in row-major order.
pub type Mat9 = [[f64; Q]; Q];

/// Unit velocity directions `e_j`; the physical velocity is
/// `v_j = lambda e_j`.
///
/// ```text
///   6   2   5
///     \ | /
///   3 - 0 - 1
///     / | \
///   7   4   8
/// ```
pub const DIR: [[i32; 2]; Q] = [
    [0, 0],   // 0: rest
    [1, 0],   // 1: +x
    [0, 1],   // 2: +y
    [-1, 0],  // 3: -x
    [0, -1],  // 4: -y
    [1, 1],   // 5: +x +y
    [-1, 1],  // 6: -x +y
    [-1, -1], // 7: -x -y
    [1, -1],  // 8: +x -y
];

/// Index of the opposite velocity: `DIR[OPPOSITE[j]] == -DIR[j]`.
pub const OPPOSITE: [usize; Q] = [0, 3, 4, 1, 2, 7, 8, 5, 6];

/// Human-readable names of the nine raw moments, in matrix row order.
pub const MOMENT_NAMES: [&str; Q] = ["rho", "jx", "jy", "e", "xx", "xy", "qx", "qy", "ee"];

/// Raw-moment transform `M` for lattice speed `lambda`.
///
/// Row `k` gives moment `m_k = sum_j M[k][j] f_j`:
///
/// ```text
/// rho:  1, 1, 1, 1, 1, 1, 1, 1, 1
/// jx :  lambda   * (0,  1,  0, -1,  0,  1, -1, -1,  1)
/// jy :  lambda   * (0,  0,  1,  0, -1,  1,  1, -1, -1)
/// e  :  lambda^2 * (-4, -1, -1, -1, -1,  2,  2,  2,  2)
/// xx :  lambda^2 * (0,  1, -1,  1, -1,  0,  0,  0,  0)
/// xy :  lambda^2 * (0,  0,  0,  0,  0,  1, -1,  1, -1)
/// qx :  lambda^3 * (0, -2,  0,  2,  0,  1, -1, -1,  1)
/// qy :  lambda^3 * (0,  0, -2,  0,  2,  1,  1, -1, -1)
/// ee :  lambda^4 * (4, -2, -2, -2, -2,  1,  1,  1,  1)
/// ```
pub fn moment_matrix(lambda: f64) -> Mat9 {
    let l2 = lambda * lambda;
    let l3 = l2 * lambda;
    let l4 = l2 * l2;
    let rows: [(f64, [f64; Q]); Q] = [
        (1.0, [1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0]),
        (lambda, [0.0, 1.0, 0.0, -1.0, 0.0, 1.0, -1.0, -1.0, 1.0]),
        (lambda, [0.0, 0.0, 1.0, 0.0, -1.0, 1.0, 1.0, -1.0, -1.0]),
        (l2, [-4.0, -1.0, -1.0, -1.0, -1.0, 2.0, 2.0, 2.0, 2.0]),
        (l2, [0.0, 1.0, -1.0, 1.0, -1.0, 0.0, 0.0, 0.0, 0.0]),
        (l2, [0.0, 0.0, 0.0, 0.0, 0.0, 1.0, -1.0, 1.0, -1.0]),
        (l3, [0.0, -2.0, 0.0, 2.0, 0.0, 1.0, -1.0, -1.0, 1.0]),
        (l3, [0.0, 0.0, -2.0, 0.0, 2.0, 1.0, 1.0, -1.0, -1.0]),
        (l4, [4.0, -2.0, -2.0, -2.0, -2.0, 1.0, 1.0, 1.0, 1.0]),
    ];
    let mut m = [[0.0; Q]; Q];
    for (k, (scale, row)) in rows.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            m[k][j] = scale * entry;
        }
    }
    m
}

/// Row norms `D = diag(M M^T)` of the moment matrix.
pub fn moment_norms(lambda: f64) -> [f64; Q] {
    let l2 = lambda * lambda;
    let l4 = l2 * l2;
    let l6 = l4 * l2;
    let l8 = l4 * l4;
    [
        9.0,
        6.0 * l2,
        6.0 * l2,
        36.0 * l4,
        4.0 * l4,
        4.0 * l4,
        12.0 * l6,
        12.0 * l6,
        36.0 * l8,
    ]
}

/// Closed-form inverse of the moment matrix, `M^-1 = M^T D^-1`.
pub fn inverse_moment_matrix(lambda: f64) -> Mat9 {
    let m = moment_matrix(lambda);
    let d = moment_norms(lambda);
    let mut inv = [[0.0; Q]; Q];
    for j in 0..Q {
        for k in 0..Q {
            inv[j][k] = m[k][j] / d[k];
        }
    }
    inv
}

/// Dense 9x9 matrix product `a * b`.
pub fn mat_mul(a: &Mat9, b: &Mat9) -> Mat9 {
    let mut out = [[0.0; Q]; Q];
    for i in 0..Q {
        for k in 0..Q {
            let aik = a[i][k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..Q {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

/// Matrix-vector product `a * x`.
#[inline]
pub fn mat_vec(a: &Mat9, x: &[f64; Q]) -> [f64; Q] {
    let mut out = [0.0; Q];
    for i in 0..Q {
        let mut acc = 0.0;
        for j in 0..Q {
            acc += a[i][j] * x[j];
        }
        out[i] = acc;
    }
    out
}

/// The 9x9 identity matrix.
pub fn identity() -> Mat9 {
    let mut out = [[0.0; Q]; Q];
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-14;

    #[test]
    fn opposites_negate_directions() {
        for j in 0..Q {
            let o = OPPOSITE[j];
            assert_eq!(DIR[o][0], -DIR[j][0], "x component of opposite of {j}");
            assert_eq!(DIR[o][1], -DIR[j][1], "y component of opposite of {j}");
            assert_eq!(OPPOSITE[o], j, "opposite must be an involution at {j}");
        }
    }

    #[test]
    fn moment_rows_match_velocity_polynomials() {
        // Rows 1, 2 are the momentum rows lambda e_j; rows 4, 5 the stress
        // differences; spot-check them against the direction table.
        let lambda = 2.0;
        let m = moment_matrix(lambda);
        for j in 0..Q {
            assert_eq!(m[1][j], lambda * DIR[j][0] as f64, "jx row at {j}");
            assert_eq!(m[2][j], lambda * DIR[j][1] as f64, "jy row at {j}");
            let vx = lambda * DIR[j][0] as f64;
            let vy = lambda * DIR[j][1] as f64;
            assert_eq!(m[4][j], vx * vx - vy * vy, "xx row at {j}");
            assert_eq!(m[5][j], vx * vy, "xy row at {j}");
        }
    }

    #[test]
    fn rows_are_orthogonal_with_norms_d() {
        for &lambda in &[1.0, 0.5, 3.0] {
            let m = moment_matrix(lambda);
            let d = moment_norms(lambda);
            for k in 0..Q {
                for l in 0..Q {
                    let dot: f64 = (0..Q).map(|j| m[k][j] * m[l][j]).sum();
                    let expect = if k == l { d[k] } else { 0.0 };
                    let scale = (d[k] * d[l]).sqrt();
                    assert!(
                        (dot - expect).abs() <= TOL * scale,
                        "row {k} . row {l} = {dot}, expected {expect} at lambda = {lambda}"
                    );
                }
            }
        }
    }

    #[test]
    fn closed_form_inverse_is_exact() {
        for &lambda in &[1.0, 0.25, 2.0] {
            let m = moment_matrix(lambda);
            let inv = inverse_moment_matrix(lambda);
            let prod = mat_mul(&m, &inv);
            let eye = identity();
            for i in 0..Q {
                for j in 0..Q {
                    assert!(
                        (prod[i][j] - eye[i][j]).abs() <= TOL,
                        "M M^-1 deviates at ({i}, {j}) for lambda = {lambda}: {}",
                        prod[i][j]
                    );
                }
            }
        }
    }
}
