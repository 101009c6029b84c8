//! Frozen-value checks of the moment algebra plus property-based round trips.
//!
//! The frozen values below are hand-derived from the matrix definition:
//! a unit rest population is the first column of `M`, the equilibrium
//! moments follow the closed form `(rho, jx, jy, alpha lambda^2 rho, 0, 0,
//! -lambda^2 jx, -lambda^2 jy, beta lambda^4 rho)`, and the axis equilibria
//! differ by `2 jx / (3 lambda)`.

use lattice_core::moments::{
    collision_matrix, equilibrium_moments, equilibrium_populations, moments_from_populations,
    populations_from_moments, relax,
};
use lattice_core::stencil::{mat_vec, Q};
use lattice_core::SchemeParams;
use proptest::prelude::*;

const TOL_EXACT: f64 = 1e-14;
const TOL_CHAIN: f64 = 1e-12;

fn std_params() -> SchemeParams {
    SchemeParams::standard(1.2, 1.1, 1.4, 0.9).unwrap()
}

#[test]
fn unit_rest_population_maps_to_first_matrix_column() {
    let mut f = [0.0; Q];
    f[0] = 1.0;
    let m = moments_from_populations(&f, 1.0);
    let expected = [1.0, 0.0, 0.0, -4.0, 0.0, 0.0, 0.0, 0.0, 4.0];
    for k in 0..Q {
        assert!(
            (m[k] - expected[k]).abs() <= TOL_EXACT,
            "moment {k}: got {}, expected {}",
            m[k],
            expected[k]
        );
    }
}

#[test]
fn rest_equilibrium_moments_at_standard_coefficients() {
    let p = std_params();
    let m = equilibrium_moments(1.0, 0.0, 0.0, &p);
    let expected = [1.0, 0.0, 0.0, -2.0, 0.0, 0.0, 0.0, 0.0, 1.0];
    for k in 0..Q {
        assert!(
            (m[k] - expected[k]).abs() <= TOL_EXACT,
            "moment {k}: got {}, expected {}",
            m[k],
            expected[k]
        );
    }
}

#[test]
fn moving_equilibrium_sets_third_order_moments() {
    let p = std_params();
    let m = equilibrium_moments(1.0, 0.1, 0.0, &p);
    assert!((m[1] - 0.1).abs() <= TOL_EXACT, "jx is conserved as given");
    assert!((m[6] + 0.1).abs() <= TOL_EXACT, "qx_eq = -lambda^2 jx");
    assert!(m[7].abs() <= TOL_EXACT, "qy_eq vanishes when jy = 0");
}

#[test]
fn rest_equilibrium_weights_are_4_9_1_9_1_36() {
    let p = std_params();
    let f = equilibrium_populations(1.0, 0.0, 0.0, &p);
    let expected = [
        4.0 / 9.0,
        1.0 / 9.0,
        1.0 / 9.0,
        1.0 / 9.0,
        1.0 / 9.0,
        1.0 / 36.0,
        1.0 / 36.0,
        1.0 / 36.0,
        1.0 / 36.0,
    ];
    for d in 0..Q {
        assert!(
            (f[d] - expected[d]).abs() <= TOL_EXACT,
            "weight {d}: got {}, expected {}",
            f[d],
            expected[d]
        );
    }
}

#[test]
fn small_axis_velocity_splits_axis_populations() {
    // jx = 0.01 at rho = 1: f1 - f3 = 2 jx / (3 lambda) = 1/150.
    let p = std_params();
    let f = equilibrium_populations(1.0, 0.01, 0.0, &p);
    assert!(
        (f[1] - f[3] - 1.0 / 150.0).abs() <= TOL_EXACT,
        "f1 - f3 = {}, expected 1/150",
        f[1] - f[3]
    );
}

#[test]
fn relaxing_pure_density_pulls_energy_to_equilibrium() {
    // m = (1, 0, ..., 0), s3 = 1.5: m3* = 0 + 1.5 (alpha - 0) = -3 at
    // alpha = -2, lambda = 1.
    let p = SchemeParams::standard(1.5, 1.0, 1.0, 0.9).unwrap();
    let mut m = [0.0; Q];
    m[0] = 1.0;
    let out = relax(&m, &p);
    assert!(
        (out[3] + 3.0).abs() <= TOL_EXACT,
        "m3* = {}, expected -3",
        out[3]
    );
    assert!(
        (out[8] - 0.9).abs() <= TOL_EXACT,
        "m8* = s8 beta rho = 0.9 at s8 = 0.9, got {}",
        out[8]
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn moment_transform_round_trips(
        f in prop::array::uniform9(-1.0f64..1.0),
        lambda in 0.25f64..4.0,
    ) {
        let m = moments_from_populations(&f, lambda);
        let back = populations_from_moments(&m, lambda);
        for d in 0..Q {
            prop_assert!(
                (back[d] - f[d]).abs() <= TOL_EXACT * 10.0,
                "population {} round trip: {} vs {}", d, back[d], f[d]
            );
        }
    }

    #[test]
    fn collision_matrix_agrees_with_moment_space_relaxation(
        f in prop::array::uniform9(-1.0f64..1.0),
        s3 in 0.2f64..1.9,
        s4 in 0.2f64..1.9,
        s7 in 0.2f64..1.9,
        s8 in 0.2f64..1.9,
        alpha in -3.9f64..4.0,
        beta in -2.0f64..2.0,
    ) {
        let p = SchemeParams::lattice_units(alpha, beta, s3, s4, s7, s8).unwrap();
        // Route 1: transform, relax in moment space, transform back.
        let m = moments_from_populations(&f, p.lambda());
        let relaxed = relax(&m, &p);
        let via_moments = populations_from_moments(&relaxed, p.lambda());
        // Route 2: the precomputed population-space matrix.
        let c = collision_matrix(&p);
        let via_matrix = mat_vec(&c, &f);
        for d in 0..Q {
            prop_assert!(
                (via_moments[d] - via_matrix[d]).abs() <= TOL_CHAIN,
                "population {}: {} vs {}", d, via_moments[d], via_matrix[d]
            );
        }
    }

    #[test]
    fn collision_conserves_density_and_momentum(
        f in prop::array::uniform9(-1.0f64..1.0),
        s4 in 0.2f64..1.9,
        s7 in 0.2f64..1.9,
    ) {
        let p = SchemeParams::standard(1.1, s4, s7, 1.3).unwrap();
        let c = collision_matrix(&p);
        let out = mat_vec(&c, &f);
        let m_in = moments_from_populations(&f, 1.0);
        let m_out = moments_from_populations(&out, 1.0);
        for k in 0..3 {
            prop_assert!(
                (m_in[k] - m_out[k]).abs() <= TOL_CHAIN,
                "conserved moment {} changed: {} -> {}", k, m_in[k], m_out[k]
            );
        }
    }
}
