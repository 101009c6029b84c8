//! Validated parameter bundle for the D2Q9 MRT scheme.
//!
//! A [`SchemeParams`] instance is immutable once built and guarantees:
//!
//! * `dx > 0`, `dt > 0` and both finite, so `lambda = dx / dt` is a valid
//!   lattice speed;
//! * every relaxation rate `s3, s4, s7, s8` lies in `(0, 2]`, the linearly
//!   stable range for the relaxation `m* = m + s (m_eq - m)`;
//! * `alpha > -4`, keeping the model sound speed
//!   `c0^2 = lambda^2 (alpha + 4) / 6` positive.
//!
//! The pair `(s4, s7)` plays a special role in wall accuracy, so the
//! half-shifted combinations `sigma_k = 1/s_k - 1/2` get their own accessors.

use crate::LatticeError;

/// Immutable, validated scheme parameters.
///
/// The second-order moments `xx`, `xy` share the rate `s4` and the
/// third-order moments `qx`, `qy` share the rate `s7`; `s3` relaxes the
/// energy and `s8` the fourth-order energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeParams {
    dx: f64,
    dt: f64,
    alpha: f64,
    beta: f64,
    s3: f64,
    s4: f64,
    s7: f64,
    s8: f64,
}

fn check_rate(name: &'static str, value: f64) -> Result<(), LatticeError> {
    if !value.is_finite() {
        return Err(LatticeError::NonFinite { name, value });
    }
    if value <= 0.0 || value > 2.0 {
        return Err(LatticeError::RateOutOfRange { name, value });
    }
    Ok(())
}

impl SchemeParams {
    /// Builds a validated parameter set.
    ///
    /// # Errors
    ///
    /// Returns [`LatticeError`] when a step size is non-positive, a rate is
    /// outside `(0, 2]`, a coefficient is non-finite, or `alpha <= -4`.
    pub fn new(
        dx: f64,
        dt: f64,
        alpha: f64,
        beta: f64,
        s3: f64,
        s4: f64,
        s7: f64,
        s8: f64,
    ) -> Result<Self, LatticeError> {
        if !(dx.is_finite() && dt.is_finite()) || dx <= 0.0 || dt <= 0.0 {
            return Err(LatticeError::InvalidStep { dx, dt });
        }
        if !alpha.is_finite() {
            return Err(LatticeError::NonFinite {
                name: "alpha",
                value: alpha,
            });
        }
        if !beta.is_finite() {
            return Err(LatticeError::NonFinite {
                name: "beta",
                value: beta,
            });
        }
        if alpha <= -4.0 {
            return Err(LatticeError::DegenerateSoundSpeed { alpha });
        }
        check_rate("s3", s3)?;
        check_rate("s4", s4)?;
        check_rate("s7", s7)?;
        check_rate("s8", s8)?;
        Ok(Self {
            dx,
            dt,
            alpha,
            beta,
            s3,
            s4,
            s7,
            s8,
        })
    }

    /// Parameter set in lattice units (`dx = dt = 1`).
    pub fn lattice_units(
        alpha: f64,
        beta: f64,
        s3: f64,
        s4: f64,
        s7: f64,
        s8: f64,
    ) -> Result<Self, LatticeError> {
        Self::new(1.0, 1.0, alpha, beta, s3, s4, s7, s8)
    }

    /// Lattice units with the common equilibrium choice `alpha = -2`,
    /// `beta = 1`, which reproduces the familiar 4/9, 1/9, 1/36 rest weights.
    pub fn standard(s3: f64, s4: f64, s7: f64, s8: f64) -> Result<Self, LatticeError> {
        Self::lattice_units(-2.0, 1.0, s3, s4, s7, s8)
    }

    /// Grid spacing.
    #[inline]
    pub fn dx(&self) -> f64 {
        self.dx
    }

    /// Time step.
    #[inline]
    pub fn dt(&self) -> f64 {
        self.dt
    }

    /// Lattice speed `lambda = dx / dt`.
    #[inline]
    pub fn lambda(&self) -> f64 {
        self.dx / self.dt
    }

    /// Energy equilibrium coefficient.
    #[inline]
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Fourth-order energy equilibrium coefficient.
    #[inline]
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Relaxation rate of the energy moment `m3`.
    #[inline]
    pub fn s3(&self) -> f64 {
        self.s3
    }

    /// Relaxation rate of the second-order moments `m4`, `m5`.
    #[inline]
    pub fn s4(&self) -> f64 {
        self.s4
    }

    /// Relaxation rate of the third-order moments `m6`, `m7`.
    #[inline]
    pub fn s7(&self) -> f64 {
        self.s7
    }

    /// Relaxation rate of the fourth-order moment `m8`.
    #[inline]
    pub fn s8(&self) -> f64 {
        self.s8
    }

    /// Half-shifted rate `sigma3 = 1/s3 - 1/2`.
    #[inline]
    pub fn sigma3(&self) -> f64 {
        1.0 / self.s3 - 0.5
    }

    /// Half-shifted rate `sigma4 = 1/s4 - 1/2`; the shear viscosity is
    /// `nu = lambda^2 dt sigma4 / 3`.
    #[inline]
    pub fn sigma4(&self) -> f64 {
        1.0 / self.s4 - 0.5
    }

    /// Half-shifted rate `sigma7 = 1/s7 - 1/2`.
    #[inline]
    pub fn sigma7(&self) -> f64 {
        1.0 / self.s7 - 0.5
    }

    /// Half-shifted rate `sigma8 = 1/s8 - 1/2`.
    #[inline]
    pub fn sigma8(&self) -> f64 {
        1.0 / self.s8 - 0.5
    }

    /// Model sound speed squared, `c0^2 = lambda^2 (alpha + 4) / 6`.
    #[inline]
    pub fn c0_squared(&self) -> f64 {
        self.lambda() * self.lambda() * (self.alpha + 4.0) / 6.0
    }

    /// Kinematic shear viscosity `nu = lambda^2 dt sigma4 / 3`.
    #[inline]
    pub fn viscosity(&self) -> f64 {
        self.lambda() * self.lambda() * self.dt * self.sigma4() / 3.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_standard_parameters() {
        let p = SchemeParams::standard(1.5, 1.2, 1.0, 0.8).expect("valid parameters");
        assert_eq!(p.lambda(), 1.0, "lattice units must give unit speed");
        assert_eq!(p.alpha(), -2.0);
        assert_eq!(p.beta(), 1.0);
    }

    #[test]
    fn sigma_is_half_shifted_inverse_rate() {
        let p = SchemeParams::standard(1.0, 1.2, 1.0, 1.0).unwrap();
        // 1/1.2 - 1/2 = 1/3.
        assert!(
            (p.sigma4() - 1.0 / 3.0).abs() < 1e-15,
            "sigma4 = 1/s4 - 1/2, got {}",
            p.sigma4()
        );
    }

    #[test]
    fn rejects_out_of_range_rates() {
        assert!(matches!(
            SchemeParams::standard(1.0, 0.0, 1.0, 1.0),
            Err(LatticeError::RateOutOfRange { name: "s4", .. })
        ));
        assert!(matches!(
            SchemeParams::standard(1.0, 1.0, 2.5, 1.0),
            Err(LatticeError::RateOutOfRange { name: "s7", .. })
        ));
    }

    #[test]
    fn rejects_degenerate_sound_speed() {
        assert!(matches!(
            SchemeParams::lattice_units(-5.0, 1.0, 1.0, 1.0, 1.0, 1.0),
            Err(LatticeError::DegenerateSoundSpeed { .. })
        ));
        // alpha = -4 exactly is also degenerate (c0 = 0).
        assert!(SchemeParams::lattice_units(-4.0, 1.0, 1.0, 1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn rejects_bad_steps() {
        assert!(SchemeParams::new(0.0, 1.0, -2.0, 1.0, 1.0, 1.0, 1.0, 1.0).is_err());
        assert!(SchemeParams::new(1.0, -1.0, -2.0, 1.0, 1.0, 1.0, 1.0, 1.0).is_err());
        assert!(SchemeParams::new(f64::NAN, 1.0, -2.0, 1.0, 1.0, 1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn sound_speed_and_viscosity_formulas() {
        let p = SchemeParams::new(0.5, 0.25, -2.0, 1.0, 1.0, 1.0, 1.0, 1.0).unwrap();
        let lambda = 2.0;
        assert_eq!(p.lambda(), lambda);
        assert!((p.c0_squared() - lambda * lambda * 2.0 / 6.0).abs() < 1e-15);
        // sigma4 = 1/2 at s4 = 1.
        assert!((p.viscosity() - lambda * lambda * 0.25 * 0.5 / 3.0).abs() < 1e-15);
    }
}
