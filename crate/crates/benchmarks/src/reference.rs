//! Closed-form Stokes solution for the cosine-wall channel.
//!
//! A periodic strip of length `L` along `x` and height `h` along `y` is
//! driven through both walls by a tangential momentum wave:
//!
//! ```text
//!        Jx = J0 cos(Kx)                        K = 2 pi / L
//!   y=h ===================================
//!        |  ->   <-    ->    <-   ->      |     periodic in x
//!        |    (recirculating cells)       |
//!   y=0 ===================================
//!        Jx = J0 cos(Kx)
//! ```
//!
//! The steady Stokes problem (`div J = 0`, `grad p = nu lap J`) with these
//! wall values has a separable stream-function solution,
//!
//! ```text
//!   psi = f(y) cos(Kx),      Jx = df/dy cos(Kx),   Jy = K f sin(Kx),
//!
//!   f(y) = (J0 / D) [ -h sinh(Ky) + sinh(Kh) y cosh(Ky)
//!                     + (1 - cosh(Kh)) y sinh(Ky) ],   D = sinh(Kh) - Kh,
//! ```
//!
//! and the pressure follows from the tangential momentum balance:
//!
//! ```text
//!   p = (nu / K) (f''' - K^2 f') sin(Kx),      rho = 1 + p / c0^2.
//! ```
//!
//! `f` solves `(d^2/dy^2 - K^2)^2 f = 0`, which supplies the fourth and
//! fifth derivatives from the lower ones.  [`AccordionSolution::stokes_defect`]
//! re-checks the whole construction numerically with fourth-order finite
//! differences, so the formulas above never have to be trusted on faith.

use taylor_analysis::Field;

/// Fourth-order central first derivative of a 1-d closure.
fn fd1(g: impl Fn(f64) -> f64, t: f64, eta: f64) -> f64 {
    (-g(t + 2.0 * eta) + 8.0 * g(t + eta) - 8.0 * g(t - eta) + g(t - 2.0 * eta)) / (12.0 * eta)
}

/// Fourth-order central second derivative of a 1-d closure.
fn fd2(g: impl Fn(f64) -> f64, t: f64, eta: f64) -> f64 {
    (-g(t + 2.0 * eta) + 16.0 * g(t + eta) - 30.0 * g(t) + 16.0 * g(t - eta) - g(t - 2.0 * eta))
        / (12.0 * eta * eta)
}

/// The exact cosine-wall Stokes flow on `]0, L[ x ]0, h[`.
#[derive(Debug, Clone, Copy)]
pub struct AccordionSolution {
    j0: f64,
    length: f64,
    height: f64,
    kap: f64,
    nu: f64,
    c0_squared: f64,
    /// Coefficient of `y cosh(Ky)` in `f / (J0/D)`: `sinh(Kh)`.
    coef_cosh: f64,
    /// Coefficient of `y sinh(Ky)` in `f / (J0/D)`: `1 - cosh(Kh)`.
    coef_sinh: f64,
    /// Overall scale `J0 / D`.
    scale: f64,
}

impl AccordionSolution {
    /// Builds the solution for wall amplitude `j0` on an `length x height`
    /// strip, with viscosity `nu` and squared sound speed `c0_squared`
    /// fixing the density field.
    ///
    /// # Panics
    ///
    /// Panics unless `length`, `height`, `nu` and `c0_squared` are positive
    /// and finite.
    pub fn new(j0: f64, length: f64, height: f64, nu: f64, c0_squared: f64) -> Self {
        assert!(
            length > 0.0 && height > 0.0 && length.is_finite() && height.is_finite(),
            "domain must be positive and finite, got {length} x {height}"
        );
        assert!(
            nu > 0.0 && nu.is_finite() && c0_squared > 0.0 && c0_squared.is_finite(),
            "transport coefficients must be positive and finite, got nu {nu}, c0^2 {c0_squared}"
        );
        let kap = 2.0 * std::f64::consts::PI / length;
        let kh = kap * height;
        // D = sinh(Kh) - Kh > 0 for Kh > 0, so the scale is well defined.
        let d = kh.sinh() - kh;
        Self {
            j0,
            length,
            height,
            kap,
            nu,
            c0_squared,
            coef_cosh: kh.sinh(),
            coef_sinh: 1.0 - kh.cosh(),
            scale: j0 / d,
        }
    }

    /// Wall wavenumber `K = 2 pi / L`.
    #[inline]
    pub fn wavenumber(&self) -> f64 {
        self.kap
    }

    /// Domain length along the wall.
    #[inline]
    pub fn length(&self) -> f64 {
        self.length
    }

    /// Wall separation.
    #[inline]
    pub fn height(&self) -> f64 {
        self.height
    }

    /// Wall amplitude `J0`.
    #[inline]
    pub fn amplitude(&self) -> f64 {
        self.j0
    }

    /// `d^order f / dy^order`, for `order <= 5`.
    ///
    /// Orders zero to three are written out; four and five use the defining
    /// identity `f'''' = 2 K^2 f'' - K^4 f` (and its derivative), which the
    /// basis functions satisfy exactly.
    pub fn f(&self, order: usize, y: f64) -> f64 {
        let k = self.kap;
        let (a, b) = (self.coef_cosh, self.coef_sinh);
        let (sh, ch) = ((k * y).sinh(), (k * y).cosh());
        let value = match order {
            0 => -self.height * sh + a * y * ch + b * y * sh,
            1 => {
                -self.height * k * ch + a * (ch + y * k * sh) + b * (sh + y * k * ch)
            }
            2 => {
                -self.height * k * k * sh
                    + a * (2.0 * k * sh + y * k * k * ch)
                    + b * (2.0 * k * ch + y * k * k * sh)
            }
            3 => {
                -self.height * k.powi(3) * ch
                    + a * (3.0 * k * k * ch + y * k.powi(3) * sh)
                    + b * (3.0 * k * k * sh + y * k.powi(3) * ch)
            }
            4 => {
                return 2.0 * k * k * self.f(2, y) - k.powi(4) * self.f(0, y);
            }
            5 => {
                return 2.0 * k * k * self.f(3, y) - k.powi(4) * self.f(1, y);
            }
            _ => panic!("profile derivatives are available up to order 5, asked for {order}"),
        };
        self.scale * value
    }

    /// Tangential momentum `Jx = f'(y) cos(Kx)`.
    #[inline]
    pub fn jx(&self, x: f64, y: f64) -> f64 {
        self.f(1, y) * (self.kap * x).cos()
    }

    /// Normal momentum `Jy = K f(y) sin(Kx)`.
    #[inline]
    pub fn jy(&self, x: f64, y: f64) -> f64 {
        self.kap * self.f(0, y) * (self.kap * x).sin()
    }

    /// Pressure perturbation `p = (nu/K)(f''' - K^2 f') sin(Kx)`.
    #[inline]
    pub fn pressure(&self, x: f64, y: f64) -> f64 {
        let k = self.kap;
        self.nu / k * (self.f(3, y) - k * k * self.f(1, y)) * (k * x).sin()
    }

    /// Density `rho = 1 + p / c0^2`.
    #[inline]
    pub fn rho(&self, x: f64, y: f64) -> f64 {
        1.0 + self.pressure(x, y) / self.c0_squared
    }

    /// Spatial derivative `d^bx/dx^bx d^by/dy^by` of a field at `(x, y)`.
    ///
    /// All three fields are `g(y) * trig(Kx)` (plus the constant one in the
    /// density), so an `x`-derivative walks the trigonometric cycle and a
    /// `y`-derivative climbs the profile derivatives.
    pub fn derivative(&self, field: Field, bx: u8, by: u8, x: f64, y: f64) -> f64 {
        let k = self.kap;
        let by = by as usize;
        match field {
            Field::Jx => self.f(1 + by, y) * trig_derivative(false, bx, k, x),
            Field::Jy => k * self.f(by, y) * trig_derivative(true, bx, k, x),
            Field::Rho => {
                let profile = self.nu / (k * self.c0_squared)
                    * (self.f(3 + by, y) - k * k * self.f(1 + by, y));
                let constant = if bx == 0 && by == 0 { 1.0 } else { 0.0 };
                constant + profile * trig_derivative(true, bx, k, x)
            }
        }
    }

    /// Largest relative residual of the Stokes system under fourth-order
    /// finite differences with step `eta`.
    ///
    /// Samples an interior point grid, forms `div J` and
    /// `grad p - nu lap J` entirely from finite differences of [`Self::jx`],
    /// [`Self::jy`] and [`Self::pressure`], and normalises each residual by
    /// the largest magnitude among its own terms.  Exposes any slip between
    /// the profile derivatives, the pressure formula and the claimed system.
    pub fn stokes_defect(&self, eta: f64) -> f64 {
        assert!(eta > 0.0, "finite-difference step must be positive");
        let nu = self.nu;
        let mut max_div = 0.0_f64;
        let mut max_mom = 0.0_f64;
        let mut div_scale = 0.0_f64;
        let mut mom_scale = 0.0_f64;
        for m in 0..7 {
            for n in 0..5 {
                let x = (m as f64 + 0.37) / 7.0 * self.length;
                let y = (n as f64 + 0.5) / 5.0 * self.height;
                let dx_jx = fd1(|t| self.jx(t, y), x, eta);
                let dy_jy = fd1(|t| self.jy(x, t), y, eta);
                let lap_jx = fd2(|t| self.jx(t, y), x, eta) + fd2(|t| self.jx(x, t), y, eta);
                let lap_jy = fd2(|t| self.jy(t, y), x, eta) + fd2(|t| self.jy(x, t), y, eta);
                let dx_p = fd1(|t| self.pressure(t, y), x, eta);
                let dy_p = fd1(|t| self.pressure(x, t), y, eta);
                max_div = max_div.max((dx_jx + dy_jy).abs());
                div_scale = div_scale.max(dx_jx.abs()).max(dy_jy.abs());
                max_mom = max_mom
                    .max((dx_p - nu * lap_jx).abs())
                    .max((dy_p - nu * lap_jy).abs());
                mom_scale = mom_scale
                    .max(dx_p.abs())
                    .max(dy_p.abs())
                    .max((nu * lap_jx).abs())
                    .max((nu * lap_jy).abs());
            }
        }
        (max_div / div_scale).max(max_mom / mom_scale)
    }
}

/// `d^b/dx^b` of `sin(Kx)` (when `of_sine`) or `cos(Kx)`.
fn trig_derivative(of_sine: bool, b: u8, k: f64, x: f64) -> f64 {
    let amp = k.powi(b as i32);
    let phase = k * x;
    // Each derivative advances the phase by a quarter turn.
    let value = match (b + if of_sine { 0 } else { 1 }) % 4 {
        0 => phase.sin(),
        1 => phase.cos(),
        2 => -phase.sin(),
        _ => -phase.cos(),
    };
    amp * value
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    /// Step for the self-check; chosen so the fourth-order truncation error
    /// sits well below the 1e-8 bound (the Stokes residual stacks a
    /// second-order stencil on top of the seventh profile derivative) while
    /// rounding noise in the stencils stays near 1e-12.
    const FD_STEP: f64 = 3e-3;

    fn solution() -> AccordionSolution {
        AccordionSolution::new(1e-2, 2.0, 1.0, 0.05, 1.0 / 3.0)
    }

    #[test]
    fn the_profile_vanishes_at_both_walls_and_its_slope_is_the_amplitude() {
        let s = solution();
        assert_abs_diff_eq!(s.f(0, 0.0), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.f(0, s.height()), 0.0, epsilon = 1e-15);
        assert_relative_eq!(s.f(1, 0.0), s.amplitude(), max_relative = 1e-12);
        assert_relative_eq!(s.f(1, s.height()), s.amplitude(), max_relative = 1e-12);
    }

    #[test]
    fn wall_momentum_reduces_to_the_cosine_data() {
        let s = solution();
        for m in 0..9 {
            let x = m as f64 * 0.21;
            let data = s.amplitude() * (s.wavenumber() * x).cos();
            assert_relative_eq!(s.jx(x, 0.0), data, max_relative = 1e-12);
            assert_relative_eq!(s.jx(x, s.height()), data, max_relative = 1e-12);
            assert_abs_diff_eq!(s.jy(x, 0.0), 0.0, epsilon = 1e-16);
            assert_abs_diff_eq!(s.jy(x, s.height()), 0.0, epsilon = 1e-16);
        }
    }

    #[test]
    fn finite_differences_confirm_every_profile_derivative_order() {
        let s = solution();
        for order in 0..5 {
            for n in 0..7 {
                let y = 0.08 + 0.12 * n as f64;
                let fd = fd1(|t| s.f(order, t), y, FD_STEP);
                let scale = s.f(order + 1, y).abs().max(s.amplitude());
                assert!(
                    (fd - s.f(order + 1, y)).abs() <= 1e-8 * scale,
                    "order {} -> {} mismatch at y = {y}: fd {fd}, closed form {}",
                    order,
                    order + 1,
                    s.f(order + 1, y)
                );
            }
        }
    }

    #[test]
    fn field_derivatives_match_finite_differences_of_the_fields() {
        let s = solution();
        let fields: [(Field, fn(&AccordionSolution, f64, f64) -> f64); 3] = [
            (Field::Jx, AccordionSolution::jx),
            (Field::Jy, AccordionSolution::jy),
            (Field::Rho, AccordionSolution::rho),
        ];
        let (x, y) = (0.43, 0.31);
        for (field, eval) in fields {
            let scale = s.amplitude();
            let checks = [
                (1, 0, fd1(|t| eval(&s, t, y), x, FD_STEP)),
                (0, 1, fd1(|t| eval(&s, x, t), y, FD_STEP)),
                (2, 0, fd2(|t| eval(&s, t, y), x, FD_STEP)),
                (0, 2, fd2(|t| eval(&s, x, t), y, FD_STEP)),
                (
                    1,
                    1,
                    fd1(|u| fd1(|v| eval(&s, u, v), y, FD_STEP), x, FD_STEP),
                ),
            ];
            for (bx, by, fd) in checks {
                let closed = s.derivative(field, bx, by, x, y);
                assert!(
                    (closed - fd).abs() <= 1e-5 * scale.max(closed.abs()),
                    "{field:?} d^{bx}_x d^{by}_y at ({x}, {y}): closed {closed}, fd {fd}"
                );
            }
        }
    }

    #[test]
    fn the_momentum_field_is_divergence_free_by_construction() {
        let s = solution();
        for m in 0..5 {
            for n in 0..4 {
                let (x, y) = (0.1 + 0.4 * m as f64, 0.15 + 0.2 * n as f64);
                let div = s.derivative(Field::Jx, 1, 0, x, y) + s.derivative(Field::Jy, 0, 1, x, y);
                assert_abs_diff_eq!(div, 0.0, epsilon = 1e-15 * s.amplitude());
            }
        }
    }

    #[test]
    fn the_solution_satisfies_the_stokes_system_under_finite_differences() {
        let defect = solution().stokes_defect(FD_STEP);
        assert!(
            defect < 1e-8,
            "finite-difference Stokes residual too large: {defect}"
        );
    }
}
