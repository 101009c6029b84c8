//! Graded solution of the boundary fixed-point equation.
//!
//! With the matrices of [`crate::matrices`] and the data jets of
//! [`crate::xi`], a steady boundary layer obeys, through second order in the
//! mesh step,
//!
//! ```text
//!   K m = M xi - dt (d_t m + B^x d_x m + B^y d_y m) - dt^2/2 d_t^2 m
//!              + dt^2/2 (Bxx d_x^2 + 2 Bxy d_x d_y + Byy d_y^2) m
//! ```
//!
//! Collecting powers of `dx` (with `dt = dx / lambda`) makes the right-hand
//! side at grade `p` depend only on grades below `p`, so the system solves
//! grade by grade:
//!
//! ```text
//!   m(0) = rho mu0 + Sigma (M xi)(0)
//!   m(p) = Sigma g(p)          for p = 1, 2
//! ```
//!
//! `Sigma` ignores the mass row of `K`; the content of that dropped row is
//! the *compatibility residual* `r(p) = l . g(p)` (with `l` the left-null
//! vector of `K`).  The residual does not vanish identically — it vanishes
//! on fields that solve the interior scheme.  Two rewrites encode that:
//!
//! [`eliminate_time`] substitutes the interior balance laws
//!
//! ```text
//!   d_t rho -> -d_x Jx - d_y Jy
//!   d_t Jx  -> -c0^2 d_x rho + dx [ lambda sigma4/3 (d_x^2 + d_y^2) Jx
//!                                  - lambda sigma3 alpha/6 d_x (d_x Jx + d_y Jy) ]
//!   d_t Jy  ->  ... transposed ...
//! ```
//!
//! until no time derivative remains.  That alone empties the residual at
//! grade one; the grade-two content is proportional to `d_y (div J)` and to
//! second density derivatives, which are genuinely non-zero for unsteady
//! data — the closures' exactness statements are statements about *steady*
//! layers.  [`steady_data_reduce`] finishes the job on steady interior
//! solutions: it drops time derivatives of the data, slaves density
//! gradients to the viscous stress through the steady momentum balance
//! (`c0^2 grad rho = dx [...]`, one grade up), and canonicalises momentum
//! monomials with `div J = 0`.  The reduced residual must sit at rounding
//! level for every closure; applying only [`eliminate_time`] to the momentum
//! jets produces the "steady" form of the accuracy tables.

use lattice_core::{stencil::Q, SchemeParams};

use crate::jet::{Axis, DerivativeJet, Field, GRADES};
use crate::matrices::{ClosureKind, SchemeMatrices};
use crate::xi::closure_data_jets;
use crate::AnalysisError;

/// Applies a 9x9 matrix to a vector of jets.
fn mat_jets(a: &[[f64; Q]; Q], x: &[DerivativeJet; Q]) -> [DerivativeJet; Q] {
    std::array::from_fn(|r| {
        let mut acc = DerivativeJet::zero();
        for (c, jet) in x.iter().enumerate() {
            if a[r][c] != 0.0 {
                acc.add_scaled(jet, a[r][c]);
            }
        }
        acc
    })
}

/// Component-wise derivative of a vector of jets.
fn d_jets(x: &[DerivativeJet; Q], axis: Axis) -> [DerivativeJet; Q] {
    std::array::from_fn(|i| x[i].d(axis))
}

/// The solved boundary expansion of one closure.
#[derive(Debug, Clone)]
pub struct ClosureExpansion {
    params: SchemeParams,
    /// Matrices the expansion was built from.
    pub matrices: SchemeMatrices,
    /// Moment jets `m0..m8`; `m[1]`, `m[2]` are the cell momentum.
    pub moments: [DerivativeJet; Q],
    /// Compatibility residual `sum_p l . g(p)` before time elimination.
    pub residual_raw: DerivativeJet,
    /// The residual after time elimination.  Grade one is empty, but
    /// grade two keeps genuine unsteady content (`d_y(div J)` and density
    /// curvature); it reaches rounding level only after
    /// [`steady_data_reduce`].
    pub residual: DerivativeJet,
}

impl ClosureExpansion {
    /// Expands `kind` at parameters `p` through second order.
    pub fn new(p: &SchemeParams, kind: &ClosureKind) -> Result<Self, AnalysisError> {
        let matrices = SchemeMatrices::new(p, kind)?;
        let xi = closure_data_jets(kind, p);
        let m_xi = mat_jets(&matrices.m, &xi);
        let lambda = p.lambda();

        let mut moments: [DerivativeJet; Q] = std::array::from_fn(|_| DerivativeJet::zero());
        let mut residual_raw = DerivativeJet::zero();

        for grade in 0..GRADES {
            // Source at this grade; `moments` holds exactly the grades below.
            let mut g: [DerivativeJet; Q] = std::array::from_fn(|i| m_xi[i].grade_part(grade));
            if grade >= 1 {
                let mut advect = d_jets(&moments, Axis::T);
                let bx_dx = mat_jets(&matrices.bx, &d_jets(&moments, Axis::X));
                let by_dy = mat_jets(&matrices.by, &d_jets(&moments, Axis::Y));
                for (dst, (x, y)) in advect.iter_mut().zip(bx_dx.iter().zip(by_dy.iter())) {
                    dst.add_scaled(x, 1.0);
                    dst.add_scaled(y, 1.0);
                }
                for (dst, jet) in g.iter_mut().zip(advect.iter()) {
                    dst.add_scaled(&jet.shift_grade(1).grade_part(grade), -1.0 / lambda);
                }
            }
            if grade >= 2 {
                let inv_2l2 = 1.0 / (2.0 * lambda * lambda);
                let dtt = d_jets(&d_jets(&moments, Axis::T), Axis::T);
                let mut second = mat_jets(&matrices.bxx, &d_jets(&d_jets(&moments, Axis::X), Axis::X));
                let bxy = mat_jets(&matrices.bxy, &d_jets(&d_jets(&moments, Axis::X), Axis::Y));
                let byy = mat_jets(&matrices.byy, &d_jets(&d_jets(&moments, Axis::Y), Axis::Y));
                for (dst, (xy, yy)) in second.iter_mut().zip(bxy.iter().zip(byy.iter())) {
                    dst.add_scaled(xy, 2.0);
                    dst.add_scaled(yy, 1.0);
                }
                for ((dst, tt), sec) in g.iter_mut().zip(dtt.iter()).zip(second.iter()) {
                    dst.add_scaled(&tt.shift_grade(2).grade_part(grade), -inv_2l2);
                    dst.add_scaled(&sec.shift_grade(2).grade_part(grade), inv_2l2);
                }
            }

            // Mass-row content the pseudo-solver drops.
            for (l, jet) in matrices.left_null.iter().zip(g.iter()) {
                residual_raw.add_scaled(jet, *l);
            }

            // Solve this grade.
            let update = mat_jets(&matrices.sigma, &g);
            for (dst, jet) in moments.iter_mut().zip(update.iter()) {
                dst.add_scaled(jet, 1.0);
            }
            if grade == 0 {
                for (dst, &mu) in moments.iter_mut().zip(matrices.mu0.iter()) {
                    dst.add_term(0, Field::Rho, (0, 0, 0), mu);
                }
            }
        }

        let residual = eliminate_time(&residual_raw, p);
        Ok(ClosureExpansion {
            params: *p,
            matrices,
            moments,
            residual_raw,
            residual,
        })
    }

    /// Scheme parameters the expansion was built at.
    pub fn params(&self) -> &SchemeParams {
        &self.params
    }

    /// Tangential cell-momentum jet (raw, time derivatives kept).
    pub fn momentum_x(&self) -> &DerivativeJet {
        &self.moments[1]
    }

    /// Normal cell-momentum jet (raw).
    pub fn momentum_y(&self) -> &DerivativeJet {
        &self.moments[2]
    }

    /// Tangential cell-momentum jet with time derivatives eliminated.
    pub fn momentum_x_steady(&self) -> DerivativeJet {
        eliminate_time(&self.moments[1], &self.params)
    }

    /// Normal cell-momentum jet with time derivatives eliminated.
    pub fn momentum_y_steady(&self) -> DerivativeJet {
        eliminate_time(&self.moments[2], &self.params)
    }

    /// Largest compatibility-residual coefficient on steady interior
    /// solutions: the residual after [`eliminate_time`] and
    /// [`steady_data_reduce`].  Must be at rounding level for a sound
    /// closure expansion.
    pub fn compatibility_defect(&self) -> f64 {
        steady_data_reduce(&self.residual, &self.params).max_abs()
    }
}

/// Restricts a jet to steady interior solutions.
///
/// Three rewrites, iterated to a fixed point under the grade truncation:
///
/// 1. time derivatives of steady data vanish;
/// 2. density gradients are slaved to the viscous stress by the steady
///    momentum balance, `c0^2 d_x rho = dx [visc (d_x^2 + d_y^2) Jx
///    - bulk d_x (div J)]` (one grade up, transposed for `d_y rho`);
/// 3. `div J = 0` canonicalises momentum monomials: every `d_x` acting on
///    `Jx` becomes `-d_y` acting on `Jy`.
///
/// Applying this to the solution jets themselves yields the *effective*
/// steady-flow coefficients, e.g. the single number multiplying
/// `d_y^2 Jx` that a channel profile actually sees once its pressure
/// gradient is slaved to the shear.
pub fn steady_data_reduce(jet: &DerivativeJet, p: &SchemeParams) -> DerivativeJet {
    let c0sq = p.c0_squared();
    let visc = p.lambda() * p.sigma4() / 3.0;
    let bulk = p.lambda() * p.sigma3() * p.alpha() / 6.0;

    let mut current = jet.clone();
    loop {
        let mut next = DerivativeJet::zero();
        let mut any = false;
        for (grade, field, (a, b, c), v) in current.terms() {
            if a > 0 {
                // Steady data: time derivatives vanish.
                any = true;
                continue;
            }
            match field {
                Field::Rho if b > 0 => {
                    // d_x^b d_y^c rho = d_x^{b-1} d_y^c (d_x rho), slaved.
                    any = true;
                    let (sb, sc) = (b - 1, c);
                    next.add_term(grade + 1, Field::Jx, (0, sb + 2, sc), visc / c0sq * v);
                    next.add_term(grade + 1, Field::Jx, (0, sb, sc + 2), visc / c0sq * v);
                    next.add_term(grade + 1, Field::Jx, (0, sb + 2, sc), -bulk / c0sq * v);
                    next.add_term(grade + 1, Field::Jy, (0, sb + 1, sc + 1), -bulk / c0sq * v);
                }
                Field::Rho if c > 0 => {
                    any = true;
                    let (sb, sc) = (b, c - 1);
                    next.add_term(grade + 1, Field::Jy, (0, sb + 2, sc), visc / c0sq * v);
                    next.add_term(grade + 1, Field::Jy, (0, sb, sc + 2), visc / c0sq * v);
                    next.add_term(grade + 1, Field::Jy, (0, sb, sc + 2), -bulk / c0sq * v);
                    next.add_term(grade + 1, Field::Jx, (0, sb + 1, sc + 1), -bulk / c0sq * v);
                }
                Field::Jx if b > 0 => {
                    // d_x Jx = -d_y Jy on solenoidal momentum.
                    any = true;
                    next.add_term(grade, Field::Jy, (0, b - 1, c + 1), -v);
                }
                _ => next.add_term(grade, field, (a, b, c), v),
            }
        }
        current = next;
        if !any {
            return current;
        }
    }
}

/// Rewrites every time derivative through the interior balance laws; see
/// the module docs for the substitution rules.  Terms whose grade leaves
/// the truncation are dropped, matching the overall second-order cut.
pub fn eliminate_time(jet: &DerivativeJet, p: &SchemeParams) -> DerivativeJet {
    let lambda = p.lambda();
    let c0sq = p.c0_squared();
    let visc = lambda * p.sigma4() / 3.0;
    let bulk = lambda * p.sigma3() * p.alpha() / 6.0;

    let mut current = jet.clone();
    // Each pass trades one time derivative per monomial for space
    // derivatives; the momentum rules lower the time order of the density
    // rule's output as well, so a handful of passes reaches a fixed point.
    loop {
        let mut next = DerivativeJet::zero();
        let mut any = false;
        for (grade, field, (a, b, c), v) in current.terms() {
            if a == 0 {
                next.add_term(grade, field, (a, b, c), v);
                continue;
            }
            any = true;
            let lower = (a - 1, b, c);
            match field {
                // d_t rho = -d_x jx - d_y jy
                Field::Rho => {
                    next.add_term(grade, Field::Jx, (lower.0, lower.1 + 1, lower.2), -v);
                    next.add_term(grade, Field::Jy, (lower.0, lower.1, lower.2 + 1), -v);
                }
                // d_t jx = -c0^2 d_x rho
                //          + dx [ visc (d_x^2 + d_y^2) jx
                //                 - bulk (d_x^2 jx + d_x d_y jy) ]
                Field::Jx => {
                    next.add_term(grade, Field::Rho, (lower.0, lower.1 + 1, lower.2), -c0sq * v);
                    next.add_term(grade + 1, Field::Jx, (lower.0, lower.1 + 2, lower.2), visc * v);
                    next.add_term(grade + 1, Field::Jx, (lower.0, lower.1, lower.2 + 2), visc * v);
                    next.add_term(grade + 1, Field::Jx, (lower.0, lower.1 + 2, lower.2), -bulk * v);
                    next.add_term(
                        grade + 1,
                        Field::Jy,
                        (lower.0, lower.1 + 1, lower.2 + 1),
                        -bulk * v,
                    );
                }
                // Transposed momentum rule.
                Field::Jy => {
                    next.add_term(grade, Field::Rho, (lower.0, lower.1, lower.2 + 1), -c0sq * v);
                    next.add_term(grade + 1, Field::Jy, (lower.0, lower.1 + 2, lower.2), visc * v);
                    next.add_term(grade + 1, Field::Jy, (lower.0, lower.1, lower.2 + 2), visc * v);
                    next.add_term(grade + 1, Field::Jy, (lower.0, lower.1, lower.2 + 2), -bulk * v);
                    next.add_term(
                        grade + 1,
                        Field::Jx,
                        (lower.0, lower.1 + 1, lower.2 + 1),
                        -bulk * v,
                    );
                }
            }
        }
        current = next;
        if !any {
            return current;
        }
    }
}
