//! Prescribed-density (pressure) boundary pass.
//!
//! For every population `d` whose streaming source lies beyond the edge,
//! the pass reconstructs the ghost cell's post-collision state from the
//! edge column itself.  A steady channel fed by fixed end pressures varies
//! along the flow only through a uniform density gradient riding at
//! equilibrium, so the ghost state is the edge cell's star state shifted
//! one row along the ray, with its density slid to the linear extrapolation
//! through the prescribed mouth density:
//!
//! ```text
//! f_d(edge, t+1) = f*_d(src) + 2 (rho_wall - rho*(src)) f_d^eq(1, 0)
//! ```
//!
//! where `src` is the edge cell displaced by the tangential part of `e_d`
//! (so the diagonal rays read the row they actually came from) and
//! `rho_wall` is the density prescribed half a cell outside the edge, at
//! the channel mouth.  Pinning `rho(ghost) = 2 rho_wall - rho*(src)` fixes
//! the pressure `c0^2 (rho - rho0)` on the mouth plane while leaving the
//! momentum profile free, which is what a pressure-driven channel needs at
//! its inlet and outlet; every steady flow with a uniform along-channel
//! density gradient — the discrete channel parabola in particular — passes
//! through the edge without any spurious boundary layer.
//!
//! At a corner the tangential shift would leave the grid; the row is
//! clamped, and a wall pass applied after this one overwrites those corner
//! links anyway (wall passes come last precisely so the wall closure owns
//! the corner cells).

use lattice_core::moments::{density, equilibrium_populations};
use lattice_core::stencil::DIR;
use lattice_core::{BoundaryPass, Edge, PopulationField, SchemeParams};

/// Boundary pass pinning the density on one edge.
#[derive(Debug, Clone, Copy)]
pub struct PressurePass {
    edge: Edge,
    rho: f64,
}

impl PressurePass {
    /// Pass prescribing density `rho` on `edge`.
    pub fn new(edge: Edge, rho: f64) -> Self {
        Self { edge, rho }
    }

    /// The prescribed density.
    pub fn rho(&self) -> f64 {
        self.rho
    }
}

impl BoundaryPass for PressurePass {
    fn edge(&self) -> Edge {
        self.edge
    }

    fn apply(
        &self,
        post: &mut PopulationField,
        star: &PopulationField,
        p: &SchemeParams,
        _t: f64,
    ) {
        let (nx, ny) = (star.nx(), star.ny());
        let count = match self.edge {
            Edge::YLo | Edge::YHi => nx,
            Edge::XLo | Edge::XHi => ny,
        };
        // d f^eq / d rho: the equilibrium is linear in its arguments.
        let eq_unit = equilibrium_populations(1.0, 0.0, 0.0, p);
        for k in 0..count {
            let (i, j) = match self.edge {
                Edge::YLo => (k, 0),
                Edge::YHi => (k, ny - 1),
                Edge::XLo => (0, k),
                Edge::XHi => (nx - 1, k),
            };
            for &d in self.edge.missing_directions() {
                // Shift along the edge by the tangential component of e_d,
                // clamped at corners (wall passes overwrite those links).
                let (si, sj) = match self.edge {
                    Edge::XLo | Edge::XHi => {
                        (i, (j as i64 - DIR[d][1] as i64).clamp(0, ny as i64 - 1) as usize)
                    }
                    Edge::YLo | Edge::YHi => {
                        ((i as i64 - DIR[d][0] as i64).clamp(0, nx as i64 - 1) as usize, j)
                    }
                };
                let fs = star.cell(si, sj);
                let drho = 2.0 * (self.rho - density(&fs));
                post.set(i, j, d, fs[d] + drho * eq_unit[d]);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lattice_core::{EdgeTags, Simulation};

    const TOL: f64 = 1e-14;

    #[test]
    fn matching_rest_equilibrium_is_a_fixed_point() {
        // Pressure edges prescribing the cell's own rest density leave a
        // uniform rest state untouched.
        use crate::wall::WallPass;
        use crate::WallScheme;
        let p = SchemeParams::standard(1.1, 1.2, 1.3, 1.4).unwrap();
        let feq = equilibrium_populations(1.0, 0.0, 0.0, &p);
        let f0 =
            PopulationField::from_fn(5, 4, EdgeTags::pressure_channel(), |_, _| feq).unwrap();
        let passes: Vec<Box<dyn BoundaryPass>> = vec![
            Box::new(WallPass::still(Edge::YLo, WallScheme::Classical)),
            Box::new(WallPass::still(Edge::YHi, WallScheme::Classical)),
            Box::new(PressurePass::new(Edge::XLo, 1.0)),
            Box::new(PressurePass::new(Edge::XHi, 1.0)),
        ];
        let mut sim = Simulation::new(p, f0, passes).unwrap();
        sim.advance(5);
        for j in 0..4 {
            for i in 0..5 {
                let f = sim.populations().cell(i, j);
                for (d, value) in f.iter().enumerate() {
                    assert!(
                        (value - feq[d]).abs() <= TOL,
                        "rest state must persist at ({i},{j}) dir {d}"
                    );
                }
            }
        }
    }

    #[test]
    fn reconstruction_shifts_density_toward_the_prescribed_mouth_value() {
        // Star cell at equilibrium (rho = 1, jx = 0.03); prescribing
        // rho = 1.3 on x_lo gives
        //   f1 = f*_1 + 2 (1.3 - 1) f1^eq(1, 0) = 1.09/9 + 0.6/9 = 1.69/9.
        let p = SchemeParams::standard(1.0, 1.0, 1.0, 1.0).unwrap();
        let tags = EdgeTags::pressure_channel();
        let feq = equilibrium_populations(1.0, 0.03, 0.0, &p);
        let star = PopulationField::from_fn(4, 3, tags, |_, _| feq).unwrap();
        let mut post = star.clone();
        PressurePass::new(Edge::XLo, 1.3).apply(&mut post, &star, &p, 0.0);
        let expected = 1.69 / 9.0;
        let got = post.get(0, 1, 1);
        assert!(
            (got - expected).abs() <= TOL,
            "f1 = {got}, expected {expected}"
        );
    }

    #[test]
    fn diagonal_rays_read_the_row_they_stream_from() {
        // Give each row its own momentum; the reconstructed diagonal must
        // carry the source row's populations, not the receiving row's.
        let p = SchemeParams::standard(1.0, 1.0, 1.3, 0.8).unwrap();
        let tags = EdgeTags::pressure_channel();
        let star = PopulationField::from_fn(4, 3, tags, |_, j| {
            equilibrium_populations(1.0, 0.01 * j as f64, 0.0, &p)
        })
        .unwrap();
        let mut post = star.clone();
        let rho_wall = 1.0;
        PressurePass::new(Edge::XLo, rho_wall).apply(&mut post, &star, &p, 0.0);
        // Direction 5 = (1, 1) at row 1 streams from ghost row 0: with the
        // prescribed density matching, the value is the row-0 star entry.
        let expected = star.get(0, 0, 5);
        let got = post.get(0, 1, 5);
        assert!(
            (got - expected).abs() <= TOL,
            "f5 = {got}, expected row-0 value {expected}"
        );
        // Direction 8 = (1, -1) at row 1 streams from ghost row 2.
        let expected = star.get(0, 2, 8);
        let got = post.get(0, 1, 8);
        assert!(
            (got - expected).abs() <= TOL,
            "f8 = {got}, expected row-2 value {expected}"
        );
    }

    #[test]
    fn a_uniform_density_gradient_at_equilibrium_passes_through_untouched() {
        // The defining exactness property: a field whose x-variation is a
        // uniform density gradient at rest equilibrium streams through the
        // pressure edge as if the lattice continued past it.
        let p = SchemeParams::standard(1.0, 1.0, 8.0 / 7.0, 1.0).unwrap();
        let tags = EdgeTags::pressure_channel();
        let slope = -2e-3;
        let rho = |i: usize| 1.0 + slope * (i as f64 + 0.5 - 2.0);
        let star = PopulationField::from_fn(4, 3, tags, |i, _| {
            equilibrium_populations(rho(i), 0.0, 0.0, &p)
        })
        .unwrap();
        let mut post = star.clone();
        // Mouth density half a cell outside the first column.
        let rho_w = 1.0 + slope * (0.0 - 2.0);
        PressurePass::new(Edge::XLo, rho_w).apply(&mut post, &star, &p, 0.0);
        // Ghost column continues the gradient one cell further out.
        let ghost = equilibrium_populations(1.0 + slope * (-0.5 - 2.0), 0.0, 0.0, &p);
        for d in Edge::XLo.missing_directions() {
            let got = post.get(0, 1, *d);
            assert!(
                (got - ghost[*d]).abs() <= TOL,
                "dir {d}: got {got}, want continued gradient {}",
                ghost[*d]
            );
        }
    }
}
