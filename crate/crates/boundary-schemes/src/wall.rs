//! Wall boundary pass: prescribed-momentum walls on any grid edge.
//!
//! One [`WallPass`] resolves one edge. Per boundary cell it:
//!
//! 1. reads the cell's post-collision populations and permutes them into the
//!    wall-local frame ([`crate::orient`]);
//! 2. samples the prescribed wall momentum at the tangential positions the
//!    closure needs (the node's foot and `+-dx/2`), at time `t + dt/2` for
//!    the classical closure and `t` for the corrected ones, and rotates the
//!    samples into frame components;
//! 3. gathers the neighbour densities used by the density-difference
//!    corrections (corrected closures only), falling back to the straight
//!    inward neighbour where a diagonal neighbour leaves the grid at a
//!    non-periodic corner;
//! 4. evaluates the closure and writes its three outputs back through the
//!    frame permutation.
//!
//! Densities are read from the post-collision buffer: collision conserves
//! density, and unlike the post-stream field that buffer never holds
//! unresolved placeholders from a neighbouring edge.

use std::fmt;
use std::sync::Arc;

use lattice_core::{BoundaryPass, Edge, PopulationField, SchemeParams};

use crate::kernels::{
    classical_bounce_back, first_order_bounce_back, generalized_bounce_back, WallCellContext,
};
use crate::orient::{orientation, Orientation};
use crate::WallScheme;

/// Momentum components of a prescribed wall motion.
type WallFn = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

/// Prescribed wall momentum `(Jx, Jy)(s, t)` in **grid** components, as a
/// function of the wall coordinate `s` (the `x` position along `y` edges,
/// the `y` position along `x` edges) and the time `t`.
#[derive(Clone)]
pub struct WallData {
    jx: WallFn,
    jy: WallFn,
}

impl WallData {
    /// A wall at rest.
    pub fn still() -> Self {
        Self::constant(0.0, 0.0)
    }

    /// A wall with uniform, steady momentum.
    pub fn constant(jx: f64, jy: f64) -> Self {
        Self {
            jx: Arc::new(move |_, _| jx),
            jy: Arc::new(move |_, _| jy),
        }
    }

    /// A wall with general momentum profiles `jx(s, t)`, `jy(s, t)`.
    pub fn new(
        jx: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
        jy: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            jx: Arc::new(jx),
            jy: Arc::new(jy),
        }
    }

    /// Momentum `x` component at wall coordinate `s`, time `t`.
    #[inline]
    pub fn jx(&self, s: f64, t: f64) -> f64 {
        (self.jx)(s, t)
    }

    /// Momentum `y` component at wall coordinate `s`, time `t`.
    #[inline]
    pub fn jy(&self, s: f64, t: f64) -> f64 {
        (self.jy)(s, t)
    }
}

impl fmt::Debug for WallData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WallData").finish_non_exhaustive()
    }
}

/// Boundary pass applying one wall closure along one edge.
#[derive(Debug)]
pub struct WallPass {
    edge: Edge,
    scheme: WallScheme,
    data: WallData,
    orientation: Orientation,
}

impl WallPass {
    /// Wall pass with prescribed momentum data.
    pub fn new(edge: Edge, scheme: WallScheme, data: WallData) -> Self {
        Self {
            edge,
            scheme,
            data,
            orientation: orientation(edge),
        }
    }

    /// Wall pass for a wall at rest.
    pub fn still(edge: Edge, scheme: WallScheme) -> Self {
        Self::new(edge, scheme, WallData::still())
    }

    /// The closure this pass applies.
    pub fn scheme(&self) -> &WallScheme {
        &self.scheme
    }

    /// Neighbour density at a frame offset.
    ///
    /// When a diagonal neighbour leaves the grid at a non-periodic corner,
    /// its density is continued linearly along the inward row from the two
    /// cells beside it, `2 rho(0, 1) - rho(-1, 1)` in frame offsets. A
    /// tangentially linear density — the pressure-driven channel — is then
    /// sampled exactly, so the corner cells cannot spoil an otherwise exact
    /// profile. `fallback` only covers grids too small for that stencil.
    fn neighbor_density(
        &self,
        star: &PopulationField,
        i: usize,
        j: usize,
        frame: (i32, i32),
        fallback: f64,
    ) -> f64 {
        let o = &self.orientation;
        let (di, dj) = o.to_actual_offset(frame);
        if let Some((ni, nj)) = star.neighbor(i, j, di, dj) {
            return star.density(ni, nj);
        }
        let straight = o.to_actual_offset((0, frame.1));
        let mirror = o.to_actual_offset((-frame.0, frame.1));
        match (
            star.neighbor(i, j, straight.0, straight.1),
            star.neighbor(i, j, mirror.0, mirror.1),
        ) {
            (Some((ai, aj)), Some((bi, bj))) => 2.0 * star.density(ai, aj) - star.density(bi, bj),
            (Some((ai, aj)), None) => star.density(ai, aj),
            _ => fallback,
        }
    }
}

impl BoundaryPass for WallPass {
    fn edge(&self) -> Edge {
        self.edge
    }

    fn apply(
        &self,
        post: &mut PopulationField,
        star: &PopulationField,
        p: &SchemeParams,
        t: f64,
    ) {
        let o = &self.orientation;
        let (nx, ny) = (star.nx(), star.ny());
        let dx = p.dx();
        // Classical data lives on the half-integer time grid; the corrected
        // closures take their data at the pre-step time.
        let t_sample = match self.scheme {
            WallScheme::Classical => t + 0.5 * p.dt(),
            WallScheme::FirstOrder | WallScheme::Generalized(_) => t,
        };
        let count = match self.edge {
            Edge::YLo | Edge::YHi => nx,
            Edge::XLo | Edge::XHi => ny,
        };
        for k in 0..count {
            let (i, j) = match self.edge {
                Edge::YLo => (k, 0),
                Edge::YHi => (k, ny - 1),
                Edge::XLo => (0, k),
                Edge::XHi => (nx - 1, k),
            };
            // Wall coordinate of the node's foot, and frame momentum samples
            // at tangential offsets 0 and -+dx/2.
            let s = (k as f64 + 0.5) * dx;
            let sample = |frame_offset: f64| -> (f64, f64) {
                let sw = s + o.tangent_sign * frame_offset;
                o.to_frame_vector((self.data.jx(sw, t_sample), self.data.jy(sw, t_sample)))
            };
            let f_star = o.frame_populations(&star.cell(i, j));
            let j_mid = sample(0.0);
            let j_left = sample(-0.5 * dx);
            let j_right = sample(0.5 * dx);
            let out = match &self.scheme {
                WallScheme::Classical => {
                    let ctx = WallCellContext::without_density_differences(
                        f_star, j_mid, j_left, j_right,
                    );
                    classical_bounce_back(&ctx, p)
                }
                scheme => {
                    let rho = star.density(i, j);
                    let rho_n = self.neighbor_density(star, i, j, (0, 1), rho);
                    let rho_ne = self.neighbor_density(star, i, j, (1, 1), rho_n);
                    let rho_nw = self.neighbor_density(star, i, j, (-1, 1), rho_n);
                    let ctx = WallCellContext {
                        f_star,
                        j_mid,
                        j_left,
                        j_right,
                        rho,
                        rho_n,
                        rho_ne,
                        rho_nw,
                    };
                    match scheme {
                        WallScheme::Classical => unreachable!("handled above"),
                        WallScheme::FirstOrder => first_order_bounce_back(&ctx, p),
                        WallScheme::Generalized(gp) => generalized_bounce_back(&ctx, gp, p),
                    }
                }
            };
            let targets = o.missing_actual();
            for (slot, value) in targets.into_iter().zip(out) {
                post.set(i, j, slot, value);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lattice_core::moments::equilibrium_populations;
    use lattice_core::{EdgeTags, Simulation};

    const TOL: f64 = 1e-14;

    fn closed_box_passes(scheme: WallScheme) -> Vec<Box<dyn BoundaryPass>> {
        [Edge::YLo, Edge::YHi, Edge::XLo, Edge::XHi]
            .into_iter()
            .map(|e| Box::new(WallPass::still(e, scheme.clone())) as Box<dyn BoundaryPass>)
            .collect()
    }

    fn closed_tags() -> EdgeTags {
        EdgeTags {
            x_lo: lattice_core::EdgeTag::Wall,
            x_hi: lattice_core::EdgeTag::Wall,
            y_lo: lattice_core::EdgeTag::Wall,
            y_hi: lattice_core::EdgeTag::Wall,
        }
    }

    #[test]
    fn rest_state_is_a_fixed_point_for_all_schemes() {
        let p = SchemeParams::standard(1.2, 1.1, 1.4, 0.9).unwrap();
        let feq = equilibrium_populations(1.0, 0.0, 0.0, &p);
        for scheme in [
            WallScheme::Classical,
            WallScheme::FirstOrder,
            WallScheme::Generalized(crate::GeneralizedParams {
                a2: 0.7,
                a5: -1.2,
                a6: 0.4,
                k2: 4.0,
                k5: 1.0,
                k6: 1.0,
            }),
        ] {
            let f0 = PopulationField::from_fn(5, 4, closed_tags(), |_, _| feq).unwrap();
            let mut sim = Simulation::new(p.clone(), f0, closed_box_passes(scheme.clone())).unwrap();
            sim.advance(5);
            for j in 0..4 {
                for i in 0..5 {
                    let f = sim.populations().cell(i, j);
                    for (d, value) in f.iter().enumerate() {
                        assert!(
                            (value - feq[d]).abs() <= TOL,
                            "{scheme:?}: rest equilibrium must persist at ({i},{j}) dir {d}: {value} vs {}",
                            feq[d]
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn classical_still_walls_conserve_mass_exactly() {
        let p = SchemeParams::standard(1.3, 0.9, 1.6, 1.1).unwrap();
        let f0 = PopulationField::from_fn(6, 5, closed_tags(), |i, j| {
            let mut f = equilibrium_populations(1.0, 0.0, 0.0, &p);
            for (d, slot) in f.iter_mut().enumerate() {
                *slot += 0.002 * (((i * 13 + j * 7 + d * 3) % 11) as f64 - 5.0);
            }
            f
        })
        .unwrap();
        let mass0 = f0.total_mass();
        let mut sim = Simulation::new(p, f0, closed_box_passes(WallScheme::Classical)).unwrap();
        sim.advance(200);
        let mass = sim.populations().total_mass();
        assert!(
            ((mass - mass0) / mass0).abs() <= 1e-12,
            "classical still walls must conserve mass: {mass0} -> {mass}"
        );
    }

    #[test]
    fn classical_samples_wall_data_at_the_half_step() {
        // jy(t) = t on the lower wall; one step from t = 0 must inject the
        // half-step value dt/2 into the normal population.
        let p = SchemeParams::standard(1.0, 1.0, 1.0, 1.0).unwrap();
        let feq = equilibrium_populations(1.0, 0.0, 0.0, &p);
        let f0 = PopulationField::from_fn(4, 3, closed_tags(), |_, _| feq).unwrap();
        let mut passes = closed_box_passes(WallScheme::Classical);
        passes[0] = Box::new(WallPass::new(
            Edge::YLo,
            WallScheme::Classical,
            WallData::new(|_, _| 0.0, |_, t| t),
        ));
        let mut sim = Simulation::new(p, f0, passes).unwrap();
        sim.step();
        // f2 = f4* + (2/3) jy(t + dt/2) = 1/9 + (2/3)(1/2).
        let expected = 1.0 / 9.0 + 1.0 / 3.0;
        let got = sim.populations().get(1, 0, 2);
        assert!(
            (got - expected).abs() <= TOL,
            "classical must read jy at the half step: got {got}, expected {expected}"
        );
    }

    #[test]
    fn high_x_edge_maps_tangent_and_outputs_by_hand_table() {
        // Wall data jx(s) = s on the x_hi edge, everything else at rest.
        // In the frame of that edge the tangent runs against y and momentum
        // maps to (-jy, -jx), so for the boundary cell at j = 1 (s = 1.5):
        //   f2 -> actual dir 3: 1/9  + (2/3)(-1.5)
        //   f5 -> actual dir 7: 1/36 + (1/6)(-(s + dx/2)) = 1/36 - 2.0/6
        //   f6 -> actual dir 6: 1/36 + (1/6)(-(s - dx/2)) = 1/36 - 1.0/6
        let p = SchemeParams::standard(1.0, 1.0, 1.0, 1.0).unwrap();
        let feq = equilibrium_populations(1.0, 0.0, 0.0, &p);
        let f0 = PopulationField::from_fn(4, 3, closed_tags(), |_, _| feq).unwrap();
        let mut passes = closed_box_passes(WallScheme::Classical);
        passes[3] = Box::new(WallPass::new(
            Edge::XHi,
            WallScheme::Classical,
            WallData::new(|s, _| s, |_, _| 0.0),
        ));
        let mut sim = Simulation::new(p, f0, passes).unwrap();
        sim.step();
        let f = sim.populations().cell(3, 1);
        let cases = [
            (3usize, 1.0 / 9.0 - 1.0),
            (7usize, 1.0 / 36.0 - 2.0 / 6.0),
            (6usize, 1.0 / 36.0 - 1.0 / 6.0),
        ];
        for (d, expected) in cases {
            assert!(
                (f[d] - expected).abs() <= TOL,
                "direction {d}: got {}, expected {expected}",
                f[d]
            );
        }
    }
}
