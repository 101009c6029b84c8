//! Structured population field, two-buffer streaming and the time stepper.
//!
//! # Grid convention
//!
//! Cells are unit squares of side `dx`; the node of cell `(i, j)` sits at the
//! centre, physical position `((i + 1/2) dx, (j + 1/2) dx)`. A wall tagged on
//! edge `y_lo` therefore lies exactly `dx/2` below the first row of nodes, at
//! `y = 0`; the `y_hi` wall lies at `y = ny dx`, and similarly in `x`.
//!
//! # Stepping
//!
//! One time step is collide -> stream -> boundary passes:
//!
//! 1. every cell is collided in place with the precomputed 9x9 linear
//!    collision matrix, producing the post-collision buffer `f*`;
//! 2. streaming pulls `f_d(x) <- f*_d(x - e_d)`, wrapping across edges tagged
//!    [`EdgeTag::Periodic`];
//! 3. each [`BoundaryPass`] overwrites the populations whose streaming source
//!    lay outside a non-periodic edge, reading only from `f*` and its own
//!    boundary data. Passes run in the order they were supplied, so a later
//!    pass wins where two edges share a corner cell.
//!
//! Until the passes have run, the affected populations hold a placeholder
//! (NaN in debug builds to make coverage bugs loud, the local `f*` value in
//! release builds). [`Simulation::new`] refuses configurations where a
//! non-periodic edge has no pass, so a completed step never exposes
//! placeholders.

use crate::moments::{collision_matrix, density, momentum};
use crate::params::SchemeParams;
use crate::stencil::{Mat9, DIR, Q};
use crate::LatticeError;

/// One of the four grid edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Edge {
    /// `i = 0` column.
    XLo,
    /// `i = nx - 1` column.
    XHi,
    /// `j = 0` row.
    YLo,
    /// `j = ny - 1` row.
    YHi,
}

impl Edge {
    /// Directions whose streaming source lies beyond this edge; these are
    /// the populations a boundary pass on the edge must supply.
    pub fn missing_directions(self) -> &'static [usize] {
        match self {
            Edge::XLo => &[1, 5, 8],
            Edge::XHi => &[3, 6, 7],
            Edge::YLo => &[2, 5, 6],
            Edge::YHi => &[4, 7, 8],
        }
    }
}

/// Behaviour of one grid edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeTag {
    /// Streaming wraps around to the opposite side.
    Periodic,
    /// A solid wall half a cell outside the boundary nodes; resolved by a
    /// wall closure pass.
    Wall,
    /// A pressure (density) boundary half a cell outside the boundary nodes;
    /// resolved by a pressure pass.
    Pressure,
}

/// Edge tags for the four sides of the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeTags {
    /// Tag of the `i = 0` edge.
    pub x_lo: EdgeTag,
    /// Tag of the `i = nx - 1` edge.
    pub x_hi: EdgeTag,
    /// Tag of the `j = 0` edge.
    pub y_lo: EdgeTag,
    /// Tag of the `j = ny - 1` edge.
    pub y_hi: EdgeTag,
}

impl EdgeTags {
    /// Fully periodic box.
    pub fn periodic() -> Self {
        Self {
            x_lo: EdgeTag::Periodic,
            x_hi: EdgeTag::Periodic,
            y_lo: EdgeTag::Periodic,
            y_hi: EdgeTag::Periodic,
        }
    }

    /// Periodic in `x`, walls on both `y` edges: the plane-channel layout.
    pub fn channel() -> Self {
        Self {
            x_lo: EdgeTag::Periodic,
            x_hi: EdgeTag::Periodic,
            y_lo: EdgeTag::Wall,
            y_hi: EdgeTag::Wall,
        }
    }

    /// Pressure boundaries in `x`, walls in `y`: the pressure-driven channel.
    pub fn pressure_channel() -> Self {
        Self {
            x_lo: EdgeTag::Pressure,
            x_hi: EdgeTag::Pressure,
            y_lo: EdgeTag::Wall,
            y_hi: EdgeTag::Wall,
        }
    }

    /// Tag of a given edge.
    pub fn tag(&self, edge: Edge) -> EdgeTag {
        match edge {
            Edge::XLo => self.x_lo,
            Edge::XHi => self.x_hi,
            Edge::YLo => self.y_lo,
            Edge::YHi => self.y_hi,
        }
    }
}

/// Population field on a structured `nx` x `ny` grid.
///
/// Storage is structure-of-arrays: nine contiguous planes, plane `d` holding
/// population `d` in row-major `(j, i)` order. That keeps streaming a set of
/// plane-wise shifted copies and lets the collision loop walk nine sequential
/// streams.
#[derive(Debug, Clone, PartialEq)]
pub struct PopulationField {
    nx: usize,
    ny: usize,
    tags: EdgeTags,
    data: Vec<f64>,
}

impl PopulationField {
    /// Zero-filled field.
    ///
    /// # Errors
    ///
    /// Rejects grids smaller than 2x2; the wall closures read density one
    /// cell into the fluid, so a single row or column cannot be resolved.
    pub fn new(nx: usize, ny: usize, tags: EdgeTags) -> Result<Self, LatticeError> {
        if nx < 2 || ny < 2 {
            return Err(LatticeError::GridTooSmall { nx, ny });
        }
        Ok(Self {
            nx,
            ny,
            tags,
            data: vec![0.0; Q * nx * ny],
        })
    }

    /// Field initialised per cell from `init(i, j) -> [f64; 9]`.
    pub fn from_fn(
        nx: usize,
        ny: usize,
        tags: EdgeTags,
        mut init: impl FnMut(usize, usize) -> [f64; Q],
    ) -> Result<Self, LatticeError> {
        let mut field = Self::new(nx, ny, tags)?;
        for j in 0..ny {
            for i in 0..nx {
                field.set_cell(i, j, &init(i, j));
            }
        }
        Ok(field)
    }

    /// Cells along x.
    #[inline]
    pub fn nx(&self) -> usize {
        self.nx
    }

    /// Cells along y.
    #[inline]
    pub fn ny(&self) -> usize {
        self.ny
    }

    /// Edge tags.
    #[inline]
    pub fn tags(&self) -> EdgeTags {
        self.tags
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, d: usize) -> usize {
        debug_assert!(i < self.nx && j < self.ny && d < Q);
        (d * self.ny + j) * self.nx + i
    }

    /// One population value.
    #[inline]
    pub fn get(&self, i: usize, j: usize, d: usize) -> f64 {
        self.data[self.idx(i, j, d)]
    }

    /// Overwrites one population value.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, d: usize, value: f64) {
        let k = self.idx(i, j, d);
        self.data[k] = value;
    }

    /// All nine populations of one cell.
    #[inline]
    pub fn cell(&self, i: usize, j: usize) -> [f64; Q] {
        let mut f = [0.0; Q];
        for (d, slot) in f.iter_mut().enumerate() {
            *slot = self.data[(d * self.ny + j) * self.nx + i];
        }
        f
    }

    /// Overwrites all nine populations of one cell.
    #[inline]
    pub fn set_cell(&mut self, i: usize, j: usize, f: &[f64; Q]) {
        for (d, value) in f.iter().enumerate() {
            self.data[(d * self.ny + j) * self.nx + i] = *value;
        }
    }

    /// Density of one cell.
    #[inline]
    pub fn density(&self, i: usize, j: usize) -> f64 {
        density(&self.cell(i, j))
    }

    /// Momentum of one cell.
    #[inline]
    pub fn momentum(&self, i: usize, j: usize, lambda: f64) -> (f64, f64) {
        momentum(&self.cell(i, j), lambda)
    }

    /// Total mass over the grid, accumulated in input order.
    pub fn total_mass(&self) -> f64 {
        self.data.iter().sum()
    }

    /// Grid neighbour at offset `(di, dj)` from `(i, j)`, wrapping across
    /// periodic edges. Returns `None` when the target lies beyond a
    /// non-periodic edge.
    pub fn neighbor(
        &self,
        i: usize,
        j: usize,
        di: i32,
        dj: i32,
    ) -> Option<(usize, usize)> {
        let wrap = |pos: usize, delta: i32, len: usize, lo: EdgeTag, hi: EdgeTag| -> Option<usize> {
            let target = pos as i64 + delta as i64;
            if target < 0 {
                if lo == EdgeTag::Periodic {
                    Some(((target % len as i64 + len as i64) % len as i64) as usize)
                } else {
                    None
                }
            } else if target >= len as i64 {
                if hi == EdgeTag::Periodic {
                    Some((target % len as i64) as usize)
                } else {
                    None
                }
            } else {
                Some(target as usize)
            }
        };
        let ti = wrap(i, di, self.nx, self.tags.x_lo, self.tags.x_hi)?;
        let tj = wrap(j, dj, self.ny, self.tags.y_lo, self.tags.y_hi)?;
        Some((ti, tj))
    }

    /// Momentum extrema `(max |j|, max |dj|)` against another field of the
    /// same shape, used by steady-state detectors. Returns
    /// `(max_cell |j_self|, max_cell |j_self - j_other|)` in the max norm
    /// over both components. Any non-finite momentum poisons the result to
    /// NaN so a blown-up field cannot masquerade as a converged one
    /// (`f64::max` would silently drop the NaN cells).
    pub fn momentum_change(&self, other: &PopulationField, lambda: f64) -> (f64, f64) {
        assert_eq!(
            (self.nx, self.ny),
            (other.nx, other.ny),
            "fields must have identical shape"
        );
        let mut max_j = 0.0f64;
        let mut max_dj = 0.0f64;
        for j in 0..self.ny {
            for i in 0..self.nx {
                let (ax, ay) = self.momentum(i, j, lambda);
                let (bx, by) = other.momentum(i, j, lambda);
                if !(ax.is_finite() && ay.is_finite() && bx.is_finite() && by.is_finite()) {
                    return (f64::NAN, f64::NAN);
                }
                max_j = max_j.max(ax.abs()).max(ay.abs());
                max_dj = max_dj.max((ax - bx).abs()).max((ay - by).abs());
            }
        }
        (max_j, max_dj)
    }
}

/// Pull streaming: `dst_d(x) = src_d(x - e_d)` with periodic wrapping.
///
/// Populations whose source lies beyond a non-periodic edge receive a
/// placeholder (NaN under `debug_assertions`, the local `src` value
/// otherwise); a boundary pass must overwrite them before the step is
/// complete.
pub fn stream(src: &PopulationField, dst: &mut PopulationField) {
    assert_eq!(
        (src.nx, src.ny),
        (dst.nx, dst.ny),
        "stream buffers must have identical shape"
    );
    let (nx, ny) = (src.nx, src.ny);
    let tags = src.tags;
    dst.tags = tags;
    let x_periodic = tags.x_lo == EdgeTag::Periodic && tags.x_hi == EdgeTag::Periodic;
    let y_periodic = tags.y_lo == EdgeTag::Periodic && tags.y_hi == EdgeTag::Periodic;
    for d in 0..Q {
        let [ex, ey] = DIR[d];
        for j in 0..ny {
            let sj = j as i64 - ey as i64;
            let (j_ok, sj) = if (0..ny as i64).contains(&sj) {
                (true, sj as usize)
            } else if y_periodic {
                (true, ((sj + ny as i64) % ny as i64) as usize)
            } else {
                (false, 0)
            };
            for i in 0..nx {
                let si = i as i64 - ex as i64;
                let (i_ok, si) = if (0..nx as i64).contains(&si) {
                    (true, si as usize)
                } else if x_periodic {
                    (true, ((si + nx as i64) % nx as i64) as usize)
                } else {
                    (false, 0)
                };
                let value = if j_ok && i_ok {
                    src.data[(d * ny + sj) * nx + si]
                } else if cfg!(debug_assertions) {
                    f64::NAN
                } else {
                    src.data[(d * ny + j) * nx + i]
                };
                dst.data[(d * ny + j) * nx + i] = value;
            }
        }
    }
}

/// A boundary closure applied after streaming.
///
/// Implementations overwrite the populations listed by
/// [`Edge::missing_directions`] on their edge, reading **only** from the
/// post-collision buffer `star` (which still holds the pre-stream state) and
/// their own boundary data. `t` is the simulation time *before* the step;
/// the populations being written belong to time `t + dt`.
pub trait BoundaryPass {
    /// Edge this pass resolves.
    fn edge(&self) -> Edge;

    /// Overwrites the missing populations on the edge.
    fn apply(
        &self,
        post: &mut PopulationField,
        star: &PopulationField,
        p: &SchemeParams,
        t: f64,
    );
}

/// Time stepper owning the two population buffers and the boundary passes.
pub struct Simulation {
    p: SchemeParams,
    collision: Mat9,
    passes: Vec<Box<dyn BoundaryPass>>,
    f: PopulationField,
    star: PopulationField,
    steps: u64,
}

impl Simulation {
    /// Builds a stepper from an initial field and its boundary passes.
    ///
    /// # Errors
    ///
    /// Fails when a non-periodic edge has no pass ([`LatticeError::UnresolvedEdge`])
    /// or a pass targets a periodic edge ([`LatticeError::PassOnPeriodicEdge`]).
    pub fn new(
        p: SchemeParams,
        initial: PopulationField,
        passes: Vec<Box<dyn BoundaryPass>>,
    ) -> Result<Self, LatticeError> {
        let tags = initial.tags();
        for edge in [Edge::XLo, Edge::XHi, Edge::YLo, Edge::YHi] {
            let has_pass = passes.iter().any(|b| b.edge() == edge);
            if tags.tag(edge) == EdgeTag::Periodic {
                if has_pass {
                    return Err(LatticeError::PassOnPeriodicEdge { edge });
                }
            } else if !has_pass {
                return Err(LatticeError::UnresolvedEdge { edge });
            }
        }
        let star = initial.clone();
        Ok(Self {
            collision: collision_matrix(&p),
            p,
            passes,
            f: initial,
            star,
            steps: 0,
        })
    }

    /// Scheme parameters.
    pub fn params(&self) -> &SchemeParams {
        &self.p
    }

    /// Current populations (post-stream, boundary-resolved).
    pub fn populations(&self) -> &PopulationField {
        &self.f
    }

    /// Post-collision buffer of the most recent step.
    pub fn post_collision(&self) -> &PopulationField {
        &self.star
    }

    /// Steps taken so far.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    /// Simulation time `steps * dt`.
    pub fn time(&self) -> f64 {
        self.steps as f64 * self.p.dt()
    }

    /// Advances one time step: collide, stream, boundary passes.
    pub fn step(&mut self) {
        let (nx, ny) = (self.f.nx, self.f.ny);
        // Collide: star = C f, cell by cell.
        for j in 0..ny {
            for i in 0..nx {
                let mut fl = [0.0; Q];
                for (d, slot) in fl.iter_mut().enumerate() {
                    *slot = self.f.data[(d * ny + j) * nx + i];
                }
                for d in 0..Q {
                    let row = &self.collision[d];
                    let mut acc = 0.0;
                    for k in 0..Q {
                        acc += row[k] * fl[k];
                    }
                    self.star.data[(d * ny + j) * nx + i] = acc;
                }
            }
        }
        // Stream star -> f.
        stream(&self.star, &mut self.f);
        // Resolve boundaries, in pass order.
        let t = self.time();
        for pass in &self.passes {
            pass.apply(&mut self.f, &self.star, &self.p, t);
        }
        self.steps += 1;
    }

    /// Advances `n` steps.
    pub fn advance(&mut self, n: u64) {
        for _ in 0..n {
            self.step();
        }
    }
}
