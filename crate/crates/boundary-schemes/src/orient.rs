//! Edge-to-frame adapters.
//!
//! The closures in [`crate::kernels`] are written for a wall below the fluid
//! (`+y` inward, missing populations `2`, `5`, `6`). Each of the four grid
//! edges is mapped onto that frame by an orthogonal involution `R`:
//!
//! ```text
//! edge   R (actual <-> frame)    frame +y (inward)   frame +x (tangential)
//! y_lo   identity                actual +y           actual +x
//! y_hi   mirror y                actual -y           actual +x
//! x_lo   swap x/y                actual +x           actual +y
//! x_hi   swap + negate           actual -x           actual -y
//! ```
//!
//! Because every `R` is its own inverse, the same matrix converts vectors in
//! either direction. Populations convert by the induced index permutation:
//! `f_frame[l] = f_actual[perm[l]]` with `e_perm[l] = R e_l`.

use lattice_core::stencil::{DIR, Q};
use lattice_core::Edge;

/// Frame mapping for one edge.
#[derive(Debug, Clone, Copy)]
pub struct Orientation {
    /// The edge this mapping serves.
    pub edge: Edge,
    /// Direction-index permutation: `perm[frame] = actual`.
    pub perm: [usize; Q],
    /// The involution `R` as integer entries, rows are frame axes.
    pub rot: [[i32; 2]; 2],
    /// Change of the actual wall coordinate per unit of frame `+x` offset
    /// (`+1` everywhere except the `x_hi` edge, where the tangent runs
    /// against `y`).
    pub tangent_sign: f64,
}

impl Orientation {
    /// Reads one cell's populations permuted into the wall frame.
    #[inline]
    pub fn frame_populations(&self, f_actual: &[f64; Q]) -> [f64; Q] {
        let mut f = [0.0; Q];
        for (l, slot) in f.iter_mut().enumerate() {
            *slot = f_actual[self.perm[l]];
        }
        f
    }

    /// Converts a physical vector between actual and frame components
    /// (the matrix is an involution, so one function serves both ways).
    #[inline]
    pub fn to_frame_vector(&self, v: (f64, f64)) -> (f64, f64) {
        (
            self.rot[0][0] as f64 * v.0 + self.rot[0][1] as f64 * v.1,
            self.rot[1][0] as f64 * v.0 + self.rot[1][1] as f64 * v.1,
        )
    }

    /// Converts a frame grid offset into an actual `(di, dj)` offset.
    #[inline]
    pub fn to_actual_offset(&self, frame: (i32, i32)) -> (i32, i32) {
        (
            self.rot[0][0] * frame.0 + self.rot[0][1] * frame.1,
            self.rot[1][0] * frame.0 + self.rot[1][1] * frame.1,
        )
    }

    /// Actual direction indices receiving the frame outputs `(f2, f5, f6)`.
    #[inline]
    pub fn missing_actual(&self) -> [usize; 3] {
        [self.perm[2], self.perm[5], self.perm[6]]
    }
}

/// The frame mapping of an edge.
pub fn orientation(edge: Edge) -> Orientation {
    let (rot, tangent_sign) = match edge {
        Edge::YLo => ([[1, 0], [0, 1]], 1.0),
        Edge::YHi => ([[1, 0], [0, -1]], 1.0),
        Edge::XLo => ([[0, 1], [1, 0]], 1.0),
        Edge::XHi => ([[0, -1], [-1, 0]], -1.0),
    };
    let mut perm = [0usize; Q];
    for (l, slot) in perm.iter_mut().enumerate() {
        let e = DIR[l];
        let target = [
            rot[0][0] * e[0] + rot[0][1] * e[1],
            rot[1][0] * e[0] + rot[1][1] * e[1],
        ];
        *slot = DIR
            .iter()
            .position(|d| *d == target)
            .expect("rotated direction must exist in the stencil");
    }
    Orientation {
        edge,
        perm,
        rot,
        tangent_sign,
    }
}
