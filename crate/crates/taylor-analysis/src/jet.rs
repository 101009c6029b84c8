//! Truncated derivative series ("jets") in the wall data fields.
//!
//! A jet stores the coefficients of a formal series
//!
//! ```text
//!   sum_{g, F, (a,b,c)}  coeff[g][F][(a,b,c)] * dx^g * d_t^a d_x^b d_y^c F
//! ```
//!
//! over the three data fields `F in {rho, Jx, Jy}`, derivative monomials of
//! total order `a + b + c <= 2`, and grades `g <= 2` counting powers of the
//! mesh step `dx` (the time step enters only through `dt = dx / lambda`, so a
//! single grade suffices).  Everything the expansion engine manipulates —
//! boundary data, moment solutions, compatibility residuals — is a value of
//! this type.
//!
//! Each solution jet produced by the engine is *homogeneous*: a monomial of
//! derivative order `n` only ever carries grade `n`.  The operations here
//! preserve that invariant when used as the engine does (every formal
//! derivative is paired with a grade shift), and truncation drops exactly the
//! terms whose grade would exceed two.

/// Number of grades retained (powers `dx^0, dx^1, dx^2`).
pub const GRADES: usize = 3;

/// Derivative monomials `d_t^a d_x^b d_y^c` of total order at most two, in
/// the fixed storage order used throughout the crate.
pub const MONOMIALS: [(u8, u8, u8); 10] = [
    (0, 0, 0), // identity
    (1, 0, 0), // d_t
    (0, 1, 0), // d_x
    (0, 0, 1), // d_y
    (2, 0, 0), // d_t^2
    (1, 1, 0), // d_t d_x
    (1, 0, 1), // d_t d_y
    (0, 2, 0), // d_x^2
    (0, 1, 1), // d_x d_y
    (0, 0, 2), // d_y^2
];

/// Wall data fields a jet is a series in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    /// Cell density at the boundary node.
    Rho,
    /// Prescribed tangential momentum on the wall.
    Jx,
    /// Prescribed normal momentum on the wall.
    Jy,
}

/// All fields in storage order.
pub const FIELDS: [Field; 3] = [Field::Rho, Field::Jx, Field::Jy];

impl Field {
    #[inline]
    fn index(self) -> usize {
        match self {
            Field::Rho => 0,
            Field::Jx => 1,
            Field::Jy => 2,
        }
    }
}

/// Differentiation axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    /// Time.
    T,
    /// Wall-tangential space direction.
    X,
    /// Wall-normal space direction.
    Y,
}

const COEFFS: usize = GRADES * 3 * 10;

/// Dense truncated derivative series; see the module docs for the layout.
#[derive(Clone, PartialEq)]
pub struct DerivativeJet([f64; COEFFS]);

/// Index of a monomial in [`MONOMIALS`], if it is within the truncation.
#[inline]
pub fn monomial_index(mono: (u8, u8, u8)) -> Option<usize> {
    MONOMIALS.iter().position(|&m| m == mono)
}

#[inline]
fn slot(grade: usize, field: Field, mono_idx: usize) -> usize {
    (grade * 3 + field.index()) * 10 + mono_idx
}

impl DerivativeJet {
    /// The zero series.
    pub fn zero() -> Self {
        DerivativeJet([0.0; COEFFS])
    }

    /// The bare symbol `F` at grade zero: coefficient one on the identity
    /// monomial, zero elsewhere.
    pub fn symbol(field: Field) -> Self {
        let mut jet = Self::zero();
        jet.0[slot(0, field, 0)] = 1.0;
        jet
    }

    /// Coefficient of `dx^grade d_t^a d_x^b d_y^c F`; zero if the monomial
    /// lies outside the truncation.
    #[inline]
    pub fn get(&self, grade: usize, field: Field, mono: (u8, u8, u8)) -> f64 {
        match monomial_index(mono) {
            Some(idx) if grade < GRADES => self.0[slot(grade, field, idx)],
            _ => 0.0,
        }
    }

    /// Adds `value` to one coefficient.  Out-of-truncation targets are
    /// silently dropped: within the engine they correspond exactly to terms
    /// of grade greater than two.
    #[inline]
    pub fn add_term(&mut self, grade: usize, field: Field, mono: (u8, u8, u8), value: f64) {
        if grade >= GRADES {
            return;
        }
        if let Some(idx) = monomial_index(mono) {
            self.0[slot(grade, field, idx)] += value;
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: f64) {
        for (dst, src) in self.0.iter_mut().zip(other.0.iter()) {
            *dst += c * src;
        }
    }

    /// `c * self` as a new jet.
    #[must_use]
    pub fn scaled(&self, c: f64) -> Self {
        let mut out = self.clone();
        for v in out.0.iter_mut() {
            *v *= c;
        }
        out
    }

    /// Moves every term up by `k` grades (multiplication by `dx^k`),
    /// dropping what leaves the truncation.
    #[must_use]
    pub fn shift_grade(&self, k: usize) -> Self {
        let mut out = Self::zero();
        for grade in 0..GRADES {
            let target = grade + k;
            if target >= GRADES {
                continue;
            }
            for field in FIELDS {
                for idx in 0..10 {
                    out.0[slot(target, field, idx)] = self.0[slot(grade, field, idx)];
                }
            }
        }
        out
    }

    /// Keeps only the grade-`p` part.
    #[must_use]
    pub fn grade_part(&self, p: usize) -> Self {
        let mut out = Self::zero();
        if p >= GRADES {
            return out;
        }
        for field in FIELDS {
            for idx in 0..10 {
                out.0[slot(p, field, idx)] = self.0[slot(p, field, idx)];
            }
        }
        out
    }

    /// Formal derivative along `axis`: each monomial gains one derivative at
    /// unchanged grade.  Monomials pushed past total order two are dropped;
    /// in the engine the derivative is always paired with a grade shift, so
    /// the drop again removes exactly grade-three terms.
    #[must_use]
    pub fn d(&self, axis: Axis) -> Self {
        let mut out = Self::zero();
        for grade in 0..GRADES {
            for field in FIELDS {
                for (idx, &(a, b, c)) in MONOMIALS.iter().enumerate() {
                    let v = self.0[slot(grade, field, idx)];
                    if v == 0.0 {
                        continue;
                    }
                    let raised = match axis {
                        Axis::T => (a + 1, b, c),
                        Axis::X => (a, b + 1, c),
                        Axis::Y => (a, b, c + 1),
                    };
                    out.add_term(grade, field, raised, v);
                }
            }
        }
        out
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()))
    }

    /// Largest absolute coefficient within one grade.
    pub fn max_abs_in_grade(&self, grade: usize) -> f64 {
        let mut acc = 0.0_f64;
        if grade >= GRADES {
            return acc;
        }
        for field in FIELDS {
            for idx in 0..10 {
                acc = acc.max(self.0[slot(grade, field, idx)].abs());
            }
        }
        acc
    }

    /// Largest deviation from the homogeneity invariant: a coefficient whose
    /// derivative order differs from its grade.
    pub fn max_off_grade(&self) -> f64 {
        let mut acc = 0.0_f64;
        for grade in 0..GRADES {
            for field in FIELDS {
                for (idx, &(a, b, c)) in MONOMIALS.iter().enumerate() {
                    if (a + b + c) as usize != grade {
                        acc = acc.max(self.0[slot(grade, field, idx)].abs());
                    }
                }
            }
        }
        acc
    }

    /// Iterates over all non-zero coefficients as `(grade, field, monomial,
    /// value)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, Field, (u8, u8, u8), f64)> + '_ {
        (0..GRADES).flat_map(move |grade| {
            FIELDS.into_iter().flat_map(move |field| {
                MONOMIALS
                    .iter()
                    .enumerate()
                    .filter_map(move |(idx, &mono)| {
                        let v = self.0[slot(grade, field, idx)];
                        (v != 0.0).then_some((grade, field, mono, v))
                    })
            })
        })
    }
}

impl Default for DerivativeJet {
    fn default() -> Self {
        Self::zero()
    }
}

impl std::fmt::Debug for DerivativeJet {
    /// Prints only the non-zero terms, e.g. `1.5*dx^2*dt^1dy^1[Jx]`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (grade, field, (a, b, c), v) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{v}*dx^{grade}*dt^{a}dx^{b}dy^{c}[{field:?}]")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbol_has_unit_identity_coefficient_only() {
        let jet = DerivativeJet::symbol(Field::Jx);
        assert_eq!(jet.get(0, Field::Jx, (0, 0, 0)), 1.0, "identity slot holds the symbol");
        assert_eq!(jet.get(0, Field::Jy, (0, 0, 0)), 0.0, "other fields stay empty");
        assert_eq!(jet.get(1, Field::Jx, (0, 0, 0)), 0.0, "higher grades stay empty");
        assert_eq!(jet.terms().count(), 1, "exactly one non-zero coefficient");
    }

    #[test]
    fn derivative_raises_the_monomial_at_fixed_grade() {
        let jet = DerivativeJet::symbol(Field::Rho).d(Axis::X).d(Axis::Y);
        assert_eq!(
            jet.get(0, Field::Rho, (0, 1, 1)),
            1.0,
            "d_x d_y rho lives on the mixed monomial"
        );
        assert_eq!(jet.terms().count(), 1, "no spurious terms from differentiation");
    }

    #[test]
    fn third_derivatives_are_truncated_away() {
        let jet = DerivativeJet::symbol(Field::Jy)
            .d(Axis::X)
            .d(Axis::X)
            .d(Axis::X);
        assert_eq!(jet.max_abs(), 0.0, "order-three monomials fall outside the jet");
    }

    #[test]
    fn grade_shift_moves_terms_and_drops_overflow() {
        let jet = DerivativeJet::symbol(Field::Jx);
        let up = jet.shift_grade(2);
        assert_eq!(up.get(2, Field::Jx, (0, 0, 0)), 1.0, "shift lands at grade two");
        assert_eq!(up.shift_grade(1).max_abs(), 0.0, "a further shift leaves the truncation");
    }

    #[test]
    fn add_scaled_combines_coefficients_linearly() {
        let mut jet = DerivativeJet::symbol(Field::Jx);
        jet.add_scaled(&DerivativeJet::symbol(Field::Jx), 2.0);
        jet.add_scaled(&DerivativeJet::symbol(Field::Jy).d(Axis::T), -0.5);
        assert_eq!(jet.get(0, Field::Jx, (0, 0, 0)), 3.0, "like terms accumulate");
        assert_eq!(jet.get(0, Field::Jy, (1, 0, 0)), -0.5, "new terms appear scaled");
    }

    #[test]
    fn off_grade_detector_sees_an_inhomogeneous_term() {
        let mut jet = DerivativeJet::zero();
        jet.add_term(2, Field::Rho, (0, 1, 0), 0.25);
        assert_eq!(jet.max_off_grade(), 0.25, "order-one monomial at grade two is off-grade");
        assert_eq!(
            DerivativeJet::symbol(Field::Rho).d(Axis::X).shift_grade(1).max_off_grade(),
            0.0,
            "derivative paired with a shift stays homogeneous"
        );
    }
}
