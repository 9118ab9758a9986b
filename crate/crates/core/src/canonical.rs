//! Rotations of a plat about the vertical and horizontal axes, the canonical
//! representative of a rotation orbit, and the equivalence decision for
//! 4-highly twisted plats of width >= 4 and odd height >= 3.
//!
//! A π-rotation about an axis in the projection plane mirrors the diagram
//! across that axis and also swaps over and under at every crossing. The two
//! effects cancel on each crossing's type, so the coefficient array only has
//! its positions permuted: `V` reverses each row, `H` reverses the row order.

use std::fmt;

use crate::error::{PlatError, Result};
use crate::plat::TwistMatrix;

/// An element of the Klein four-group of diagram rotations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymmetryElement {
    Id,
    /// Rotation about the horizontal axis (top and bottom exchanged).
    H,
    /// Rotation about the vertical axis (left and right exchanged).
    V,
    HV,
}

impl SymmetryElement {
    pub const ALL: [SymmetryElement; 4] = [
        SymmetryElement::Id,
        SymmetryElement::H,
        SymmetryElement::V,
        SymmetryElement::HV,
    ];

    fn bits(self) -> (bool, bool) {
        match self {
            SymmetryElement::Id => (false, false),
            SymmetryElement::H => (true, false),
            SymmetryElement::V => (false, true),
            SymmetryElement::HV => (true, true),
        }
    }

    fn from_bits(h: bool, v: bool) -> Self {
        match (h, v) {
            (false, false) => SymmetryElement::Id,
            (true, false) => SymmetryElement::H,
            (false, true) => SymmetryElement::V,
            (true, true) => SymmetryElement::HV,
        }
    }

    /// Group product; the group is abelian and every element is an involution.
    pub fn compose(self, other: SymmetryElement) -> SymmetryElement {
        let (h1, v1) = self.bits();
        let (h2, v2) = other.bits();
        Self::from_bits(h1 ^ h2, v1 ^ v2)
    }

    pub fn inverse(self) -> SymmetryElement {
        self
    }
}

impl fmt::Display for SymmetryElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymmetryElement::Id => "Id",
            SymmetryElement::H => "H",
            SymmetryElement::V => "V",
            SymmetryElement::HV => "HV",
        })
    }
}

pub fn apply(g: SymmetryElement, matrix: &TwistMatrix) -> TwistMatrix {
    let (h, v) = g.bits();
    let mut rows: Vec<Vec<i64>> = matrix.rows().to_vec();
    if v {
        for row in &mut rows {
            row.reverse();
        }
    }
    if h {
        // n is odd, so odd rows land on odd rows and the shape is preserved
        rows.reverse();
    }
    TwistMatrix::new(matrix.width(), rows).expect("rotations preserve the row pattern")
}

/// Checks the hypotheses under which the canonical form is a knot invariant.
pub fn check_theorem_range(matrix: &TwistMatrix) -> Result<()> {
    let (m, n) = (matrix.width(), matrix.height());
    if m < 4 || n < 3 {
        return Err(PlatError::DimensionsOutOfTheoremRange { m, n });
    }
    if !matrix.is_highly_twisted(4) {
        return Err(PlatError::NotHighlyTwisted(4));
    }
    Ok(())
}

/// Lexicographically least element of the rotation orbit, with no
/// hypothesis check. Outside the theorem range this is only a normal form
/// of the diagram.
pub fn normal_form(matrix: &TwistMatrix) -> TwistMatrix {
    SymmetryElement::ALL
        .iter()
        .map(|&g| apply(g, matrix))
        .min()
        .expect("orbit is nonempty")
}

/// Canonical representative of the plat's knot or link type.
pub fn canonical_form(matrix: &TwistMatrix) -> Result<TwistMatrix> {
    check_theorem_range(matrix)?;
    Ok(normal_form(matrix))
}

/// Whether the two plats represent the same knot or link.
pub fn equivalent(a: &TwistMatrix, b: &TwistMatrix) -> Result<bool> {
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Rotations fixing the coefficient array.
pub fn symmetry_group(matrix: &TwistMatrix) -> Vec<SymmetryElement> {
    SymmetryElement::ALL
        .into_iter()
        .filter(|&g| apply(g, matrix) == *matrix)
        .collect()
}
