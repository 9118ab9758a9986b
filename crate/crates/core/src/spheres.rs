//! Vertical 2-spheres `S(c_1,…,c_n)` of a plat and maximal disjoint
//! collections of them.
//!
//! Two vertical spheres are treated as disjointly realizable exactly when
//! their vectors are componentwise comparable: their monotone arcs can then
//! be drawn side by side without crossing.

use std::fmt;

use crate::error::{PlatError, Result};
use crate::plat::row_width;

/// `c_i` counts the twist regions left of the arc in row `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VerticalSphere {
    c: Vec<usize>,
}

impl VerticalSphere {
    pub fn new(c: Vec<usize>) -> Self {
        VerticalSphere { c }
    }

    pub fn counts(&self) -> &[usize] {
        &self.c
    }

    pub fn height(&self) -> usize {
        self.c.len()
    }

    /// Largest admissible `c_i` in row `i` (1-based): one region must remain
    /// on the right.
    pub fn row_bound(m: usize, row: usize) -> usize {
        row_width(m, row).saturating_sub(1)
    }

    pub fn is_valid(&self, m: usize, n: usize) -> bool {
        m >= 3
            && self.c.len() == n
            && self
                .c
                .iter()
                .enumerate()
                .all(|(i, &c)| c >= 1 && c <= Self::row_bound(m, i + 1))
    }

    pub fn leq(&self, other: &VerticalSphere) -> bool {
        self.c.iter().zip(&other.c).all(|(a, b)| a <= b)
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &VerticalSphere) -> VerticalSphere {
        VerticalSphere::new(self.c.iter().zip(&other.c).map(|(a, b)| *a.min(b)).collect())
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &VerticalSphere) -> VerticalSphere {
        VerticalSphere::new(self.c.iter().zip(&other.c).map(|(a, b)| *a.max(b)).collect())
    }
}

impl fmt::Display for VerticalSphere {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.c.iter().map(usize::to_string).collect();
        write!(f, "S({})", parts.join(","))
    }
}

pub fn disjointly_realizable(s: &VerticalSphere, t: &VerticalSphere) -> Result<bool> {
    if s.height() != t.height() {
        return Err(PlatError::DimensionMismatch(s.height(), t.height()));
    }
    Ok(s.leq(t) || t.leq(s))
}

/// Twist regions strictly between two comparable spheres.
pub fn regions_between(s: &VerticalSphere, t: &VerticalSphere) -> Result<usize> {
    if s.height() != t.height() {
        return Err(PlatError::DimensionMismatch(s.height(), t.height()));
    }
    let (lo, hi) = if s.leq(t) {
        (s, t)
    } else if t.leq(s) {
        (t, s)
    } else {
        return Err(PlatError::IncomparableSpheres);
    };
    Ok(lo.c.iter().zip(&hi.c).map(|(a, b)| b - a).sum())
}

/// `⌈n/2⌉(m−3) + ⌊n/2⌋(m−2) + 1`.
pub fn maximal_collection_size(m: usize, n: usize) -> usize {
    n.div_ceil(2) * (m - 3) + (n / 2) * (m - 2) + 1
}

/// A maximal chain from `S(1,…,1)` to `S(m−2, m−1, m−2, …, m−2)`, raising
/// rows top to bottom one unit at a time.
pub fn maximal_collection(m: usize, n: usize) -> Result<Vec<VerticalSphere>> {
    if m < 4 || n < 3 || n.is_multiple_of(2) {
        return Err(PlatError::SphereRange { m, n });
    }
    let mut current = vec![1usize; n];
    let mut chain = vec![VerticalSphere::new(current.clone())];
    for row in 0..n {
        let bound = VerticalSphere::row_bound(m, row + 1);
        while current[row] < bound {
            current[row] += 1;
            chain.push(VerticalSphere::new(current.clone()));
        }
    }
    Ok(chain)
}
