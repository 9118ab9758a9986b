//! Canonical forms for highly twisted plat diagrams of knots and links.
//!
//! A plat in standard form is described by a [`TwistMatrix`]. For
//! 4-highly twisted plats of width at least 4 and odd height at least 3 the
//! coefficient array is determined by the link up to the rotations in
//! [`canonical`], so [`canonical::canonical_form`] decides equivalence.
//!
//! The [`invariants`] module (determinant, Kauffman bracket, Jones
//! polynomial) acts as an independent oracle for the symmetry and move
//! claims made by the other modules.

pub mod braid;
pub mod canonical;
pub mod diagram;
pub mod error;
pub mod hilden;
pub mod invariants;
pub mod plat;
pub mod poly;
pub mod spheres;
pub mod twobridge;

pub use braid::{BraidLetter, BraidWord};
pub use canonical::SymmetryElement;
pub use diagram::PlanarDiagram;
pub use error::{PlatError, Result};
pub use plat::{ClosureStyle, TwistMatrix};
pub use poly::LaurentPoly;
