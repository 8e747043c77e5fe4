//! Polygon models of nonorientable surfaces and their homology.
//!
//! [`build_polygon`] lays out the side word of the surface `N_{g,s}` with
//! `n` marked points, [`glue`] identifies the sides into a [`CellComplex`],
//! and the complex answers the topological questions: Euler characteristic,
//! boundary circles, orientability, first homology, and the class of any
//! 1-cycle.

mod complex;
mod polygon;

pub use complex::{glue, orientable_word, CellComplex, CycleClass, Edge};
pub use polygon::{build_polygon, Label, PolygonModel, SurfaceSpec};
