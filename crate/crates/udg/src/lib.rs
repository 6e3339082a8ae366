//! Algorithms on unit disk graphs: the graph on a planar point set whose
//! edges join points at distance at most 1.
//!
//! The crate provides shortest-path trees from a root point (three
//! interchangeable methods with identical output), and minimum separating
//! sets of unit disks between two terminals (a generic cubic method and a
//! compact near-quadratic one), together with instance generation and
//! brute-force reference oracles for testing.

pub mod datagen;
pub mod delaunay;
pub mod dual_index;
pub mod error;
pub mod geom;
pub mod neighbor;
pub mod oracle;
pub mod sep_compact;
pub mod sep_generic;
pub mod sssp;

pub use error::{Error, Result};
pub use geom::{dist_sq, Point};
