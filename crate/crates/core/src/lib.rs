//! Coloring squares of plane graphs without 4-cycles.
//!
//! The crate bundles the graph constructions, degeneracy certificates, the
//! discharging engine, the G′/G″/G‴ reduction pipeline, kernel colorings and
//! a family of exact solvers (chromatic, list, correspondence, Alon–Tarsi,
//! paint game) used to check them at small scale.

pub mod color;
pub mod degeneracy;
pub mod discharge;
pub mod game;
pub mod generators;
pub mod graph;
pub mod io;
pub mod kernel;
pub mod limits;
pub mod plane;
pub mod reduction;
pub mod twocliques;

pub use graph::{Graph, GraphError, VertexClass};
pub use plane::{HalfEdge, PlaneError, PlaneGraph};
