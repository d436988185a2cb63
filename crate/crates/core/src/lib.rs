//! Edge-expansion parameters of graphs.
//!
//! `isolab` computes the isoperimetric number, Cheeger constant and sparsity
//! of small graphs exactly, and bounds them spectrally on larger ones:
//! interlacing bounds from the Laplacian spectrum, polynomial bounds for graph
//! powers (closed forms and LP sweeps), LP duality certificates for
//! distance-regular graphs, closed formulas for several graph families, and a
//! random split-graph experiment.

pub mod drg;
mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod linprog;
pub mod power;
pub mod rational;
pub mod spectra;
pub mod split;
pub mod tables;

pub use error::{Error, Result};
pub use graph::{Graph, NeighborStats};
pub use rational::Rational;
