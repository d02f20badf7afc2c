//! Upper bounds on the algebraic connectivity of regular graphs from
//! quotient-matrix interlacing, checked against exact spectra, together with
//! the strongly-regular-graph conditions under which the bound is attained
//! by a maximiser.
//!
//! Modules:
//! - [`graph`]: immutable simple graphs, neighbourhood graphs, components,
//!   and the edge-list text format.
//! - [`linalg`]: Jacobi eigensolver, quotient matrices and interlacing checks.
//! - [`bounds`]: the bound function `F`, per-vertex bounds, `ρ(G)`, and the
//!   vertex-connectivity baseline.
//! - [`srg`]: SRG detection, spectra, and optimality certificates.
//! - [`generators`]: graph families and seeded random regular graphs.

pub mod bounds;
mod flow;
pub mod generators;
pub mod graph;
pub mod linalg;
pub mod srg;

pub use bounds::{BoundError, BoundParams, BoundReport, Comparison, VertexBound};
pub use graph::{Graph, GraphError, ParseError, Rational, VertexSubset};
pub use linalg::{Partition, QuotientMatrix, Spectrum, SymmetricMatrix};
pub use srg::{SrgParams, SrgSpectrum};
