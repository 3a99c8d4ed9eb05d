//! Ordered pencils of the Fano plane: a 168-vertex oriented graph with
//! 126 arc-disjoint oriented 4-cycles, the Coxeter graph built from
//! unordered pencils, and the machinery to verify their symmetry claims.

pub mod autos;
pub mod coxeter;
pub mod dgraph;
pub mod digraph;
pub mod error;
pub mod fano;
pub mod pencil;
pub mod verify;
pub mod voltage;

pub use digraph::Digraph;
pub use error::{Error, Result};
pub use fano::{Collineation, Line, OrderedLine, Point};
pub use pencil::{ArcLabel, DVertex};
