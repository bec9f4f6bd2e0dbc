//! Exact computation of flow polynomials of connected multigraphs.
//!
//! The crate provides three independent engines for the flow polynomial
//! F(G,t) of a multigraph (subset expansion, deletion-contraction with
//! canonical-form memoization, and small-edge-cut decomposition), exact
//! integer polynomial arithmetic with Sturm-sequence root counting,
//! constructors and verifiers for a family of coefficient bounds on
//! F(G,t), witness-family constructors, and an isomorph-free enumerator
//! for connected cubic multigraphs at small vertex counts.
//!
//! Start with [`families`] for ready-made graphs, [`flow::flow`] to
//! compute a polynomial, and [`bounds::sweep`] to run a bound check over
//! an enumerated class of graphs. Each major capability also has a
//! runnable demo under `examples/`.

pub mod bounds;
pub mod canon;
pub mod cli;
pub mod enumerate;
pub mod families;
pub mod flow;
pub mod io;
pub mod multigraph;
pub mod polynomial;
pub mod roots;

mod error;

pub use error::{Error, Result};
pub use multigraph::Multigraph;
pub use polynomial::IntPoly;
