//! Graph orientation toolkit: connectivity predicates for mixed graphs and
//! digraphs, an exact solver for connectivity-constrained orientations, the
//! not-all-equal 3-SAT gadget reduction to 2-vertex-connected orientation,
//! and the blow-up/contract construction of 2T-connected orientations.

pub mod connectivity;
pub mod error;
mod flow;
pub mod graph;
pub mod harness;
pub mod io;
pub mod nae;
pub mod reduction;
pub mod search;
pub mod torient;

pub use error::{Error, Result};
