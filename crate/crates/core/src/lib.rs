//! Exact construction and verification of grid drawings of graphs.

pub mod cli;
pub mod columns;
pub mod corpus;
pub mod error;
pub mod geom;
pub mod graph;
pub mod io;
pub mod lattice;
pub mod locator;
pub mod mixed;
pub mod oracle;
pub mod planar;
pub mod search;
pub mod svg;
pub mod verify;

pub use error::{Error, Result};
pub use search::Budget;
