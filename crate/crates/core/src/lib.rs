//! Exact tooling for the eccentric connectivity index of a connected graph,
//! the sum over all vertices of degree times eccentricity. The crate pairs
//! closed-form extremal families with a catalog of sharp bounds, exhaustive
//! small-graph verification, and value-monotone tree rewrites, all in integer
//! or exact rational arithmetic.
//!
//! ```
//! use ecci::graph::Graph;
//! use ecci::invariants::eccentric_connectivity_index;
//!
//! let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)])?;
//! assert_eq!(eccentric_connectivity_index(&p4)?, 14);
//! # Ok::<(), ecci::error::Error>(())
//! ```

#![forbid(unsafe_code)]

pub mod bounds;
pub mod canon;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod formats;
pub mod graph;
pub mod invariants;
pub mod rational;
pub mod transforms;

pub use error::{Error, Result};
pub use graph::Graph;
