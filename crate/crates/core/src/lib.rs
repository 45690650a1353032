//! Niche graphs of bipartite tournaments.
//!
//! The crate computes niche graphs, decides whether an arbitrary graph is
//! the niche graph of some bipartite tournament, builds a witness tournament
//! when it is, and cross-checks all of it against exhaustive enumeration on
//! small instances.

pub mod error;
pub mod format;
pub mod kernel;
pub mod niche;
pub mod oracle;
pub mod properties;
pub mod realize;
pub mod recognize;
pub mod report;
pub mod structure;
pub mod tournament;

pub use error::{Error, Result};
pub use kernel::{CanonicalCode, Graph, Side, VertexId};
pub use niche::niche_graph;
pub use realize::realize;
pub use recognize::{recognize, Certificate, Decision, Reason};
pub use tournament::{BipartiteTournament, Direction};
