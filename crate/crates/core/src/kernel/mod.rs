//! Graph types and exact algorithms shared by every other module.

mod canon;
mod classes;
mod graph;
mod planar;
mod search;

pub(crate) use canon::canonical_code_masks;
pub use canon::{
    canonical_code, canonical_code_with_limit, CanonicalCode, CANON_LIMIT, CANON_MAX_LIMIT,
};
pub use classes::{
    contains_claw, contains_induced_p4, find_asteroidal_triple, find_claw, find_independent_triple,
    find_induced_p4, has_asteroidal_triple, has_independent_triple, is_chordal, is_interval,
    AT_LIMIT,
};
pub use graph::{indexed_ids, Graph, Side, VertexId, RESERVED_CHARS};
pub use planar::{is_planar, PLANAR_LIMIT};
pub use search::{
    clique_number, hamiltonian_cycle, hamiltonian_path, max_matching_size, shortest_long_hole,
    shortest_odd_hole, CLIQUE_LIMIT, HAMILTON_LIMIT, HOLE_LIMIT,
};
