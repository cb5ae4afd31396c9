//! Toolkit for minor-minimal graphs of apex-type properties.
//!
//! Graphs are simple, undirected and have at most 64 vertices. The crate
//! provides planarity testing, the eight properties AN, CAN, NA, NE, NC, IA,
//! IE and IC, minor-minimality deciders, canonical enumeration of graphs by
//! order, a verified catalog of known minor-minimal graphs, the Delta-Y and
//! Y-Delta moves, and graph6 / edge-list I/O.

pub mod canon;
pub mod catalog;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod io;
pub mod minimality;
pub mod minor;
pub mod moves;
mod par;
pub mod planarity;
pub mod properties;
pub mod search;

pub use canon::{canonical_form, canonical_graph, canonical_labeling, is_isomorphic, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, MAX_ORDER};
pub use minimality::{
    is_minor_minimal, is_minor_minimal_exhaustive, is_minor_minimal_upclosed, is_mmnc, is_mmne,
    one_step_minors,
};
pub use minor::{has_kuratowski_minor, has_minor, Kuratowski};
pub use par::parallel_enabled;
pub use planarity::{find_k_subgraph, is_planar, KSubgraph};
pub use properties::{check, PropertyId, Witness};
pub use search::{search_minor_minimal, SearchSpec};
