//! Structure recognition: claws, bisimplicial vertices, two-clique covers,
//! thickened C5s, circular/linear interval representations, homogeneous
//! pairs of cliques, and interval 2-joins with their reduction.

mod homogeneous;
mod interval;
mod recognize;
mod twojoin;

pub use homogeneous::{homogeneous_clique_pairs, is_skeletal, make_skeletal, HomogeneousPair};
pub use interval::{is_circular_interval, is_linear_interval, CircularRepresentation};
pub use recognize::{
    as_thickened_c5, find_claw, is_bisimplicial, is_quasi_line, two_clique_cover,
};
pub use twojoin::{
    find_interval_two_joins, reduce_two_join, verify_two_join, TwoJoin, TwoJoinKind, DEFAULT_MAX_H,
};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("graph has {0} vertices; exhaustive ordering search is capped at {1}")]
    Budget(usize, usize),
    #[error("2-join is not canonical")]
    NotCanonical,
    #[error("2-join is not reducible")]
    NotReducible,
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
}
