//! Exact computation for list coloring of small dense graphs: choosability
//! oracles, structure recognition, and exhaustive verification over
//! small-graph universes.

pub mod catalog;
pub mod choosability;
pub mod chromatic;
pub mod clique;
pub mod graph;
pub mod iso;
pub mod matching;
pub mod multigraph;
pub mod structure;
pub mod verifier;
