//! Exact proportional component-order connectivity.
//!
//! A graph of order `n` is in a *failure state* at proportion `r` when every
//! component has order at most `floor(r * n)`. This crate computes the
//! fewest vertices ([`copvc_exact`]) or edges ([`copec_exact`]) whose removal
//! forces a failure state, closed forms for standard graph families, and the
//! extremal values of both measures over all graphs with `n` vertices and `m`
//! edges.

pub mod bounds;
pub mod closed_forms;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod formats;
pub mod graph;
pub mod proportion;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{
    complement, is_failure_state, remove_edges, remove_vertices, ComponentSummary, Edge, Graph,
};
pub use proportion::{Proportion, Threshold};
pub use solver::{
    copec, copec_exact, copvc, copvc_exact, verify_witness, DisconnectingWitness, Removal,
    WitnessKind,
};
