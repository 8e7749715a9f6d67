//! Tableau lifting: hypergraph scaffolds, the lifted tableau construction,
//! and the exhaustive verifier for its three properties.

mod hypergraph;
mod lift;
mod verify;

pub use hypergraph::{
    build_hypergraph_even, build_hypergraph_odd, validate_hypergraph, Hypergraph,
    ValidationReport,
};
pub use lift::{lift_tableau, LiftedTableau};
pub use verify::{verify_lift, LiftVerdict};
