//! Exact solvers for graph coloring games and game-chromatic vertex-criticality.
//!
//! The crate covers four game invariants of a simple graph:
//!
//! * `chi_g`: the coloring game, Alice and Bob alternately color properly;
//! * `chi_i`: the indicated coloring game, Ann selects and Ben colors;
//! * `chi_ig_a` / `chi_ig_ab`: the independence coloring game, counted in rounds.
//!
//! Graphs have at most 32 vertices and store one adjacency word per vertex.

pub mod canon;
pub mod criticality;
pub mod dsl;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod game;
pub mod graph;
pub mod graph6;
pub mod invariant;

pub use criticality::{CriticalityClass, CriticalityProfile, Evaluator, Flavor};
pub use error::{Graph6Error, GraphError, ParseError};
pub use game::coloring::{alice_wins, chi_g};
pub use game::independence::{chi_ig_a, chi_ig_ab, game_value, Variant};
pub use game::indicated::{ann_wins, chi_i};
pub use game::{GameError, Player, SolveStats, SolverConfig};
pub use graph::{Bipartition, Graph, VertexSet, MAX_ORDER};
pub use invariant::InvariantId;

/// Parses a named-graph expression, falling back to a graph6 record.
pub fn parse_graph_spec(spec: &str) -> Result<Graph, ParseError> {
    match dsl::parse(spec) {
        Ok(g) => Ok(g),
        Err(dsl_err) => graph6::parse(spec.trim()).map_err(|g6| ParseError {
            offset: dsl_err.offset,
            message: format!("{} (and not graph6: {g6})", dsl_err.message),
        }),
    }
}
