//! The independence coloring game. Round `i` uses color `i`; players alternate
//! coloring vertices that are not adjacent to any vertex colored earlier in the
//! same round, and the round ends once no such vertex is left. Alice minimizes
//! and Bob maximizes the number of rounds.
//!
//! In variant A Alice starts every round. In variant AB each later round is
//! started by the player who did not make the last move of the previous round,
//! so the turn order simply continues across the round boundary.

use serde::{Deserialize, Serialize};

use crate::graph::{members, Graph, VertexSet};

use super::symmetry::Symmetry;
use super::tt::TranspositionTable;
use super::{GameError, Meter, Player, SolveStats, SolverConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    A,
    AB,
}

/// Position inside a round: vertices of completed rounds, vertices colored in
/// the current round, and the player to move.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RoundState {
    pub finished: VertexSet,
    pub round_class: VertexSet,
    pub mover: Player,
}

impl RoundState {
    pub fn start() -> Self {
        RoundState {
            finished: 0,
            round_class: 0,
            mover: Player::Alice,
        }
    }
}

/// Uncolored vertices with no neighbor in the current round's class.
pub fn legal_round_moves(g: &Graph, state: &RoundState) -> VertexSet {
    let colored = state.finished | state.round_class;
    g.vertex_set() & !colored & !g.neighbors_of_set(state.round_class)
}

struct Search<'g> {
    graph: &'g Graph,
    variant: Variant,
    symmetry: Symmetry,
    table: TranspositionTable<(u64, bool), u8>,
    meter: Meter,
}

impl Search<'_> {
    /// Rounds still to be started after the current one.
    fn rounds_after(
        &mut self,
        finished: VertexSet,
        round: VertexSet,
        mover: Player,
    ) -> Result<u8, GameError> {
        let all = self.graph.vertex_set();
        let colored = finished | round;
        let legal = all & !colored & !self.graph.neighbors_of_set(round);
        if legal == 0 {
            if colored == all {
                return Ok(0);
            }
            let starter = match self.variant {
                Variant::A => Player::Alice,
                Variant::AB => mover,
            };
            return Ok(1 + self.rounds_after(colored, 0, starter)?);
        }
        let key = (
            self.symmetry.set_pair_key(finished, round),
            mover == Player::Alice,
        );
        if let Some(v) = self.table.get(&key) {
            self.meter.hit();
            return Ok(v);
        }
        self.meter.expand()?;
        let mut best = match mover {
            Player::Alice => u8::MAX,
            Player::Bob => 0,
        };
        // no round count can go below this, so Alice may stop early on reaching it
        let floor = if colored | legal == all { 0 } else { 1 };
        for v in members(legal) {
            let value = self.rounds_after(finished, round | 1 << v, mover.other())?;
            match mover {
                Player::Alice => {
                    best = best.min(value);
                    if best == floor {
                        break;
                    }
                }
                Player::Bob => best = best.max(value),
            }
        }
        self.table.insert(key, best);
        Ok(best)
    }
}

#[derive(Default)]
pub struct IndependenceSolver {
    config: SolverConfig,
    stats: SolveStats,
}

impl IndependenceSolver {
    pub fn new(config: SolverConfig) -> Self {
        IndependenceSolver {
            config,
            stats: SolveStats::default(),
        }
    }

    pub fn stats(&self) -> SolveStats {
        self.stats
    }

    /// Total number of rounds under optimal play from `state`, counting the
    /// current round (and any completed ones as recorded by `completed_rounds`).
    pub fn value_from(
        &mut self,
        g: &Graph,
        variant: Variant,
        state: &RoundState,
        completed_rounds: usize,
    ) -> Result<usize, GameError> {
        let colored = state.finished | state.round_class;
        if colored == g.vertex_set() {
            return Ok(completed_rounds + usize::from(state.round_class != 0));
        }
        let mut search = Search {
            graph: g,
            variant,
            symmetry: Symmetry::new(g, &self.config),
            table: TranspositionTable::new(self.config.table_capacity),
            meter: Meter::new(self.config.state_budget),
        };
        let out = search.rounds_after(state.finished, state.round_class, state.mover);
        self.stats += search.meter.stats;
        let after = out? as usize;
        // a state with an empty class sits at the start of a round not yet counted
        Ok(completed_rounds + 1 + after)
    }

    /// Rounds under optimal play, optionally after Alice opens on `first_move`.
    pub fn game_value(
        &mut self,
        g: &Graph,
        variant: Variant,
        first_move: Option<usize>,
    ) -> Result<usize, GameError> {
        if g.order() == 0 {
            if let Some(v) = first_move {
                return Err(GameError::IllegalMove(format!("vertex {v} out of range")));
            }
            return Ok(0);
        }
        let state = match first_move {
            None => RoundState::start(),
            Some(v) if v < g.order() => RoundState {
                finished: 0,
                round_class: 1 << v,
                mover: Player::Bob,
            },
            Some(v) => return Err(GameError::IllegalMove(format!("vertex {v} out of range"))),
        };
        self.value_from(g, variant, &state, 0)
    }
}

pub fn game_value(
    g: &Graph,
    variant: Variant,
    first_move: Option<usize>,
) -> Result<usize, GameError> {
    IndependenceSolver::default().game_value(g, variant, first_move)
}

pub fn chi_ig_a(g: &Graph) -> usize {
    game_value(g, Variant::A, None).expect("unbounded solve cannot fail")
}

pub fn chi_ig_ab(g: &Graph) -> usize {
    game_value(g, Variant::AB, None).expect("unbounded solve cannot fail")
}
