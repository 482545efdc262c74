//! Exact game-tree solvers for the coloring, indicated coloring and
//! independence coloring games.

mod board;
pub mod coloring;
pub mod independence;
pub mod indicated;
mod symmetry;
pub mod tt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use board::Position;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Player {
    Alice,
    Bob,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Alice => Player::Bob,
            Player::Bob => Player::Alice,
        }
    }
}

/// Graphs up to this order get automorphism reduction unless configured otherwise.
pub const AUTO_SYMMETRY_MAX_ORDER: usize = 16;

#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// `None` enables automorphism reduction for graphs of order at most
    /// [`AUTO_SYMMETRY_MAX_ORDER`].
    pub use_automorphisms: Option<bool>,
    /// Largest number of automorphisms tried per state key.
    pub automorphism_cap: usize,
    pub table_capacity: usize,
    /// Maximum number of expanded states per solve.
    pub state_budget: Option<u64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            use_automorphisms: None,
            automorphism_cap: 512,
            table_capacity: tt::DEFAULT_CAPACITY,
            state_budget: None,
        }
    }
}

impl SolverConfig {
    pub fn with_budget(budget: Option<u64>) -> Self {
        SolverConfig {
            state_budget: budget,
            ..Default::default()
        }
    }

    pub(crate) fn automorphisms_enabled(&self, order: usize) -> bool {
        self.use_automorphisms
            .unwrap_or(order <= AUTO_SYMMETRY_MAX_ORDER)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub expanded: u64,
    pub memo_hits: u64,
}

impl std::ops::AddAssign for SolveStats {
    fn add_assign(&mut self, rhs: Self) {
        self.expanded += rhs.expanded;
        self.memo_hits += rhs.memo_hits;
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("state budget exhausted after {0} expanded states")]
    BudgetExhausted(u64),
    #[error("illegal move: {0}")]
    IllegalMove(String),
    #[error("the palette needs at least one color")]
    EmptyPalette,
    #[error("the position is terminal")]
    Terminal,
    #[error("coloring is not proper: {0}")]
    ImproperColoring(String),
}

/// Counts expanded states against an optional budget.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Meter {
    pub(crate) stats: SolveStats,
    budget: Option<u64>,
}

impl Meter {
    pub(crate) fn new(budget: Option<u64>) -> Self {
        Meter {
            stats: SolveStats::default(),
            budget,
        }
    }

    #[inline]
    pub(crate) fn expand(&mut self) -> Result<(), GameError> {
        self.stats.expanded += 1;
        match self.budget {
            Some(b) if self.stats.expanded > b => Err(GameError::BudgetExhausted(b)),
            _ => Ok(()),
        }
    }

    #[inline]
    pub(crate) fn hit(&mut self) {
        self.stats.memo_hits += 1;
    }
}
