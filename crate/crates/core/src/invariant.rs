use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::game::coloring::ColoringSolver;
use crate::game::independence::{IndependenceSolver, Variant};
use crate::game::indicated::IndicatedSolver;
use crate::game::{GameError, SolveStats, SolverConfig};
use crate::graph::Graph;

/// The four game-chromatic invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum InvariantId {
    #[serde(rename = "chi_g")]
    ChiG,
    #[serde(rename = "chi_i")]
    ChiI,
    #[serde(rename = "chi_ig_a")]
    ChiIgA,
    #[serde(rename = "chi_ig_ab")]
    ChiIgAB,
}

impl InvariantId {
    pub const ALL: [InvariantId; 4] = [
        InvariantId::ChiG,
        InvariantId::ChiI,
        InvariantId::ChiIgA,
        InvariantId::ChiIgAB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InvariantId::ChiG => "chi_g",
            InvariantId::ChiI => "chi_i",
            InvariantId::ChiIgA => "chi_ig_a",
            InvariantId::ChiIgAB => "chi_ig_ab",
        }
    }

    /// Solves the invariant exactly. The empty graph has value 0.
    pub fn compute(
        self,
        g: &Graph,
        config: &SolverConfig,
    ) -> Result<(usize, SolveStats), GameError> {
        match self {
            InvariantId::ChiG => {
                let mut s = ColoringSolver::new(config.clone());
                let v = s.chi_g(g)?;
                Ok((v, s.stats()))
            }
            InvariantId::ChiI => {
                let mut s = IndicatedSolver::new(config.clone());
                let v = s.chi_i(g)?;
                Ok((v, s.stats()))
            }
            InvariantId::ChiIgA | InvariantId::ChiIgAB => {
                let variant = if self == InvariantId::ChiIgA {
                    Variant::A
                } else {
                    Variant::AB
                };
                let mut s = IndependenceSolver::new(config.clone());
                let v = s.game_value(g, variant, None)?;
                Ok((v, s.stats()))
            }
        }
    }
}

impl fmt::Display for InvariantId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InvariantId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        InvariantId::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| {
                format!("unknown invariant `{s}` (expected chi_g, chi_i, chi_ig_a or chi_ig_ab)")
            })
    }
}
