//! The indicated coloring game: Ann repeatedly selects an uncolored vertex and
//! Ben colors it with any color from `{1..k}` not present on its neighbors.
//! Ben wins as soon as some uncolored vertex sees all `k` colors.

use crate::graph::{members, Graph};

use super::board::{color_bits, Position};
use super::coloring::{status, Status};
use super::symmetry::{ColoringKey, Symmetry};
use super::tt::TranspositionTable;
use super::{GameError, Meter, SolveStats, SolverConfig};

struct Search {
    symmetry: Symmetry,
    table: TranspositionTable<ColoringKey, bool>,
    meter: Meter,
}

impl Search {
    fn new(g: &Graph, config: &SolverConfig) -> Self {
        Search {
            symmetry: Symmetry::new(g, config),
            table: TranspositionTable::new(config.table_capacity),
            meter: Meter::new(config.state_budget),
        }
    }

    /// Value at a selection point: some vertex whose every coloring keeps Ann winning.
    fn ann_wins(&mut self, pos: &mut Position) -> Result<bool, GameError> {
        if pos.is_complete() {
            return Ok(true);
        }
        match status(pos) {
            Status::Blocked => return Ok(false),
            Status::Safe => return Ok(true),
            Status::Open => {}
        }
        let key = self.symmetry.coloring_key(pos.raw_colors());
        if let Some(v) = self.table.get(&key) {
            self.meter.hit();
            return Ok(v);
        }
        self.meter.expand()?;
        // vertices with fewer options for Ben first
        let mut choices: Vec<(u32, usize, u64)> = members(pos.uncolored())
            .map(|v| {
                let colors = pos.representative_colors(v);
                (colors.count_ones(), v, colors)
            })
            .collect();
        choices.sort_unstable();
        let mut value = false;
        'select: for (_, v, colors) in choices {
            for c in color_bits(colors) {
                pos.set(v, c);
                let child = self.ann_wins(pos);
                pos.unset(v);
                if !child? {
                    continue 'select;
                }
            }
            value = true;
            break;
        }
        self.table.insert(key, value);
        Ok(value)
    }
}

#[derive(Default)]
pub struct IndicatedSolver {
    config: SolverConfig,
    stats: SolveStats,
}

impl IndicatedSolver {
    pub fn new(config: SolverConfig) -> Self {
        IndicatedSolver {
            config,
            stats: SolveStats::default(),
        }
    }

    pub fn stats(&self) -> SolveStats {
        self.stats
    }

    /// Whether Ann wins from `pos`, Ann to select next.
    pub fn ann_wins_from(&mut self, pos: &Position) -> Result<bool, GameError> {
        let mut search = Search::new(pos.graph(), &self.config);
        let mut pos = pos.clone();
        let out = search.ann_wins(&mut pos);
        self.stats += search.meter.stats;
        out
    }

    pub fn ann_wins(&mut self, g: &Graph, k: usize) -> Result<bool, GameError> {
        self.ann_wins_from(&Position::new(g, k)?)
    }

    /// Smallest winning palette for Ann, searched upward from the chromatic number.
    ///
    /// With `Δ + 1` colors no vertex can ever be blocked, so the search stops there.
    pub fn chi_i(&mut self, g: &Graph) -> Result<usize, GameError> {
        if g.order() == 0 {
            return Ok(0);
        }
        let upper = g.max_degree() + 1;
        for k in g.chromatic_number()..=upper {
            if self.ann_wins(g, k)? {
                return Ok(k);
            }
        }
        Ok(upper)
    }
}

pub fn ann_wins(g: &Graph, k: usize) -> Result<bool, GameError> {
    IndicatedSolver::default().ann_wins(g, k)
}

/// The indicated chromatic number; `0` for the empty graph.
pub fn chi_i(g: &Graph) -> usize {
    IndicatedSolver::default()
        .chi_i(g)
        .expect("unbounded solve cannot fail")
}

/// Plays a fixed selection order against every possible Ben and reports
/// whether all vertices always get colored.
pub fn selection_order_wins(g: &Graph, k: usize, order: &[usize]) -> Result<bool, GameError> {
    fn go(pos: &mut Position, order: &[usize]) -> bool {
        let Some((&v, rest)) = order.split_first() else {
            return pos.is_complete();
        };
        if pos.blocked_vertex().is_some() {
            return false;
        }
        let colors = pos.legal_mask(v);
        color_bits(colors).all(|c| {
            pos.set(v, c);
            let ok = go(pos, rest);
            pos.unset(v);
            ok
        })
    }
    let mut seen = 0u32;
    for &v in order {
        if v >= g.order() || seen >> v & 1 == 1 {
            return Err(GameError::IllegalMove(format!(
                "bad selection order entry {v}"
            )));
        }
        seen |= 1 << v;
    }
    if seen != g.vertex_set() {
        return Err(GameError::IllegalMove(
            "selection order must list every vertex".into(),
        ));
    }
    let mut pos = Position::new(g, k)?;
    Ok(go(&mut pos, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn small_values() {
        assert_eq!(chi_i(&Graph::empty(0).unwrap()), 0);
        assert_eq!(chi_i(&complete(1).unwrap()), 1);
        assert_eq!(chi_i(&cycle(5).unwrap()), 3);
        assert_eq!(chi_i(&cycle(5).unwrap().delete_vertex(0).unwrap()), 2);
        assert_eq!(chi_i(&cycle(6).unwrap()), 2);
        assert!(!ann_wins(&cycle(5).unwrap(), 2).unwrap());
    }

    #[test]
    fn connected_bipartite_needs_two() {
        for g in [
            path(5).unwrap(),
            star(4).unwrap(),
            c4_plus(),
            complete_bipartite(3, 3).unwrap(),
        ] {
            assert!(ann_wins(&g, 2).unwrap());
        }
    }

    #[test]
    fn fig1_selection_order() {
        let g = fig1_graph();
        let order: Vec<usize> = "feghxdcba"
            .chars()
            .map(|c| FIG1_LABELS.iter().position(|&l| l == c).unwrap())
            .collect();
        assert!(selection_order_wins(&g, 3, &order).unwrap());
        assert!(ann_wins(&g, 3).unwrap());
        assert!(selection_order_wins(&g, 3, &order[..3]).is_err());
    }
}
