//! The coloring game: Alice and Bob alternately color vertices properly from
//! `{1..k}`, Alice first, no passing. Bob wins as soon as some uncolored vertex
//! sees all `k` colors; Alice wins when every vertex is colored.

use crate::graph::{members, Graph};

use super::board::{color_bits, Position};
use super::symmetry::{ColoringKey, Symmetry};
use super::tt::TranspositionTable;
use super::{GameError, Meter, SolveStats, SolverConfig};

/// Outcome of scanning the uncolored vertices of a position.
#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Status {
    Blocked,
    /// No uncolored vertex can ever be blocked.
    Safe,
    Open,
}

pub(crate) fn status(pos: &Position) -> Status {
    let mut safe = true;
    for v in members(pos.uncolored()) {
        if pos.legal_mask(v) == 0 {
            return Status::Blocked;
        }
        if safe && pos.can_be_blocked(v) {
            safe = false;
        }
    }
    if safe {
        Status::Safe
    } else {
        Status::Open
    }
}

/// Memoized AND/OR search for one graph and palette.
pub(crate) struct Search {
    symmetry: Symmetry,
    table: TranspositionTable<ColoringKey, bool>,
    pub(crate) meter: Meter,
}

impl Search {
    pub(crate) fn new(g: &Graph, config: &SolverConfig) -> Self {
        Search {
            symmetry: Symmetry::new(g, config),
            table: TranspositionTable::new(config.table_capacity),
            meter: Meter::new(config.state_budget),
        }
    }

    /// Whether Alice wins from `pos` with the player to move given by parity.
    pub(crate) fn alice_wins(&mut self, pos: &mut Position) -> Result<bool, GameError> {
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
        let alice_moves = pos.colored_count().is_multiple_of(2);
        // Alice looks for one winning move, Bob for one refutation.
        let mut value = !alice_moves;
        'moves: for v in members(pos.uncolored()) {
            let colors = pos.representative_colors(v);
            for c in color_bits(colors) {
                pos.set(v, c);
                let child = self.alice_wins(pos);
                pos.unset(v);
                if child? == alice_moves {
                    value = alice_moves;
                    break 'moves;
                }
            }
        }
        self.table.insert(key, value);
        Ok(value)
    }
}

/// Solver front end; accumulates statistics over every solve it runs.
#[derive(Default)]
pub struct ColoringSolver {
    config: SolverConfig,
    stats: SolveStats,
}

impl ColoringSolver {
    pub fn new(config: SolverConfig) -> Self {
        ColoringSolver {
            config,
            stats: SolveStats::default(),
        }
    }

    pub fn stats(&self) -> SolveStats {
        self.stats
    }

    fn run<T>(
        &mut self,
        g: &Graph,
        f: impl FnOnce(&mut Search) -> Result<T, GameError>,
    ) -> Result<T, GameError> {
        let mut search = Search::new(g, &self.config);
        let out = f(&mut search);
        self.stats += search.meter.stats;
        out
    }

    /// Whether Alice has a winning strategy with `k` colors, optionally after a
    /// prescribed opening move `(vertex, color)` by Alice.
    pub fn alice_wins(
        &mut self,
        g: &Graph,
        k: usize,
        first_move: Option<(usize, u8)>,
    ) -> Result<bool, GameError> {
        let mut pos = Position::new(g, k)?;
        if let Some((v, c)) = first_move {
            pos.play(v, c)?;
        }
        self.run(g, |s| s.alice_wins(&mut pos))
    }

    /// Value of an arbitrary position: `true` iff Alice wins from it.
    pub fn alice_wins_from(&mut self, pos: &Position) -> Result<bool, GameError> {
        let mut pos = pos.clone();
        self.run(pos.graph(), |s| s.alice_wins(&mut pos))
    }

    /// Smallest `k` with a winning strategy for Alice, tried in ascending order
    /// from the chromatic number up to `Δ + 1`.
    pub fn chi_g(&mut self, g: &Graph) -> Result<usize, GameError> {
        if g.order() == 0 {
            return Ok(0);
        }
        let upper = g.max_degree() + 1;
        for k in g.chromatic_number()..=upper {
            if self.alice_wins(g, k, None)? {
                return Ok(k);
            }
        }
        Ok(upper)
    }

    /// A move achieving the value of `pos`; ties go to the lowest vertex, then
    /// the lowest color.
    pub fn best_move(&mut self, pos: &Position) -> Result<(usize, u8), GameError> {
        if pos.is_complete() || pos.blocked_vertex().is_some() {
            return Err(GameError::Terminal);
        }
        let mut pos = pos.clone();
        self.run(pos.graph(), |s| {
            let value = s.alice_wins(&mut pos)?;
            let mut first = None;
            for v in members(pos.uncolored()) {
                for c in pos.legal_colors(v)? {
                    first.get_or_insert((v, c));
                    pos.set(v, c);
                    let child = s.alice_wins(&mut pos);
                    pos.unset(v);
                    if child? == value {
                        return Ok((v, c));
                    }
                }
            }
            first.ok_or(GameError::Terminal)
        })
    }
}

pub fn alice_wins(g: &Graph, k: usize, first_move: Option<(usize, u8)>) -> Result<bool, GameError> {
    ColoringSolver::default().alice_wins(g, k, first_move)
}

/// The game chromatic number; `0` for the empty graph.
pub fn chi_g(g: &Graph) -> usize {
    ColoringSolver::default()
        .chi_g(g)
        .expect("unbounded solve cannot fail")
}

pub fn best_move(pos: &Position) -> Result<(usize, u8), GameError> {
    ColoringSolver::default().best_move(pos)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::game::Player;

    #[test]
    fn small_values() {
        assert_eq!(chi_g(&Graph::empty(0).unwrap()), 0);
        assert_eq!(chi_g(&complete(1).unwrap()), 1);
        assert_eq!(chi_g(&complete(2).unwrap()), 2);
        assert_eq!(chi_g(&path(4).unwrap()), 3);
        assert_eq!(chi_g(&cycle(3).unwrap()), 3);
        assert_eq!(chi_g(&cycle(4).unwrap()), 3);
        for n in 1..=5 {
            assert_eq!(chi_g(&star(n).unwrap()), 2, "K1,{n}");
        }
    }

    #[test]
    fn alice_wins_examples() {
        assert!(alice_wins(&star(3).unwrap(), 2, None).unwrap());
        assert!(!alice_wins(&path(4).unwrap(), 2, None).unwrap());
        let g = fig1_graph();
        assert!(alice_wins(&g, g.max_degree() + 1, None).unwrap());
        assert!(alice_wins(&g, 100, None).unwrap());
    }

    #[test]
    fn forced_first_move() {
        let p4 = path(4).unwrap();
        // an end vertex opening loses with two colors, like every opening
        assert!(!alice_wins(&p4, 2, Some((0, 1))).unwrap());
        assert!(matches!(
            alice_wins(&p4, 2, Some((0, 3))),
            Err(GameError::IllegalMove(_))
        ));
        assert!(alice_wins(&p4, 2, Some((9, 1))).is_err());
    }

    #[test]
    fn best_moves() {
        let k2 = complete(2).unwrap();
        let pos = Position::new(&k2, 2).unwrap();
        assert_eq!(best_move(&pos).unwrap(), (0, 1));

        let p3 = path(3).unwrap();
        let pos = Position::from_colors(&p3, 2, &[1, 0, 0]).unwrap();
        assert_eq!(pos.mover(), Player::Bob);
        // color 2 on the far end blocks the center
        assert_eq!(best_move(&pos).unwrap(), (2, 2));

        let pos = Position::from_colors(&p3, 2, &[1, 0, 1]).unwrap();
        assert_eq!(best_move(&pos).unwrap(), (1, 2));

        let done = Position::from_colors(&k2, 2, &[1, 2]).unwrap();
        assert_eq!(best_move(&done), Err(GameError::Terminal));
    }

    #[test]
    fn budget_is_enforced() {
        let g = complete_bipartite_minus_matching(4).unwrap();
        let mut s = ColoringSolver::new(SolverConfig::with_budget(Some(3)));
        assert_eq!(s.chi_g(&g), Err(GameError::BudgetExhausted(3)));
    }

    #[test]
    fn symmetry_does_not_change_values() {
        let no_sym = SolverConfig {
            use_automorphisms: Some(false),
            ..Default::default()
        };
        for g in [
            c4_plus(),
            complete_bipartite_minus_matching(3).unwrap(),
            path(6).unwrap(),
        ] {
            assert_eq!(
                ColoringSolver::new(no_sym.clone()).chi_g(&g).unwrap(),
                chi_g(&g)
            );
        }
    }
}
