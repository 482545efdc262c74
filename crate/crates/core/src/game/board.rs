use crate::graph::{members, Graph, VertexSet, MAX_ORDER};

use super::{GameError, Player};

/// Palettes larger than this behave exactly like this one: a graph on at most
/// 32 vertices never has a vertex with 33 colors around it.
pub const MAX_PALETTE: usize = MAX_ORDER + 1;

/// Iterates the colors whose bits are set in a color mask.
#[inline]
pub(crate) fn color_bits(mut mask: u64) -> impl Iterator<Item = u8> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let c = mask.trailing_zeros() as u8;
        mask &= mask - 1;
        Some(c)
    })
}

/// A proper partial coloring of a graph with palette `{1, .., k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Position<'g> {
    graph: &'g Graph,
    k: usize,
    colors: [u8; MAX_ORDER],
    classes: [VertexSet; MAX_PALETTE + 1],
    uncolored: VertexSet,
}

impl<'g> Position<'g> {
    /// The uncolored position. Palettes above [`MAX_PALETTE`] are clamped.
    pub fn new(graph: &'g Graph, k: usize) -> Result<Self, GameError> {
        if k == 0 {
            return Err(GameError::EmptyPalette);
        }
        Ok(Position {
            graph,
            k: k.min(MAX_PALETTE),
            colors: [0; MAX_ORDER],
            classes: [0; MAX_PALETTE + 1],
            uncolored: graph.vertex_set(),
        })
    }

    /// A position from per-vertex colors, `0` meaning uncolored.
    pub fn from_colors(graph: &'g Graph, k: usize, colors: &[u8]) -> Result<Self, GameError> {
        if colors.len() != graph.order() {
            return Err(GameError::ImproperColoring(format!(
                "{} colors for {} vertices",
                colors.len(),
                graph.order()
            )));
        }
        let mut pos = Position::new(graph, k)?;
        for (v, &c) in colors.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c as usize > pos.k {
                return Err(GameError::ImproperColoring(format!(
                    "vertex {v} has color {c} outside the palette"
                )));
            }
            if pos.classes[c as usize] & graph.neighbors(v) != 0 {
                return Err(GameError::ImproperColoring(format!(
                    "vertex {v} repeats color {c} of a neighbor"
                )));
            }
            pos.set(v, c);
        }
        Ok(pos)
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn palette(&self) -> usize {
        self.k
    }

    pub fn color(&self, v: usize) -> Option<u8> {
        match self.colors[v] {
            0 => None,
            c => Some(c),
        }
    }

    pub fn uncolored(&self) -> VertexSet {
        self.uncolored
    }

    pub fn colored_count(&self) -> usize {
        self.graph.order() - self.uncolored.count_ones() as usize
    }

    /// Alice moves when an even number of vertices is colored.
    pub fn mover(&self) -> Player {
        if self.colored_count().is_multiple_of(2) {
            Player::Alice
        } else {
            Player::Bob
        }
    }

    pub fn is_complete(&self) -> bool {
        self.uncolored == 0
    }

    /// Colors in `{1..k}` absent from the neighborhood of the uncolored vertex `v`.
    pub fn legal_colors(&self, v: usize) -> Result<Vec<u8>, GameError> {
        if v >= self.graph.order() {
            return Err(GameError::IllegalMove(format!("vertex {v} out of range")));
        }
        if self.colors[v] != 0 {
            return Err(GameError::IllegalMove(format!(
                "vertex {v} is already colored"
            )));
        }
        let mask = self.legal_mask(v);
        Ok((1..=self.k as u8).filter(|&c| mask >> c & 1 == 1).collect())
    }

    /// Colors `v` after checking legality.
    pub fn play(&mut self, v: usize, c: u8) -> Result<(), GameError> {
        if !self.legal_colors(v)?.contains(&c) {
            return Err(GameError::IllegalMove(format!(
                "color {c} is not available at vertex {v}"
            )));
        }
        self.set(v, c);
        Ok(())
    }

    /// Some uncolored vertex that sees every palette color, if any.
    pub fn blocked_vertex(&self) -> Option<usize> {
        members(self.uncolored).find(|&v| self.legal_mask(v) == 0)
    }

    #[inline]
    pub(crate) fn raw_colors(&self) -> &[u8; MAX_ORDER] {
        &self.colors
    }

    /// Bit `c` set iff color `c` is legal at `v`.
    #[inline]
    pub(crate) fn legal_mask(&self, v: usize) -> u64 {
        let nb = self.graph.neighbors(v);
        let mut mask = 0u64;
        for c in 1..=self.k {
            if self.classes[c] & nb == 0 {
                mask |= 1 << c;
            }
        }
        mask
    }

    /// Legal colors at `v` up to renaming: every used legal color and the
    /// smallest unused one.
    #[inline]
    pub(crate) fn representative_colors(&self, v: usize) -> u64 {
        let nb = self.graph.neighbors(v);
        let mut mask = 0u64;
        let mut fresh = false;
        for c in 1..=self.k {
            let class = self.classes[c];
            if class == 0 {
                if !fresh {
                    mask |= 1 << c;
                    fresh = true;
                }
            } else if class & nb == 0 {
                mask |= 1 << c;
            }
        }
        mask
    }

    /// Whether the uncolored vertex `v` could still end up seeing all `k` colors.
    #[inline]
    pub(crate) fn can_be_blocked(&self, v: usize) -> bool {
        let nb = self.graph.neighbors(v);
        let uncolored_nb = (nb & self.uncolored).count_ones() as usize;
        if uncolored_nb >= self.k {
            return true;
        }
        let seen = (1..=self.k).filter(|&c| self.classes[c] & nb != 0).count();
        seen + uncolored_nb >= self.k
    }

    #[inline]
    pub(crate) fn set(&mut self, v: usize, c: u8) {
        self.colors[v] = c;
        self.classes[c as usize] |= 1 << v;
        self.uncolored &= !(1 << v);
    }

    #[inline]
    pub(crate) fn unset(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = 0;
        self.classes[c as usize] &= !(1 << v);
        self.uncolored |= 1 << v;
    }
}
