//! Simple undirected graphs on at most 32 vertices with one adjacency word per vertex.

use std::collections::VecDeque;
use std::fmt;

use crate::error::GraphError;

pub const MAX_ORDER: usize = 32;

/// A set of vertices, bit `v` set iff vertex `v` is a member.
pub type VertexSet = u32;

/// Iterates the members of a vertex set in ascending order.
pub fn members(set: VertexSet) -> Members {
    Members(set)
}

#[derive(Clone, Copy, Debug)]
pub struct Members(VertexSet);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// The set `{0, .., n-1}`.
#[inline]
pub fn full_set(n: usize) -> VertexSet {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: [VertexSet; MAX_ORDER],
}

/// A two-coloring of a bipartite graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side_x: VertexSet,
    pub side_y: VertexSet,
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(order));
        }
        Ok(Graph {
            order,
            adj: [0; MAX_ORDER],
        })
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.order {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: self.order,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj[..self.order]
            .iter()
            .map(|row| row.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        full_set(self.order)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v] | (1 << v)
    }

    /// Union of the neighborhoods of every vertex in `set`.
    #[inline]
    pub fn neighbors_of_set(&self, set: VertexSet) -> VertexSet {
        members(set).fold(0, |acc, v| acc | self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order)
            .flat_map(move |u| members(self.adj[u] & !full_set(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_universal(&self, v: usize) -> bool {
        v < self.order && self.adj[v] == self.vertex_set() & !(1 << v)
    }

    /// Removes `v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.order {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order,
            });
        }
        Ok(self.induced(self.vertex_set() & !(1 << v)))
    }

    /// The subgraph induced on `set`, renumbered in ascending order of the kept vertices.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let set = set & self.vertex_set();
        let kept: Vec<usize> = members(set).collect();
        let mut g = Graph {
            order: kept.len(),
            adj: [0; MAX_ORDER],
        };
        for (i, &u) in kept.iter().enumerate() {
            g.adj[i] = compress(self.adj[u], set);
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.order);
        let mut g = Graph {
            order: self.order,
            adj: [0; MAX_ORDER],
        };
        for u in 0..self.order {
            g.adj[perm[u]] = permute_set(self.adj[u], perm);
        }
        g
    }

    /// Appends one vertex adjacent to `neighbors`.
    pub(crate) fn with_new_vertex(&self, neighbors: VertexSet) -> Result<Graph, GraphError> {
        if self.order >= MAX_ORDER {
            return Err(GraphError::OrderTooLarge(self.order + 1));
        }
        let mut g = self.clone();
        let new = g.order;
        g.order += 1;
        for u in members(neighbors & self.vertex_set()) {
            g.adj[u] |= 1 << new;
            g.adj[new] |= 1 << u;
        }
        Ok(g)
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertex_set();
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let comp = self.reach(start);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// The component containing `v`.
    pub fn reach(&self, v: usize) -> VertexSet {
        let mut seen: VertexSet = 1 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let next = self.neighbors_of_set(frontier) & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// True for the empty graph and for every graph with a single component.
    pub fn is_connected(&self) -> bool {
        self.order == 0 || self.reach(0) == self.vertex_set()
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for w in members(self.adj[u]) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path distance, `None` across components.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.distances_from(u)[v]
    }

    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for u in 0..self.order {
            for d in self.distances_from(u) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// A proper 2-coloring, with the smallest vertex of every component on `side_x`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut side = vec![None::<bool>; self.order];
        for start in 0..self.order {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap_or(false);
                for w in members(self.adj[u]) {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let side_y = side
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Some(true))
            .fold(0, |acc, (v, _)| acc | 1 << v);
        Some(Bipartition {
            side_x: self.vertex_set() & !side_y,
            side_y,
        })
    }

    /// A connected bipartite graph with a vertex adjacent to the whole opposite side.
    ///
    /// Disconnected graphs always answer false.
    pub fn has_bipartite_dominating_vertex(&self) -> bool {
        if self.order == 0 || !self.is_connected() {
            return false;
        }
        let Some(parts) = self.bipartition() else {
            return false;
        };
        members(parts.side_x).any(|v| self.adj[v] == parts.side_y)
            || members(parts.side_y).any(|v| self.adj[v] == parts.side_x)
    }

    /// Exact chromatic number by backtracking over colorings with symmetry-broken color choices.
    pub fn chromatic_number(&self) -> usize {
        if self.order == 0 {
            return 0;
        }
        let mut order: Vec<usize> = (0..self.order).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let lower = if self.size() > 0 { 2 } else { 1 };
        (lower..=self.order)
            .find(|&k| {
                let mut classes = vec![0 as VertexSet; k];
                self.color_from(&order, 0, &mut classes, 0)
            })
            .unwrap_or(self.order)
    }

    fn color_from(
        &self,
        order: &[usize],
        idx: usize,
        classes: &mut [VertexSet],
        used: usize,
    ) -> bool {
        let Some(&v) = order.get(idx) else {
            return true;
        };
        let limit = (used + 1).min(classes.len());
        for c in 0..limit {
            if classes[c] & self.adj[v] == 0 {
                classes[c] |= 1 << v;
                if self.color_from(order, idx + 1, classes, used.max(c + 1)) {
                    return true;
                }
                classes[c] &= !(1 << v);
            }
        }
        false
    }
}

/// Packs the members of `set` that lie in `keep` into consecutive low bits.
fn compress(set: VertexSet, keep: VertexSet) -> VertexSet {
    let mut out = 0;
    for (i, v) in members(keep).enumerate() {
        if set >> v & 1 == 1 {
            out |= 1 << i;
        }
    }
    out
}

#[inline]
pub(crate) fn permute_set(set: VertexSet, perm: &[usize]) -> VertexSet {
    members(set).fold(0, |acc, v| acc | 1 << perm[v])
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn basic_counts() {
        let g = path(4).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 3);
        assert_eq!((0..4).filter(|&v| g.degree(v) == 1).count(), 2);
    }

    #[test]
    fn rejects_loops_and_range() {
        assert_eq!(
            Graph::from_edges(2, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, .. })
        ));
        assert_eq!(Graph::empty(33), Err(GraphError::OrderTooLarge(33)));
        assert!(Graph::empty(32).is_ok());
    }

    #[test]
    fn delete_vertex_shifts_labels() {
        let k2 = complete(2).unwrap();
        assert_eq!(k2.delete_vertex(0).unwrap(), complete(1).unwrap());
        let p4 = path(4).unwrap();
        // deleting 1 from 0-1-2-3 leaves 0 isolated and 2-3 renamed to 1-2
        let h = p4.delete_vertex(1).unwrap();
        assert_eq!(h, Graph::from_edges(3, &[(1, 2)]).unwrap());
        assert!(p4.delete_vertex(4).is_err());
    }

    #[test]
    fn distances_and_components() {
        let p6 = path(6).unwrap();
        assert_eq!(p6.distance(0, 5), Some(5));
        let g = disjoint_union(&path(2).unwrap(), &path(3).unwrap()).unwrap();
        assert_eq!(g.distance(0, 2), None);
        assert_eq!(g.components(), vec![0b00011, 0b11100]);
        assert!(!g.is_connected());
        assert!(Graph::empty(0).unwrap().is_connected());
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(cycle(5).unwrap().chromatic_number(), 3);
        assert_eq!(cycle(6).unwrap().chromatic_number(), 2);
        assert_eq!(complete(6).unwrap().chromatic_number(), 6);
        assert_eq!(Graph::empty(4).unwrap().chromatic_number(), 1);
        assert_eq!(Graph::empty(0).unwrap().chromatic_number(), 0);
        assert_eq!(fig1_graph().chromatic_number(), 3);
    }

    #[test]
    fn bipartitions() {
        assert_eq!(cycle(5).unwrap().bipartition(), None);
        let b = cycle(4).unwrap().bipartition().unwrap();
        assert_eq!(b.side_x, 0b0101);
        assert_eq!(b.side_y, 0b1010);
    }

    #[test]
    fn bipartite_dominating_vertex() {
        for n in 1..=6 {
            assert!(star(n).unwrap().has_bipartite_dominating_vertex());
        }
        let kmm = complete_bipartite_minus_matching(3).unwrap();
        assert!(!kmm.has_bipartite_dominating_vertex());
        for v in 0..6 {
            assert!(kmm
                .delete_vertex(v)
                .unwrap()
                .has_bipartite_dominating_vertex());
        }
        assert!(!cycle(5).unwrap().has_bipartite_dominating_vertex());
        let two_stars = disjoint_union(&star(2).unwrap(), &star(2).unwrap()).unwrap();
        assert!(!two_stars.has_bipartite_dominating_vertex());
    }
}
