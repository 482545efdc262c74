//! Canonical labeling and automorphisms by partition refinement plus
//! individualization search.
//!
//! Leaves of the search tree are compared against the first and the best leaf
//! seen so far; equal relabeled graphs yield automorphisms, which prune later
//! branches and are collected as generators of the automorphism group.

use crate::graph::{full_set, members, permute_set, Graph, VertexSet, MAX_ORDER};
use crate::graph6;

/// A permutation of the vertices: vertex `v` maps to `perm[v]`.
pub type Permutation = Vec<usize>;

/// Splits cells by neighbor counts into every other cell until the partition is equitable.
fn refine(g: &Graph, cells: &mut Vec<VertexSet>) {
    let mut s = 0;
    while s < cells.len() {
        let splitter = cells[s];
        let mut next = Vec::with_capacity(cells.len() + 1);
        let mut split_any = false;
        for &cell in cells.iter() {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut buckets = [0 as VertexSet; MAX_ORDER + 1];
            for v in members(cell) {
                let c = (g.neighbors(v) & splitter).count_ones() as usize;
                buckets[c] |= 1 << v;
            }
            let before = next.len();
            next.extend(buckets.iter().copied().filter(|&b| b != 0));
            split_any |= next.len() - before > 1;
        }
        *cells = next;
        // a split can unbalance cells that were already used as splitters
        s = if split_any { 0 } else { s + 1 };
    }
}

fn relabel_rows(g: &Graph, perm: &[usize]) -> Vec<VertexSet> {
    let mut rows = vec![0; g.order()];
    for v in 0..g.order() {
        rows[perm[v]] = permute_set(g.neighbors(v), perm);
    }
    rows
}

/// `inverse(b) . a`
fn compose_inverse(a: &[usize], b: &[usize]) -> Permutation {
    let mut inv_b = vec![0; b.len()];
    for (v, &img) in b.iter().enumerate() {
        inv_b[img] = v;
    }
    a.iter().map(|&x| inv_b[x]).collect()
}

struct Leaf {
    rows: Vec<VertexSet>,
    perm: Permutation,
    path: Vec<usize>,
}

struct Search<'g> {
    g: &'g Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Permutation>,
}

impl Search<'_> {
    /// Returns the level to jump back to when this subtree proved equivalent to an explored one.
    fn visit(&mut self, cells: Vec<VertexSet>, path: &mut Vec<usize>) -> Option<usize> {
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.leaf(&cells, path);
        };
        let mut tried: Vec<usize> = Vec::new();
        for v in members(cells[target]) {
            if !tried.is_empty() && self.equivalent_to_tried(v, &tried, path) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cells[target] & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            refine(self.g, &mut child);
            path.push(v);
            let jump = self.visit(child, path);
            path.pop();
            tried.push(v);
            if let Some(level) = jump {
                if level < path.len() {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[VertexSet], path: &[usize]) -> Option<usize> {
        let mut perm = vec![0; self.g.order()];
        for (i, &c) in cells.iter().enumerate() {
            perm[c.trailing_zeros() as usize] = i;
        }
        let rows = relabel_rows(self.g, &perm);
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                rows: rows.clone(),
                perm: perm.clone(),
                path: path.to_vec(),
            });
            self.best = Some(Leaf {
                rows,
                perm,
                path: path.to_vec(),
            });
            return None;
        };
        if rows == first.rows {
            self.generators.push(compose_inverse(&perm, &first.perm));
            return Some(common_prefix(path, &first.path));
        }
        let best = self.best.as_ref().expect("set with first");
        match rows.cmp(&best.rows) {
            std::cmp::Ordering::Equal => {
                self.generators.push(compose_inverse(&perm, &best.perm));
                Some(common_prefix(path, &best.path))
            }
            std::cmp::Ordering::Less => {
                self.best = Some(Leaf {
                    rows,
                    perm,
                    path: path.to_vec(),
                });
                None
            }
            std::cmp::Ordering::Greater => None,
        }
    }

    /// Whether some known automorphism fixing `path` pointwise maps `v` onto an explored sibling.
    fn equivalent_to_tried(&self, v: usize, tried: &[usize], path: &[usize]) -> bool {
        let stabilizer: Vec<&Permutation> = self
            .generators
            .iter()
            .filter(|p| path.iter().all(|&w| p[w] == w))
            .collect();
        if stabilizer.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.g.order());
        for p in stabilizer {
            for (a, &b) in p.iter().enumerate() {
                uf.union(a, b);
            }
        }
        let root = uf.find(v);
        tried.iter().any(|&t| uf.find(t) == root)
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Result of one canonical-labeling search.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// Vertex `v` of the input becomes vertex `labeling[v]` of the canonical graph.
    pub labeling: Permutation,
    /// Automorphisms that generate the automorphism group.
    pub generators: Vec<Permutation>,
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    if g.order() == 0 {
        return Labeling {
            labeling: Vec::new(),
            generators: Vec::new(),
        };
    }
    let mut cells = vec![full_set(g.order())];
    refine(g, &mut cells);
    let mut search = Search {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    search.visit(cells, &mut Vec::new());
    let best = search.best.expect("nonempty graph has a leaf");
    Labeling {
        labeling: best.perm,
        generators: search.generators,
    }
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    g.permuted(&canonical_labeling(g).labeling)
}

/// graph6 bytes of the canonical representative; equal iff the graphs are isomorphic.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    graph6::emit(&canonical_graph(g)).into_bytes()
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_graph(g) == canonical_graph(h)
}

/// The automorphism orbits, each as a vertex set, ordered by smallest member.
pub fn automorphism_orbits(g: &Graph) -> Vec<VertexSet> {
    orbits_of(g.order(), &canonical_labeling(g).generators)
}

pub fn orbits_of(order: usize, generators: &[Permutation]) -> Vec<VertexSet> {
    let mut uf = UnionFind::new(order);
    for p in generators {
        for (a, &b) in p.iter().enumerate() {
            uf.union(a, b);
        }
    }
    let mut orbits: Vec<VertexSet> = Vec::new();
    let mut root_slot = vec![usize::MAX; order];
    for v in 0..order {
        let r = uf.find(v);
        if root_slot[r] == usize::MAX {
            root_slot[r] = orbits.len();
            orbits.push(0);
        }
        orbits[root_slot[r]] |= 1 << v;
    }
    orbits
}

/// Elements of the automorphism group, identity first, generated by closure and
/// truncated after `cap` elements.
///
/// Any subset of the group is usable for symmetry reduction, so truncation only
/// weakens the reduction.
pub fn automorphism_group(g: &Graph, cap: usize) -> Vec<Permutation> {
    let identity: Permutation = (0..g.order()).collect();
    let generators = canonical_labeling(g).generators;
    let mut seen = std::collections::HashSet::new();
    seen.insert(identity.clone());
    let mut elements = vec![identity];
    let mut i = 0;
    while i < elements.len() && elements.len() < cap {
        for gen in &generators {
            let next: Permutation = elements[i].iter().map(|&x| gen[x]).collect();
            if seen.insert(next.clone()) {
                elements.push(next);
                if elements.len() >= cap {
                    break;
                }
            }
        }
        i += 1;
    }
    elements
}
