//! Named graphs and graph constructions.
//!
//! Vertex numbering is fixed: paths and cycles in traversal order, bipartite
//! families with their sides contiguous, and added vertices always last.

use crate::error::GraphError;
use crate::graph::{members, Graph, MAX_ORDER};

fn check_order(order: usize) -> Result<(), GraphError> {
    if order > MAX_ORDER {
        Err(GraphError::OrderTooLarge(order))
    } else {
        Ok(())
    }
}

fn check_positive(n: usize) -> Result<(), GraphError> {
    if n == 0 {
        Err(GraphError::ParameterOutOfRange(n))
    } else {
        Ok(())
    }
}

/// `P_n` on vertices `0 - 1 - .. - n-1`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    check_positive(n)?;
    check_order(n)?;
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::CycleTooShort(n));
    }
    check_order(n)?;
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    check_positive(n)?;
    check_order(n)?;
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// `K_{m,n}` with sides `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
    check_positive(m)?;
    check_positive(n)?;
    check_order(m + n)?;
    let mut g = Graph::empty(m + n)?;
    for u in 0..m {
        for v in m..m + n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// `K_{1,n}`, center 0.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    complete_bipartite(1, n)
}

/// `K_{n,n}` minus a perfect matching: `a_i = i`, `b_i = n + i`, and `a_i b_j` is an
/// edge iff `i != j`.
pub fn complete_bipartite_minus_matching(n: usize) -> Result<Graph, GraphError> {
    check_positive(n)?;
    if n > MAX_ORDER / 2 {
        return Err(GraphError::OrderTooLarge(2 * n));
    }
    let mut g = Graph::empty(2 * n)?;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                g.add_edge(i, n + j)?;
            }
        }
    }
    Ok(g)
}

/// The partner of `v` across the removed matching in [`complete_bipartite_minus_matching`].
pub fn matching_partner(n: usize, v: usize) -> usize {
    if v < n {
        v + n
    } else {
        v - n
    }
}

/// Adds a universal vertex with index `order(g)`.
pub fn cone(g: &Graph) -> Result<Graph, GraphError> {
    g.with_new_vertex(g.vertex_set())
}

/// Block-diagonal union; the vertices of `h` follow those of `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let n = g.order();
    check_order(n + h.order())?;
    let mut out = Graph::empty(n + h.order())?;
    for (u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    for (u, v) in h.edges() {
        out.add_edge(n + u, n + v)?;
    }
    Ok(out)
}

/// Merges the universal vertex `u` of `g` with the universal vertex `v` of `h`.
///
/// The merged vertex keeps index `u`; the other vertices of `h` follow those of
/// `g` in their original order.
pub fn identify_universal_pair(
    g: &Graph,
    u: usize,
    h: &Graph,
    v: usize,
) -> Result<Graph, GraphError> {
    if !g.is_universal(u) {
        return Err(GraphError::NotUniversal(u));
    }
    if !h.is_universal(v) {
        return Err(GraphError::NotUniversal(v));
    }
    let n = g.order();
    let order = n + h.order() - 1;
    check_order(order)?;
    let relabel = |w: usize| match w.cmp(&v) {
        std::cmp::Ordering::Equal => u,
        std::cmp::Ordering::Less => n + w,
        std::cmp::Ordering::Greater => n + w - 1,
    };
    let mut out = Graph::empty(order)?;
    for (a, b) in g.edges() {
        out.add_edge(a, b)?;
    }
    for (a, b) in h.edges() {
        out.add_edge(relabel(a), relabel(b))?;
    }
    Ok(out)
}

/// `C_4` with one pendant per cycle vertex: cycle `0..4`, pendant `i + 4` on `i`.
pub fn c4_plus() -> Graph {
    let edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 0),
        (0, 4),
        (1, 5),
        (2, 6),
        (3, 7),
    ];
    Graph::from_edges(8, &edges).expect("static edge list")
}

pub const FIG1_LABELS: [char; 9] = ['a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'x'];
pub const FIG1_X: usize = 8;

/// The nine-vertex graph built from the twisted diamond by adding `x` adjacent to
/// `d`, `e` and `f`. Vertices `a..h, x` are `0..8`.
pub fn fig1_graph() -> Graph {
    let named = [
        "ab", "bc", "ca", "hg", "gf", "fh", "ag", "ch", "bd", "cd", "de", "ge", "fe", "fx", "dx",
        "ex",
    ];
    let index = |c: char| FIG1_LABELS.iter().position(|&l| l == c).expect("label");
    let edges: Vec<_> = named
        .iter()
        .map(|e| {
            let mut cs = e.chars();
            (index(cs.next().unwrap()), index(cs.next().unwrap()))
        })
        .collect();
    Graph::from_edges(9, &edges).expect("static edge list")
}

/// The eight-vertex twisted diamond, i.e. [`fig1_graph`] without `x`.
pub fn twisted_diamond() -> Graph {
    fig1_graph().delete_vertex(FIG1_X).expect("x is a vertex")
}

/// `(K_{2n,2n} - M)^u` and `(K_{6,6} - M)^v` glued at their universal vertices.
/// Order `4n + 13`; the merged vertex has index `4n`.
pub fn glued_matching_cones(n: usize) -> Result<Graph, GraphError> {
    check_positive(n)?;
    let g1 = cone(&complete_bipartite_minus_matching(2 * n)?)?;
    let g2 = cone(&complete_bipartite_minus_matching(6)?)?;
    identify_universal_pair(&g1, 4 * n, &g2, 12)
}

/// `(K_{2n,2n} - M)^u`, `(K_{2n+2,2n+2} - M)^v`, `(K_{2n+2,2n+2} - M)^w` with the
/// triangle `uvw` added. Returns the graph and the indices of `u`, `v`, `w`.
pub fn triangle_linked_matching_cones(n: usize) -> Result<(Graph, [usize; 3]), GraphError> {
    check_positive(n)?;
    let g1 = cone(&complete_bipartite_minus_matching(2 * n)?)?;
    let g2 = cone(&complete_bipartite_minus_matching(2 * n + 2)?)?;
    let g3 = cone(&complete_bipartite_minus_matching(2 * n + 2)?)?;
    let u = g1.order() - 1;
    let v = g1.order() + g2.order() - 1;
    let w = g1.order() + g2.order() + g3.order() - 1;
    let mut g = disjoint_union(&disjoint_union(&g1, &g2)?, &g3)?;
    g.add_edge(u, v)?;
    g.add_edge(v, w)?;
    g.add_edge(u, w)?;
    Ok((g, [u, v, w]))
}

/// Order, edge list and the three triangle vertices.
pub type EdgeListConstruction = (usize, Vec<(usize, usize)>, [usize; 3]);

/// Edge-list form of [`triangle_linked_matching_cones`], which is not bound by
/// the graph order cap: for every `n >= 2` the construction has more than 32
/// vertices. Returns the order, the edges and the indices of `u`, `v`, `w`.
pub fn triangle_linked_edge_list(n: usize) -> Result<EdgeListConstruction, GraphError> {
    check_positive(n)?;
    fn matching_cone(m: usize, offset: usize, edges: &mut Vec<(usize, usize)>) -> usize {
        for i in 0..m {
            for j in 0..m {
                if i != j {
                    edges.push((offset + i, offset + m + j));
                }
            }
        }
        let apex = offset + 2 * m;
        edges.extend((offset..apex).map(|x| (x, apex)));
        apex
    }
    let mut edges = Vec::new();
    let u = matching_cone(2 * n, 0, &mut edges);
    let v = matching_cone(2 * n + 2, u + 1, &mut edges);
    let w = matching_cone(2 * n + 2, v + 1, &mut edges);
    edges.extend([(u, v), (v, w), (u, w)]);
    Ok((w + 1, edges, [u, v, w]))
}

/// Vertices of `g` that are universal.
pub fn universal_vertices(g: &Graph) -> Vec<usize> {
    members(g.vertex_set())
        .filter(|&v| g.is_universal(v))
        .collect()
}
