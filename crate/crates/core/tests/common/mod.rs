//! Reference implementations used as test oracles. Deliberately naive: plain
//! adjacency matrices, no memo, no symmetry, no move pruning.
#![allow(dead_code)]

use gvcrit::Graph;

pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

fn legal(adj: &[Vec<bool>], colors: &[u8], v: usize, c: u8) -> bool {
    (0..colors.len()).all(|w| !(adj[v][w] && colors[w] == c))
}

fn some_vertex_blocked(adj: &[Vec<bool>], colors: &[u8], k: u8) -> bool {
    (0..colors.len()).any(|v| colors[v] == 0 && (1..=k).all(|c| !legal(adj, colors, v, c)))
}

fn coloring_game(adj: &[Vec<bool>], colors: &mut Vec<u8>, k: u8, alice: bool) -> bool {
    if some_vertex_blocked(adj, colors, k) {
        return false;
    }
    if colors.iter().all(|&c| c != 0) {
        return true;
    }
    for v in 0..colors.len() {
        if colors[v] != 0 {
            continue;
        }
        for c in 1..=k {
            if !legal(adj, colors, v, c) {
                continue;
            }
            colors[v] = c;
            let r = coloring_game(adj, colors, k, !alice);
            colors[v] = 0;
            if r == alice {
                return alice;
            }
        }
    }
    !alice
}

/// Alice wins the coloring game with `k` colors.
pub fn naive_alice_wins(g: &Graph, k: u8) -> bool {
    coloring_game(&matrix(g), &mut vec![0; g.order()], k, true)
}

fn indicated_game(adj: &[Vec<bool>], colors: &mut Vec<u8>, k: u8) -> bool {
    if some_vertex_blocked(adj, colors, k) {
        return false;
    }
    if colors.iter().all(|&c| c != 0) {
        return true;
    }
    for v in 0..colors.len() {
        if colors[v] != 0 {
            continue;
        }
        let options: Vec<u8> = (1..=k).filter(|&c| legal(adj, colors, v, c)).collect();
        let survives = options.into_iter().all(|c| {
            colors[v] = c;
            let r = indicated_game(adj, colors, k);
            colors[v] = 0;
            r
        });
        if survives {
            return true;
        }
    }
    false
}

/// Ann wins the indicated game with `k` colors.
pub fn naive_ann_wins(g: &Graph, k: u8) -> bool {
    indicated_game(&matrix(g), &mut vec![0; g.order()], k)
}

/// Total rounds of the independence game from a mid-game state. `round`
/// holds the vertices colored in the current round, `rounds` counts rounds
/// started so far.
fn independence_game(
    adj: &[Vec<bool>],
    done: &mut Vec<bool>,
    round: &mut Vec<bool>,
    rounds: usize,
    alice: bool,
    ab: bool,
) -> usize {
    let n = done.len();
    let moves: Vec<usize> = (0..n)
        .filter(|&v| !done[v] && !round[v] && (0..n).all(|w| !(round[w] && adj[v][w])))
        .collect();
    if moves.is_empty() {
        let finished: Vec<usize> = (0..n).filter(|&v| round[v]).collect();
        for &v in &finished {
            done[v] = true;
            round[v] = false;
        }
        let out = if done.iter().all(|&d| d) {
            rounds
        } else {
            let starter = if ab { alice } else { true };
            independence_game(adj, done, round, rounds + 1, starter, ab)
        };
        for &v in &finished {
            done[v] = false;
            round[v] = true;
        }
        return out;
    }
    let values = moves.into_iter().map(|v| {
        round[v] = true;
        let r = independence_game(adj, done, round, rounds, !alice, ab);
        round[v] = false;
        r
    });
    if alice {
        values.min().unwrap()
    } else {
        values.max().unwrap()
    }
}

/// Rounds of the independence game, optionally after Alice opens on `first`.
pub fn naive_rounds(g: &Graph, ab: bool, first: Option<usize>) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let adj = matrix(g);
    let mut done = vec![false; n];
    let mut round = vec![false; n];
    match first {
        None => independence_game(&adj, &mut done, &mut round, 1, true, ab),
        Some(u) => {
            round[u] = true;
            independence_game(&adj, &mut done, &mut round, 1, false, ab)
        }
    }
}

/// Smallest `k` in `1..=n+1` for which `wins(k)` holds.
pub fn first_winning_palette(g: &Graph, wins: impl Fn(u8) -> bool) -> usize {
    if g.order() == 0 {
        return 0;
    }
    (1..=g.order() as u8 + 1).find(|&k| wins(k)).unwrap() as usize
}

/// Chromatic number by trying every assignment.
pub fn naive_chromatic_number(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let edges: Vec<_> = g.edges().collect();
    (1..=n)
        .find(|&k| {
            (0..k.pow(n as u32)).any(|mut code| {
                let mut c = vec![0; n];
                for slot in c.iter_mut() {
                    *slot = code % k;
                    code /= k;
                }
                edges.iter().all(|&(u, v)| c[u] != c[v])
            })
        })
        .unwrap()
}

/// Every permutation of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// The automorphisms of `g` found by testing all permutations.
pub fn naive_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let edges: Vec<_> = g.edges().collect();
    permutations(g.order())
        .into_iter()
        .filter(|p| edges.iter().all(|&(u, v)| g.has_edge(p[u], p[v])))
        .collect()
}

/// Isomorphism by trying all bijections.
pub fn naive_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && permutations(g.order())
            .into_iter()
            .any(|p| g.edges().all(|(u, v)| h.has_edge(p[u], p[v])))
}

/// One graph per isomorphism class of order `n`, found by scanning all edge
/// subsets and testing each against the classes found so far.
pub fn edge_subset_census(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut classes: Vec<Graph> = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        let degrees = g.degree_sequence();
        let fresh = classes
            .iter()
            .all(|h| h.degree_sequence() != degrees || !naive_isomorphic(&g, h));
        if fresh {
            classes.push(g);
        }
    }
    classes
}

/// Value of a mid-game coloring position, mover given by parity.
pub fn naive_alice_wins_from(g: &Graph, colors: &[u8], k: u8) -> bool {
    let colored = colors.iter().filter(|&&c| c != 0).count();
    coloring_game(&matrix(g), &mut colors.to_vec(), k, colored % 2 == 0)
}
