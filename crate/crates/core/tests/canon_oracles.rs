mod common;

use std::collections::BTreeSet;

use common::*;
use gvcrit::canon::{automorphism_group, automorphism_orbits, canonical_form, is_isomorphic};
use gvcrit::enumeration::{enumerate_graphs, read_graph6_all};
use gvcrit::families::*;
use gvcrit::*;

#[test]
fn isomorphism_matches_brute_force() {
    let graphs: Vec<Graph> = (1..=5)
        .flat_map(|n| enumerate_graphs(n, false).unwrap())
        .collect();
    // relabel each class so the pairs are not all canonically labeled already
    let shuffled: Vec<Graph> = graphs
        .iter()
        .map(|g| g.permuted(&(0..g.order()).rev().collect::<Vec<_>>()))
        .collect();
    for (i, g) in graphs.iter().enumerate() {
        for (j, h) in shuffled.iter().enumerate() {
            if g.order() != h.order() {
                continue;
            }
            let expected = naive_isomorphic(g, h);
            assert_eq!(expected, i == j);
            assert_eq!(is_isomorphic(g, h), expected, "{g:?} {h:?}");
        }
    }
}

#[test]
fn automorphisms_match_brute_force() {
    for n in 1..=6 {
        for g in enumerate_graphs(n, false).unwrap() {
            let naive = naive_automorphisms(&g);
            let group: BTreeSet<Vec<usize>> =
                automorphism_group(&g, usize::MAX).into_iter().collect();
            assert_eq!(group, naive.iter().cloned().collect(), "{g:?}");

            let mut orbits = vec![0u32; n];
            for p in &naive {
                for v in 0..n {
                    orbits[v] |= 1 << p[v];
                }
            }
            let mut expected: Vec<u32> = orbits
                .into_iter()
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            let mut got = automorphism_orbits(&g);
            expected.sort_unstable();
            got.sort_unstable();
            assert_eq!(got, expected, "{g:?}");
        }
    }
}

#[test]
fn generator_agrees_with_edge_subset_census() {
    for n in 1..=6 {
        let census = edge_subset_census(n);
        let generated = enumerate_graphs(n, false).unwrap();
        assert_eq!(generated.len(), census.len(), "order {n}");
        let forms: BTreeSet<Vec<u8>> = generated.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), generated.len(), "duplicate class at order {n}");
        for g in &census {
            assert!(forms.contains(&canonical_form(g)), "{g:?} missing");
        }
    }
}

#[test]
fn census_counts() {
    let all = [1, 2, 4, 11, 34, 156, 1044];
    let connected = [1, 1, 2, 6, 21, 112, 853];
    for n in 1..=7 {
        assert_eq!(enumerate_graphs(n, false).unwrap().len(), all[n - 1]);
        assert_eq!(enumerate_graphs(n, true).unwrap().len(), connected[n - 1]);
    }
}

#[test]
fn order_eight_data_file() {
    let file =
        std::fs::File::open(concat!(env!("CARGO_MANIFEST_DIR"), "/data/connected8.g6")).unwrap();
    let (graphs, errors) = read_graph6_all(std::io::BufReader::new(file));
    assert!(errors.is_empty());
    assert_eq!(graphs.len(), 11117);
    assert!(graphs.iter().all(|g| g.order() == 8 && g.is_connected()));
    let forms: BTreeSet<Vec<u8>> = graphs.iter().map(canonical_form).collect();
    assert_eq!(forms.len(), graphs.len());
}

#[test]
fn named_family_symmetry() {
    // K_{n,n} - M: swap sides and permute the matching
    for (n, size) in [(3, 12), (4, 48), (5, 240)] {
        let g = complete_bipartite_minus_matching(n).unwrap();
        assert_eq!(automorphism_group(&g, usize::MAX).len(), size);
    }
    assert_eq!(
        automorphism_group(&fig1_graph(), usize::MAX).len(),
        naive_automorphisms(&fig1_graph()).len()
    );
}
