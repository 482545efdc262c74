//! Isomorphism-free generation of small graphs and graph6 list ingestion.

use std::collections::BTreeMap;
use std::io::BufRead;

use thiserror::Error;

use crate::canon::{canonical_form, canonical_graph};
use crate::error::Graph6Error;
use crate::graph::{full_set, Graph};
use crate::graph6;

/// Largest order the built-in generator produces.
pub const MAX_GENERATED_ORDER: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("order {0} is above the built-in generator cap of {MAX_GENERATED_ORDER}; supply a graph6 list instead")]
    AboveCap(usize),
    #[error("order must be at least 1")]
    ZeroOrder,
}

/// One representative per isomorphism class of order `n`, in lexicographic
/// order of canonical form. Representatives are canonically labeled.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>, EnumerationError> {
    if n == 0 {
        return Err(EnumerationError::ZeroOrder);
    }
    if n > MAX_GENERATED_ORDER {
        return Err(EnumerationError::AboveCap(n));
    }
    let mut level = vec![Graph::empty(1).expect("order 1")];
    for _ in 1..n {
        level = extend_by_vertex(&level);
    }
    if connected_only {
        level.retain(Graph::is_connected);
    }
    Ok(level)
}

/// All graphs of order `n <= max_order`, smallest order first.
pub fn enumerate_up_to(
    max_order: usize,
    connected_only: bool,
) -> Result<Vec<Graph>, EnumerationError> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(enumerate_graphs(n, connected_only)?);
    }
    Ok(out)
}

/// Every connected graph of order 8, one canonical graph6 record per line.
/// Generated once with `extend_by_vertex`; see `examples/connected_order8.rs`.
pub const CONNECTED_ORDER8_G6: &str = include_str!("../data/connected8.g6");

/// The 11117 connected graphs of order 8.
pub fn connected_order8() -> Vec<Graph> {
    CONNECTED_ORDER8_G6
        .lines()
        .map(|line| graph6::parse(line).expect("bundled data is valid graph6"))
        .collect()
}

/// Every isomorphism class obtainable by adding one vertex to a member of
/// `graphs`. When `graphs` covers all classes of order `n`, the result covers
/// all classes of order `n + 1`.
pub fn extend_by_vertex(graphs: &[Graph]) -> Vec<Graph> {
    let mut classes: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    for g in graphs {
        for neighbors in 0..=full_set(g.order()) {
            let Ok(h) = g.with_new_vertex(neighbors) else {
                continue;
            };
            let canon = canonical_graph(&h);
            classes
                .entry(graph6::emit(&canon).into_bytes())
                .or_insert(canon);
        }
    }
    classes.into_values().collect()
}

/// Deduplicates a list of graphs up to isomorphism, keeping the first of each class.
pub fn dedup_isomorphic(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut seen = std::collections::HashSet::new();
    graphs
        .into_iter()
        .filter(|g| seen.insert(canonical_form(g)))
        .collect()
}

#[derive(Debug, Error)]
pub enum RecordErrorKind {
    #[error("read failed: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Parse(#[from] Graph6Error),
}

#[derive(Debug, Error)]
#[error("line {line}: {kind}")]
pub struct RecordError {
    pub line: usize,
    pub kind: RecordErrorKind,
}

/// Newline-delimited graph6 records. Blank lines are skipped; a bad line yields
/// an error item and reading continues.
pub fn read_graph6_stream<R: BufRead>(
    reader: R,
) -> impl Iterator<Item = Result<Graph, RecordError>> {
    reader.lines().enumerate().filter_map(|(i, line)| {
        let line_no = i + 1;
        match line {
            Err(e) => Some(Err(RecordError {
                line: line_no,
                kind: e.into(),
            })),
            Ok(text) if text.trim().is_empty() => None,
            Ok(text) => Some(graph6::parse(text.trim_end()).map_err(|e| RecordError {
                line: line_no,
                kind: e.into(),
            })),
        }
    })
}

/// Splits a graph6 stream into parsed graphs and per-line diagnostics.
pub fn read_graph6_all<R: BufRead>(reader: R) -> (Vec<Graph>, Vec<RecordError>) {
    let mut graphs = Vec::new();
    let mut errors = Vec::new();
    for item in read_graph6_stream(reader) {
        match item {
            Ok(g) => graphs.push(g),
            Err(e) => errors.push(e),
        }
    }
    (graphs, errors)
}
