//! Vertex-deletion profiles and the lower / upper / mixed criticality classes.

use std::collections::HashMap;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::canonical_form;
use crate::game::{GameError, SolveStats, SolverConfig};
use crate::graph::Graph;
use crate::invariant::InvariantId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CriticalityClass {
    /// Every deletion lowers the value.
    LowerCritical,
    /// Every deletion raises the value.
    UpperCritical,
    /// Every deletion changes the value, in both directions.
    MixedCritical,
    NotCritical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Flavor {
    Lower,
    Upper,
    Mixed,
    Any,
}

impl Flavor {
    pub fn admits(self, class: CriticalityClass) -> bool {
        match (self, class) {
            (_, CriticalityClass::NotCritical) => false,
            (Flavor::Any, _) => true,
            (Flavor::Lower, c) => c == CriticalityClass::LowerCritical,
            (Flavor::Upper, c) => c == CriticalityClass::UpperCritical,
            (Flavor::Mixed, c) => c == CriticalityClass::MixedCritical,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDelta {
    /// Label of the deleted vertex in the original graph.
    pub vertex: usize,
    /// Value of the vertex-deleted graph.
    pub value: usize,
    /// Base value minus `value`.
    pub delta: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityProfile {
    pub invariant: InvariantId,
    pub base_value: usize,
    pub per_vertex: Vec<VertexDelta>,
    pub class: CriticalityClass,
}

pub fn classify(deltas: impl IntoIterator<Item = i64>) -> CriticalityClass {
    let (mut pos, mut neg) = (false, false);
    for d in deltas {
        match d.signum() {
            0 => return CriticalityClass::NotCritical,
            1 => pos = true,
            _ => neg = true,
        }
    }
    match (pos, neg) {
        (true, true) => CriticalityClass::MixedCritical,
        (false, true) => CriticalityClass::UpperCritical,
        // the empty graph has no vertices to delete and is vacuously lower-critical
        _ => CriticalityClass::LowerCritical,
    }
}

/// Computes invariants through a memo keyed by canonical form, so isomorphic
/// graphs are solved once. Safe to share between threads.
#[derive(Default)]
pub struct Evaluator {
    config: SolverConfig,
    memo: Mutex<HashMap<(Vec<u8>, InvariantId), usize>>,
    fresh: Mutex<Vec<(Vec<u8>, InvariantId, usize)>>,
    stats: Mutex<SolveStats>,
}

impl Evaluator {
    pub fn new(config: SolverConfig) -> Self {
        Evaluator {
            config,
            ..Default::default()
        }
    }

    pub fn config(&self) -> &SolverConfig {
        &self.config
    }

    /// Seeds the memo with a value computed elsewhere for the graph with this canonical form.
    pub fn preload(&self, canonical: Vec<u8>, invariant: InvariantId, value: usize) {
        self.memo
            .lock()
            .expect("memo lock")
            .insert((canonical, invariant), value);
    }

    /// Values computed since the last call, in computation order.
    pub fn take_fresh(&self) -> Vec<(Vec<u8>, InvariantId, usize)> {
        std::mem::take(&mut *self.fresh.lock().expect("fresh lock"))
    }

    pub fn stats(&self) -> SolveStats {
        *self.stats.lock().expect("stats lock")
    }

    pub fn value(&self, g: &Graph, invariant: InvariantId) -> Result<usize, GameError> {
        let key = (canonical_form(g), invariant);
        if let Some(&v) = self.memo.lock().expect("memo lock").get(&key) {
            return Ok(v);
        }
        let (value, stats) = match invariant.compute(g, &self.config) {
            Ok(out) => out,
            Err(GameError::BudgetExhausted(b)) => {
                // earlier rounds of the k-search are not reported, so this undercounts
                self.stats.lock().expect("stats lock").expanded += b;
                return Err(GameError::BudgetExhausted(b));
            }
            Err(e) => return Err(e),
        };
        *self.stats.lock().expect("stats lock") += stats;
        let fresh = self
            .memo
            .lock()
            .expect("memo lock")
            .insert(key.clone(), value)
            .is_none();
        if fresh {
            self.fresh
                .lock()
                .expect("fresh lock")
                .push((key.0, key.1, value));
        }
        Ok(value)
    }

    /// Base value and every vertex-deleted value, deletions solved in parallel.
    pub fn delta_profile(
        &self,
        g: &Graph,
        invariant: InvariantId,
    ) -> Result<CriticalityProfile, GameError> {
        let base_value = self.value(g, invariant)?;
        let per_vertex = (0..g.order())
            .into_par_iter()
            .map(|x| {
                let value = self.value(&g.delete_vertex(x).expect("in range"), invariant)?;
                Ok(VertexDelta {
                    vertex: x,
                    value,
                    delta: base_value as i64 - value as i64,
                })
            })
            .collect::<Result<Vec<_>, GameError>>()?;
        let class = classify(per_vertex.iter().map(|d| d.delta));
        Ok(CriticalityProfile {
            invariant,
            base_value,
            per_vertex,
            class,
        })
    }

    /// Whether `g` has value `k` and its deletion profile belongs to `flavor`.
    /// Stops at the first deletion that rules the flavor out.
    pub fn is_k_critical(
        &self,
        g: &Graph,
        invariant: InvariantId,
        k: usize,
        flavor: Flavor,
    ) -> Result<bool, GameError> {
        if self.value(g, invariant)? != k {
            return Ok(false);
        }
        let (mut pos, mut neg) = (false, false);
        for x in 0..g.order() {
            let value = self.value(&g.delete_vertex(x).expect("in range"), invariant)?;
            match value.cmp(&k) {
                std::cmp::Ordering::Equal => return Ok(false),
                std::cmp::Ordering::Less => pos = true,
                std::cmp::Ordering::Greater => neg = true,
            }
            let ruled_out = match flavor {
                Flavor::Lower => neg,
                Flavor::Upper => pos,
                Flavor::Mixed | Flavor::Any => false,
            };
            if ruled_out {
                return Ok(false);
            }
        }
        Ok(flavor != Flavor::Mixed || (pos && neg))
    }

    /// The members of `graphs` that are `k`-critical of the given flavor, in input order.
    pub fn critical_members(
        &self,
        graphs: &[Graph],
        invariant: InvariantId,
        k: usize,
        flavor: Flavor,
    ) -> Result<Vec<Graph>, GameError> {
        let flags = graphs
            .par_iter()
            .map(|g| self.is_k_critical(g, invariant, k, flavor))
            .collect::<Result<Vec<bool>, GameError>>()?;
        Ok(graphs
            .iter()
            .zip(flags)
            .filter(|(_, f)| *f)
            .map(|(g, _)| g.clone())
            .collect())
    }
}

pub fn delta_profile(g: &Graph, invariant: InvariantId) -> Result<CriticalityProfile, GameError> {
    Evaluator::default().delta_profile(g, invariant)
}

pub fn is_k_critical(
    g: &Graph,
    invariant: InvariantId,
    k: usize,
    flavor: Flavor,
) -> Result<bool, GameError> {
    Evaluator::default().is_k_critical(g, invariant, k, flavor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn classification() {
        assert_eq!(classify([1, 2]), CriticalityClass::LowerCritical);
        assert_eq!(classify([-1, -3]), CriticalityClass::UpperCritical);
        assert_eq!(classify([1, -1]), CriticalityClass::MixedCritical);
        assert_eq!(classify([1, 0, -1]), CriticalityClass::NotCritical);
    }

    #[test]
    fn k2_is_lower_critical() {
        let p = delta_profile(&complete(2).unwrap(), InvariantId::ChiG).unwrap();
        assert_eq!(p.base_value, 2);
        assert!(p.per_vertex.iter().all(|d| d.delta == 1));
        assert_eq!(p.class, CriticalityClass::LowerCritical);
    }

    #[test]
    fn c5_indicated() {
        let p = delta_profile(&cycle(5).unwrap(), InvariantId::ChiI).unwrap();
        assert_eq!(p.base_value, 3);
        assert!(p.per_vertex.iter().all(|d| d.delta == 1));
        assert_eq!(p.class, CriticalityClass::LowerCritical);
    }

    #[test]
    fn p5_not_critical() {
        let p = delta_profile(&path(5).unwrap(), InvariantId::ChiG).unwrap();
        assert_eq!(p.base_value, 3);
        assert_eq!(p.per_vertex[0].value, 3);
        assert_eq!(p.class, CriticalityClass::NotCritical);
    }

    #[test]
    fn flavors() {
        assert!(is_k_critical(&cycle(3).unwrap(), InvariantId::ChiG, 3, Flavor::Lower).unwrap());
        assert!(!is_k_critical(&cycle(3).unwrap(), InvariantId::ChiG, 3, Flavor::Upper).unwrap());
        assert!(!is_k_critical(&cycle(3).unwrap(), InvariantId::ChiG, 2, Flavor::Any).unwrap());
        let kmm = complete_bipartite_minus_matching(3).unwrap();
        assert!(is_k_critical(&kmm, InvariantId::ChiIgA, 3, Flavor::Lower).unwrap());
        assert!(Flavor::Any.admits(CriticalityClass::MixedCritical));
        assert!(!Flavor::Mixed.admits(CriticalityClass::LowerCritical));
    }

    #[test]
    fn single_vertex_uses_empty_graph_convention() {
        for inv in InvariantId::ALL {
            let p = delta_profile(&complete(1).unwrap(), inv).unwrap();
            assert_eq!(p.base_value, 1);
            assert_eq!(p.per_vertex[0].value, 0);
            assert_eq!(p.class, CriticalityClass::LowerCritical);
        }
    }

    #[test]
    fn evaluator_memo_records_fresh_values() {
        let ev = Evaluator::default();
        let g = path(4).unwrap();
        assert_eq!(ev.value(&g, InvariantId::ChiG).unwrap(), 3);
        assert_eq!(
            ev.value(&g.permuted(&[3, 1, 2, 0]), InvariantId::ChiG)
                .unwrap(),
            3
        );
        assert_eq!(ev.take_fresh().len(), 1);
        ev.preload(canonical_form(&cycle(5).unwrap()), InvariantId::ChiI, 3);
        assert_eq!(ev.value(&cycle(5).unwrap(), InvariantId::ChiI).unwrap(), 3);
        assert!(ev.take_fresh().is_empty());
    }
}
