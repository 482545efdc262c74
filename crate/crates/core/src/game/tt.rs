//! Bounded memo of exact game values.

use std::hash::Hash;

use indexmap::IndexMap;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rustc_hash::FxBuildHasher;

pub const DEFAULT_CAPACITY: usize = 1 << 24;

/// Exact values keyed by canonical state. When full, a uniformly random entry
/// is evicted; evicted values are simply recomputed on the next visit.
pub struct TranspositionTable<K, V> {
    map: IndexMap<K, V, FxBuildHasher>,
    capacity: usize,
    rng: StdRng,
    evictions: u64,
}

impl<K: Hash + Eq, V: Copy + PartialEq + std::fmt::Debug> TranspositionTable<K, V> {
    pub fn new(capacity: usize) -> Self {
        TranspositionTable {
            map: IndexMap::with_hasher(FxBuildHasher),
            capacity: capacity.max(1),
            rng: StdRng::seed_from_u64(0x5eed),
            evictions: 0,
        }
    }

    #[inline]
    pub fn get(&self, key: &K) -> Option<V> {
        self.map.get(key).copied()
    }

    pub fn insert(&mut self, key: K, value: V) {
        if let Some(old) = self.map.get(&key) {
            debug_assert_eq!(*old, value, "game values are unique per state");
            return;
        }
        if self.map.len() >= self.capacity {
            let victim = self.rng.gen_range(0..self.map.len());
            self.map.swap_remove_index(victim);
            self.evictions += 1;
        }
        self.map.insert(key, value);
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn evictions(&self) -> u64 {
        self.evictions
    }
}
