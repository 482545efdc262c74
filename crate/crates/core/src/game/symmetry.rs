//! Canonical state keys under color renaming and graph automorphisms.

use crate::canon::automorphism_group;
use crate::graph::{members, Graph, VertexSet, MAX_ORDER};

use super::SolverConfig;

/// A partial coloring packed six bits per vertex, colors renamed in order of
/// first appearance.
pub(crate) type ColoringKey = [u64; 3];

pub(crate) struct Symmetry {
    order: usize,
    /// `inverses[i][w]` is the preimage of `w` under the i-th automorphism; the identity comes first.
    inverses: Vec<[u8; MAX_ORDER]>,
    forwards: Vec<[u8; MAX_ORDER]>,
}

impl Symmetry {
    pub(crate) fn new(g: &Graph, config: &SolverConfig) -> Self {
        let n = g.order();
        let perms = if config.automorphisms_enabled(n) && n > 1 {
            automorphism_group(g, config.automorphism_cap.max(1))
        } else {
            vec![(0..n).collect()]
        };
        let mut inverses = Vec::with_capacity(perms.len());
        let mut forwards = Vec::with_capacity(perms.len());
        for p in perms {
            let mut inv = [0u8; MAX_ORDER];
            let mut fwd = [0u8; MAX_ORDER];
            for (v, &img) in p.iter().enumerate() {
                inv[img] = v as u8;
                fwd[v] = img as u8;
            }
            inverses.push(inv);
            forwards.push(fwd);
        }
        Symmetry {
            order: n,
            inverses,
            forwards,
        }
    }

    #[cfg(test)]
    pub(crate) fn group_size(&self) -> usize {
        self.inverses.len()
    }

    pub(crate) fn coloring_key(&self, colors: &[u8; MAX_ORDER]) -> ColoringKey {
        let mut best = [u64::MAX; 3];
        for inv in &self.inverses {
            let mut rename = [0u8; MAX_ORDER + 2];
            let mut next = 1u8;
            let mut key = [0u64; 3];
            for w in 0..self.order {
                let c = colors[inv[w] as usize];
                let r = if c == 0 {
                    0
                } else {
                    if rename[c as usize] == 0 {
                        rename[c as usize] = next;
                        next += 1;
                    }
                    rename[c as usize]
                };
                let bit = 6 * w;
                key[bit / 64] |= (r as u64) << (bit % 64);
                // fields starting above bit 58 spill into the next word
                if bit % 64 > 58 {
                    key[bit / 64 + 1] |= (r as u64) >> (64 - bit % 64);
                }
            }
            if key < best {
                best = key;
            }
        }
        best
    }

    /// Smallest image of the pair `(a, b)` under the automorphisms.
    pub(crate) fn set_pair_key(&self, a: VertexSet, b: VertexSet) -> u64 {
        let mut best = u64::MAX;
        for fwd in &self.forwards {
            let pa = members(a).fold(0u64, |acc, v| acc | 1 << fwd[v]);
            let pb = members(b).fold(0u64, |acc, v| acc | 1 << fwd[v]);
            best = best.min(pa << 32 | pb);
        }
        best
    }
}
