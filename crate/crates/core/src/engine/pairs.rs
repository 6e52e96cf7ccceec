use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::algebra::{Monomial, Ring};

/// A critical pair `(t, k, u, l, v)`: `u * lt(poly k) = v * lt(poly l) = t`,
/// with `u * sig(k)` the larger signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub lcm: Monomial,
    pub k: usize,
    pub u: Monomial,
    pub l: usize,
    pub v: Monomial,
}

impl CriticalPair {
    pub fn degree(&self) -> u32 {
        self.lcm.degree()
    }
}

/// Pending critical pairs bucketed by the degree of their lcm.
#[derive(Clone, Debug, Default)]
pub struct PairQueue {
    buckets: BTreeMap<u32, Vec<CriticalPair>>,
}

impl PairQueue {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, pair: CriticalPair) {
        self.buckets.entry(pair.degree()).or_default().push(pair);
    }

    pub fn is_empty(&self) -> bool {
        self.buckets.is_empty()
    }

    pub fn len(&self) -> usize {
        self.buckets.values().map(Vec::len).sum()
    }

    /// Removes every pair of minimal degree, sorted by increasing lcm and
    /// then by `(k, l)`.
    pub fn pop_min_degree(&mut self, ring: &Ring) -> Option<(u32, Vec<CriticalPair>)> {
        let (d, mut pairs) = self.buckets.pop_first()?;
        pairs.sort_by(|a, b| match ring.cmp(&a.lcm, &b.lcm) {
            Ordering::Equal => (a.k, a.l).cmp(&(b.k, b.l)),
            ord => ord,
        });
        Some((d, pairs))
    }
}
