//! Run statistics shared by the engine, the drivers and the benchmark harness.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Counters for one incremental step (computing the basis of `f_1..f_i`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IterationStats {
    pub i: usize,
    pub basis_size: usize,
    pub pairs_by_degree: BTreeMap<u32, usize>,
    pub spolys: u64,
    pub reduction_steps: u64,
    pub zero_reductions: u64,
}

impl IterationStats {
    pub fn new(i: usize) -> Self {
        Self {
            i,
            ..Self::default()
        }
    }

    pub fn pairs(&self) -> usize {
        self.pairs_by_degree.values().sum()
    }

    /// Largest degree processed, if any pair was processed.
    pub fn max_degree(&self) -> Option<u32> {
        self.pairs_by_degree.keys().next_back().copied()
    }

    /// `(degree, count)` of the largest pair bucket; ties go to the lowest degree.
    pub fn max_bucket(&self) -> Option<(u32, usize)> {
        self.pairs_by_degree
            .iter()
            .fold(None, |best: Option<(u32, usize)>, (&d, &n)| match best {
                Some((_, m)) if m >= n => best,
                _ => Some((d, n)),
            })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub pairs: usize,
    pub spolys: u64,
    pub reduction_steps: u64,
    pub zero_reductions: u64,
}

/// Invariant audit collected in certified mode.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificationReport {
    pub admissibility_checks: u64,
    pub admissibility_failures: u64,
    pub rule_monotonicity_failures: u64,
    pub rewriter_order_failures: u64,
}

impl CertificationReport {
    pub fn violations(&self) -> u64 {
        self.admissibility_failures + self.rule_monotonicity_failures + self.rewriter_order_failures
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunStats {
    pub iterations: Vec<IterationStats>,
    pub totals: Totals,
    /// Reduction steps spent interreducing between iterations (F5R, F5C).
    /// Not part of `totals.reduction_steps`.
    pub interreduction_steps: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certification: Option<CertificationReport>,
}

impl RunStats {
    pub fn push(&mut self, it: IterationStats) {
        self.totals.pairs += it.pairs();
        self.totals.spolys += it.spolys;
        self.totals.reduction_steps += it.reduction_steps;
        self.totals.zero_reductions += it.zero_reductions;
        self.iterations.push(it);
    }

    pub fn basis_sizes(&self) -> Vec<usize> {
        self.iterations.iter().map(|it| it.basis_size).collect()
    }

    /// Recomputes the totals from the per-iteration records.
    pub fn totals_consistent(&self) -> bool {
        let mut t = Totals::default();
        for it in &self.iterations {
            t.pairs += it.pairs();
            t.spolys += it.spolys;
            t.reduction_steps += it.reduction_steps;
            t.zero_reductions += it.zero_reductions;
        }
        t == self.totals
    }
}

/// One run in the stats JSON export.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsRecord {
    pub algorithm: String,
    pub char: u32,
    pub order: String,
    pub iterations: Vec<IterationStats>,
    pub totals: Totals,
    pub basis_size_final: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduced_basis_agrees_with_oracle: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certification: Option<CertificationReport>,
}

impl StatsRecord {
    pub fn new(algorithm: &str, char: u32, order: &str, stats: &RunStats, basis_size_final: usize) -> Self {
        Self {
            algorithm: algorithm.to_string(),
            char,
            order: order.to_string(),
            iterations: stats.iterations.clone(),
            totals: stats.totals.clone(),
            basis_size_final,
            reduced_basis_agrees_with_oracle: None,
            certification: stats.certification.clone(),
        }
    }

    pub fn with_agreement(mut self, agrees: bool) -> Self {
        self.reduced_basis_agrees_with_oracle = Some(agrees);
        self
    }
}
