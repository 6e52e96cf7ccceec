use crate::algebra::Monomial;

use super::{PolyStore, SigError, Signature};

/// One rewrite rule: the signature `mono * e_index` was last produced by
/// store entry `entry` (0 for the phantom polynomial).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub mono: Monomial,
    pub entry: usize,
}

/// Per-index, append-only rule lists. `list(nu)` holds the rules for
/// signatures with index `nu`, oldest first.
#[derive(Clone, Debug, Default)]
pub struct RuleList {
    // lists[nu - 1]
    lists: Vec<Vec<Rule>>,
}

impl RuleList {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn reset(&mut self) {
        self.lists.clear();
    }

    /// Number of indices with a (possibly empty) rule list.
    pub fn rank(&self) -> usize {
        self.lists.len()
    }

    /// Makes sure rule lists exist for all indices up to `index`.
    pub fn ensure_index(&mut self, index: usize) {
        if self.lists.len() < index {
            self.lists.resize_with(index, Vec::new);
        }
    }

    pub fn list(&self, index: usize) -> &[Rule] {
        self.lists.get(index.wrapping_sub(1)).map_or(&[], Vec::as_slice)
    }

    pub fn total_len(&self) -> usize {
        self.lists.iter().map(Vec::len).sum()
    }

    /// Appends `(mu, entry)` to the list of `sig`'s index.
    pub fn add_rule(&mut self, sig: &Signature, entry: usize) -> Result<(), SigError> {
        let Signature::Term { mono, index } = sig else {
            return Err(SigError::ZeroSignature);
        };
        self.ensure_index(*index);
        self.lists[index - 1].push(Rule {
            mono: mono.clone(),
            entry,
        });
        Ok(())
    }

    /// Scans the rules of `sig(k)`'s index from newest to oldest and returns
    /// the entry of the first rule whose monomial divides `u * mu_k`, or `k`
    /// when none does.
    pub fn find_rewriting(&self, store: &PolyStore, u: &Monomial, k: usize) -> usize {
        let Signature::Term { mono, index } = store.sig(k) else {
            return k;
        };
        let target = u.mul(mono);
        self.list(*index)
            .iter()
            .rev()
            .find(|rule| rule.mono.divides(&target))
            .map_or(k, |rule| rule.entry)
    }

    pub fn is_rewritable(&self, store: &PolyStore, u: &Monomial, k: usize) -> bool {
        self.find_rewriting(store, u, k) != k
    }

    /// Within every list, the nonzero entries are strictly increasing.
    pub fn is_monotone(&self) -> bool {
        self.lists.iter().all(|list| {
            let nonzero: Vec<usize> = list.iter().map(|r| r.entry).filter(|&e| e != 0).collect();
            nonzero.windows(2).all(|w| w[0] < w[1])
        })
    }
}
