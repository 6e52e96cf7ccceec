//! The incremental signature-based machinery: critical pairs, S-polynomial
//! generation, signature-ordered reduction and safe/unsafe top-reduction.
//!
//! An [`Engine`] owns the labeled-polynomial store and the rewrite rules of
//! one computation. The drivers feed it one generator at a time through
//! [`Engine::incremental_basis`].

mod pairs;

use std::cmp::Ordering;

pub use pairs::{CriticalPair, PairQueue};

use crate::algebra::{
    is_top_reducible, normal_form_with, spoly_with, Monomial, Polynomial, Reducible, Ring,
};
use crate::sigcore::{admissible_check, LabeledPolynomial, PolyStore, RuleList, Signature, TrackedPoly};
use crate::stats::{CertificationReport, IterationStats};
use crate::Error;

pub const DEFAULT_STORE_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    /// Track cofactors and audit admissibility at every store mutation.
    pub certified: bool,
    /// Hard limit on the number of store entries.
    pub store_cap: usize,
    /// Record trace lines.
    pub trace: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            certified: false,
            store_cap: DEFAULT_STORE_CAP,
            trace: false,
        }
    }
}

/// The previous Gröbner basis: its store indices and the polynomials used
/// for normal forms and for the signature criterion. For F5 the two views
/// coincide; for F5R `reducers` is the interreduced basis.
#[derive(Clone, Debug, Default)]
pub struct PrevBasis {
    pub indices: Vec<usize>,
    pub reducers: Vec<TrackedPoly>,
}

impl PrevBasis {
    pub fn is_top_reducible(&self, m: &Monomial) -> bool {
        is_top_reducible(m, self.reducers.iter().map(|g| &g.poly))
    }
}

pub struct Engine {
    ring: Ring,
    config: EngineConfig,
    pub(crate) store: PolyStore,
    pub(crate) rules: RuleList,
    /// The current module generators `F'` (index `l` pairs with `e_{l+1}`).
    pub(crate) generators: Vec<Polynomial>,
    stats: IterationStats,
    audit: CertificationReport,
    trace: Vec<String>,
    zero_reductions_total: u64,
}

impl Engine {
    pub fn new(ring: Ring, config: EngineConfig) -> Self {
        Self {
            ring,
            config,
            store: PolyStore::new(),
            rules: RuleList::new(),
            generators: Vec::new(),
            stats: IterationStats::default(),
            audit: CertificationReport::default(),
            trace: Vec::new(),
            zero_reductions_total: 0,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn store(&self) -> &PolyStore {
        &self.store
    }

    pub fn rules(&self) -> &RuleList {
        &self.rules
    }

    pub fn audit(&self) -> &CertificationReport {
        &self.audit
    }

    pub fn trace_lines(&self) -> &[String] {
        &self.trace
    }

    pub fn take_trace(&mut self) -> Vec<String> {
        std::mem::take(&mut self.trace)
    }

    pub fn zero_reductions_total(&self) -> u64 {
        self.zero_reductions_total
    }

    pub(crate) fn trace_line(&mut self, line: impl Into<String>) {
        if self.config.trace {
            self.trace.push(line.into());
        }
    }

    /// Appends the generator `poly` (made monic) with signature `e_index` and
    /// registers it as the module generator of that index.
    pub fn push_generator(&mut self, index: usize, poly: &Polynomial) -> Result<usize, Error> {
        let poly = self.ring.monic(poly);
        if self.generators.len() < index {
            self.generators.resize(index, Polynomial::zero());
        }
        self.generators[index - 1] = poly.clone();
        let body = TrackedPoly::generator(&self.ring, poly, index, self.config.certified);
        let sig = Signature::unit(self.ring.nvars(), index);
        self.push_entry(sig, body)
    }

    /// Clears store, rules and module generators.
    pub(crate) fn reset(&mut self) {
        self.store.reset();
        self.rules.reset();
        self.generators.clear();
    }

    pub(crate) fn push_entry(&mut self, sig: Signature, body: TrackedPoly) -> Result<usize, Error> {
        if self.store.len() >= self.config.store_cap {
            return Err(Error::StoreCapExceeded(self.config.store_cap));
        }
        let k = self.store.push(LabeledPolynomial::new(sig, body));
        self.certify(k);
        Ok(k)
    }

    fn set_body(&mut self, k: usize, body: TrackedPoly) {
        self.store.replace_body(k, body);
        self.certify(k);
    }

    fn certify(&mut self, k: usize) {
        if !self.config.certified {
            return;
        }
        self.audit.admissibility_checks += 1;
        let ok = admissible_check(&self.ring, self.store.get(k), &self.generators).unwrap_or(false);
        if !ok {
            self.audit.admissibility_failures += 1;
        }
    }

    pub(crate) fn add_rule(&mut self, sig: &Signature, entry: usize) {
        self.rules.add_rule(sig, entry).expect("rules are only added for nonzero signatures");
        if self.config.certified && !self.rules.is_monotone() {
            self.audit.rule_monotonicity_failures += 1;
        }
    }

    fn sig_cmp(&self, a: &Signature, b: &Signature) -> Ordering {
        a.cmp_with(b, self.ring.order)
    }

    fn is_rewritable(&mut self, u: &Monomial, k: usize) -> bool {
        let j = self.rules.find_rewriting(&self.store, u, k);
        if self.config.certified && j != k && j != 0 && j < k {
            self.audit.rewriter_order_failures += 1;
        }
        j != k
    }

    /// Builds the critical pair of entries `k` and `l`, or `None` if one of
    /// its components of index `i` has a signature monomial top-reducible by
    /// the previous basis.
    pub fn critical_pair(&self, k: usize, l: usize, i: usize, prev: &PrevBasis) -> Option<CriticalPair> {
        debug_assert_ne!(k, l);
        let tk = self.store.poly(k).lm().expect("basis elements are nonzero");
        let tl = self.store.poly(l).lm().expect("basis elements are nonzero");
        let t = tk.lcm(tl);
        let u1 = t.div(tk).unwrap();
        let u2 = t.div(tl).unwrap();
        let criterion = |idx: usize, u: &Monomial| match self.store.sig(idx) {
            Signature::Term { mono, index } if *index == i => prev.is_top_reducible(&u.mul(mono)),
            _ => false,
        };
        if criterion(k, &u1) || criterion(l, &u2) {
            return None;
        }
        let s1 = self.store.sig(k).mul(&u1).ok()?;
        let s2 = self.store.sig(l).mul(&u2).ok()?;
        if self.sig_cmp(&s1, &s2) == Ordering::Less {
            Some(CriticalPair {
                lcm: t,
                k: l,
                u: u2,
                l: k,
                v: u1,
            })
        } else {
            Some(CriticalPair {
                lcm: t,
                k,
                u: u1,
                l,
                v: u2,
            })
        }
    }

    /// Computes the S-polynomials of `pairs` (all of one degree) that have no
    /// rewritable component. Returns the indices of the nonzero ones sorted
    /// by increasing signature.
    pub fn compute_spols(&mut self, pairs: &[CriticalPair]) -> Result<Vec<usize>, Error> {
        let mut new_polys = Vec::new();
        for pair in pairs {
            if self.is_rewritable(&pair.u, pair.k) || self.is_rewritable(&pair.v, pair.l) {
                continue;
            }
            let s = spoly_with(&self.ring, self.store.body(pair.k), self.store.body(pair.l))?;
            let sig = self.store.sig(pair.k).mul(&pair.u)?;
            let nonzero = !s.poly.is_zero();
            let idx = self.push_entry(sig.clone(), s)?;
            self.stats.spolys += 1;
            self.add_rule(&sig, idx);
            if nonzero {
                new_polys.push(idx);
            }
        }
        new_polys.sort_by(|&a, &b| self.sig_cmp(self.store.sig(a), self.store.sig(b)).then(a.cmp(&b)));
        Ok(new_polys)
    }

    /// Reduces the entries of `todo` in signature order: a full normal form
    /// by the previous basis, then signature-safe top-reduction by
    /// `curr` and the already completed entries. Returns the completed
    /// entries in completion order.
    pub fn reduction(&mut self, todo: Vec<usize>, prev: &PrevBasis, curr: &[usize]) -> Result<Vec<usize>, Error> {
        let mut todo = todo;
        let mut done: Vec<usize> = Vec::new();
        while !todo.is_empty() {
            let pos = (0..todo.len())
                .min_by(|&a, &b| {
                    self.sig_cmp(self.store.sig(todo[a]), self.store.sig(todo[b]))
                        .then(todo[a].cmp(&todo[b]))
                })
                .unwrap();
            let k = todo.swap_remove(pos);
            debug_assert!(todo
                .iter()
                .all(|&j| self.sig_cmp(self.store.sig(k), self.store.sig(j)) != Ordering::Greater));

            let mut steps = 0;
            let h = normal_form_with(&self.ring, self.store.body(k).clone(), &prev.reducers, &mut steps);
            self.stats.reduction_steps += steps;
            self.set_body(k, h);

            let (completed, redo) = self.top_reduction(k, prev, curr, &done)?;
            done.extend(completed);
            todo.extend(redo);
        }
        Ok(done)
    }

    /// One top-reduction attempt on entry `k`. Returns `(completed, redo)`.
    pub fn top_reduction(
        &mut self,
        k: usize,
        prev: &PrevBasis,
        curr: &[usize],
        done: &[usize],
    ) -> Result<(Vec<usize>, Vec<usize>), Error> {
        if self.store.poly(k).is_zero() {
            self.stats.zero_reductions += 1;
            self.zero_reductions_total += 1;
            self.trace_line("Reduction to zero!");
            return Ok((vec![], vec![]));
        }
        let Some(j) = self.find_reductor(k, prev, curr, done) else {
            let mut body = self.store.body(k).clone();
            body.make_monic(&self.ring);
            self.set_body(k, body);
            return Ok((vec![k], vec![]));
        };
        let p = self.store.poly(k);
        let q = self.store.poly(j);
        let (hp, hq) = (p.head()?, q.head()?);
        let u = hp.mono.div(&hq.mono).expect("find_reductor checked divisibility");
        let c = self.ring.field.div(hp.coeff, hq.coeff)?;
        let mut reduced = self.store.body(k).clone();
        reduced.sub_mul_suffix(&self.ring, 0, c, &u, self.store.body(j));
        self.stats.reduction_steps += 1;
        reduced.make_monic(&self.ring);

        let reductor_sig = self.store.sig(j).mul(&u)?;
        if self.sig_cmp(&reductor_sig, self.store.sig(k)) == Ordering::Less {
            self.set_body(k, reduced);
            Ok((vec![], vec![k]))
        } else {
            let new = self.push_entry(reductor_sig.clone(), reduced)?;
            self.add_rule(&reductor_sig, new);
            Ok((vec![], vec![k, new]))
        }
    }

    /// The first `j` in `curr` then `done` (insertion order) whose head
    /// divides `lt(poly k)` and whose multiple `u * poly(j)` is an allowed
    /// reductor: different signature, not rewritable, and not rejected by the
    /// signature criterion.
    pub fn find_reductor(&mut self, k: usize, prev: &PrevBasis, curr: &[usize], done: &[usize]) -> Option<usize> {
        let t = self.store.poly(k).lm()?.clone();
        for &j in curr.iter().chain(done) {
            let Some(tj) = self.store.poly(j).lm() else { continue };
            let Some(u) = t.div(tj) else { continue };
            let sig_j = self.store.sig(j);
            let usig = sig_j.mul(&u).expect("store entries have nonzero signatures");
            if &usig == self.store.sig(k) {
                continue;
            }
            let mu_j = sig_j.mono().expect("nonzero signature").clone();
            if self.is_rewritable(&u, j) {
                continue;
            }
            if prev.is_top_reducible(&u.mul(&mu_j)) {
                continue;
            }
            return Some(j);
        }
        None
    }

    /// Extends the basis indexed by `prev` with the store's last entry (the
    /// new generator, of signature index `i`) and returns the indices of a
    /// Gröbner basis of the enlarged ideal.
    /// Queues the pair of `k` and `l` unless a criterion discards it. A
    /// rewritable component stays rewritable, so such pairs are dropped
    /// here rather than in `compute_spols`.
    fn enqueue_pair(&mut self, queue: &mut PairQueue, k: usize, l: usize, i: usize, prev: &PrevBasis) {
        if let Some(cp) = self.critical_pair(k, l, i, prev) {
            if !self.is_rewritable(&cp.u, cp.k) && !self.is_rewritable(&cp.v, cp.l) {
                queue.push(cp);
            }
        }
    }

    pub fn incremental_basis(&mut self, i: usize, prev: &PrevBasis) -> Result<(Vec<usize>, IterationStats), Error> {
        self.stats = IterationStats::new(i);
        let new_idx = self.store.len();
        let mut curr = prev.indices.clone();
        curr.push(new_idx);
        self.rules.ensure_index(i);

        let mut queue = PairQueue::new();
        for &j in &prev.indices {
            self.enqueue_pair(&mut queue, new_idx, j, i, prev);
        }

        while let Some((d, pairs)) = queue.pop_min_degree(&self.ring) {
            *self.stats.pairs_by_degree.entry(d).or_default() += pairs.len();
            self.trace_line(format!("Processing {} critical pairs of degree {}", pairs.len(), d));
            let spols = self.compute_spols(&pairs)?;
            let done = self.reduction(spols, prev, &curr)?;
            for k in done {
                for &j in &curr {
                    self.enqueue_pair(&mut queue, k, j, i, prev);
                }
                curr.push(k);
            }
        }
        self.stats.basis_size = curr.len();
        Ok((curr, std::mem::take(&mut self.stats)))
    }
}

#[cfg(test)]
mod tests;
