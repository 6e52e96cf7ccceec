//! Top-level entry points: F5, F5R, F5C and the Buchberger oracle.

mod buchberger;
mod check;

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

pub use buchberger::{buchberger_reduced, buchberger_unpruned};
pub use check::{groebner_check, top_reduces_to_zero};

use crate::algebra::{interreduce, reduce_groebner_basis_with, Polynomial, Ring};
use crate::engine::{Engine, EngineConfig, PrevBasis, DEFAULT_STORE_CAP};
use crate::sigcore::Signature;
use crate::stats::RunStats;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    F5,
    F5R,
    F5C,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::F5, Variant::F5R, Variant::F5C];

    pub fn name(&self) -> &'static str {
        match self {
            Variant::F5 => "f5",
            Variant::F5R => "f5r",
            Variant::F5C => "f5c",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariantConfig {
    pub variant: Variant,
    /// F5C only: do not rebuild the phantom rewrite rules after each
    /// interreduction.
    pub skip_rule_rebuild: bool,
    pub certified: bool,
    pub store_cap: usize,
    /// Collect the per-degree trace.
    pub trace: bool,
}

impl VariantConfig {
    pub fn new(variant: Variant) -> Self {
        Self {
            variant,
            skip_rule_rebuild: false,
            certified: false,
            store_cap: DEFAULT_STORE_CAP,
            trace: false,
        }
    }

    pub fn f5() -> Self {
        Self::new(Variant::F5)
    }

    pub fn f5r() -> Self {
        Self::new(Variant::F5R)
    }

    pub fn f5c() -> Self {
        Self::new(Variant::F5C)
    }

    pub fn certified(mut self, on: bool) -> Self {
        self.certified = on;
        self
    }

    pub fn skip_rule_rebuild(mut self, on: bool) -> Self {
        self.skip_rule_rebuild = on;
        self
    }

    pub fn trace(mut self, on: bool) -> Self {
        self.trace = on;
        self
    }

    pub fn store_cap(mut self, cap: usize) -> Self {
        self.store_cap = cap;
        self
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.skip_rule_rebuild && self.variant != Variant::F5C {
            return Err(Error::InvalidConfig("skip_rule_rebuild requires the f5c variant".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct BasisResult {
    pub basis: Vec<Polynomial>,
    pub stats: RunStats,
    /// The basis is the reduced Gröbner basis.
    pub reduced: bool,
    /// Trace lines, when tracing was requested.
    pub trace: Vec<String>,
}

/// Validates, filters, normalizes and sorts the input: increasing total
/// degree, then increasing head monomial, then input position.
fn prepare_input(ring: &Ring, generators: &[Polynomial]) -> Result<Vec<Polynomial>, Error> {
    if generators.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(pos) = generators.iter().position(|f| !f.is_homogeneous()) {
        return Err(Error::NotHomogeneous { index: pos + 1 });
    }
    let mut gens: Vec<Polynomial> = generators.iter().filter(|f| !f.is_zero()).map(|f| ring.monic(f)).collect();
    if gens.is_empty() {
        return Err(Error::EmptyInput);
    }
    gens.sort_by(|a, b| match a.degree().cmp(&b.degree()) {
        Ordering::Equal => ring.cmp(a.lm().unwrap(), b.lm().unwrap()),
        ord => ord,
    });
    Ok(gens)
}

fn unit_result(ring: &Ring, stats: RunStats, trace: Vec<String>) -> BasisResult {
    BasisResult {
        basis: vec![ring.one()],
        stats,
        reduced: true,
        trace,
    }
}

/// Replaces the store and rules by the reduced Gröbner basis of the ideal
/// indexed by `curr`: entry `j` becomes `(e_j, B_j)`. Unless
/// `skip_rule_rebuild`, each `Rules_k` receives the phantom rules
/// `(lcm(lt B_j, lt B_k) / lt B_k, 0)` for `j < k`.
pub fn setup_reduced_basis(engine: &mut Engine, curr: &[usize], skip_rule_rebuild: bool, steps: &mut u64) -> Result<PrevBasis, Error> {
    let ring = engine.ring().clone();
    let polys: Vec<Polynomial> = curr.iter().map(|&k| engine.store().poly(k).clone()).collect();
    let reduced = reduce_groebner_basis_with(&ring, polys, steps);
    engine.reset();
    let mut indices = Vec::with_capacity(reduced.len());
    for (j, b) in reduced.iter().enumerate() {
        indices.push(engine.push_generator(j + 1, b)?);
    }
    engine.rules.ensure_index(reduced.len());
    if !skip_rule_rebuild {
        for j in 0..reduced.len() {
            let t = reduced[j].lm().expect("reduced basis elements are nonzero");
            for (k, bk) in reduced.iter().enumerate().skip(j + 1) {
                let tk = bk.lm().unwrap();
                let u = t.lcm(tk).div(tk).unwrap();
                engine.add_rule(&Signature::new(u, k + 1), 0);
            }
        }
    }
    let reducers = indices.iter().map(|&k| engine.store().body(k).clone()).collect();
    Ok(PrevBasis { indices, reducers })
}

/// Runs one of the three signature-based variants.
pub fn run_variant(ring: &Ring, generators: &[Polynomial], config: &VariantConfig) -> Result<BasisResult, Error> {
    config.validate()?;
    let gens = prepare_input(ring, generators)?;
    let mut stats = RunStats::default();
    if gens.iter().any(Polynomial::is_constant) {
        return Ok(unit_result(ring, stats, Vec::new()));
    }

    let mut engine = Engine::new(
        ring.clone(),
        EngineConfig {
            certified: config.certified,
            store_cap: config.store_cap,
            trace: config.trace,
        },
    );
    let first = engine.push_generator(1, &gens[0])?;
    engine.rules.ensure_index(1);
    let mut prev = PrevBasis {
        indices: vec![first],
        reducers: vec![engine.store().body(first).clone()],
    };
    let mut interreduction_steps = 0;
    // F5 output order: each new generator first, then the previous list,
    // then the elements created in that iteration.
    let mut listing = vec![first];

    for (n, f) in gens.iter().enumerate().skip(1) {
        let iteration = n + 1;
        let index = match config.variant {
            Variant::F5 | Variant::F5R => iteration,
            Variant::F5C => engine.store().len() + 1,
        };
        engine.trace_line(format!("Iteration {iteration}"));
        let generator = engine.push_generator(index, f)?;
        let (curr, mut it) = engine.incremental_basis(index, &prev)?;
        it.i = iteration;
        let basis_size = curr.len();
        stats.push(it);

        if curr.iter().any(|&k| engine.store().poly(k).is_constant()) {
            stats.certification = config.certified.then(|| engine.audit().clone());
            stats.interreduction_steps = interreduction_steps;
            let trace = engine.take_trace();
            return Ok(unit_result(ring, stats, trace));
        }

        if config.variant == Variant::F5 {
            let mut next = vec![generator];
            next.extend_from_slice(&listing);
            next.extend(curr.iter().filter(|&&k| k != generator && !listing.contains(&k)));
            debug_assert_eq!(next.len(), curr.len());
            listing = next;
        }
        prev = match config.variant {
            Variant::F5 => PrevBasis {
                reducers: curr.iter().map(|&k| engine.store().body(k).clone()).collect(),
                indices: curr,
            },
            Variant::F5R => PrevBasis {
                reducers: reduce_groebner_basis_with(
                    ring,
                    curr.iter().map(|&k| engine.store().body(k).clone()).collect(),
                    &mut interreduction_steps,
                ),
                indices: curr,
            },
            Variant::F5C => setup_reduced_basis(&mut engine, &curr, config.skip_rule_rebuild, &mut interreduction_steps)?,
        };
        engine.trace_line(format!("{basis_size} polynomials in basis"));
    }

    let basis: Vec<Polynomial> = match config.variant {
        Variant::F5 => listing.iter().map(|&k| engine.store().poly(k).clone()).collect(),
        Variant::F5R | Variant::F5C => prev.reducers.iter().map(|g| g.poly.clone()).collect(),
    };
    engine.trace_line("");
    engine.trace_line(format!("number of zero reductions: {}", engine.zero_reductions_total()));
    engine.trace_line(format!("number of elements in g: {}", basis.len()));

    if config.certified {
        let mut audit = engine.audit().clone();
        if !engine.rules().is_monotone() {
            audit.rule_monotonicity_failures += 1;
        }
        stats.certification = Some(audit);
    }
    stats.interreduction_steps = interreduction_steps;
    Ok(BasisResult {
        reduced: config.variant != Variant::F5 || basis.len() == 1,
        basis,
        stats,
        trace: engine.take_trace(),
    })
}

/// F5: returns the raw (not interreduced) Gröbner basis.
pub fn f5(ring: &Ring, generators: &[Polynomial], config: &VariantConfig) -> Result<BasisResult, Error> {
    run_variant(ring, generators, &VariantConfig { variant: Variant::F5, ..config.clone() })
}

/// F5R: normal forms use the interreduced previous basis; pairs and
/// signatures still come from the unreduced one. Returns the reduced basis.
pub fn f5r(ring: &Ring, generators: &[Polynomial], config: &VariantConfig) -> Result<BasisResult, Error> {
    run_variant(ring, generators, &VariantConfig { variant: Variant::F5R, ..config.clone() })
}

/// F5C: the store and rules are rebuilt from the reduced basis after every
/// iteration. Returns the reduced basis.
pub fn f5c(ring: &Ring, generators: &[Polynomial], config: &VariantConfig) -> Result<BasisResult, Error> {
    run_variant(ring, generators, &VariantConfig { variant: Variant::F5C, ..config.clone() })
}

/// Canonical reduced form of any Gröbner basis of the ideal.
pub fn reduced_form(ring: &Ring, basis: &[Polynomial]) -> Vec<Polynomial> {
    interreduce(ring, basis)
}
