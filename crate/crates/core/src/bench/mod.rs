//! Benchmark systems and the variant comparison harness.

use std::thread;

use crate::algebra::{Coeff, Monomial, Polynomial, PrimeField, Ring};
use crate::drivers::{buchberger_reduced, reduced_form, run_variant, Variant, VariantConfig};
use crate::system::System;
use crate::Error;

pub use crate::stats::{IterationStats, RunStats, StatsRecord, Totals};

use crate::algebra::MonomialOrder;

fn term(ring: &Ring, coeff: i64, exps: Vec<u16>) -> (Coeff, Monomial) {
    (ring.field.from_i64(coeff), Monomial::new(exps))
}

/// Homogeneous Katsura-`n`: `n + 1` generators in `x0..xn, h`.
pub fn katsura(n: usize, field: PrimeField) -> Result<System, Error> {
    if n < 1 {
        return Err(Error::BenchmarkSize("katsura", n));
    }
    let nv = n + 2;
    let h = n + 1;
    let ring = Ring::new(field, MonomialOrder::Grevlex, nv);
    let unit = |vars: &[usize]| {
        let mut e = vec![0u16; nv];
        for &v in vars {
            e[v] += 1;
        }
        e
    };
    let mut polys = Vec::with_capacity(n + 1);
    let mut linear = vec![term(&ring, 1, unit(&[0]))];
    linear.extend((1..=n).map(|i| term(&ring, 2, unit(&[i]))));
    linear.push(term(&ring, -1, unit(&[h])));
    polys.push(ring.from_terms(linear)?);
    let n_i = n as i64;
    for m in 0..n as i64 {
        let mut terms = Vec::new();
        for l in -n_i..=n_i {
            let (a, b) = (l.unsigned_abs() as usize, (m - l).unsigned_abs() as usize);
            if a <= n && b <= n {
                terms.push(term(&ring, 1, unit(&[a, b])));
            }
        }
        terms.push(term(&ring, -1, unit(&[m as usize, h])));
        polys.push(ring.from_terms(terms)?);
    }
    let mut variables: Vec<String> = (0..=n).map(|i| format!("x{i}")).collect();
    variables.push("h".into());
    Ok(System { variables, ring, polys })
}

/// Homogeneous Cyclic-`n`: `n` generators in `x1..xn, h`.
pub fn cyclic(n: usize, field: PrimeField) -> Result<System, Error> {
    if n < 2 {
        return Err(Error::BenchmarkSize("cyclic", n));
    }
    let nv = n + 1;
    let ring = Ring::new(field, MonomialOrder::Grevlex, nv);
    let mut polys = Vec::with_capacity(n);
    for k in 1..n {
        let terms = (0..n).map(|i| {
            let mut e = vec![0u16; nv];
            for j in 0..k {
                e[(i + j) % n] += 1;
            }
            term(&ring, 1, e)
        });
        polys.push(ring.from_terms(terms)?);
    }
    let mut prod = vec![1u16; nv];
    prod[n] = 0;
    let mut hn = vec![0u16; nv];
    hn[n] = n as u16;
    polys.push(ring.from_terms([term(&ring, 1, prod), term(&ring, -1, hn)])?);
    let mut variables: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    variables.push("h".into());
    Ok(System { variables, ring, polys })
}

/// Outcome of one variant in a comparison.
#[derive(Clone, Debug)]
pub struct VariantRun {
    pub variant: Variant,
    pub stats: RunStats,
    pub basis_size_final: usize,
    pub agrees_with_oracle: bool,
}

impl VariantRun {
    pub fn record(&self, ring: &Ring) -> StatsRecord {
        StatsRecord::new(
            self.variant.name(),
            ring.field.characteristic(),
            ring.order.name(),
            &self.stats,
            self.basis_size_final,
        )
        .with_agreement(self.agrees_with_oracle)
    }
}

/// Runs every requested variant on the same input, in parallel, and checks
/// each reduced basis against the Buchberger oracle.
pub fn compare_variants(ring: &Ring, generators: &[Polynomial], variants: &[Variant]) -> Result<Vec<VariantRun>, Error> {
    compare_with(ring, generators, variants, VariantConfig::new)
}

pub fn compare_with(
    ring: &Ring,
    generators: &[Polynomial],
    variants: &[Variant],
    config: impl Fn(Variant) -> VariantConfig + Sync,
) -> Result<Vec<VariantRun>, Error> {
    thread::scope(|s| {
        let oracle = s.spawn(|| buchberger_reduced(ring, generators));
        let runs: Vec<_> = variants
            .iter()
            .map(|&v| {
                let config = &config;
                s.spawn(move || run_variant(ring, generators, &config(v)).map(|r| (v, r)))
            })
            .collect();
        let results: Vec<_> = runs.into_iter().map(|h| h.join().expect("variant thread panicked")).collect();
        let oracle = oracle.join().expect("oracle thread panicked");
        results
            .into_iter()
            .map(|r| {
                let (variant, result) = r?;
                let reduced = if result.reduced { result.basis.clone() } else { reduced_form(ring, &result.basis) };
                Ok(VariantRun {
                    variant,
                    basis_size_final: result.basis.len(),
                    agrees_with_oracle: reduced == oracle,
                    stats: result.stats,
                })
            })
            .collect()
    })
}
