use crate::algebra::{Coeff, Monomial, Polynomial, Reducible, Ring};

use super::{SigError, Signature};

/// A polynomial together with an optional module representation
/// `poly = sum_l cofactors[l] * F'_l` (0-based: `cofactors[l]` pairs with
/// the generator of index `l + 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrackedPoly {
    pub poly: Polynomial,
    pub cofactors: Option<Vec<Polynomial>>,
}

impl TrackedPoly {
    pub fn untracked(poly: Polynomial) -> Self {
        Self { poly, cofactors: None }
    }

    /// `poly` as the `index`-th generator itself: cofactor vector `e_index`.
    pub fn generator(ring: &Ring, poly: Polynomial, index: usize, tracked: bool) -> Self {
        let cofactors = tracked.then(|| {
            let mut h = vec![Polynomial::zero(); index];
            h[index - 1] = ring.one();
            h
        });
        Self { poly, cofactors }
    }

    fn cofactor_op(&mut self, ring: &Ring, c: Coeff, u: &Monomial, other: &Self) {
        if let (Some(h), Some(g)) = (self.cofactors.as_mut(), other.cofactors.as_ref()) {
            if h.len() < g.len() {
                h.resize(g.len(), Polynomial::zero());
            }
            for (hl, gl) in h.iter_mut().zip(g.iter()) {
                if !gl.is_zero() {
                    *hl = ring.sub_mul(hl, c, u, gl);
                }
            }
        } else {
            debug_assert!(self.cofactors.is_none() == other.cofactors.is_none());
        }
    }
}

impl Reducible for TrackedPoly {
    fn poly(&self) -> &Polynomial {
        &self.poly
    }

    fn sub_mul_suffix(&mut self, ring: &Ring, from: usize, c: Coeff, u: &Monomial, other: &Self) {
        ring.sub_mul_suffix(&mut self.poly, from, c, u, &other.poly);
        self.cofactor_op(ring, c, u, other);
    }

    fn set_poly(&mut self, p: Polynomial) {
        self.poly = p;
    }

    fn sub_mul_extra(&mut self, ring: &Ring, c: Coeff, u: &Monomial, other: &Self) {
        self.cofactor_op(ring, c, u, other);
    }

    fn mul_term(&self, ring: &Ring, c: Coeff, u: &Monomial) -> Self {
        Self {
            poly: ring.mul_term(&self.poly, c, u),
            cofactors: self
                .cofactors
                .as_ref()
                .map(|h| h.iter().map(|hl| ring.mul_term(hl, c, u)).collect()),
        }
    }

    fn scale(&mut self, ring: &Ring, c: Coeff) {
        ring.scale_in_place(&mut self.poly, c);
        if let Some(h) = self.cofactors.as_mut() {
            for hl in h {
                ring.scale_in_place(hl, c);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPolynomial {
    sig: Signature,
    body: TrackedPoly,
}

impl LabeledPolynomial {
    pub fn new(sig: Signature, body: TrackedPoly) -> Self {
        Self { sig, body }
    }

    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    pub fn poly(&self) -> &Polynomial {
        &self.body.poly
    }

    pub fn cofactors(&self) -> Option<&[Polynomial]> {
        self.body.cofactors.as_deref()
    }

    pub fn body(&self) -> &TrackedPoly {
        &self.body
    }
}

/// Checks that `lp.sig` is a signature of `lp.poly` with respect to
/// `generators` (1-indexed as `generators[0]` = `F'_1`), using the recorded
/// cofactors as the witness representation.
pub fn admissible_check(ring: &Ring, lp: &LabeledPolynomial, generators: &[Polynomial]) -> Result<bool, SigError> {
    let h = lp.cofactors().ok_or(SigError::CofactorsAbsent)?;
    let (mu, nu) = match lp.sig() {
        Signature::Zero => return Ok(lp.poly().is_zero() && h.iter().all(Polynomial::is_zero)),
        Signature::Term { mono, index } => (mono, *index),
    };
    if h.len() > generators.len() && h[generators.len()..].iter().any(|c| !c.is_zero()) {
        return Ok(false);
    }
    if h.iter().skip(nu).any(|c| !c.is_zero()) {
        return Ok(false);
    }
    if h.get(nu - 1).and_then(|c| c.lm()) != Some(mu) {
        return Ok(false);
    }
    let mut sum = Polynomial::zero();
    for (c, g) in h.iter().zip(generators) {
        if !c.is_zero() {
            sum = ring.add(&sum, &ring.mul(c, g));
        }
    }
    Ok(&sum == lp.poly())
}

/// The global list of labeled polynomials. Index 0 is the phantom entry
/// (zero signature, zero polynomial); real entries start at 1.
///
/// Signatures are fixed at insertion: the only mutation is
/// [`PolyStore::replace_body`].
#[derive(Clone, Debug)]
pub struct PolyStore {
    entries: Vec<LabeledPolynomial>,
}

impl Default for PolyStore {
    fn default() -> Self {
        Self::new()
    }
}

impl PolyStore {
    pub fn new() -> Self {
        Self {
            entries: vec![LabeledPolynomial::new(
                Signature::Zero,
                TrackedPoly::untracked(Polynomial::zero()),
            )],
        }
    }

    /// Number of real entries (`#r`).
    pub fn len(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn push(&mut self, lp: LabeledPolynomial) -> usize {
        debug_assert!(!lp.sig.is_zero());
        self.entries.push(lp);
        self.len()
    }

    pub fn get(&self, k: usize) -> &LabeledPolynomial {
        &self.entries[k]
    }

    pub fn sig(&self, k: usize) -> &Signature {
        &self.entries[k].sig
    }

    pub fn poly(&self, k: usize) -> &Polynomial {
        &self.entries[k].body.poly
    }

    pub fn body(&self, k: usize) -> &TrackedPoly {
        &self.entries[k].body
    }

    pub fn replace_body(&mut self, k: usize, body: TrackedPoly) {
        assert!(k >= 1, "the phantom entry is immutable");
        self.entries[k].body = body;
    }

    /// Drops every real entry, keeping the phantom.
    pub fn reset(&mut self) {
        self.entries.truncate(1);
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &LabeledPolynomial)> {
        self.entries.iter().enumerate().skip(1)
    }
}
