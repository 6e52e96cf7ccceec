//! S-polynomials, top-reduction, normal forms and interreduction.
//!
//! The routines are generic over [`Reducible`] so the signature engine can
//! run the same reductions on polynomials that carry a module representation
//! alongside them.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use rustc_hash::FxHashMap;

use super::{AlgebraError, Coeff, Monomial, MonomialOrder, Polynomial, PrimeField, Ring, Term};

/// Something that behaves like a polynomial under the elementary reduction
/// operations. Implementors may carry extra data (e.g. cofactors) that must
/// be transformed in lockstep with the polynomial.
pub trait Reducible: Clone {
    fn poly(&self) -> &Polynomial;

    /// `self[from..] -= c * u * other`, leaving `self[..from]` untouched.
    fn sub_mul_suffix(&mut self, ring: &Ring, from: usize, c: Coeff, u: &Monomial, other: &Self);

    /// Replaces the polynomial part, keeping any extra data as is.
    fn set_poly(&mut self, p: Polynomial);

    /// Applies `-= c * u * other` to the extra data only.
    fn sub_mul_extra(&mut self, _ring: &Ring, _c: Coeff, _u: &Monomial, _other: &Self) {}

    /// `c * u * self`
    fn mul_term(&self, ring: &Ring, c: Coeff, u: &Monomial) -> Self;

    fn scale(&mut self, ring: &Ring, c: Coeff);

    fn make_monic(&mut self, ring: &Ring) {
        if let Some(lc) = self.poly().lc() {
            if lc != 1 {
                let inv = ring.field.inv(lc).expect("nonzero head coefficient");
                self.scale(ring, inv);
            }
        }
    }
}

impl Reducible for Polynomial {
    fn poly(&self) -> &Polynomial {
        self
    }

    fn sub_mul_suffix(&mut self, ring: &Ring, from: usize, c: Coeff, u: &Monomial, other: &Self) {
        ring.sub_mul_suffix(self, from, c, u, other);
    }

    fn set_poly(&mut self, p: Polynomial) {
        *self = p;
    }

    fn mul_term(&self, ring: &Ring, c: Coeff, u: &Monomial) -> Self {
        ring.mul_term(self, c, u)
    }

    fn scale(&mut self, ring: &Ring, c: Coeff) {
        ring.scale_in_place(self, c);
    }
}

/// `lc(q) * (t / lt(p)) * p - lc(p) * (t / lt(q)) * q` with `t = lcm(lt p, lt q)`.
pub fn spoly_with<R: Reducible>(ring: &Ring, p: &R, q: &R) -> Result<R, AlgebraError> {
    let hp = p.poly().head()?;
    let hq = q.poly().head()?;
    let t = hp.mono.lcm(&hq.mono);
    let sp = t.div(&hp.mono).expect("lcm is a multiple");
    let sq = t.div(&hq.mono).expect("lcm is a multiple");
    let mut s = p.mul_term(ring, hq.coeff, &sp);
    s.sub_mul_suffix(ring, 0, hp.coeff, &sq, q);
    Ok(s)
}

pub fn spoly(ring: &Ring, p: &Polynomial, q: &Polynomial) -> Result<Polynomial, AlgebraError> {
    spoly_with(ring, p, q)
}

/// One top-reduction step `p - (lc p / lc g) (lt p / lt g) g`.
pub fn top_reduce_step_with<R: Reducible>(ring: &Ring, p: &R, g: &R) -> Result<R, AlgebraError> {
    let hp = p.poly().head()?;
    let hg = g.poly().head()?;
    let u = hp.mono.div(&hg.mono).ok_or(AlgebraError::NotDivisible)?;
    let c = ring.field.div(hp.coeff, hg.coeff)?;
    let mut out = p.clone();
    out.sub_mul_suffix(ring, 0, c, &u, g);
    Ok(out)
}

pub fn top_reduce_step(ring: &Ring, p: &Polynomial, g: &Polynomial) -> Result<Polynomial, AlgebraError> {
    top_reduce_step_with(ring, p, g)
}

/// True iff some nonzero `g` in `basis` has `lt(g) | m`.
pub fn is_top_reducible<'a>(m: &Monomial, basis: impl IntoIterator<Item = &'a Polynomial>) -> bool {
    basis.into_iter().any(|g| g.lm().is_some_and(|h| h.divides(m)))
}

/// Full reduction of every term of `p` by `basis`. Each single reduction step
/// increments `steps`.
pub fn normal_form_with<R: Reducible>(ring: &Ring, p: R, basis: &[R], steps: &mut u64) -> R {
    normal_form_skipping(ring, p, basis, usize::MAX, steps)
}

/// Normal form modulo `basis` without `basis[skip]`.
fn normal_form_skipping<R: Reducible>(ring: &Ring, p: R, basis: &[R], skip: usize, steps: &mut u64) -> R {
    let heads: Vec<(u64, usize)> = basis
        .iter()
        .enumerate()
        .filter(|&(j, g)| j != skip && !g.poly().is_zero())
        .map(|(j, g)| (g.poly().lm().unwrap().divmask(), j))
        .collect();
    let find = |m: &Monomial| {
        let mm = m.divmask();
        heads
            .iter()
            .find(|&&(hm, j)| hm & !mm == 0 && basis[j].poly().lm().unwrap().divides(m))
            .map(|&(_, j)| &basis[j])
    };
    let mut p = p;
    if !p.poly().terms().iter().any(|t| find(&t.mono).is_some()) {
        return p;
    }
    let f = &ring.field;
    let mut acc = Accumulator::new(ring.order, p.poly().len());
    for t in p.poly().terms() {
        acc.add(f, t.mono.clone(), t.coeff);
    }
    let mut out = Vec::new();
    while let Some((m, c)) = acc.pop_max() {
        match find(&m) {
            Some(g) => {
                let hg = g.poly().head().expect("nonzero reductor");
                let u = m.div(&hg.mono).expect("checked divisibility");
                let q = f.div(c, hg.coeff).expect("nonzero head");
                let nq = f.neg(q);
                for t in &g.poly().terms()[1..] {
                    acc.add(f, t.mono.mul(&u), f.mul(nq, t.coeff));
                }
                p.sub_mul_extra(ring, q, &u, g);
                *steps += 1;
            }
            None => out.push(Term { coeff: c, mono: m }),
        }
    }
    p.set_poly(Polynomial::from_sorted(out));
    p
}

/// True iff repeated top reduction by `basis` takes `p` to zero, i.e. no
/// intermediate head is irreducible.
pub fn top_reduces_to_zero(ring: &Ring, p: &Polynomial, basis: &[Polynomial]) -> bool {
    let heads: Vec<(u64, &Polynomial)> =
        basis.iter().filter(|g| !g.is_zero()).map(|g| (g.lm().unwrap().divmask(), g)).collect();
    let f = &ring.field;
    let mut acc = Accumulator::new(ring.order, p.len());
    for t in p.terms() {
        acc.add(f, t.mono.clone(), t.coeff);
    }
    while let Some((m, c)) = acc.pop_max() {
        let mm = m.divmask();
        let Some(&(_, g)) = heads.iter().find(|&&(hm, g)| hm & !mm == 0 && g.lm().unwrap().divides(&m)) else {
            return false;
        };
        let hg = g.head().expect("nonzero reductor");
        let u = m.div(&hg.mono).expect("checked divisibility");
        let nq = f.neg(f.div(c, hg.coeff).expect("nonzero head"));
        for t in &g.terms()[1..] {
            acc.add(f, t.mono.mul(&u), f.mul(nq, t.coeff));
        }
    }
    true
}

struct HeapMono {
    mono: Monomial,
    order: MonomialOrder,
}

impl PartialEq for HeapMono {
    fn eq(&self, other: &Self) -> bool {
        self.mono == other.mono
    }
}

impl Eq for HeapMono {}

impl PartialOrd for HeapMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HeapMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(&self.mono, &other.mono)
    }
}

/// Sparse accumulator: coefficients by monomial plus a max-heap of the
/// monomials present. A monomial is pushed once; during a normal form
/// every later addition is strictly smaller than the last popped term.
struct Accumulator {
    coeffs: FxHashMap<Monomial, Coeff>,
    heap: BinaryHeap<HeapMono>,
    order: MonomialOrder,
}

impl Accumulator {
    fn new(order: MonomialOrder, capacity: usize) -> Self {
        Self {
            coeffs: FxHashMap::with_capacity_and_hasher(capacity, Default::default()),
            heap: BinaryHeap::with_capacity(capacity),
            order,
        }
    }

    fn add(&mut self, f: &PrimeField, mono: Monomial, c: Coeff) {
        match self.coeffs.get_mut(&mono) {
            Some(e) => *e = f.add(*e, c),
            None => {
                self.coeffs.insert(mono.clone(), c);
                self.heap.push(HeapMono { mono, order: self.order });
            }
        }
    }

    fn pop_max(&mut self) -> Option<(Monomial, Coeff)> {
        while let Some(HeapMono { mono, .. }) = self.heap.pop() {
            match self.coeffs.remove(&mono) {
                Some(c) if c != 0 => return Some((mono, c)),
                _ => {}
            }
        }
        None
    }
}

pub fn normal_form_counted(ring: &Ring, p: &Polynomial, basis: &[Polynomial], steps: &mut u64) -> Polynomial {
    normal_form_with(ring, p.clone(), basis, steps)
}

pub fn normal_form(ring: &Ring, p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut steps = 0;
    normal_form_with(ring, p.clone(), basis, &mut steps)
}

/// Interreduces `items`: drops zeros, makes every element monic, removes
/// head-redundant elements and tail-reduces the rest. The output is sorted
/// ascending by head monomial. For a Gröbner basis this is the reduced
/// Gröbner basis of the ideal.
pub fn interreduce_with<R: Reducible>(ring: &Ring, items: Vec<R>, steps: &mut u64) -> Vec<R> {
    let sort = |v: &mut Vec<R>| {
        v.sort_by(|a, b| ring.cmp(a.poly().lm().unwrap(), b.poly().lm().unwrap()));
    };
    let mut items: Vec<R> = items.into_iter().filter(|g| !g.poly().is_zero()).collect();
    for g in &mut items {
        g.make_monic(ring);
    }
    sort(&mut items);

    // Remove elements whose head is divisible by another element's head,
    // replacing each by its normal form modulo the rest.
    loop {
        let redundant = (0..items.len()).rev().find(|&i| {
            let hi = items[i].poly().lm().unwrap();
            items
                .iter()
                .enumerate()
                .any(|(j, g)| j != i && g.poly().lm().unwrap().divides(hi))
        });
        let Some(i) = redundant else { break };
        let g = items.remove(i);
        let mut r = normal_form_with(ring, g, &items, steps);
        if !r.poly().is_zero() {
            r.make_monic(ring);
            items.push(r);
            sort(&mut items);
        }
    }

    // Heads are now minimal and fixed; tail-reduce each against the others.
    let mut out = Vec::with_capacity(items.len());
    for (i, g) in items.iter().enumerate() {
        let r = normal_form_skipping(ring, g.clone(), &items, i, steps);
        debug_assert_eq!(r.poly().lm(), g.poly().lm());
        out.push(r);
    }
    out
}

/// Reduced Gröbner basis of a set that is already a Gröbner basis: keeps
/// the elements with minimal heads and tail-reduces them. Unlike
/// [`interreduce_with`] this never computes normal forms of head-redundant
/// elements, which for a Gröbner basis are zero.
pub fn reduce_groebner_basis_with<R: Reducible>(ring: &Ring, items: Vec<R>, steps: &mut u64) -> Vec<R> {
    let mut items: Vec<R> = items.into_iter().filter(|g| !g.poly().is_zero()).collect();
    for g in &mut items {
        g.make_monic(ring);
    }
    items.sort_by(|a, b| ring.cmp(a.poly().lm().unwrap(), b.poly().lm().unwrap()));
    let mut minimal: Vec<R> = Vec::with_capacity(items.len());
    for g in items {
        let h = g.poly().lm().unwrap();
        if !minimal.iter().any(|k| k.poly().lm().unwrap().divides(h)) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        out.push(normal_form_skipping(ring, g.clone(), &minimal, i, steps));
    }
    out
}

pub fn reduce_groebner_basis(ring: &Ring, basis: &[Polynomial]) -> Vec<Polynomial> {
    let mut steps = 0;
    reduce_groebner_basis_with(ring, basis.to_vec(), &mut steps)
}

pub fn interreduce(ring: &Ring, basis: &[Polynomial]) -> Vec<Polynomial> {
    let mut steps = 0;
    interreduce_with(ring, basis.to_vec(), &mut steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{MonomialOrder, PrimeField};

    /// Builds polynomials over GF(32003)[x,y,z,t] from (coeff, [x,y,z,t]) lists.
    fn ring4() -> Ring {
        Ring::new(PrimeField::new(32003).unwrap(), MonomialOrder::Grevlex, 4)
    }

    fn p4(r: &Ring, terms: &[(i64, [u16; 4])]) -> Polynomial {
        r.from_terms(terms.iter().map(|(c, e)| (r.field.from_i64(*c), Monomial::new(e.to_vec()))))
            .unwrap()
    }

    fn p2(r: &Ring, terms: &[(i64, [u16; 2])]) -> Polynomial {
        r.from_terms(terms.iter().map(|(c, e)| (r.field.from_i64(*c), Monomial::new(e.to_vec()))))
            .unwrap()
    }

    #[test]
    fn spoly_examples() {
        let r = Ring::new(PrimeField::new(32003).unwrap(), MonomialOrder::Grevlex, 2);
        // xy + x, y^2 - 1
        let f1 = p2(&r, &[(1, [1, 1]), (1, [1, 0])]);
        let f2 = p2(&r, &[(1, [0, 2]), (-1, [0, 0])]);
        // y f1 - x f2 = xy^2 + xy - xy^2 + x = xy + x
        assert_eq!(spoly(&r, &f1, &f2).unwrap(), f1);
        assert!(spoly(&r, &f1, &f1).unwrap().is_zero());
        assert!(matches!(spoly(&r, &f1, &Polynomial::zero()), Err(AlgebraError::ZeroPolynomial)));

        // variables x, y, h: xh + h^2 and yh + h^2
        let r3 = Ring::new(PrimeField::new(32003).unwrap(), MonomialOrder::Grevlex, 3);
        let mk = |t: &[(i64, [u16; 3])]| {
            r3.from_terms(t.iter().map(|(c, e)| (r3.field.from_i64(*c), Monomial::new(e.to_vec()))))
                .unwrap()
        };
        let g1 = mk(&[(1, [1, 0, 1]), (1, [0, 0, 2])]);
        let g2 = mk(&[(1, [0, 1, 1]), (1, [0, 0, 2])]);
        assert_eq!(spoly(&r3, &g1, &g2).unwrap(), mk(&[(1, [0, 1, 2]), (-1, [1, 0, 2])]));
    }

    #[test]
    fn top_reduce_step_examples() {
        let r = ring4();
        let p = p4(&r, &[(1, [2, 0, 0, 0]), (1, [1, 1, 0, 0])]);
        let g = p4(&r, &[(1, [1, 0, 0, 0]), (1, [0, 1, 0, 0])]);
        assert!(top_reduce_step(&r, &p, &g).unwrap().is_zero());

        // x^2yz^2 - z^4t by x^2y - z^2t
        let p = p4(&r, &[(1, [2, 1, 2, 0]), (-1, [0, 0, 4, 1])]);
        let g = p4(&r, &[(1, [2, 1, 0, 0]), (-1, [0, 0, 2, 1])]);
        assert!(top_reduce_step(&r, &p, &g).unwrap().is_zero());

        let x2 = p4(&r, &[(1, [2, 0, 0, 0])]);
        let y = p4(&r, &[(1, [0, 1, 0, 0])]);
        assert!(matches!(top_reduce_step(&r, &x2, &y), Err(AlgebraError::NotDivisible)));
    }

    #[test]
    fn normal_form_examples() {
        let r = ring4();
        let g1 = p4(&r, &[(1, [1, 0, 2, 0]), (-1, [0, 2, 0, 1])]);
        let g2 = p4(&r, &[(1, [2, 1, 0, 0]), (-1, [0, 0, 2, 1])]);
        let basis = vec![g1.clone(), g2.clone()];
        assert!(normal_form(&r, &Polynomial::zero(), &basis).is_zero());
        let p = p4(&r, &[(1, [1, 3, 0, 1]), (-1, [0, 0, 4, 1])]);
        assert_eq!(normal_form(&r, &p, &basis), p);
        // x^2 y z^2 reduces completely
        let q = p4(&r, &[(1, [2, 1, 2, 0])]);
        let nf = normal_form(&r, &q, &basis);
        for t in nf.terms() {
            assert!(!is_top_reducible(&t.mono, &basis));
        }
    }

    #[test]
    fn is_top_reducible_examples() {
        let r = ring4();
        let g = p4(&r, &[(1, [1, 0, 2, 0]), (-1, [0, 2, 0, 1])]);
        assert!(is_top_reducible(&Monomial::new(vec![1, 0, 4, 0]), [&g]));
        assert!(!is_top_reducible(&Monomial::new(vec![0, 0, 4, 0]), [&g]));
        assert!(!is_top_reducible(&Monomial::new(vec![1, 1, 1, 1]), []));
    }

    #[test]
    fn interreduce_examples() {
        let r = Ring::new(PrimeField::new(7).unwrap(), MonomialOrder::Grevlex, 2);
        let x = p2(&r, &[(1, [1, 0])]);
        let xy = p2(&r, &[(1, [1, 0]), (1, [0, 1])]);
        let y = p2(&r, &[(1, [0, 1])]);
        assert_eq!(interreduce(&r, &[x.clone(), xy]), vec![y, x.clone()]);
        let f = p2(&r, &[(3, [1, 1]), (2, [0, 0])]);
        assert_eq!(interreduce(&r, std::slice::from_ref(&f)), vec![r.monic(&f)]);
        assert!(interreduce(&r, &[Polynomial::zero()]).is_empty());
    }
}
