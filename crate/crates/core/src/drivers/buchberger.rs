//! A plain Buchberger implementation with Gebauer–Möller pair pruning. It
//! shares nothing with the signature engine beyond polynomial arithmetic and
//! serves as the oracle for every F5 variant.

use std::cmp::Ordering;

use crate::algebra::{interreduce, normal_form, reduce_groebner_basis, spoly, Monomial, Polynomial, Ring};

struct Pair {
    lcm: Monomial,
    i: usize,
    j: usize,
}

fn select_min(ring: &Ring, pairs: &mut Vec<Pair>) -> Option<Pair> {
    let pos = (0..pairs.len()).min_by(|&a, &b| match ring.cmp(&pairs[a].lcm, &pairs[b].lcm) {
        Ordering::Equal => (pairs[a].i, pairs[a].j).cmp(&(pairs[b].i, pairs[b].j)),
        ord => ord,
    })?;
    Some(pairs.swap_remove(pos))
}

struct State {
    polys: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State {
    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].lm().expect("stored polynomials are nonzero")
    }

    fn active_polys(&self) -> Vec<Polynomial> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p.clone())
            .collect()
    }

    /// Gebauer–Möller update with the new element `h` (already stored at the
    /// end of `polys`).
    fn update(&mut self) {
        let h = self.polys.len() - 1;
        let lh = self.lm(h).clone();

        let mut candidates: Vec<usize> = (0..h).filter(|&g| self.active[g]).collect();
        candidates.reverse();
        let mut kept: Vec<usize> = Vec::new();
        while let Some(g1) = candidates.pop() {
            let l1 = lh.lcm(self.lm(g1));
            let dominated = |g2: &usize| lh.lcm(self.lm(*g2)).divides(&l1);
            if lh.is_coprime(self.lm(g1)) || (!candidates.iter().any(dominated) && !kept.iter().any(dominated)) {
                kept.push(g1);
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|&g| !lh.is_coprime(self.lm(g)))
            .map(|g| Pair {
                lcm: lh.lcm(self.lm(g)),
                i: g,
                j: h,
            })
            .collect();

        let old = std::mem::take(&mut self.pairs);
        for p in old {
            let drop = lh.divides(&p.lcm)
                && lh.lcm(self.lm(p.i)) != p.lcm
                && lh.lcm(self.lm(p.j)) != p.lcm;
            if !drop {
                self.pairs.push(p);
            }
        }
        self.pairs.extend(new_pairs);

        for g in 0..h {
            if self.active[g] && lh.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
        self.active.push(true);
    }
}

/// The reduced Gröbner basis of the ideal generated by `generators`, sorted
/// ascending by head monomial. Inputs need not be homogeneous. The zero
/// ideal yields an empty basis.
pub fn buchberger_reduced(ring: &Ring, generators: &[Polynomial]) -> Vec<Polynomial> {
    let mut st = State {
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for f in generators.iter().filter(|f| !f.is_zero()) {
        if f.is_constant() {
            return vec![ring.one()];
        }
        st.polys.push(ring.monic(f));
        st.update();
    }
    while let Some(pair) = select_min(ring, &mut st.pairs) {
        let s = spoly(ring, &st.polys[pair.i], &st.polys[pair.j]).expect("nonzero pair members");
        // Inactive elements lie in the ideal too, so reducing by them is sound.
        let h = normal_form(ring, &s, &st.polys);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return vec![ring.one()];
        }
        st.polys.push(ring.monic(&h));
        st.update();
    }
    reduce_groebner_basis(ring, &st.active_polys())
}

/// Buchberger's algorithm with every pair processed and no pruning; only
/// used to validate the pruned version on small inputs.
pub fn buchberger_unpruned(ring: &Ring, generators: &[Polynomial]) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = generators.iter().filter(|f| !f.is_zero()).map(|f| ring.monic(f)).collect();
    let mut pairs: Vec<Pair> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push(Pair {
                lcm: basis[i].lm().unwrap().lcm(basis[j].lm().unwrap()),
                i,
                j,
            });
        }
    }
    while let Some(pair) = select_min(ring, &mut pairs) {
        let s = spoly(ring, &basis[pair.i], &basis[pair.j]).expect("nonzero pair members");
        let h = normal_form(ring, &s, &basis);
        if h.is_zero() {
            continue;
        }
        let h = ring.monic(&h);
        let j = basis.len();
        for i in 0..j {
            pairs.push(Pair {
                lcm: basis[i].lm().unwrap().lcm(h.lm().unwrap()),
                i,
                j,
            });
        }
        basis.push(h);
    }
    interreduce(ring, &basis)
}
