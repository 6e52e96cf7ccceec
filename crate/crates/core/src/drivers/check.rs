pub use crate::algebra::top_reduces_to_zero;
use crate::algebra::{spoly, Polynomial, Ring};

/// Gröbner basis test: every S-polynomial of `basis` top-reduces to zero
/// with respect to `basis`. Pairs with coprime head monomials are skipped;
/// their S-polynomials always have a standard representation.
pub fn groebner_check(ring: &Ring, basis: &[Polynomial]) -> bool {
    let g: Vec<Polynomial> = basis.iter().filter(|p| !p.is_zero()).cloned().collect();
    for j in 0..g.len() {
        for i in 0..j {
            let (a, b) = (g[i].lm().unwrap(), g[j].lm().unwrap());
            if a.is_coprime(b) {
                continue;
            }
            let s = spoly(ring, &g[i], &g[j]).expect("nonzero");
            if !top_reduces_to_zero(ring, &s, &g) {
                return false;
            }
        }
    }
    true
}
