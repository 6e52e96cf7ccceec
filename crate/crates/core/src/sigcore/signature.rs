use std::cmp::Ordering;
use std::fmt;

use crate::algebra::{Monomial, MonomialOrder};

use super::SigError;

/// A module signature `mu * e_index`, or the zero signature.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Signature {
    /// Signature of the trivial representation of 0; below every other signature.
    Zero,
    Term { mono: Monomial, index: usize },
}

impl Signature {
    pub fn new(mono: Monomial, index: usize) -> Self {
        debug_assert!(index >= 1);
        Signature::Term { mono, index }
    }

    /// `1 * e_index`
    pub fn unit(arity: usize, index: usize) -> Self {
        Self::new(Monomial::one(arity), index)
    }

    pub fn mono(&self) -> Option<&Monomial> {
        match self {
            Signature::Zero => None,
            Signature::Term { mono, .. } => Some(mono),
        }
    }

    pub fn index(&self) -> Option<usize> {
        match self {
            Signature::Zero => None,
            Signature::Term { index, .. } => Some(*index),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Signature::Zero)
    }

    /// `u * self`; the zero signature has no natural product.
    pub fn mul(&self, u: &Monomial) -> Result<Signature, SigError> {
        match self {
            Signature::Zero => Err(SigError::ZeroSignature),
            Signature::Term { mono, index } => Ok(Signature::Term {
                mono: mono.mul(u),
                index: *index,
            }),
        }
    }

    pub fn cmp_with(&self, other: &Signature, order: MonomialOrder) -> Ordering {
        match (self, other) {
            (Signature::Zero, Signature::Zero) => Ordering::Equal,
            (Signature::Zero, _) => Ordering::Less,
            (_, Signature::Zero) => Ordering::Greater,
            (Signature::Term { mono: a, index: i }, Signature::Term { mono: b, index: j }) => {
                i.cmp(j).then_with(|| order.cmp(a, b))
            }
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Signature::Zero => f.write_str("0"),
            Signature::Term { mono, index } => write!(f, "{:?}*e{}", mono.exponents(), index),
        }
    }
}

/// Signature order: index first, then the monomial under `order`.
pub fn sig_cmp(order: MonomialOrder, a: &Signature, b: &Signature) -> Ordering {
    a.cmp_with(b, order)
}

pub fn sig_mul(u: &Monomial, s: &Signature) -> Result<Signature, SigError> {
    s.mul(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn comparison_examples() {
        let o = MonomialOrder::Grevlex;
        let y_e1 = Signature::new(m(&[0, 1, 0, 0]), 1);
        let e2 = Signature::unit(4, 2);
        assert_eq!(sig_cmp(o, &Signature::Zero, &y_e1), Ordering::Less);
        assert_eq!(sig_cmp(o, &e2, &Signature::Zero), Ordering::Greater);
        assert_eq!(sig_cmp(o, &Signature::Zero, &Signature::Zero), Ordering::Equal);
        assert_eq!(sig_cmp(o, &y_e1, &e2), Ordering::Less);
        let x_e2 = Signature::new(m(&[1, 0, 0, 0]), 2);
        let y_e2 = Signature::new(m(&[0, 1, 0, 0]), 2);
        assert_eq!(sig_cmp(o, &x_e2, &y_e2), Ordering::Greater);
    }

    #[test]
    fn multiplication_examples() {
        let x = m(&[1, 0, 0, 0]);
        let y_e2 = Signature::new(m(&[0, 1, 0, 0]), 2);
        assert_eq!(sig_mul(&x, &y_e2).unwrap(), Signature::new(m(&[1, 1, 0, 0]), 2));
        assert_eq!(sig_mul(&Monomial::one(4), &y_e2).unwrap(), y_e2);
        let z2_e2 = Signature::new(m(&[0, 0, 2, 0]), 2);
        assert_eq!(sig_mul(&m(&[0, 0, 2, 0]), &z2_e2).unwrap(), Signature::new(m(&[0, 0, 4, 0]), 2));
        assert_eq!(sig_mul(&x, &Signature::Zero), Err(SigError::ZeroSignature));
    }

    /// Exhaustive order-axiom check over every signature with index <= 3 and
    /// monomial degree <= 2 in three variables.
    #[test]
    fn signature_order_is_total() {
        let mut sigs = vec![Signature::Zero];
        for idx in 1..=3 {
            for a in 0..3u16 {
                for b in 0..3u16 {
                    for c in 0..3u16 {
                        if a + b + c <= 2 {
                            sigs.push(Signature::new(m(&[a, b, c]), idx));
                        }
                    }
                }
            }
        }
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::Deglex] {
            for a in &sigs {
                for b in &sigs {
                    let ab = sig_cmp(order, a, b);
                    assert_eq!(ab, sig_cmp(order, b, a).reverse());
                    assert_eq!(ab == Ordering::Equal, a == b);
                    for c in &sigs {
                        if ab != Ordering::Greater && sig_cmp(order, b, c) != Ordering::Greater {
                            assert_ne!(sig_cmp(order, a, c), Ordering::Greater);
                        }
                    }
                }
            }
        }
    }
}
