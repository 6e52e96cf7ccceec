use std::cmp::Ordering;

use super::{AlgebraError, Coeff, Monomial, MonomialOrder, PrimeField};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub coeff: Coeff,
    pub mono: Monomial,
}

/// A sparse polynomial: nonzero terms sorted strictly descending under the
/// ring's monomial order. The empty term list is the zero polynomial.
///
/// A `Polynomial` does not carry its ring; every operation that needs the
/// field or the order goes through [`Ring`].
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    /// Wraps terms that already satisfy the ordering invariant.
    pub(crate) fn from_sorted(terms: Vec<Term>) -> Self {
        Self { terms }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    /// Head term; errors on the zero polynomial.
    pub fn head(&self) -> Result<&Term, AlgebraError> {
        self.terms.first().ok_or(AlgebraError::ZeroPolynomial)
    }

    /// Head monomial `lt(p)`.
    #[inline]
    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    /// Head coefficient `lc(p)`.
    #[inline]
    pub fn lc(&self) -> Option<Coeff> {
        self.terms.first().map(|t| t.coeff)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.terms[0].coeff == 1
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == Some(1)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(h) => self.terms.iter().all(|t| t.mono.degree() == h.mono.degree()),
        }
    }

    /// Total degree of the head term (0 for the zero polynomial).
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }
}

/// The polynomial ring `GF(p)[x_1, ..., x_n]` with a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    pub field: PrimeField,
    pub order: MonomialOrder,
    nvars: usize,
}

impl Ring {
    pub fn new(field: PrimeField, order: MonomialOrder, nvars: usize) -> Self {
        Self { field, order, nvars }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: Coeff) -> Polynomial {
        self.term(c, Monomial::one(self.nvars))
    }

    pub fn term(&self, c: Coeff, mono: Monomial) -> Polynomial {
        let c = c % self.field.characteristic();
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial::from_sorted(vec![Term { coeff: c, mono }])
        }
    }

    pub fn variable(&self, var: usize) -> Polynomial {
        self.term(1, Monomial::variable(self.nvars, var))
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges equal
    /// monomials and drops zeros.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Coeff, Monomial)>) -> Result<Polynomial, AlgebraError> {
        let mut terms: Vec<Term> = terms
            .into_iter()
            .map(|(coeff, mono)| Term {
                coeff: coeff % self.field.characteristic(),
                mono,
            })
            .collect();
        if let Some(t) = terms.iter().find(|t| t.mono.arity() != self.nvars) {
            return Err(AlgebraError::ArityMismatch {
                left: self.nvars,
                right: t.mono.arity(),
            });
        }
        terms.sort_by(|a, b| self.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff = self.field.add(last.coeff, t.coeff),
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coeff != 0);
        Ok(Polynomial::from_sorted(out))
    }

    /// Checks the representation invariant: strictly descending, no zeros,
    /// coefficients reduced, correct arity.
    pub fn is_canonical(&self, p: &Polynomial) -> bool {
        let p_char = self.field.characteristic();
        p.terms.iter().all(|t| t.coeff != 0 && t.coeff < p_char && t.mono.arity() == self.nvars)
            && p.terms.windows(2).all(|w| self.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater)
    }

    pub fn neg(&self, p: &Polynomial) -> Polynomial {
        Polynomial::from_sorted(
            p.terms
                .iter()
                .map(|t| Term {
                    coeff: self.field.neg(t.coeff),
                    mono: t.mono.clone(),
                })
                .collect(),
        )
    }

    pub fn scale(&self, p: &Polynomial, c: Coeff) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial::from_sorted(
            p.terms
                .iter()
                .map(|t| Term {
                    coeff: self.field.mul(t.coeff, c),
                    mono: t.mono.clone(),
                })
                .collect(),
        )
    }

    pub fn scale_in_place(&self, p: &mut Polynomial, c: Coeff) {
        if c == 0 {
            p.terms.clear();
            return;
        }
        if c == 1 {
            return;
        }
        for t in &mut p.terms {
            t.coeff = self.field.mul(t.coeff, c);
        }
    }

    /// `c * u * p`
    pub fn mul_term(&self, p: &Polynomial, c: Coeff, u: &Monomial) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial::from_sorted(
            p.terms
                .iter()
                .map(|t| Term {
                    coeff: self.field.mul(t.coeff, c),
                    mono: t.mono.mul(u),
                })
                .collect(),
        )
    }

    /// `p * lc(p)^{-1}`; the zero polynomial is returned unchanged.
    pub fn monic(&self, p: &Polynomial) -> Polynomial {
        let mut q = p.clone();
        self.make_monic(&mut q);
        q
    }

    /// Scales in place so the head coefficient is 1 and returns the factor used.
    pub fn make_monic(&self, p: &mut Polynomial) -> Coeff {
        match p.lc() {
            None | Some(1) => 1,
            Some(c) => {
                let inv = self.field.inv(c).expect("head coefficient is nonzero");
                self.scale_in_place(p, inv);
                inv
            }
        }
    }

    pub fn add(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        Polynomial::from_sorted(self.combine(p.terms.clone(), 1, &Monomial::one(self.nvars), q))
    }

    pub fn sub(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        self.sub_mul(p, 1, &Monomial::one(self.nvars), q)
    }

    /// `p - c * u * q`
    pub fn sub_mul(&self, p: &Polynomial, c: Coeff, u: &Monomial, q: &Polynomial) -> Polynomial {
        Polynomial::from_sorted(self.combine(p.terms.clone(), self.field.neg(c), u, q))
    }

    /// Replaces the suffix `p[from..]` by `p[from..] - c * u * q`. Every term
    /// of `u * q` must be no larger than `p[from]`'s monomial (or smaller than
    /// all of `p[..from]` when `from == p.len()`), so the prefix is untouched.
    pub(crate) fn sub_mul_suffix(&self, p: &mut Polynomial, from: usize, c: Coeff, u: &Monomial, q: &Polynomial) {
        let left = p.terms.split_off(from);
        let merged = self.combine(left, self.field.neg(c), u, q);
        p.terms.extend(merged);
    }

    /// Merges `left + c * u * q`, consuming `left`.
    fn combine(&self, left: Vec<Term>, c: Coeff, u: &Monomial, q: &Polynomial) -> Vec<Term> {
        if c == 0 || q.terms.is_empty() {
            return left;
        }
        let f = &self.field;
        let mut out = Vec::with_capacity(left.len() + q.terms.len());
        let mut left = left.into_iter().peekable();
        for t in &q.terms {
            loop {
                let ord = match left.peek() {
                    Some(l) => self.order.cmp_product(&l.mono, u, &t.mono),
                    None => Ordering::Less,
                };
                match ord {
                    Ordering::Greater => out.push(left.next().unwrap()),
                    Ordering::Equal => {
                        let mut l = left.next().unwrap();
                        l.coeff = f.add(l.coeff, f.mul(t.coeff, c));
                        if l.coeff != 0 {
                            out.push(l);
                        }
                        break;
                    }
                    Ordering::Less => {
                        out.push(Term {
                            coeff: f.mul(t.coeff, c),
                            mono: t.mono.mul(u),
                        });
                        break;
                    }
                }
            }
        }
        out.extend(left);
        out
    }

    pub fn mul(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        let mut acc = Vec::new();
        for t in &q.terms {
            acc = self.combine(acc, t.coeff, &t.mono, p);
        }
        Polynomial::from_sorted(acc)
    }

    pub fn is_homogeneous(&self, p: &Polynomial) -> bool {
        p.is_homogeneous()
    }
}
