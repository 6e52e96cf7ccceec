use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use super::AlgebraError;

pub type Exponent = u16;

type Exps = SmallVec<[Exponent; 14]>;

/// A power product `x_1^{a_1} ... x_n^{a_n}` over a fixed number of variables.
///
/// Besides the exponents it caches the total degree and a hash that is
/// additive under multiplication.
#[derive(Debug)]
pub struct Monomial {
    exps: Exps,
    degree: u32,
    hash: u64,
}

/// Per-variable hash weight (splitmix64 of the index).
#[inline]
fn weight(v: usize) -> u64 {
    let mut z = (v as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    (z ^ (z >> 31)) | 1
}

/// Bit `v * b + k` is set when `exps[v] > k`, with `b = 64 / arity` bits
/// per variable (variables beyond 64 share bit `v % 64` for `e > 0`).
/// `a | b` implies `divmask(a) & !divmask(b) == 0`.
fn divmask(exps: &[Exponent]) -> u64 {
    let n = exps.len();
    if n == 0 {
        return 0;
    }
    if n > 64 {
        return exps.iter().enumerate().filter(|(_, &e)| e != 0).fold(0, |m, (v, _)| m | 1 << (v % 64));
    }
    let b = 64 / n;
    let mut mask = 0u64;
    for (v, &e) in exps.iter().enumerate() {
        let k = (e as usize).min(b);
        if k > 0 {
            mask |= ((1u64 << k) - 1) << (v * b);
        }
    }
    mask
}

impl PartialEq for Monomial {
    #[inline]
    fn eq(&self, other: &Self) -> bool {
        self.hash == other.hash && self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl std::hash::Hash for Monomial {
    #[inline]
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        state.write_u64(self.hash);
    }
}

impl Clone for Monomial {
    #[inline]
    fn clone(&self) -> Self {
        Self {
            exps: Exps::from_slice(&self.exps),
            degree: self.degree,
            hash: self.hash,
        }
    }
}

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Self {
            exps: smallvec::smallvec![0; arity],
            degree: 0,
            hash: 0,
        }
    }

    pub fn new(exps: impl Into<Vec<Exponent>>) -> Self {
        Self::from_exps(Exps::from_vec(exps.into()))
    }

    fn from_exps(exps: Exps) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        let hash = exps
            .iter()
            .enumerate()
            .fold(0u64, |h, (v, &e)| h.wrapping_add(weight(v).wrapping_mul(e as u64)));
        Self { exps, degree, hash }
    }

    /// The monomial `x_var`.
    pub fn variable(arity: usize, var: usize) -> Self {
        let mut exps = vec![0; arity];
        exps[var] = 1;
        Self::new(exps)
    }

    #[inline]
    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Necessary condition for divisibility: `a | b` implies
    /// `a.divmask() & !b.divmask() == 0`.
    #[inline]
    pub fn divmask(&self) -> u64 {
        divmask(&self.exps)
    }

    /// `self | other`
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.degree <= other.degree
            && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        let mut exps = Exps::from_slice(&self.exps);
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a += b;
        }
        Monomial {
            exps,
            degree: self.degree + other.degree,
            hash: self.hash.wrapping_add(other.hash),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial::from_exps(self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut exps = Exps::from_slice(&self.exps);
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a -= b;
        }
        Some(Monomial {
            exps,
            degree: self.degree - other.degree,
            hash: self.hash.wrapping_sub(other.hash),
        })
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }
}

fn check_arity(a: &Monomial, b: &Monomial) -> Result<(), AlgebraError> {
    if a.arity() != b.arity() {
        return Err(AlgebraError::ArityMismatch {
            left: a.arity(),
            right: b.arity(),
        });
    }
    Ok(())
}

/// Componentwise maximum of two monomials.
pub fn mono_lcm(a: &Monomial, b: &Monomial) -> Result<Monomial, AlgebraError> {
    check_arity(a, b)?;
    Ok(a.lcm(b))
}

/// Exact quotient `a / b`.
pub fn mono_div(a: &Monomial, b: &Monomial) -> Result<Monomial, AlgebraError> {
    check_arity(a, b)?;
    a.div(b).ok_or(AlgebraError::NotDivisible)
}

/// An admissible monomial order. Variable precedence follows declaration
/// order: variable 0 is the largest.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    Deglex,
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), b.arity());
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Deglex => a.degree.cmp(&b.degree).then_with(|| a.exps.cmp(&b.exps)),
            MonomialOrder::Grevlex => a.degree.cmp(&b.degree).then_with(|| {
                for (x, y) in a.exps.iter().rev().zip(b.exps.iter().rev()) {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    /// Compares `a` with `u * b` without forming the product.
    #[inline]
    pub fn cmp_product(&self, a: &Monomial, u: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), b.arity());
        let lex = || {
            for ((x, y), z) in a.exps.iter().zip(u.exps.iter()).zip(b.exps.iter()) {
                let yz = y + z;
                if *x != yz {
                    return x.cmp(&yz);
                }
            }
            Ordering::Equal
        };
        match self {
            MonomialOrder::Lex => lex(),
            MonomialOrder::Deglex => a.degree.cmp(&(u.degree + b.degree)).then_with(lex),
            MonomialOrder::Grevlex => a.degree.cmp(&(u.degree + b.degree)).then_with(|| {
                for ((x, y), z) in a.exps.iter().rev().zip(u.exps.iter().rev()).zip(b.exps.iter().rev()) {
                    let yz = y + z;
                    if *x != yz {
                        return yz.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Lex => "lex",
            MonomialOrder::Deglex => "deglex",
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "grevlex" | "dp" => Ok(MonomialOrder::Grevlex),
            "lex" | "lp" => Ok(MonomialOrder::Lex),
            "deglex" | "Dp" => Ok(MonomialOrder::Deglex),
            other => Err(AlgebraError::UnknownOrder(other.to_string())),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Checked comparison of two monomials under `order`.
pub fn order_cmp(order: MonomialOrder, a: &Monomial, b: &Monomial) -> Result<Ordering, AlgebraError> {
    check_arity(a, b)?;
    Ok(order.cmp(a, b))
}
