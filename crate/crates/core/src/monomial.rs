//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponents = SmallVec<[u32; 8]>;

/// A monomial `x^a`, stored as its exponent vector together with its total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: impl Into<Exponents>) -> Monomial {
        let exps = exps.into();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn var(nvars: usize, index: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Degree with respect to a weight vector.
    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.exps.iter().zip(weights).map(|(e, w)| e * w).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    /// Checked multiplication for untrusted exponents.
    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Exponents::with_capacity(self.nvars());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b)?);
        }
        let degree = self.degree.checked_add(other.degree)?;
        Some(Monomial { exps, degree })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect::<Exponents>(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect::<Exponents>(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of the variables occurring in the monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }

    /// Inserts a new variable with exponent `e` at position `at`.
    pub(crate) fn insert_var(&self, at: usize, e: u32) -> Monomial {
        let mut exps = self.exps.clone();
        exps.insert(at, e);
        Monomial {
            exps,
            degree: self.degree + e,
        }
    }

    /// Removes the variable at position `at`, which must have exponent zero
    /// for the result to be the same monomial in fewer variables.
    pub(crate) fn remove_var(&self, at: usize) -> Monomial {
        let mut exps = self.exps.clone();
        let e = exps.remove(at);
        Monomial {
            exps,
            degree: self.degree - e,
        }
    }
}

/// Order used inside a block (or for the whole ring).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseOrder {
    Grevlex,
    Lex,
}

impl BaseOrder {
    fn cmp(self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            BaseOrder::Lex => {
                for (x, y) in a.iter().zip(b) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            BaseOrder::Grevlex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                grevlex_tail(da, db, a, b)
            }
        }
    }
}

#[inline]
fn grevlex_tail(da: u32, db: u32, a: &[u32], b: &[u32]) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    // the last nonzero entry of a - b is negative for the greater monomial
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// A monomial order on exponent vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Elimination order for the first `eliminate` variables: the eliminated
    /// block is compared first, the remaining block breaks ties, both with `inner`.
    Block { eliminate: usize, inner: BaseOrder },
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::Grevlex
    }
}

impl MonomialOrder {
    /// Compares two monomials of the same length.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex_tail(a.degree, b.degree, &a.exps, &b.exps),
            MonomialOrder::Lex => BaseOrder::Lex.cmp(&a.exps, &b.exps),
            MonomialOrder::Block { eliminate, inner } => {
                let k = (*eliminate).min(a.exps.len());
                inner
                    .cmp(&a.exps[..k], &b.exps[..k])
                    .then_with(|| inner.cmp(&a.exps[k..], &b.exps[k..]))
            }
        }
    }

    /// True for orders where the first `count` variables can be eliminated.
    pub fn eliminates(&self, count: usize) -> bool {
        match self {
            MonomialOrder::Lex => true,
            MonomialOrder::Block { eliminate, .. } => *eliminate >= count,
            MonomialOrder::Grevlex => count == 0,
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Block { eliminate, inner } => {
                let inner = match inner {
                    BaseOrder::Grevlex => "grevlex",
                    BaseOrder::Lex => "lex",
                };
                write!(f, "block({eliminate},{inner})")
            }
        }
    }
}

/// Compares two raw exponent vectors; fails on a length mismatch.
pub fn monomial_compare(a: &[u32], b: &[u32], order: MonomialOrder) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::Structural(format!(
            "exponent vectors of lengths {} and {} cannot be compared",
            a.len(),
            b.len()
        )));
    }
    Ok(order.cmp(&Monomial::new(a.to_vec()), &Monomial::new(b.to_vec())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn grevlex_degree_tie() {
        // x^2 y vs x y^2 with x > y
        assert_eq!(
            monomial_compare(&[2, 1], &[1, 2], MonomialOrder::Grevlex).unwrap(),
            Ordering::Greater
        );
        // grevlex and lex differ on x z^2... vs y^3 style ties
        assert_eq!(
            monomial_compare(&[1, 0, 2], &[0, 3, 0], MonomialOrder::Grevlex).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            monomial_compare(&[1, 0, 2], &[0, 3, 0], MonomialOrder::Lex).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn reflexive_and_lex() {
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            assert_eq!(monomial_compare(&[3, 1, 4], &[3, 1, 4], order).unwrap(), Ordering::Equal);
        }
        assert_eq!(
            monomial_compare(&[1, 0], &[0, 3], MonomialOrder::Lex).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn length_mismatch_is_structural() {
        assert!(matches!(
            monomial_compare(&[1], &[1, 0], MonomialOrder::Grevlex),
            Err(Error::Structural(_))
        ));
    }

    #[test]
    fn block_order_eliminates() {
        let order = MonomialOrder::Block {
            eliminate: 1,
            inner: BaseOrder::Grevlex,
        };
        // u * 1 beats any pure monomial in the remaining variables
        let u = Monomial::new(vec![1, 0, 0]);
        let big = Monomial::new(vec![0, 9, 9]);
        assert_eq!(order.cmp(&u, &big), Ordering::Greater);
    }

    fn orders() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Grevlex),
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::Block { eliminate: 1, inner: BaseOrder::Grevlex }),
            Just(MonomialOrder::Block { eliminate: 2, inner: BaseOrder::Lex }),
        ]
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..5, 4).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn order_axioms(order in orders(), a in mono(), b in mono(), c in mono()) {
            // antisymmetry / totality
            prop_assert_eq!(order.cmp(&a, &b), order.cmp(&b, &a).reverse());
            prop_assert_eq!(order.cmp(&a, &b) == Ordering::Equal, a == b);
            // multiplicativity
            prop_assert_eq!(order.cmp(&a, &b), order.cmp(&a.mul(&c), &b.mul(&c)));
            // 1 is minimal
            prop_assert!(order.cmp(&Monomial::one(4), &a) != Ordering::Greater);
            // transitivity
            if order.cmp(&a, &b) == Ordering::Less && order.cmp(&b, &c) == Ordering::Less {
                prop_assert_eq!(order.cmp(&a, &c), Ordering::Less);
            }
        }
    }
}
