//! Dense exact linear algebra over the coefficient field, used for
//! degreewise computations in graded pieces of the polynomial ring.

use std::collections::HashMap;
use std::sync::Arc;

use crate::field::{Field, Scalar};
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Term};
use crate::ring::PolyRing;

/// A subspace kept in reduced row echelon form.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    field: Field,
    ncols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: Field, ncols: usize) -> Echelon {
        Echelon {
            field,
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    #[cfg(test)]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    #[cfg(test)]
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Clears all pivot columns of `v` using the stored rows.
    pub fn reduce(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (j, r) in row.iter().enumerate().skip(p) {
                if !r.is_zero() {
                    v[j] = self.field.sub(&v[j], &self.field.mul(&c, r));
                }
            }
        }
    }

    /// Adds `v` to the subspace; returns false when it was already contained.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        if self.is_full() {
            return false;
        }
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = self.field.inv(&v[p]);
        for c in v.iter_mut().skip(p) {
            if !c.is_zero() {
                *c = self.field.mul(c, &inv);
            }
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for j in p..self.ncols {
                if !v[j].is_zero() {
                    row[j] = self.field.sub(&row[j], &self.field.mul(&c, &v[j]));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }
}

/// Coordinates on the monomials of a fixed degree, ordered descending in the
/// ring's monomial order.
#[derive(Debug, Clone)]
pub(crate) struct DegreeBasis {
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl DegreeBasis {
    pub fn new(ring: &PolyRing, degree: u32) -> DegreeBasis {
        let mut monomials = monomials_of_degree(ring.nvars(), degree);
        let order = ring.order();
        monomials.sort_by(|a, b| order.cmp(b, a));
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        DegreeBasis { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn index(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinate vector of a homogeneous polynomial of this degree.
    pub fn row(&self, f: &Polynomial) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.len()];
        for t in f.terms() {
            let i = self.index(&t.mono).expect("homogeneous of the basis degree");
            v[i] = t.coeff.clone();
        }
        v
    }

    pub fn poly(&self, ring: &Arc<PolyRing>, v: &[Scalar]) -> Polynomial {
        let terms = v
            .iter()
            .zip(&self.monomials)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, m)| Term {
                coeff: c.clone(),
                mono: m.clone(),
            })
            .collect();
        Polynomial::from_sorted(ring, terms)
    }
}

/// All monomials of total degree `d` in `n` variables.
pub(crate) fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial::new(cur.clone()));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, d, &mut vec![0; n], &mut out);
    out
}
