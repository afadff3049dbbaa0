//! Sparse multivariate polynomials in canonical form.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::monomial::{Monomial, MonomialOrder};
use crate::ring::{check_same, PolyRing};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Scalar,
    pub mono: Monomial,
}

/// A polynomial whose terms are strictly descending in the ring's order, with
/// no zero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_space(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::render_poly(self))
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial::constant(ring, Scalar::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Scalar) -> Polynomial {
        Polynomial::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn monomial(ring: &Arc<PolyRing>, c: Scalar, mono: Monomial) -> Polynomial {
        let c = ring.field().normalize(c);
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term { coeff: c, mono }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Polynomial {
        Polynomial::monomial(ring, Scalar::one(), Monomial::var(ring.nvars(), index))
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges equal monomials
    /// and drops zeros.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: impl IntoIterator<Item = Term>) -> Polynomial {
        let field = ring.field();
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for t in terms {
            debug_assert_eq!(t.mono.nvars(), ring.nvars());
            let c = field.normalize(t.coeff);
            match acc.get_mut(&t.mono) {
                Some(e) => *e = field.add(e, &c),
                None => {
                    acc.insert(t.mono, c);
                }
            }
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term { coeff, mono })
            .collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Trusted constructor: terms already canonical for `ring`.
    pub(crate) fn from_sorted(ring: &Arc<PolyRing>, terms: Vec<Term>) -> Polynomial {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].mono.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn lead_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn lead_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.mono.degree();
                self.terms.iter().all(|s| s.mono.degree() == d)
            }
        }
    }

    pub fn is_monic(&self) -> bool {
        self.lead_coeff().is_none_or(|c| c.is_one())
    }

    /// Rewrites the same polynomial under another order on the same variables.
    pub fn to_ring(&self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        if !self.ring.same_space(ring) {
            return Err(Error::RingMismatch);
        }
        let mut terms = self.terms.clone();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Ok(Polynomial {
            ring: ring.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.neg(&t.coeff),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.mul(&t.coeff, c),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// Product with the term `c * m`.
    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.mul(&t.coeff, c),
                    mono: t.mono.mul(m),
                })
                .collect(),
        }
    }

    pub fn make_monic(&self) -> Polynomial {
        match self.lead_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&self.ring.field().inv(c)),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: merge_add(
                &self.terms,
                &other.terms,
                self.ring.field(),
                self.ring.order(),
            ),
        })
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let t = &small.terms[0];
            return Ok(large.mul_term(&t.coeff, &t.mono));
        }
        let field = self.ring.field();
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(self.len() * other.len());
        for a in &self.terms {
            for b in &other.terms {
                let m = a.mono.mul(&b.mono);
                let c = field.mul(&a.coeff, &b.coeff);
                match acc.get_mut(&m) {
                    Some(e) => *e = field.add(e, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let order = self.ring.order();
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term { coeff, mono })
            .collect();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        result
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn partial_derivative(&self, var: usize) -> Result<Polynomial> {
        let field = self.ring.field();
        if field != Field::Rationals {
            return Err(Error::UnsupportedCharacteristic(field.to_string()));
        }
        if var >= self.ring.nvars() {
            return Err(Error::Structural(format!("no variable with index {var}")));
        }
        let n = self.ring.nvars();
        let terms = self
            .terms
            .iter()
            .filter(|t| t.mono.exps()[var] > 0)
            .map(|t| {
                let e = t.mono.exps()[var];
                Term {
                    coeff: field.mul(&t.coeff, &field.from_int(e)),
                    mono: t.mono.div(&Monomial::var(n, var)).expect("exponent positive"),
                }
            })
            .collect::<Vec<_>>();
        // lowering one exponent can reorder terms under grevlex/lex ties, so re-sort
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    /// Exact quotient `self / g`, or `None` when `g` does not divide `self`.
    pub fn exact_div(&self, g: &Polynomial) -> Result<Option<Polynomial>> {
        check_same(&self.ring, &g.ring)?;
        let Some(lg) = g.lead_term().cloned() else {
            return Err(Error::Structural("division by the zero polynomial".into()));
        };
        let field = self.ring.field();
        let order = self.ring.order();
        let inv = field.inv(&lg.coeff);
        let mut quotient = Vec::new();
        let mut rest = self.terms.clone();
        while let Some(lt) = rest.first() {
            let Some(m) = lt.mono.div(&lg.mono) else {
                return Ok(None);
            };
            let c = field.mul(&lt.coeff, &inv);
            rest = sub_scaled(&rest, &c, &m, &g.terms, field, order);
            quotient.push(Term { coeff: c, mono: m });
        }
        Ok(Some(Polynomial::from_sorted(&self.ring, quotient)))
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|t| t.mono.degree() == d).cloned().collect(),
        }
    }

    /// Embeds into the elimination ring built by `PolyRing::with_elimination_var`,
    /// multiplying by `u^e`.
    pub(crate) fn lift_with_var(&self, ring: &Arc<PolyRing>, e: u32) -> Polynomial {
        Polynomial::from_terms(
            ring,
            self.terms.iter().map(|t| Term {
                coeff: t.coeff.clone(),
                mono: t.mono.insert_var(0, e),
            }),
        )
    }

    /// Inverse of `lift_with_var` for polynomials free of the eliminated variable.
    pub(crate) fn drop_var(&self, ring: &Arc<PolyRing>) -> Option<Polynomial> {
        if self.terms.iter().any(|t| t.mono.exps()[0] != 0) {
            return None;
        }
        Some(Polynomial::from_terms(
            ring,
            self.terms.iter().map(|t| Term {
                coeff: t.coeff.clone(),
                mono: t.mono.remove_var(0),
            }),
        ))
    }
}

/// `a + b` for sorted term lists.
pub(crate) fn merge_add(a: &[Term], b: &[Term], field: Field, order: MonomialOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].mono, &b[j].mono) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let c = field.add(&a[i].coeff, &b[j].coeff);
                if !c.is_zero() {
                    out.push(Term {
                        coeff: c,
                        mono: a[i].mono.clone(),
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// `a - c * m * b` for sorted term lists.
pub(crate) fn sub_scaled(
    a: &[Term],
    c: &Scalar,
    m: &Monomial,
    b: &[Term],
    field: Field,
    order: MonomialOrder,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(|t| (t.mono.mul(m), &t.coeff)).peekable();
    while let Some((bm, bc)) = bi.peek() {
        if i < a.len() {
            match order.cmp(&a[i].mono, bm) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                    continue;
                }
                Ordering::Equal => {
                    let v = field.sub(&a[i].coeff, &field.mul(c, bc));
                    if !v.is_zero() {
                        out.push(Term {
                            coeff: v,
                            mono: a[i].mono.clone(),
                        });
                    }
                    i += 1;
                    bi.next();
                    continue;
                }
                Ordering::Less => {}
            }
        }
        let (bm, bc) = bi.next().expect("peeked");
        out.push(Term {
            coeff: field.neg(&field.mul(c, bc)),
            mono: bm,
        });
    }
    out.extend_from_slice(&a[i..]);
    out
}
