//! Ideals of a polynomial ring and the usual ideal arithmetic.
//!
//! Colon ideals by monomials are computed without elimination: for a
//! homogeneous ideal and a grevlex basis in which `x` is the smallest
//! variable, dividing every basis element by the largest admissible power of
//! `x` gives a generating set of `I : x` (or of `I : x^∞`). Everything else
//! goes through one auxiliary variable and an eliminating block order.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::cancel;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::groebner::{buchberger, buchberger_truncated, extend_basis, normal_form, ReducedGB};
use crate::linalg::Echelon;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Term};
use crate::ring::PolyRing;

/// An ideal given by generators, with its reduced Gröbner basis computed on
/// first use.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    gb: OnceLock<ReducedGB>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal")
            .field("ring", &self.ring.to_string())
            .field("gens", &self.gens)
            .finish()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl Ideal {
    /// Ideal generated by `gens`. Zero and repeated generators are dropped;
    /// generators from a ring with a different order are converted.
    pub fn new(ring: &Arc<PolyRing>, gens: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for g in gens {
            if !g.ring().same_space(ring) {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                continue;
            }
            let g = if g.ring().order() == ring.order() {
                g
            } else {
                g.to_ring(ring)?
            };
            let key = crate::parse::render_poly(&g);
            if seen.insert(key) {
                out.push(g);
            }
        }
        Ok(Ideal::from_parts(ring, out))
    }

    fn from_parts(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens,
            gb: OnceLock::new(),
        }
    }

    /// The ideal whose reduced basis is `gb`.
    pub fn from_gb(gb: ReducedGB) -> Ideal {
        let ideal = Ideal::from_parts(gb.ring(), gb.elements().to_vec());
        let _ = ideal.gb.set(gb);
        ideal
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::from_parts(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::from_parts(ring, vec![Polynomial::one(ring)])
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &Arc<PolyRing>) -> Ideal {
        let mut gens: Vec<Polynomial> = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        gens.reverse();
        Ideal::from_parts(ring, gens)
    }

    /// `(x_1, ..., x_n)^k`.
    pub fn maximal_power(ring: &Arc<PolyRing>, k: u32) -> Ideal {
        let mut monos = crate::linalg::monomials_of_degree(ring.nvars(), k);
        let order = ring.order();
        monos.sort_by(|a, b| order.cmp(b, a));
        let gens = monos
            .into_iter()
            .map(|m| Polynomial::monomial(ring, Scalar::one(), m))
            .collect();
        Ideal::from_parts(ring, gens)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    /// True when every generator is a monomial (up to a scalar).
    pub fn has_monomial_gens(&self) -> bool {
        self.gens.iter().all(Polynomial::is_monomial)
    }

    /// Reduced Gröbner basis in the ring's order; computed once.
    pub fn gb(&self) -> Result<&ReducedGB> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = buchberger(&self.ring, &self.gens)?;
        Ok(self.gb.get_or_init(|| gb))
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.gens.iter().any(Polynomial::is_constant) {
            return Ok(true);
        }
        Ok(self.gb()?.is_unit())
    }

    /// The same ideal in the same variables under another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ideal> {
        if order == self.ring.order() {
            return Ok(self.clone());
        }
        let ring = self.ring.with_order(order);
        let gens = self.gens.iter().map(|g| g.to_ring(&ring)).collect::<Result<_>>()?;
        Ok(Ideal::from_parts(&ring, gens))
    }

    fn convert(&self, f: &Polynomial) -> Result<Polynomial> {
        if !f.ring().same_space(&self.ring) {
            return Err(Error::RingMismatch);
        }
        if f.ring().order() == self.ring.order() {
            Ok(f.clone())
        } else {
            f.to_ring(&self.ring)
        }
    }

    fn convert_ideal(&self, other: &Ideal) -> Result<Ideal> {
        if !other.ring.same_space(&self.ring) {
            return Err(Error::RingMismatch);
        }
        other.with_order(self.ring.order())
    }

    /// Ideal membership by reduction modulo the reduced basis.
    pub fn contains_poly(&self, f: &Polynomial) -> Result<bool> {
        let f = self.convert(f)?;
        if f.is_zero() {
            return Ok(true);
        }
        if self.is_zero() {
            return Ok(false);
        }
        self.gb()?.contains(&f)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        for g in &other.gens {
            if !self.contains_poly(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals: identical reduced bases in this ring's order.
    pub fn equal(&self, other: &Ideal) -> Result<bool> {
        let other = self.convert_ideal(other)?;
        Ok(self.gb()?.elements() == other.gb()?.elements())
    }

    /// Sum of ideals.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let other = self.convert_ideal(other)?;
        Ideal::new(&self.ring, self.gens.iter().chain(&other.gens).cloned())
    }

    /// Product of ideals, generated by pairwise products.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        let other = self.convert_ideal(other)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                prods.push(a.mul(b)?);
            }
        }
        Ok(Ideal::from_parts(&self.ring, interreduce(&self.ring, prods)?))
    }

    /// `I^m`, generated by the m-fold products of the generators. `I^0` is the unit ideal.
    pub fn power(&self, m: u32) -> Result<Ideal> {
        match m {
            0 => return Ok(Ideal::unit(&self.ring)),
            1 => return Ok(self.clone()),
            _ => {}
        }
        // multisets of generator indices, built with nondecreasing last index
        let mut layer: Vec<(Polynomial, usize)> = self.gens.iter().cloned().zip(0..).collect();
        for _ in 1..m {
            cancel::checkpoint()?;
            let mut next = Vec::new();
            for (p, last) in &layer {
                for (j, g) in self.gens.iter().enumerate().skip(*last) {
                    next.push((p.mul(g)?, j));
                }
            }
            layer = next;
        }
        let prods = layer.into_iter().map(|(p, _)| p).collect();
        Ok(Ideal::from_parts(&self.ring, interreduce(&self.ring, prods)?))
    }

    /// `I ∩ J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        let other = self.convert_ideal(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        if self.is_unit()? {
            return Ok(other);
        }
        if other.is_unit()? {
            return Ok(self.clone());
        }
        if self.has_monomial_gens() && other.has_monomial_gens() {
            let mut lcms = Vec::new();
            for a in &self.gens {
                for b in &other.gens {
                    let m = a.lead_monomial().expect("nonzero").lcm(b.lead_monomial().expect("nonzero"));
                    lcms.push(m);
                }
            }
            return Ok(monomial_ideal_from(&self.ring, lcms));
        }
        let er = self.ring.with_elimination_var();
        let known: Vec<Polynomial> = self.gb()?.elements().iter().map(|g| g.lift_with_var(&er, 1)).collect();
        let gens: Vec<Polynomial> = other
            .gens
            .iter()
            .map(|g| g.lift_with_var(&er, 0).sub(&g.lift_with_var(&er, 1)))
            .collect::<Result<_>>()?;
        let weights = (self.is_homogeneous() && other.is_homogeneous()).then(|| elimination_weights(&er));
        let gb = extend_basis(&er, &known, &gens, weights)?;
        self.eliminated(gb)
    }

    /// Keeps the basis elements free of the auxiliary variable.
    fn eliminated(&self, gb: ReducedGB) -> Result<Ideal> {
        let kept: Vec<Polynomial> = gb.elements().iter().filter_map(|g| g.drop_var(&self.ring)).collect();
        match self.ring.order() {
            MonomialOrder::Grevlex | MonomialOrder::Lex => {
                // the u-free part of a reduced basis is the reduced basis of the elimination ideal
                Ok(Ideal::from_gb(ReducedGB::from_elements(&self.ring, kept)))
            }
            MonomialOrder::Block { .. } => Ideal::new(&self.ring, kept),
        }
    }

    /// `I : (g)`.
    pub fn colon_poly(&self, g: &Polynomial) -> Result<Ideal> {
        let g = self.convert(g)?;
        if g.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if g.is_constant() || self.is_zero() {
            return Ok(self.clone());
        }
        if self.is_unit()? {
            return Ok(self.clone());
        }
        if g.is_monomial() && self.is_homogeneous() {
            let mono = g.lead_monomial().expect("nonzero").clone();
            let mut cur = self.clone();
            for (v, &e) in mono.exps().iter().enumerate() {
                for _ in 0..e {
                    cur = cur.colon_var(v, false)?;
                }
            }
            return Ok(cur);
        }
        let both = self.intersect(&Ideal::new(&self.ring, [g.clone()])?)?;
        let mut quotients = Vec::with_capacity(both.gens.len());
        for h in both.gens() {
            let q = h
                .exact_div(&g)?
                .ok_or_else(|| Error::Invariant("intersection element not divisible by the divisor".into()))?;
            quotients.push(q);
        }
        Ideal::new(&self.ring, quotients)
    }

    /// `I : x_v` (or `I : x_v^∞` when `saturate`) for homogeneous `I`, read off
    /// a grevlex basis in which `x_v` is the smallest variable.
    fn colon_var(&self, v: usize, saturate: bool) -> Result<Ideal> {
        debug_assert!(self.is_homogeneous());
        let n = self.ring.nvars();
        let mut perm: Vec<usize> = (0..n).filter(|&i| i != v).collect();
        perm.push(v);
        let names: Vec<String> = perm.iter().map(|&i| self.ring.vars()[i].clone()).collect();
        let pr = PolyRing::new(self.ring.field(), names, MonomialOrder::Grevlex)?;
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| permute(g, &pr, &perm)).collect();
        let gb = buchberger(&pr, &gens)?;
        let mut inverse = vec![0; n];
        for (k, &i) in perm.iter().enumerate() {
            inverse[i] = k;
        }
        let last = n - 1;
        let out: Vec<Polynomial> = gb
            .elements()
            .iter()
            .map(|g| {
                let k = g.terms().iter().map(|t| t.mono.exps()[last]).min().unwrap_or(0);
                let k = if saturate { k } else { k.min(1) };
                let divided = if k == 0 {
                    g.clone()
                } else {
                    let mut e = vec![0u32; n];
                    e[last] = k;
                    let xk = Monomial::new(e);
                    Polynomial::from_sorted(
                        &pr,
                        g.terms()
                            .iter()
                            .map(|t| Term {
                                coeff: t.coeff.clone(),
                                mono: t.mono.div(&xk).expect("divisible"),
                            })
                            .collect(),
                    )
                };
                permute(&divided, &self.ring, &inverse)
            })
            .collect();
        Ideal::new(&self.ring, out)
    }

    /// `I : J`, the intersection of `I : g` over the generators `g` of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        let other = self.convert_ideal(other)?;
        if other.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_zero() || other.is_unit()? {
            return Ok(self.clone());
        }
        if self.is_homogeneous() {
            if let Some(k) = other.maximal_power_exponent()? {
                let mut cur = self.clone();
                for _ in 0..k {
                    cur = cur.colon_maximal()?;
                }
                return Ok(cur);
            }
        }
        let gens = other.minimal_generators()?;
        let mut acc: Option<Ideal> = None;
        for g in gens.gens() {
            cancel::checkpoint()?;
            let q = self.colon_poly(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.expect("nonzero ideal has generators"))
    }

    /// `I : (x_1, ..., x_n)`.
    fn colon_maximal(&self) -> Result<Ideal> {
        let mut acc: Option<Ideal> = None;
        for v in 0..self.ring.nvars() {
            cancel::checkpoint()?;
            let q = self.colon_var(v, false)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.unwrap_or_else(|| self.clone()))
    }

    /// `k` with `self = (x_1, ..., x_n)^k`, if it is a power of the maximal ideal.
    pub fn maximal_power_exponent(&self) -> Result<Option<u32>> {
        if self.is_zero() || !self.is_homogeneous() || self.ring.nvars() == 0 {
            return Ok(None);
        }
        if self.is_unit()? {
            return Ok(Some(0));
        }
        let gb = self.gb()?;
        let Some(k) = gb.elements().first().and_then(Polynomial::degree) else {
            return Ok(None);
        };
        let expected = crate::linalg::monomials_of_degree(self.ring.nvars(), k).len();
        let ok = gb.elements().len() == expected
            && gb.elements().iter().all(|g| g.is_monomial() && g.degree() == Some(k));
        Ok(ok.then_some(k))
    }

    /// `I : J^t`, computed as `t` successive colons by `J`.
    pub fn colon_power(&self, other: &Ideal, t: u32) -> Result<Ideal> {
        let mut cur = self.clone();
        for _ in 0..t {
            cur = cur.colon(other)?;
        }
        Ok(cur)
    }

    /// `I : J^∞` together with the least `t` such that `I : J^t = I : J^∞`.
    pub fn saturate(&self, other: &Ideal) -> Result<(Ideal, u32)> {
        let mut cur = self.clone();
        let mut t = 0;
        loop {
            let next = cur.colon(other)?;
            if next.equal(&cur)? {
                return Ok((cur, t));
            }
            cur = next;
            t += 1;
        }
    }

    /// Whether `f` lies in the radical of `I`: `1 ∈ (I, 1 - u f)` in one more variable.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        let f = self.convert(f)?;
        if f.is_zero() || self.contains_poly(&f)? {
            return Ok(true);
        }
        if self.is_zero() {
            return Ok(false);
        }
        let er = self.ring.with_elimination_var();
        let known: Vec<Polynomial> = self.gb()?.elements().iter().map(|g| g.lift_with_var(&er, 0)).collect();
        let one = Polynomial::one(&er);
        let rab = one.sub(&f.lift_with_var(&er, 1))?;
        let gb = extend_basis(&er, &known, &[rab], None)?;
        Ok(gb.is_unit())
    }

    /// `rad(other) ⊆ rad(self)` on generators: every generator of `other` lies in `rad(self)`.
    pub fn radical_contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in other.gens() {
            if !self.radical_contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A generating set with no redundant member. For homogeneous ideals this
    /// is a minimal generating set (its size is `μ(I)`), built degree by degree
    /// and put in reduced echelon form within each degree.
    pub fn minimal_generators(&self) -> Result<Ideal> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        if self.is_unit()? {
            return Ok(Ideal::unit(&self.ring));
        }
        if !self.is_homogeneous() {
            let mut gens = self.gens.clone();
            let mut i = 0;
            while i < gens.len() {
                let rest: Vec<Polynomial> = gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
                if Ideal::new(&self.ring, rest.clone())?.contains_poly(&gens[i])? {
                    gens = rest;
                } else {
                    i += 1;
                }
            }
            return Ideal::new(&self.ring, gens);
        }
        let mut by_degree: BTreeMap<u32, Vec<Polynomial>> = BTreeMap::new();
        for g in &self.gens {
            by_degree.entry(g.degree().expect("nonzero")).or_default().push(g.clone());
        }
        let order = self.ring.order();
        let mut kept: Vec<Polynomial> = Vec::new();
        for (d, gens) in by_degree {
            cancel::checkpoint()?;
            let lower = if kept.is_empty() {
                Vec::new()
            } else {
                buchberger_truncated(&self.ring, &kept, d)?
            };
            let mut reduced = Vec::with_capacity(gens.len());
            for g in &gens {
                let r = if lower.is_empty() {
                    g.clone()
                } else {
                    normal_form(g, &lower, order)?
                };
                if !r.is_zero() {
                    reduced.push(r);
                }
            }
            kept.extend(linear_basis(&self.ring, &reduced));
        }
        Ok(Ideal::from_parts(&self.ring, kept))
    }

    /// `μ(I)` for homogeneous `I`.
    pub fn mu(&self) -> Result<usize> {
        Ok(self.minimal_generators()?.gens.len())
    }
}

/// Monomial generators, made monic and reduced to the divisibility antichain.
fn monomial_ideal_from(ring: &Arc<PolyRing>, mut monos: Vec<Monomial>) -> Ideal {
    let order = ring.order();
    monos.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| order.cmp(b, a)));
    monos.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for m in monos {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    let gens = kept
        .into_iter()
        .map(|m| Polynomial::monomial(ring, Scalar::one(), m))
        .collect();
    Ideal::from_parts(ring, gens)
}

/// Weights giving the auxiliary variable degree zero, so that lifted
/// homogeneous generators stay homogeneous for pair selection.
fn elimination_weights(er: &PolyRing) -> Vec<u32> {
    let mut w = vec![1; er.nvars()];
    w[0] = 0;
    w
}

/// Reorders variables: variable `k` of `target` is variable `perm[k]` of `f`'s ring.
fn permute(f: &Polynomial, target: &Arc<PolyRing>, perm: &[usize]) -> Polynomial {
    Polynomial::from_terms(
        target,
        f.terms().iter().map(|t| {
            let e = t.mono.exps();
            Term {
                coeff: t.coeff.clone(),
                mono: Monomial::new(perm.iter().map(|&i| e[i]).collect::<Vec<u32>>()),
            }
        }),
    )
}

/// Reduced echelon basis of the linear span of `polys`, ordered by leading term
/// descending. Columns are the monomials that occur, in the ring's order.
pub(crate) fn linear_basis(ring: &Arc<PolyRing>, polys: &[Polynomial]) -> Vec<Polynomial> {
    let order = ring.order();
    let mut cols: Vec<Monomial> = polys.iter().flat_map(|p| p.terms().iter().map(|t| t.mono.clone())).collect();
    cols.sort_by(|a, b| order.cmp(b, a));
    cols.dedup();
    let index: std::collections::HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut ech = Echelon::new(ring.field(), cols.len());
    for p in polys {
        let mut v = vec![Scalar::zero(); cols.len()];
        for t in p.terms() {
            v[index[&t.mono]] = t.coeff.clone();
        }
        ech.insert(v);
    }
    ech.rows()
        .iter()
        .map(|row| {
            let terms = row
                .iter()
                .zip(&cols)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, m)| Term {
                    coeff: c.clone(),
                    mono: m.clone(),
                })
                .collect();
            Polynomial::from_sorted(ring, terms)
        })
        .collect()
}

/// Removes linear dependencies among generators and generators whose every
/// term is divisible by a monomial generator.
fn interreduce(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
    cancel::checkpoint()?;
    let mut by_degree: BTreeMap<Option<u32>, Vec<Polynomial>> = BTreeMap::new();
    for g in gens.into_iter().filter(|g| !g.is_zero()) {
        let key = g.is_homogeneous().then(|| g.degree().expect("nonzero"));
        by_degree.entry(key).or_default().push(g);
    }
    let mut out: Vec<Polynomial> = Vec::new();
    for (_, group) in by_degree {
        out.extend(linear_basis(ring, &group));
    }
    let monos: Vec<Monomial> = out
        .iter()
        .filter(|g| g.is_monomial())
        .map(|g| g.lead_monomial().expect("nonzero").clone())
        .collect();
    out.retain(|g| {
        let own = g.is_monomial().then(|| g.lead_monomial().expect("nonzero"));
        !g.terms().iter().all(|t| {
            monos
                .iter()
                .any(|m| Some(m) != own && m.divides(&t.mono))
        })
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn ideal(ring: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
        Ideal::new(ring, gens.iter().map(|s| parse_poly(ring, s).unwrap())).unwrap()
    }

    fn p(ring: &Arc<PolyRing>, s: &str) -> Polynomial {
        parse_poly(ring, s).unwrap()
    }

    #[test]
    fn membership_and_equality() {
        let r = PolyRing::rationals(&["x", "y"]);
        assert!(ideal(&r, &["x", "y"]).contains_poly(&p(&r, "x + y")).unwrap());
        assert!(ideal(&r, &["x", "y"]).equal(&ideal(&r, &["x + y", "y"])).unwrap());
        assert!(!ideal(&r, &["x"]).contains_poly(&p(&r, "y")).unwrap());
    }

    #[test]
    fn powers() {
        let r = PolyRing::rationals(&["x", "y"]);
        let i = ideal(&r, &["x", "y"]);
        assert!(i.power(2).unwrap().equal(&ideal(&r, &["x^2", "x*y", "y^2"])).unwrap());
        assert!(i.power(1).unwrap().equal(&i).unwrap());
        assert!(i.power(0).unwrap().is_unit().unwrap());
        let lin = ideal(&r, &["x + y", "x - y"]);
        assert_eq!(lin.power(2).unwrap().gens().len(), 3);
    }

    #[test]
    fn intersections() {
        let r = PolyRing::rationals(&["x", "y"]);
        let a = ideal(&r, &["x"]);
        let b = ideal(&r, &["y"]);
        assert!(a.intersect(&b).unwrap().equal(&ideal(&r, &["x*y"])).unwrap());
        assert!(a.intersect(&ideal(&r, &["x", "y"])).unwrap().equal(&a).unwrap());
        let c = ideal(&r, &["x + y"]);
        let d = ideal(&r, &["x - y"]);
        assert!(c.intersect(&d).unwrap().equal(&ideal(&r, &["x^2 - y^2"])).unwrap());
    }

    #[test]
    fn colons() {
        let r = PolyRing::rationals(&["x", "y", "z"]);
        let i = ideal(&r, &["x*y", "x*z"]);
        assert!(i.colon(&ideal(&r, &["x"])).unwrap().equal(&ideal(&r, &["y", "z"])).unwrap());
        assert!(i.colon(&Ideal::unit(&r)).unwrap().equal(&i).unwrap());
        let sq = ideal(&r, &["x^2"]);
        assert!(sq.colon(&ideal(&r, &["x"])).unwrap().equal(&ideal(&r, &["x"])).unwrap());
        assert_eq!(i.colon(&Ideal::zero(&r)).unwrap_err(), Error::ZeroIdeal);
        // non-monomial divisor goes through elimination
        let j = ideal(&r, &["x^2 - y^2", "x*z - y*z"]);
        let q = j.colon_poly(&p(&r, "x - y")).unwrap();
        assert!(q.equal(&ideal(&r, &["x + y", "z"])).unwrap());
    }

    #[test]
    fn saturations() {
        let r = PolyRing::rationals(&["x", "y"]);
        let (s, t) = ideal(&r, &["x^2*y"]).saturate(&ideal(&r, &["y"])).unwrap();
        assert!(s.equal(&ideal(&r, &["x^2"])).unwrap());
        assert_eq!(t, 1);
        let m = ideal(&r, &["x", "y"]);
        let (s, t) = m.power(2).unwrap().saturate(&m).unwrap();
        assert!(s.is_unit().unwrap());
        assert_eq!(t, 2);
    }

    #[test]
    fn radical_membership() {
        let r = PolyRing::rationals(&["x", "y"]);
        assert!(ideal(&r, &["x^2"]).radical_contains(&p(&r, "x")).unwrap());
        assert!(!ideal(&r, &["y"]).radical_contains(&p(&r, "x")).unwrap());
        let m3 = ideal(&r, &["x", "y"]).power(3).unwrap();
        assert!(m3.radical_contains(&p(&r, "x + y")).unwrap());
    }

    #[test]
    fn minimal_generators_drop_redundancy() {
        let r = PolyRing::rationals(&["x", "y", "z"]);
        let i = ideal(&r, &["x*y", "x*z", "x*y + x*z", "x^2*y", "y*z"]);
        assert_eq!(i.mu().unwrap(), 3);
        assert!(i.minimal_generators().unwrap().equal(&i).unwrap());
    }

    #[test]
    fn maximal_power_detection() {
        let r = PolyRing::rationals(&["x", "y"]);
        let m = Ideal::maximal(&r);
        assert_eq!(m.power(3).unwrap().maximal_power_exponent().unwrap(), Some(3));
        assert_eq!(ideal(&r, &["x^2", "y^2"]).maximal_power_exponent().unwrap(), None);
        assert_eq!(Ideal::maximal_power(&r, 2).gens().len(), 3);
    }

    #[test]
    fn iterated_colon_matches_colon_by_power() {
        let r = PolyRing::rationals(&["x", "y", "z"]);
        let i = ideal(&r, &["x*y", "x*z", "y*z"]).power(3).unwrap();
        let j = ideal(&r, &["x + y", "z"]);
        let a = i.colon_power(&j, 2).unwrap();
        let b = i.colon(&j.power(2).unwrap()).unwrap();
        assert!(a.equal(&b).unwrap());
    }

    #[test]
    fn lex_ring_operations() {
        let r = PolyRing::rationals(&["x", "y", "z"]).with_order(MonomialOrder::Lex);
        let a = ideal(&r, &["x*y", "x*z", "y*z"]);
        let c = a.colon(&ideal(&r, &["x"])).unwrap();
        assert!(c.equal(&ideal(&r, &["y", "z"])).unwrap());
    }
}
