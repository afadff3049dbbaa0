//! Buchberger's algorithm on vectors of polynomials under a position-over-term
//! order. Ideals are the rank-one case.

use std::cmp::Ordering;

use crate::cancel;
use crate::error::Result;
use crate::field::{Field, Scalar};
use crate::monomial::{Monomial, MonomialOrder};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct VTerm {
    pub coeff: Scalar,
    pub mono: Monomial,
    pub pos: u32,
}

/// Terms strictly descending in the term order, no zero coefficients.
pub(crate) type VPoly = Vec<VTerm>;

#[derive(Debug, Clone)]
pub(crate) struct Setup {
    pub field: Field,
    pub order: MonomialOrder,
    /// Variable weights used for the normal selection strategy.
    pub weights: Vec<u32>,
    /// Degree shift per position; position `i` terms have degree `deg + shifts[i]`.
    pub shifts: Vec<u32>,
    /// Stop once every remaining pair lies above this degree.
    pub degree_bound: Option<u32>,
}

impl Setup {
    pub fn ideal(field: Field, order: MonomialOrder, nvars: usize) -> Setup {
        Setup {
            field,
            order,
            weights: vec![1; nvars],
            shifts: vec![0],
            degree_bound: None,
        }
    }

    fn rank(&self) -> usize {
        self.shifts.len()
    }

    /// Position-over-term comparison; lower positions are larger.
    #[inline]
    pub fn cmp(&self, a: &Monomial, apos: u32, b: &Monomial, bpos: u32) -> Ordering {
        match bpos.cmp(&apos) {
            Ordering::Equal => self.order.cmp(a, b),
            o => o,
        }
    }

    fn degree(&self, m: &Monomial, pos: u32) -> u32 {
        m.weighted_degree(&self.weights) + self.shifts[pos as usize]
    }

    pub fn normalize(&self, mut p: VPoly) -> VPoly {
        p.iter_mut()
            .for_each(|t| t.coeff = self.field.normalize(std::mem::replace(&mut t.coeff, Scalar::zero())));
        p.retain(|t| !t.coeff.is_zero());
        p.sort_by(|a, b| self.cmp(&b.mono, b.pos, &a.mono, a.pos));
        let mut out: VPoly = Vec::with_capacity(p.len());
        for t in p {
            match out.last_mut() {
                Some(last) if last.pos == t.pos && last.mono == t.mono => {
                    last.coeff = self.field.add(&last.coeff, &t.coeff);
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push(t),
            }
        }
        out
    }

    pub fn make_monic(&self, p: &mut VPoly) {
        if let Some(lc) = p.first().map(|t| t.coeff.clone()) {
            if !lc.is_one() {
                let inv = self.field.inv(&lc);
                for t in p.iter_mut() {
                    t.coeff = self.field.mul(&t.coeff, &inv);
                }
            }
        }
    }

    fn mul_term(&self, p: &[VTerm], c: &Scalar, m: &Monomial) -> VPoly {
        p.iter()
            .map(|t| VTerm {
                coeff: if c.is_one() {
                    t.coeff.clone()
                } else {
                    self.field.mul(&t.coeff, c)
                },
                mono: t.mono.mul(m),
                pos: t.pos,
            })
            .collect()
    }

    /// `a - c * m * b`.
    fn sub_scaled(&self, a: &[VTerm], c: &Scalar, m: &Monomial, b: &[VTerm]) -> VPoly {
        let f = self.field;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut i = 0;
        for bt in b {
            let bm = bt.mono.mul(m);
            while i < a.len() && self.cmp(&a[i].mono, a[i].pos, &bm, bt.pos) == Ordering::Greater {
                out.push(a[i].clone());
                i += 1;
            }
            let prod = f.mul(c, &bt.coeff);
            if i < a.len() && a[i].pos == bt.pos && a[i].mono == bm {
                let v = f.sub(&a[i].coeff, &prod);
                if !v.is_zero() {
                    out.push(VTerm {
                        coeff: v,
                        mono: bm,
                        pos: bt.pos,
                    });
                }
                i += 1;
            } else {
                out.push(VTerm {
                    coeff: f.neg(&prod),
                    mono: bm,
                    pos: bt.pos,
                });
            }
        }
        out.extend_from_slice(&a[i..]);
        out
    }
}

fn sev(m: &Monomial) -> u64 {
    let mut s = 0u64;
    for (i, &e) in m.exps().iter().enumerate() {
        if e > 0 {
            s |= 1 << (i % 64);
        }
    }
    s
}

struct Elem {
    poly: VPoly,
    lm: Monomial,
    pos: u32,
    sev: u64,
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    pos: u32,
    degree: u32,
    coprime: bool,
}

pub(crate) struct Basis<'a> {
    setup: &'a Setup,
    elems: Vec<Elem>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl<'a> Basis<'a> {
    pub fn new(setup: &'a Setup) -> Basis<'a> {
        Basis {
            setup,
            elems: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
        }
    }

    fn push_elem(&mut self, poly: VPoly) -> usize {
        let lead = &poly[0];
        let e = Elem {
            lm: lead.mono.clone(),
            pos: lead.pos,
            sev: sev(&lead.mono),
            poly,
        };
        self.elems.push(e);
        self.elems.len() - 1
    }

    /// Adds an element of an already known Gröbner basis: no pairs with other
    /// known elements are formed.
    pub fn add_known(&mut self, mut p: VPoly) {
        if p.is_empty() {
            return;
        }
        self.setup.make_monic(&mut p);
        let k = self.push_elem(p);
        self.active.push(k);
    }

    fn find_reducer(&self, m: &Monomial, pos: u32) -> Option<usize> {
        let s = sev(m);
        self.active.iter().copied().find(|&k| {
            let e = &self.elems[k];
            e.pos == pos && e.sev & !s == 0 && e.lm.divides(m)
        })
    }

    /// Full reduction of `p` by the active elements.
    pub fn reduce(&self, p: VPoly) -> Result<VPoly> {
        let mut rest = p;
        let mut start = 0;
        let mut result = Vec::new();
        let mut steps = 0usize;
        while start < rest.len() {
            let lt = &rest[start];
            match self.find_reducer(&lt.mono, lt.pos) {
                Some(k) => {
                    steps += 1;
                    if steps % 256 == 0 {
                        cancel::checkpoint()?;
                    }
                    let e = &self.elems[k];
                    let m = lt.mono.div(&e.lm).expect("divisible");
                    let c = lt.coeff.clone();
                    rest = self.setup.sub_scaled(&rest[start..], &c, &m, &e.poly);
                    start = 0;
                }
                None => {
                    result.push(rest[start].clone());
                    start += 1;
                }
            }
        }
        Ok(result)
    }

    /// Inserts a nonzero, fully reduced element and updates the pair set
    /// with the Gebauer–Möller criteria.
    fn insert(&mut self, mut h: VPoly) {
        self.setup.make_monic(&mut h);
        let hk = self.push_elem(h);
        let (hlm, hpos) = (self.elems[hk].lm.clone(), self.elems[hk].pos);
        let product_ok = self.setup.rank() == 1;

        let mut c: Vec<Pair> = self
            .active
            .iter()
            .filter(|&&g| self.elems[g].pos == hpos)
            .map(|&g| {
                let glm = &self.elems[g].lm;
                let lcm = glm.lcm(&hlm);
                Pair {
                    i: g,
                    j: hk,
                    degree: self.setup.degree(&lcm, hpos),
                    coprime: product_ok && glm.is_coprime(&hlm),
                    lcm,
                    pos: hpos,
                }
            })
            .collect();
        // process in a fixed order so the surviving representatives are deterministic
        c.reverse();
        let mut d: Vec<Pair> = Vec::new();
        while let Some(p) = c.pop() {
            if p.coprime
                || (!c.iter().any(|q| q.lcm.divides(&p.lcm)) && !d.iter().any(|q| q.lcm.divides(&p.lcm)))
            {
                d.push(p);
            }
        }
        d.retain(|p| !p.coprime);

        let elems = &self.elems;
        self.pairs.retain(|p| {
            !(p.pos == hpos
                && hlm.divides(&p.lcm)
                && elems[p.i].lm.lcm(&hlm) != p.lcm
                && elems[p.j].lm.lcm(&hlm) != p.lcm)
        });
        self.pairs.extend(d);

        self.active
            .retain(|&g| !(elems[g].pos == hpos && hlm.divides(&elems[g].lm)));
        self.active.push(hk);
    }

    /// Reduces and inserts an input generator.
    pub fn add_generator(&mut self, p: VPoly) -> Result<()> {
        if p.is_empty() {
            return Ok(());
        }
        let h = self.reduce(p)?;
        if !h.is_empty() {
            self.insert(h);
        }
        Ok(())
    }

    fn select(&mut self) -> Option<Pair> {
        let setup = self.setup;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.degree
                    .cmp(&b.degree)
                    .then_with(|| setup.cmp(&a.lcm, a.pos, &b.lcm, b.pos).reverse())
                    .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_poly(&self, p: &Pair) -> VPoly {
        let (a, b) = (&self.elems[p.i], &self.elems[p.j]);
        let ma = p.lcm.div(&a.lm).expect("lcm");
        let mb = p.lcm.div(&b.lm).expect("lcm");
        let left = self.setup.mul_term(&a.poly, &Scalar::one(), &ma);
        let mut s = self.setup.sub_scaled(&left, &Scalar::one(), &mb, &b.poly);
        // leading terms cancel exactly
        debug_assert!(s.first().is_none_or(|t| t.mono != p.lcm || t.pos != p.pos));
        s.shrink_to_fit();
        s
    }

    /// Runs the pair loop to completion (or up to the degree bound).
    pub fn complete(&mut self) -> Result<()> {
        while let Some(p) = self.select() {
            if let Some(bound) = self.setup.degree_bound {
                if p.degree > bound {
                    self.pairs.push(p);
                    break;
                }
            }
            cancel::checkpoint()?;
            let s = self.s_poly(&p);
            let h = self.reduce(s)?;
            if !h.is_empty() {
                self.insert(h);
            }
        }
        Ok(())
    }

    /// The reduced basis: monic, tails reduced, sorted ascending by leading term.
    pub fn into_reduced(self) -> Result<Vec<VPoly>> {
        let mut out = Vec::with_capacity(self.active.len());
        for &k in &self.active {
            let p = &self.elems[k].poly;
            let mut r = vec![p[0].clone()];
            r.extend(self.reduce(p[1..].to_vec())?);
            out.push(r);
        }
        let setup = self.setup;
        out.sort_by(|a, b| setup.cmp(&a[0].mono, a[0].pos, &b[0].mono, b[0].pos));
        Ok(out)
    }
}

/// Reduced Gröbner basis of `known ∪ gens`, where `known` is already a
/// Gröbner basis (possibly empty).
pub(crate) fn groebner(setup: &Setup, known: Vec<VPoly>, mut gens: Vec<VPoly>) -> Result<Vec<VPoly>> {
    let mut basis = Basis::new(setup);
    for k in known {
        basis.add_known(k);
    }
    gens.retain(|g| !g.is_empty());
    gens.sort_by_key(|g| {
        let t = &g[0];
        (setup.degree(&t.mono, t.pos), g.len())
    });
    for g in gens {
        if let Some(bound) = setup.degree_bound {
            let t = &g[0];
            if setup.degree(&t.mono, t.pos) > bound {
                continue;
            }
        }
        basis.add_generator(g)?;
        cancel::checkpoint()?;
    }
    basis.complete()?;
    basis.into_reduced()
}

/// Full reduction of `p` by an arbitrary list (not necessarily a Gröbner basis).
pub(crate) fn reduce_by(setup: &Setup, p: VPoly, divisors: &[VPoly]) -> Result<VPoly> {
    let mut basis = Basis::new(setup);
    for d in divisors {
        basis.add_known(d.clone());
    }
    basis.reduce(p)
}

/// S-vector of two elements with the same leading position.
pub(crate) fn s_vector(setup: &Setup, a: &VPoly, b: &VPoly) -> Option<VPoly> {
    let (la, lb) = (a.first()?, b.first()?);
    if la.pos != lb.pos {
        return None;
    }
    let lcm = la.mono.lcm(&lb.mono);
    let ca = setup.field.inv(&la.coeff);
    let cb = setup.field.inv(&lb.coeff);
    let left = setup.mul_term(a, &ca, &lcm.div(&la.mono).expect("lcm"));
    Some(setup.sub_scaled(&left, &cb, &lcm.div(&lb.mono).expect("lcm"), b))
}
