//! Monomial ideals: minimal primes, irreducible decompositions and symbolic
//! powers of squarefree monomial ideals, by pure combinatorics.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::ideal::Ideal;
use crate::linalg::monomials_of_degree;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::PolyRing;

/// A monomial ideal given by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Arc<PolyRing>,
    gens: Vec<Monomial>,
}

/// A set of variable indices, used for monomial primes `(x_i : i in set)`.
pub type VarSet = BTreeSet<usize>;

impl MonomialIdeal {
    pub fn new(ring: &Arc<PolyRing>, gens: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if gens.iter().any(|m| m.nvars() != ring.nvars()) {
            return Err(Error::RingMismatch);
        }
        Ok(MonomialIdeal {
            ring: ring.clone(),
            gens: minimalize(gens),
        })
    }

    /// Reads a monomial ideal off its generators, or off its reduced basis
    /// when the given generators are not monomials.
    pub fn from_ideal(ideal: &Ideal) -> Result<MonomialIdeal> {
        let source: Vec<Polynomial> = if ideal.has_monomial_gens() {
            ideal.gens().to_vec()
        } else {
            let gb = ideal.gb()?;
            if !gb.elements().iter().all(Polynomial::is_monomial) {
                return Err(Error::Precondition("not a monomial ideal".into()));
            }
            gb.elements().to_vec()
        };
        MonomialIdeal::new(
            ideal.ring(),
            source.iter().map(|g| g.lead_monomial().expect("nonzero").clone()),
        )
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::new(
            &self.ring,
            self.gens
                .iter()
                .map(|m| Polynomial::monomial(&self.ring, Scalar::one(), m.clone())),
        )
        .expect("same ring")
    }

    /// `I ∩ J` by pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.lcm(b));
            }
        }
        MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(out),
        }
    }

    /// Minimal primes, as the minimal vertex covers of the hypergraph of
    /// generator supports. Sorted by size, then lexicographically.
    pub fn minimal_primes(&self) -> Result<Vec<VarSet>> {
        if self.gens.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let edges: Vec<VarSet> = minimal_sets(self.gens.iter().map(|m| m.support().collect()).collect());
        let mut covers = Vec::new();
        let mut chosen = VarSet::new();
        covers_rec(&edges, &mut chosen, &mut covers);
        let mut covers = minimal_sets(covers);
        covers.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(covers)
    }

    /// Irredundant decomposition into irreducible ideals `(x_i^{b_i})`,
    /// each returned as its exponent vector (zero meaning "absent").
    pub fn irreducible_components(&self) -> Result<Vec<Vec<u32>>> {
        if self.gens.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let mut out = Vec::new();
        split_rec(self.gens.clone(), &mut out);
        out.sort();
        out.dedup();
        // drop components containing another one
        let contains = |b: &Vec<u32>, c: &Vec<u32>| {
            c.iter()
                .zip(b)
                .all(|(&cj, &bj)| cj == 0 || (bj != 0 && bj <= cj))
        };
        let kept: Vec<Vec<u32>> = out
            .iter()
            .filter(|b| !out.iter().any(|c| c != *b && contains(b, c)))
            .cloned()
            .collect();
        Ok(kept)
    }

    /// Associated primes: the radicals of the irredundant irreducible components.
    pub fn associated_primes(&self) -> Result<Vec<VarSet>> {
        let mut primes: Vec<VarSet> = self
            .irreducible_components()?
            .iter()
            .map(|b| b.iter().enumerate().filter(|&(_, &e)| e > 0).map(|(i, _)| i).collect())
            .collect();
        primes.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        primes.dedup();
        Ok(primes)
    }

    /// True when all associated primes have the same height.
    pub fn is_unmixed(&self) -> Result<bool> {
        let primes = self.associated_primes()?;
        Ok(primes.windows(2).all(|w| w[0].len() == w[1].len()))
    }
}

/// `I^(m)` of a squarefree monomial ideal: the intersection of `p^m` over the
/// minimal primes `p`.
pub fn symbolic_power_monomial(ideal: &MonomialIdeal, m: u32) -> Result<Ideal> {
    if !ideal.is_squarefree() {
        return Err(Error::Precondition("the monomial ideal is not squarefree".into()));
    }
    let n = ideal.ring.nvars();
    let mut acc: Option<MonomialIdeal> = None;
    for p in ideal.minimal_primes()? {
        let vars: Vec<usize> = p.iter().copied().collect();
        let gens = monomials_of_degree(vars.len(), m).into_iter().map(|small| {
            let mut e = vec![0u32; n];
            for (k, &v) in vars.iter().enumerate() {
                e[v] = small.exps()[k];
            }
            Monomial::new(e)
        });
        let pm = MonomialIdeal {
            ring: ideal.ring.clone(),
            gens: minimalize(gens.collect()),
        };
        acc = Some(match acc {
            None => pm,
            Some(a) => a.intersect(&pm),
        });
    }
    Ok(acc.expect("proper nonzero ideal has a minimal prime").to_ideal())
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.exps().cmp(a.exps())));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

fn minimal_sets(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept
}

fn covers_rec(edges: &[VarSet], chosen: &mut VarSet, out: &mut Vec<VarSet>) {
    let Some(open) = edges.iter().find(|e| e.is_disjoint(chosen)) else {
        out.push(chosen.clone());
        return;
    };
    for &v in open {
        chosen.insert(v);
        covers_rec(edges, chosen, out);
        chosen.remove(&v);
    }
}

/// Splits along a generator that is not a pure power:
/// `I = (I + x^a) ∩ (I + m/x^a)` where `x^a` exactly divides `m`.
fn split_rec(gens: Vec<Monomial>, out: &mut Vec<Vec<u32>>) {
    let gens = minimalize(gens);
    let Some(m) = gens.iter().find(|m| m.support().count() > 1) else {
        let n = gens[0].nvars();
        let mut b = vec![0u32; n];
        for g in &gens {
            let v = g.support().next().expect("not the unit ideal");
            b[v] = g.exps()[v];
        }
        out.push(b);
        return;
    };
    let v = m.support().next().expect("nonconstant");
    let mut e = vec![0u32; m.nvars()];
    e[v] = m.exps()[v];
    let power = Monomial::new(e);
    let rest = m.div(&power).expect("divides");
    let mut left = gens.clone();
    left.push(power);
    let mut right = gens;
    right.push(rest);
    split_rec(left, out);
    split_rec(right, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn mono_ideal(ring: &Arc<PolyRing>, gens: &[&str]) -> MonomialIdeal {
        let ideal = Ideal::new(ring, gens.iter().map(|s| parse_poly(ring, s).unwrap())).unwrap();
        MonomialIdeal::from_ideal(&ideal).unwrap()
    }

    fn set(v: &[usize]) -> VarSet {
        v.iter().copied().collect()
    }

    #[test]
    fn minimal_primes_examples() {
        let r = PolyRing::rationals(&["x", "y", "z"]);
        let i = mono_ideal(&r, &["x*y", "x*z", "y*z"]);
        assert_eq!(i.minimal_primes().unwrap(), vec![set(&[0, 1]), set(&[0, 2]), set(&[1, 2])]);
        assert_eq!(mono_ideal(&r, &["x"]).minimal_primes().unwrap(), vec![set(&[0])]);
        let r6 = PolyRing::rationals(&["x", "y", "z", "w", "t", "u"]);
        let mixed = mono_ideal(&r6, &["x*y*z", "x*t*u", "z*w*t", "y*w*u"]);
        let primes = mixed.minimal_primes().unwrap();
        assert!(primes.contains(&set(&[0, 3])));
        assert!(primes.contains(&set(&[0, 1, 2])));
        assert!(!mixed.is_unmixed().unwrap());
    }

    #[test]
    fn irreducible_decomposition() {
        let r = PolyRing::rationals(&["x", "y", "z", "w"]);
        // (x,y,z)^2 ∩ (y,z,w)
        let i = mono_ideal(&r, &["x*y", "x*z", "y^2", "y*z", "z^2", "x^2*w"]);
        let primes = i.associated_primes().unwrap();
        assert_eq!(primes, vec![set(&[0, 1, 2]), set(&[1, 2, 3])]);
        assert!(i.is_unmixed().unwrap());
        // (x^2, xy) = (x) ∩ (x^2, y) has an embedded prime
        let r2 = PolyRing::rationals(&["x", "y"]);
        let e = mono_ideal(&r2, &["x^2", "x*y"]);
        assert_eq!(e.associated_primes().unwrap(), vec![set(&[0]), set(&[0, 1])]);
        assert!(!e.is_unmixed().unwrap());
    }

    #[test]
    fn symbolic_powers() {
        let r = PolyRing::rationals(&["x", "y", "z", "t", "u"]);
        let i = mono_ideal(&r, &["x*y", "x*z", "y*z", "t*u"]);
        let s2 = symbolic_power_monomial(&i, 2).unwrap();
        let expected = i
            .to_ideal()
            .power(2)
            .unwrap()
            .sum(&Ideal::new(&r, [parse_poly(&r, "x*y*z").unwrap()]).unwrap())
            .unwrap();
        assert!(s2.equal(&expected).unwrap());
        let s1 = symbolic_power_monomial(&i, 1).unwrap();
        assert!(s1.equal(&i.to_ideal()).unwrap());
        let r2 = PolyRing::rationals(&["x", "y"]);
        let p = mono_ideal(&r2, &["x", "y"]);
        assert!(symbolic_power_monomial(&p, 3)
            .unwrap()
            .equal(&p.to_ideal().power(3).unwrap())
            .unwrap());
        assert!(symbolic_power_monomial(&mono_ideal(&r2, &["x^2"]), 2).is_err());
    }

    #[test]
    fn non_monomial_rejected() {
        let r = PolyRing::rationals(&["x", "y"]);
        let i = Ideal::new(&r, [parse_poly(&r, "x + y").unwrap()]).unwrap();
        assert!(MonomialIdeal::from_ideal(&i).is_err());
    }
}
