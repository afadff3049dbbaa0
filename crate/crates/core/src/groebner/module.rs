use std::sync::Arc;

use super::engine::{self, Setup, VPoly, VTerm};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Term};
use crate::ring::PolyRing;

/// An element of the free module `S^r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleElement {
    components: Vec<Polynomial>,
}

impl ModuleElement {
    pub fn new(components: Vec<Polynomial>) -> Result<ModuleElement> {
        if let Some(first) = components.first() {
            if components.iter().any(|c| !c.ring().same_space(first.ring())) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(ModuleElement { components })
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    fn to_vpoly(&self, setup: &Setup) -> VPoly {
        let terms = self
            .components
            .iter()
            .enumerate()
            .flat_map(|(pos, c)| {
                c.terms().iter().map(move |t| VTerm {
                    coeff: t.coeff.clone(),
                    mono: t.mono.clone(),
                    pos: pos as u32,
                })
            })
            .collect();
        setup.normalize(terms)
    }

    fn from_vpoly(ring: &Arc<PolyRing>, rank: usize, p: VPoly) -> ModuleElement {
        let mut parts: Vec<Vec<Term>> = vec![Vec::new(); rank];
        for t in p {
            parts[t.pos as usize].push(Term {
                coeff: t.coeff,
                mono: t.mono,
            });
        }
        ModuleElement {
            components: parts.into_iter().map(|ts| Polynomial::from_terms(ring, ts)).collect(),
        }
    }
}

/// Reduced Gröbner basis of the submodule generated by `gens` under the
/// position-over-term extension of `ring`'s order, position 0 leading.
///
/// `shifts` assigns a degree to each basis vector; it only steers the pair
/// selection and defaults to zero.
pub fn module_groebner(
    ring: &Arc<PolyRing>,
    gens: &[ModuleElement],
    rank: usize,
    shifts: Option<&[u32]>,
) -> Result<Vec<ModuleElement>> {
    if rank == 0 {
        return Err(Error::Structural("free module of rank zero".into()));
    }
    for g in gens {
        if g.rank() != rank {
            return Err(Error::Structural(format!(
                "module element of length {} in a free module of rank {rank}",
                g.rank()
            )));
        }
        if g.components.iter().any(|c| c.ring() != ring) {
            return Err(Error::RingMismatch);
        }
    }
    let mut setup = Setup::ideal(ring.field(), ring.order(), ring.nvars());
    setup.shifts = match shifts {
        Some(s) if s.len() == rank => s.to_vec(),
        Some(_) => return Err(Error::Structural("one degree shift per position is required".into())),
        None => vec![0; rank],
    };
    let vgens = gens.iter().map(|g| g.to_vpoly(&setup)).collect();
    let out = engine::groebner(&setup, Vec::new(), vgens)?;
    Ok(out
        .into_iter()
        .map(|p| ModuleElement::from_vpoly(ring, rank, p))
        .collect())
}

/// Generators of the first syzygy module of `polys`: vectors `a` with
/// `sum a_i * polys[i] = 0`.
///
/// Computed from a Gröbner basis of `{(f_i, e_i)}` in `S^(1+n)` with the
/// function position leading; the elements whose function component vanishes
/// form a Gröbner basis of the syzygy module.
pub fn syzygies(ring: &Arc<PolyRing>, polys: &[Polynomial]) -> Result<Vec<ModuleElement>> {
    let n = polys.len();
    let mut gens = Vec::with_capacity(n);
    for (i, f) in polys.iter().enumerate() {
        if f.ring() != ring {
            return Err(Error::RingMismatch);
        }
        let mut comps = vec![Polynomial::zero(ring); n + 1];
        comps[0] = f.clone();
        comps[i + 1] = Polynomial::one(ring);
        gens.push(ModuleElement { components: comps });
    }
    // degree of e_i is deg f_i so that homogeneous input gives homogeneous vectors
    let mut shifts = vec![0u32];
    shifts.extend(polys.iter().map(|f| f.degree().unwrap_or(0)));
    let gb = module_groebner(ring, &gens, n + 1, Some(&shifts))?;
    Ok(gb
        .into_iter()
        .filter(|e| e.components[0].is_zero())
        .map(|e| ModuleElement {
            components: e.components[1..].to_vec(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;
    use crate::parse::parse_poly;

    fn leading_position(e: &ModuleElement) -> Option<(usize, Monomial)> {
        e.components
            .iter()
            .enumerate()
            .find_map(|(i, c)| c.lead_monomial().map(|m| (i, m.clone())))
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        parse_poly(r, s).unwrap()
    }

    #[test]
    fn already_a_basis() {
        let r = PolyRing::rationals(&["x", "y"]);
        let a = ModuleElement::new(vec![p(&r, "x"), p(&r, "0")]).unwrap();
        let b = ModuleElement::new(vec![p(&r, "0"), p(&r, "y")]).unwrap();
        let gb = module_groebner(&r, &[a.clone(), b.clone()], 2, None).unwrap();
        assert_eq!(gb.len(), 2);
        assert!(gb.contains(&a) && gb.contains(&b));
    }

    #[test]
    fn koszul_relation() {
        let r = PolyRing::rationals(&["x", "y"]);
        let gens = vec![
            ModuleElement::new(vec![p(&r, "x"), p(&r, "1"), p(&r, "0")]).unwrap(),
            ModuleElement::new(vec![p(&r, "y"), p(&r, "0"), p(&r, "1")]).unwrap(),
        ];
        let gb = module_groebner(&r, &gens, 3, None).unwrap();
        let koszul = ModuleElement::new(vec![p(&r, "0"), p(&r, "y"), p(&r, "-x")]).unwrap();
        assert!(gb.contains(&koszul), "{gb:?}");
    }

    #[test]
    fn syzygies_of_three_monomials() {
        let r = PolyRing::rationals(&["x", "y", "z"]);
        let fs = vec![p(&r, "x*y"), p(&r, "x*z"), p(&r, "y*z")];
        let syz = syzygies(&r, &fs).unwrap();
        assert_eq!(syz.len(), 2);
        for s in &syz {
            let mut total = Polynomial::zero(&r);
            for (a, f) in s.components().iter().zip(&fs) {
                total = total.add(&a.mul(f).unwrap()).unwrap();
            }
            assert!(total.is_zero());
        }
        // leading terms sit in different positions, so the two are independent
        let lead: Vec<_> = syz.iter().map(|s| leading_position(s).unwrap().0).collect();
        assert_ne!(lead[0], lead[1]);
        // reduced forms of z*(xy) - y*(xz) and y*(xz) - x*(yz)
        let s1 = ModuleElement::new(vec![p(&r, "z"), p(&r, "0"), p(&r, "-x")]).unwrap();
        let s2 = ModuleElement::new(vec![p(&r, "0"), p(&r, "y"), p(&r, "-x")]).unwrap();
        assert!(syz.contains(&s1) || syz.contains(&s1.neg()));
        assert!(syz.contains(&s2) || syz.contains(&s2.neg()));
    }
}

#[cfg(test)]
impl ModuleElement {
    fn neg(&self) -> ModuleElement {
        ModuleElement {
            components: self.components.iter().map(Polynomial::neg).collect(),
        }
    }
}
