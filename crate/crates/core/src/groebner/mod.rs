//! Reduced Gröbner bases of ideals and of submodules of free modules.

pub mod cache;
pub(crate) mod engine;
mod module;

use std::fmt;
use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::monomial::MonomialOrder;
use crate::poly::{Polynomial, Term};
use crate::ring::{check_same, PolyRing};

use engine::{Setup, VPoly, VTerm};

pub use module::{module_groebner, syzygies, ModuleElement};

/// The reduced Gröbner basis of an ideal with respect to its ring's order.
///
/// Elements are monic, interreduced and sorted ascending by leading monomial,
/// so two ideals are equal exactly when their bases (same order) are equal.
#[derive(Clone)]
pub struct ReducedGB {
    ring: Arc<PolyRing>,
    elements: Vec<Polynomial>,
    digest: String,
}

impl fmt::Debug for ReducedGB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ReducedGB")
            .field("ring", &self.ring.to_string())
            .field("order", &self.ring.order().to_string())
            .field("elements", &self.elements)
            .finish()
    }
}

impl PartialEq for ReducedGB {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.elements == other.elements
    }
}

impl Eq for ReducedGB {}

impl ReducedGB {
    pub(crate) fn from_elements(ring: &Arc<PolyRing>, elements: Vec<Polynomial>) -> ReducedGB {
        let digest = digest_of(ring, elements.iter().map(crate::parse::render_poly));
        ReducedGB {
            ring: ring.clone(),
            elements,
            digest,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    /// Content hash of (ring, order, elements).
    pub fn digest(&self) -> &str {
        &self.digest
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn is_zero(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, f.ring())?;
        let setup = setup_for(&self.ring);
        let divisors: Vec<VPoly> = self.elements.iter().map(to_vpoly).collect();
        let r = engine::reduce_by(&setup, to_vpoly(f), &divisors)?;
        Ok(from_vpoly(&self.ring, r))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

pub(crate) fn digest_of(ring: &PolyRing, items: impl Iterator<Item = String>) -> String {
    let mut h = Sha256::new();
    h.update(format!("{}|{}|", ring, ring.order()).as_bytes());
    for s in items {
        h.update(s.as_bytes());
        h.update(b"\n");
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

pub(crate) fn setup_for(ring: &PolyRing) -> Setup {
    Setup::ideal(ring.field(), ring.order(), ring.nvars())
}

pub(crate) fn to_vpoly(f: &Polynomial) -> VPoly {
    f.terms()
        .iter()
        .map(|t| VTerm {
            coeff: t.coeff.clone(),
            mono: t.mono.clone(),
            pos: 0,
        })
        .collect()
}

pub(crate) fn from_vpoly(ring: &Arc<PolyRing>, p: VPoly) -> Polynomial {
    Polynomial::from_sorted(
        ring,
        p.into_iter()
            .map(|t| Term {
                coeff: t.coeff,
                mono: t.mono,
            })
            .collect(),
    )
}

fn convert_all(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Result<Vec<VPoly>> {
    gens.iter()
        .map(|g| {
            if !g.ring().same_space(ring) {
                return Err(Error::RingMismatch);
            }
            Ok(if g.ring().order() == ring.order() {
                to_vpoly(g)
            } else {
                to_vpoly(&g.to_ring(ring)?)
            })
        })
        .collect()
}

/// Remainder of multivariate division of `f` by `divisors` under `order`.
///
/// The result has no term divisible by a leading term of `divisors` and is
/// returned in `f`'s ring.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], order: MonomialOrder) -> Result<Polynomial> {
    let ring = f.ring().with_order(order);
    let setup = setup_for(&ring);
    let divs = convert_all(&ring, divisors)?;
    let r = engine::reduce_by(&setup, to_vpoly(&f.to_ring(&ring)?), &divs)?;
    from_vpoly(&ring, r).to_ring(f.ring())
}

/// Reduced Gröbner basis of the ideal generated by `gens` with respect to
/// `ring`'s order. Zero generators are ignored.
pub fn buchberger(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Result<ReducedGB> {
    let key = cache::key(ring, &[], gens);
    if let Some(hit) = cache::lookup(&key, ring) {
        return Ok(hit);
    }
    let setup = setup_for(ring);
    let vgens = convert_all(ring, gens)?;
    let out = engine::groebner(&setup, Vec::new(), vgens)?;
    let gb = ReducedGB::from_elements(ring, out.into_iter().map(|p| from_vpoly(ring, p)).collect());
    cache::store(&key, &gb);
    Ok(gb)
}

/// Reduced Gröbner basis of `known + (gens)` where `known` is already a
/// Gröbner basis of its ideal in `ring`'s order. Pairs among `known` are skipped.
pub(crate) fn extend_basis(
    ring: &Arc<PolyRing>,
    known: &[Polynomial],
    gens: &[Polynomial],
    weights: Option<Vec<u32>>,
) -> Result<ReducedGB> {
    let key = cache::key(ring, known, gens);
    if let Some(hit) = cache::lookup(&key, ring) {
        return Ok(hit);
    }
    let mut setup = setup_for(ring);
    if let Some(w) = weights {
        setup.weights = w;
    }
    let out = engine::groebner(&setup, convert_all(ring, known)?, convert_all(ring, gens)?)?;
    let gb = ReducedGB::from_elements(ring, out.into_iter().map(|p| from_vpoly(ring, p)).collect());
    cache::store(&key, &gb);
    Ok(gb)
}

/// Gröbner basis elements of degree at most `bound` for a homogeneous ideal.
///
/// Pairs above the bound are never reduced; for homogeneous input they
/// cannot affect lower degrees, so the result agrees with the full reduced
/// basis in every degree `<= bound`.
pub fn buchberger_truncated(ring: &Arc<PolyRing>, gens: &[Polynomial], bound: u32) -> Result<Vec<Polynomial>> {
    if gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    let mut setup = setup_for(ring);
    setup.degree_bound = Some(bound);
    let out = engine::groebner(&setup, Vec::new(), convert_all(ring, gens)?)?;
    Ok(out.into_iter().map(|p| from_vpoly(ring, p)).collect())
}

/// S-polynomial of two nonzero polynomials (leading coefficients normalised).
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    check_same(f.ring(), g.ring())?;
    if f.is_zero() || g.is_zero() {
        return Ok(Polynomial::zero(f.ring()));
    }
    let setup = setup_for(f.ring());
    let s = engine::s_vector(&setup, &to_vpoly(f), &to_vpoly(g)).expect("rank one");
    Ok(from_vpoly(f.ring(), s))
}

/// True when every S-polynomial of `basis` reduces to zero modulo `basis`.
pub fn is_groebner_basis(basis: &[Polynomial]) -> Result<bool> {
    let Some(first) = basis.first() else {
        return Ok(true);
    };
    let order = first.ring().order();
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            if !normal_form(&s_polynomial(a, b)?, basis, order)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
