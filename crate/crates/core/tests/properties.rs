mod common;

use std::sync::Arc;

use common::ring;
use proptest::prelude::*;
use sympow::groebner::{buchberger, is_groebner_basis, s_polynomial};
use sympow::hilbert::{krull_invariants, multiplicity};
use sympow::monomial_ideal::{symbolic_power_monomial, MonomialIdeal};
use sympow::symbolic::{binomial, Strategy as Route, SymbolicPowers};
use sympow::{Ideal, Monomial, PolyRing, Polynomial};

type RawPoly = Vec<(Vec<u32>, i64)>;

fn raw_poly(nvars: usize, max_exp: u32) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, nvars), -4i64..=4), 1..4)
}

fn raw_homogeneous(nvars: usize, deg: u32) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec((prop::collection::vec(0..=deg, nvars), -4i64..=4), 1..4).prop_map(move |terms| {
        terms
            .into_iter()
            .map(|(mut e, c)| {
                // Push the exponent vector onto the degree-`deg` simplex.
                let mut total: u32 = e.iter().sum();
                let mut i = 0;
                while total > deg {
                    if e[i] > 0 {
                        e[i] -= 1;
                        total -= 1;
                    }
                    i = (i + 1) % e.len();
                }
                e[0] += deg - total;
                (e, c)
            })
            .collect()
    })
}

fn build(ring: &Arc<PolyRing>, raw: &RawPoly) -> Polynomial {
    let terms = raw.iter().filter(|(_, c)| *c != 0).map(|(e, c)| {
        Polynomial::monomial(ring, ring.field().from_int(*c), Monomial::new(e.clone()))
    });
    terms.fold(Polynomial::zero(ring), |acc, t| acc.add(&t).expect("same ring"))
}

fn build_ideal(ring: &Arc<PolyRing>, raws: &[RawPoly]) -> Ideal {
    Ideal::new(ring, raws.iter().map(|r| build(ring, r))).expect("ideal")
}

fn homogeneous_gens(nvars: usize) -> impl Strategy<Value = Vec<RawPoly>> {
    prop::collection::vec((1u32..=2).prop_flat_map(move |d| raw_homogeneous(nvars, d)), 1..4)
}

fn monomial_gens(nvars: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0u32..=2, nvars), 1..5)
}

fn squarefree_gens(nvars: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0u32..=1, nvars), 1..5)
}

fn mono_ideal(ring: &Arc<PolyRing>, gens: &[Vec<u32>]) -> Option<MonomialIdeal> {
    let gens: Vec<Monomial> = gens.iter().filter(|e| e.iter().any(|&x| x > 0)).map(|e| Monomial::new(e.clone())).collect();
    if gens.is_empty() {
        return None;
    }
    MonomialIdeal::new(ring, gens).ok()
}

const XYZ: [&str; 3] = ["x", "y", "z"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduced_gb_is_a_groebner_basis_with_reduced_s_pairs(raws in prop::collection::vec(raw_poly(3, 2), 1..4)) {
        let r = ring(&XYZ);
        let gens: Vec<Polynomial> = raws.iter().map(|p| build(&r, p)).filter(|p| !p.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let gb = buchberger(&r, &gens).unwrap();
        prop_assert!(is_groebner_basis(gb.elements()).unwrap());
        for f in gb.elements() {
            for g in gb.elements() {
                let s = s_polynomial(f, g).unwrap();
                prop_assert!(gb.normal_form(&s).unwrap().is_zero());
            }
        }
        for g in &gens {
            prop_assert!(gb.contains(g).unwrap());
        }
        let mut rev = gens.clone();
        rev.reverse();
        let again = buchberger(&r, &rev).unwrap();
        prop_assert_eq!(again.digest(), gb.digest());
    }

    #[test]
    fn colon_adjunctions(a in homogeneous_gens(3), b in homogeneous_gens(3)) {
        let r = ring(&XYZ);
        let i = build_ideal(&r, &a);
        let j = build_ideal(&r, &b);
        prop_assume!(!i.is_zero() && !j.is_zero());
        let q = i.colon(&j).unwrap();
        prop_assert!(q.contains(&i).unwrap());
        prop_assert!(i.contains(&j.product(&q).unwrap()).unwrap());
        let (s, _) = i.saturate(&j).unwrap();
        prop_assert!(s.contains(&q).unwrap());
        let (s2, t2) = s.saturate(&j).unwrap();
        prop_assert!(s2.equal(&s).unwrap());
        prop_assert_eq!(t2, 0);
    }

    #[test]
    fn intersection_is_the_meet(a in homogeneous_gens(3), b in homogeneous_gens(3), c in raw_homogeneous(3, 3)) {
        let r = ring(&XYZ);
        let i = build_ideal(&r, &a);
        let j = build_ideal(&r, &b);
        prop_assume!(!i.is_zero() && !j.is_zero());
        let k = i.intersect(&j).unwrap();
        prop_assert!(i.contains(&k).unwrap() && j.contains(&k).unwrap());
        prop_assert!(k.contains(&i.product(&j).unwrap()).unwrap());
        let f = build(&r, &c);
        let in_both = i.contains_poly(&f).unwrap() && j.contains_poly(&f).unwrap();
        prop_assert_eq!(k.contains_poly(&f).unwrap(), in_both);
    }

    #[test]
    fn powers_multiply(a in homogeneous_gens(3), p in 1u32..=2, q in 1u32..=2) {
        let r = ring(&XYZ);
        let i = build_ideal(&r, &a);
        prop_assume!(!i.is_zero());
        let lhs = i.power(p).unwrap().product(&i.power(q).unwrap()).unwrap();
        prop_assert!(lhs.equal(&i.power(p + q).unwrap()).unwrap());
    }

    #[test]
    fn colon_by_a_power_is_iterated_colon(a in homogeneous_gens(3), b in homogeneous_gens(3)) {
        let r = ring(&XYZ);
        let i = build_ideal(&r, &a).power(2).unwrap();
        let j = build_ideal(&r, &b);
        prop_assume!(!i.is_zero() && !j.is_zero());
        let iterated = i.colon_power(&j, 2).unwrap();
        let direct = i.colon(&j.power(2).unwrap()).unwrap();
        prop_assert!(iterated.equal(&direct).unwrap());
    }

    #[test]
    fn radical_membership_matches_squarefree_support(gens in monomial_gens(3), probe in prop::collection::vec(0u32..=3, 3)) {
        let r = ring(&XYZ);
        let Some(mi) = mono_ideal(&r, &gens) else { return Ok(()) };
        let i = mi.to_ideal();
        let f = Polynomial::monomial(&r, r.field().one(), Monomial::new(probe.clone()));
        // A monomial lies in the radical of a monomial ideal iff some generator's
        // support is contained in its support.
        let expected = mi.gens().iter().any(|g| g.exps().iter().zip(&probe).all(|(&e, &p)| e == 0 || p > 0));
        prop_assert_eq!(i.radical_contains(&f).unwrap(), expected);
        // Brute force: f^k in I for k up to the largest generator exponent.
        let kmax = mi.gens().iter().flat_map(|g| g.exps().iter().copied()).max().unwrap_or(1).max(1);
        let brute = (1..=kmax).any(|k| i.contains_poly(&f.pow(k)).unwrap());
        prop_assert_eq!(brute, expected);
    }

    #[test]
    fn radical_membership_is_stable_under_powers(a in homogeneous_gens(3), c in raw_homogeneous(3, 1)) {
        let r = ring(&XYZ);
        let i = build_ideal(&r, &a);
        let f = build(&r, &c);
        prop_assume!(!i.is_zero() && !f.is_zero());
        let base = i.radical_contains(&f).unwrap();
        prop_assert_eq!(i.radical_contains(&f.pow(3)).unwrap(), base);
        if i.contains_poly(&f.pow(2)).unwrap() {
            prop_assert!(base);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn formula_matches_monomial_oracle_when_hypotheses_hold(gens in squarefree_gens(4), m in 2u32..=3) {
        let r = ring(&["x", "y", "z", "w"]);
        let Some(mi) = mono_ideal(&r, &gens) else { return Ok(()) };
        let i = mi.to_ideal().minimal_generators().unwrap();
        let sp = SymbolicPowers::new(&i).unwrap();
        let formula = sp.symbolic_power(m, Route::ColonPower).unwrap().ideal;
        let sat = sp.symbolic_power(m, Route::Saturation).unwrap().ideal;
        let oracle = symbolic_power_monomial(&mi, m).unwrap();
        if sp.hypotheses_hold() {
            prop_assert!(formula.equal(&oracle).unwrap());
            prop_assert!(sat.equal(&oracle).unwrap());
            let c = sp.height() as u64;
            let e = multiplicity(&i).unwrap();
            let lhs = multiplicity(&formula).unwrap();
            prop_assert_eq!(binomial(c + m as u64 - 1, c) * e, lhs.into());
            let (_, h) = krull_invariants(&formula).unwrap();
            prop_assert_eq!(h as u64, c);
        }
    }
}
