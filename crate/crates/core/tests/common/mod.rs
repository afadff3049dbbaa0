#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sympow::parse::{parse_poly, Session};
use sympow::{Ideal, Monomial, PolyRing, Polynomial};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.sess"))
}

pub fn fixture(name: &str) -> Ideal {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture readable");
    let session = Session::from_text(&text).expect("fixture parses");
    session.default_ideal().expect("fixture defines an ideal").1.clone()
}

pub fn poly(ring: &Arc<PolyRing>, text: &str) -> Polynomial {
    parse_poly(ring, text).expect("polynomial parses")
}

pub fn ideal(ring: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
    Ideal::new(ring, gens.iter().map(|g| poly(ring, g))).expect("ideal builds")
}

pub fn ring(vars: &[&str]) -> Arc<PolyRing> {
    PolyRing::rationals(vars)
}

/// A random polynomial with small integer coefficients and total degree at most `deg`.
/// With `homogeneous` every term has degree exactly `deg`.
pub fn random_poly(rng: &mut ChaCha8Rng, ring: &Arc<PolyRing>, deg: u32, terms: usize, homogeneous: bool) -> Polynomial {
    let n = ring.nvars();
    let mut f = Polynomial::zero(ring);
    for _ in 0..terms {
        let target = if homogeneous { deg } else { rng.gen_range(0..=deg) };
        let mut e = vec![0u32; n];
        for _ in 0..target {
            e[rng.gen_range(0..n)] += 1;
        }
        let c = rng.gen_range(-3i64..=3);
        if c == 0 {
            continue;
        }
        let t = Polynomial::monomial(ring, ring.field().from_int(c), Monomial::new(e));
        f = f.add(&t).expect("same ring");
    }
    f
}

/// Generators of a random ideal; degrees drawn from `1..=max_deg`.
pub fn random_gens(
    rng: &mut ChaCha8Rng,
    ring: &Arc<PolyRing>,
    max_deg: u32,
    count: usize,
    homogeneous: bool,
) -> Vec<Polynomial> {
    let mut out = Vec::new();
    while out.len() < count {
        let d = rng.gen_range(1..=max_deg);
        let terms = rng.gen_range(1..=3);
        let f = random_poly(rng, ring, d, terms, homogeneous);
        if !f.is_zero() && !f.is_constant() {
            out.push(f);
        }
    }
    out
}

pub fn random_monomial_gens(rng: &mut ChaCha8Rng, ring: &Arc<PolyRing>, max_deg: u32, count: usize) -> Vec<Polynomial> {
    (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=max_deg);
            random_poly(rng, ring, d, 1, true)
        })
        .map(|f| if f.is_zero() { Polynomial::var(ring, 0) } else { f.make_monic() })
        .collect()
}
