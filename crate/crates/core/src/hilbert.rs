//! Hilbert series of graded quotients `S/I` and the invariants read off them.
//!
//! The series is computed from the leading-term ideal of a Gröbner basis by
//! the pivot recursion `N(I) = N(I + (p)) + t^deg(p) N(I : p)` on numerators
//! over `(1 - t)^n`.

use std::collections::BTreeMap;

use crate::cancel;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::linalg::{DegreeBasis, Echelon};
use crate::linalg::monomials_of_degree;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// `HS(S/I) = q(t) / (1 - t)^dim` with `q(1) != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    /// Coefficients of `q(t)`, constant term first.
    pub numerator: Vec<i128>,
    pub dim: usize,
    pub nvars: usize,
}

impl HilbertData {
    /// `dim_k (S/I)_d`.
    pub fn hilbert_function(&self, d: u32) -> i128 {
        let d = d as i128;
        if self.dim == 0 {
            return self.numerator.get(d as usize).copied().unwrap_or(0);
        }
        let k = self.dim as i128 - 1;
        self.numerator
            .iter()
            .enumerate()
            .filter(|&(i, _)| (i as i128) <= d)
            .map(|(i, &q)| q * binomial(d - i as i128 + k, k))
            .sum()
    }

    /// `q(1)`: the multiplicity, or the length when `dim = 0`.
    pub fn multiplicity(&self) -> i128 {
        self.numerator.iter().sum()
    }
}

fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Hilbert series of `S/I` for a homogeneous proper ideal (or the zero ideal).
pub fn hilbert_series(ideal: &Ideal) -> Result<HilbertData> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = ideal.ring().nvars();
    let leads: Vec<Monomial> = if ideal.is_zero() {
        Vec::new()
    } else {
        let gb = ideal.gb()?;
        if gb.is_unit() {
            return Err(Error::UnitIdeal);
        }
        gb.elements()
            .iter()
            .map(|g| g.lead_monomial().expect("nonzero").clone())
            .collect()
    };
    let mut numerator = monomial_numerator(minimalize(leads))?;
    let mut dim = n;
    while dim > 0 && numerator.iter().sum::<i128>() == 0 {
        numerator = divide_one_minus_t(&numerator);
        dim -= 1;
    }
    while numerator.len() > 1 && numerator.last() == Some(&0) {
        numerator.pop();
    }
    Ok(HilbertData {
        numerator,
        dim,
        nvars: n,
    })
}

/// Krull dimension of `S/I` and height of `I`.
pub fn krull_invariants(ideal: &Ideal) -> Result<(usize, usize)> {
    let h = hilbert_series(ideal)?;
    Ok((h.dim, h.nvars - h.dim))
}

/// `e(S/I)`; the length of `S/I` when it has dimension zero.
pub fn multiplicity(ideal: &Ideal) -> Result<u64> {
    let e = hilbert_series(ideal)?.multiplicity();
    u64::try_from(e).map_err(|_| Error::Invariant(format!("multiplicity {e} out of range")))
}

/// `α(I)`, the least degree of a nonzero element of a homogeneous ideal.
pub fn initial_degree(ideal: &Ideal) -> Result<u32> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    ideal
        .gens()
        .iter()
        .filter_map(Polynomial::degree)
        .min()
        .ok_or(Error::ZeroIdeal)
}

fn minimalize(mut monos: Vec<Monomial>) -> Vec<Monomial> {
    monos.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.exps().cmp(b.exps())));
    monos.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(monos.len());
    for m in monos {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<i128>, b: &[i128], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (j, &y) in b.iter().enumerate() {
        a[j + shift] += y;
    }
}

/// `p / (1 - t)` for `p(1) = 0`.
fn divide_one_minus_t(p: &[i128]) -> Vec<i128> {
    // p = (1 - t) r  =>  r_k = sum_{i <= k} p_i
    let mut r = Vec::with_capacity(p.len().saturating_sub(1).max(1));
    let mut acc = 0;
    for &c in &p[..p.len().saturating_sub(1)] {
        acc += c;
        r.push(acc);
    }
    if r.is_empty() {
        r.push(0);
    }
    r
}

/// Numerator of `HS(S/I)` over `(1 - t)^n` for a minimal monomial generating set.
fn monomial_numerator(gens: Vec<Monomial>) -> Result<Vec<i128>> {
    cancel::checkpoint()?;
    if gens.is_empty() {
        return Ok(vec![1]);
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let mut out = vec![1];
        for g in &gens {
            let mut f = vec![0; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            out = poly_mul(&out, &f);
        }
        return Ok(out);
    }
    // pivot on a variable shared by mixed generators; x^e with e below any
    // pure power of x keeps both branches strictly smaller
    let n = gens[0].nvars();
    let mixed: Vec<&Monomial> = gens.iter().filter(|g| g.support().count() > 1).collect();
    let mut counts = vec![0usize; n];
    for g in &mixed {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let var = (0..n).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).expect("nonempty");
    let mut exps: Vec<u32> = mixed.iter().map(|g| g.exps()[var]).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2];
    let mut pe = vec![0u32; n];
    pe[var] = e;
    let pivot = Monomial::new(pe);

    let mut plus = gens.clone();
    plus.push(pivot.clone());
    let quotient: Vec<Monomial> = gens
        .iter()
        .map(|g| g.div(&g.gcd(&pivot)).expect("gcd divides"))
        .collect();
    let mut out = monomial_numerator(minimalize(plus))?;
    let q = monomial_numerator(minimalize(quotient))?;
    poly_add_shifted(&mut out, &q, e as usize);
    Ok(out)
}

/// A basis of `A / (B + m A)` with `m` the homogeneous maximal ideal.
#[derive(Debug, Clone)]
pub struct GradedQuotient {
    /// `μ(A/B)`, the minimal number of generators of `A/B`.
    pub count: usize,
    /// Homogeneous lifts to `A`, by degree then leading term (descending).
    pub generators: Vec<(u32, Polynomial)>,
}

impl GradedQuotient {
    pub fn degrees(&self) -> Vec<u32> {
        self.generators.iter().map(|(d, _)| *d).collect()
    }
}

/// Minimal generators of `A/B` for homogeneous `B ⊆ A`, by degreewise linear
/// algebra on monomial coordinates. Each lift is the reduced echelon
/// representative of its class: it vanishes on the pivot monomials of
/// `(B + m A)_d`.
pub fn graded_quotient_mu(a: &Ideal, b: &Ideal) -> Result<GradedQuotient> {
    if !a.is_homogeneous() || !b.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if !a.contains(b)? {
        return Err(Error::Precondition("the submodule is not contained in the module".into()));
    }
    let ring = a.ring().clone();
    let b = b.with_order(ring.order())?;
    let mut gens_by_degree: BTreeMap<u32, Vec<&Polynomial>> = BTreeMap::new();
    for g in a.gens() {
        gens_by_degree.entry(g.degree().expect("nonzero")).or_default().push(g);
    }
    let (Some(&lo), Some(&hi)) = (gens_by_degree.keys().next(), gens_by_degree.keys().last()) else {
        return Ok(GradedQuotient {
            count: 0,
            generators: Vec::new(),
        });
    };
    let n = ring.nvars();
    let field = ring.field();
    let mut prev: Vec<Polynomial> = Vec::new();
    let mut generators = Vec::new();
    for d in lo..=hi {
        cancel::checkpoint()?;
        let basis = DegreeBasis::new(&ring, d);
        let mut base = Echelon::new(field, basis.len());
        for f in &prev {
            for v in 0..n {
                if base.is_full() {
                    break;
                }
                let x = Monomial::var(n, v);
                base.insert(basis.row(&f.mul_term(&crate::field::Scalar::one(), &x)));
            }
        }
        for g in b.gens() {
            let e = g.degree().expect("nonzero");
            if e > d || base.is_full() {
                continue;
            }
            for m in monomials_of_degree(n, d - e) {
                base.insert(basis.row(&g.mul_term(&crate::field::Scalar::one(), &m)));
            }
        }
        let mut quotient = Echelon::new(field, basis.len());
        for g in gens_by_degree.get(&d).into_iter().flatten() {
            let mut v = basis.row(g);
            base.reduce(&mut v);
            quotient.insert(v);
        }
        for row in quotient.rows() {
            generators.push((d, basis.poly(&ring, row)));
        }
        if d < hi {
            prev = base
                .rows()
                .iter()
                .chain(quotient.rows())
                .map(|row| basis.poly(&ring, row))
                .collect();
        }
    }
    Ok(GradedQuotient {
        count: generators.len(),
        generators,
    })
}
