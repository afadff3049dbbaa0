//! Presentation matrices, Fitting ideals and the hypothesis checks that the
//! symbolic power formulas rely on.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cancel;
use crate::error::{Error, Result};
use crate::groebner::syzygies;
use crate::hilbert::{hilbert_series, krull_invariants};
use crate::ideal::{linear_basis, Ideal};
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::{Polynomial, Term};
use crate::ring::PolyRing;

/// A matrix with polynomial entries, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Arc<PolyRing>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PolyMatrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("entries", &self.entries)
            .finish()
    }
}

impl PolyMatrix {
    pub fn from_rows(ring: &Arc<PolyRing>, rows: Vec<Vec<Polynomial>>) -> Result<PolyMatrix> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Structural("matrix rows have different lengths".into()));
        }
        let mut entries = Vec::with_capacity(nrows * ncols);
        for f in rows.into_iter().flatten() {
            if !f.ring().same_space(ring) {
                return Err(Error::RingMismatch);
            }
            entries.push(if f.ring().order() == ring.order() { f } else { f.to_ring(ring)? });
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    /// The matrix whose columns are `columns`, each of length `rows`.
    pub fn from_columns(ring: &Arc<PolyRing>, rows: usize, columns: &[Vec<Polynomial>]) -> Result<PolyMatrix> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::Structural("matrix columns have different lengths".into()));
        }
        let table = (0..rows)
            .map(|i| columns.iter().map(|c| c[i].clone()).collect())
            .collect();
        let mut m = PolyMatrix::from_rows(ring, table)?;
        m.rows = rows;
        m.cols = columns.len();
        Ok(m)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.entry(i, j).clone()).collect()
    }

    /// `v · M` for a row vector `v` of length `rows`.
    pub fn left_mul(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if v.len() != self.rows {
            return Err(Error::Structural("vector length does not match the matrix".into()));
        }
        (0..self.cols)
            .map(|j| {
                let mut acc = Polynomial::zero(&self.ring);
                for (i, vi) in v.iter().enumerate() {
                    acc = acc.add(&vi.mul(self.entry(i, j))?)?;
                }
                Ok(acc)
            })
            .collect()
    }
}

/// Memoized Laplace expansion of minors, keyed by row and column bitmasks.
struct Minors<'a> {
    m: &'a PolyMatrix,
    memo: HashMap<(u64, u64), Polynomial>,
}

impl Minors<'_> {
    fn det(&mut self, rows: u64, cols: u64) -> Result<Polynomial> {
        if let Some(d) = self.memo.get(&(rows, cols)) {
            return Ok(d.clone());
        }
        let ring = self.m.ring.clone();
        let row_list: Vec<usize> = bits(rows);
        let col_list: Vec<usize> = bits(cols);
        let out = if row_list.len() == 1 {
            self.m.entry(row_list[0], col_list[0]).clone()
        } else {
            cancel::checkpoint()?;
            // expand along the sparsest row
            let (ri, &r) = row_list
                .iter()
                .enumerate()
                .min_by_key(|&(_, &r)| col_list.iter().filter(|&&c| !self.m.entry(r, c).is_zero()).count())
                .expect("nonempty");
            let mut acc = Polynomial::zero(&ring);
            for (ci, &c) in col_list.iter().enumerate() {
                let a = self.m.entry(r, c);
                if a.is_zero() {
                    continue;
                }
                let sub = self.det(rows & !(1 << r), cols & !(1 << c))?;
                if sub.is_zero() {
                    continue;
                }
                let term = a.mul(&sub)?;
                acc = if (ri + ci) % 2 == 0 { acc.add(&term)? } else { acc.sub(&term)? };
            }
            acc
        };
        self.memo.insert((rows, cols), out.clone());
        Ok(out)
    }
}

fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn subsets(n: usize, k: usize) -> Vec<u64> {
    fn rec(start: usize, n: usize, k: usize, cur: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for i in start..=n - k {
            rec(i + 1, n, k - 1, cur | 1 << i, out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, 0, &mut out);
    }
    out
}

/// The ideal `I_k(M)` of `k`-minors. `I_0` is the unit ideal and `I_k = 0`
/// when `k` exceeds either dimension. Minors lying in the linear span of
/// those already collected (same degree) are skipped.
pub fn minors_ideal(m: &PolyMatrix, k: usize) -> Result<Ideal> {
    if k == 0 {
        return Ok(Ideal::unit(&m.ring));
    }
    if k > m.rows || k > m.cols {
        return Ok(Ideal::zero(&m.ring));
    }
    if m.rows > 64 || m.cols > 64 {
        return Err(Error::Structural("matrices with more than 64 rows or columns are not supported".into()));
    }
    let mut minors = Minors { m, memo: HashMap::new() };
    let mut by_degree: BTreeMap<Option<u32>, (Vec<Polynomial>, usize)> = BTreeMap::new();
    for rows in subsets(m.rows, k) {
        for cols in subsets(m.cols, k) {
            let d = minors.det(rows, cols)?;
            if d.is_zero() {
                continue;
            }
            let key = d.is_homogeneous().then(|| d.degree().expect("nonzero"));
            let (group, limit) = by_degree.entry(key).or_insert_with(|| (Vec::new(), 64));
            group.push(d);
            if group.len() > *limit {
                *group = linear_basis(&m.ring, group);
                *limit = (2 * group.len()).max(64);
            }
        }
    }
    let gens: Vec<Polynomial> = by_degree
        .values()
        .flat_map(|(g, _)| linear_basis(&m.ring, g))
        .collect();
    let ideal = Ideal::new(&m.ring, gens)?;
    if ideal.is_homogeneous() {
        ideal.minimal_generators()
    } else {
        Ok(ideal)
    }
}

/// A presentation of `I`: its minimal generators `f` (as a row) and a matrix
/// `φ` whose columns generate the syzygies of `f`.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub generators: Vec<Polynomial>,
    pub matrix: PolyMatrix,
}

/// Minimal generators of `I` and their first syzygy matrix (`μ × q`).
pub fn syzygy_matrix(ideal: &Ideal) -> Result<Presentation> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let generators = ideal.minimal_generators()?.gens().to_vec();
    let ring = ideal.ring();
    let syz = syzygies(ring, &generators)?;
    let columns: Vec<Vec<Polynomial>> = syz.into_iter().map(|e| e.components().to_vec()).collect();
    let matrix = PolyMatrix::from_columns(ring, generators.len(), &columns)?;
    Ok(Presentation { generators, matrix })
}

/// The Fitting ideal `F_j(I) = I_{μ-j}(φ)` of `I` regarded as a module.
pub fn fitting_ideal(ideal: &Ideal, j: usize) -> Result<Ideal> {
    let p = syzygy_matrix(ideal)?;
    fitting_from_presentation(&p, j)
}

pub fn fitting_from_presentation(p: &Presentation, j: usize) -> Result<Ideal> {
    let mu = p.generators.len();
    if j >= mu {
        return Ok(Ideal::unit(p.matrix.ring()));
    }
    minors_ideal(&p.matrix, mu - j)
}

/// Outcome of a hypothesis check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    Failed,
    Unverified,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Failed => "failed",
            Status::Unverified => "unverified",
        })
    }
}

/// Hypotheses of the Fitting-ideal formulas for a homogeneous ideal `I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssumptionReport {
    /// `c = ht(I)`.
    pub height_c: usize,
    /// `μ(I)`.
    pub mu: usize,
    /// `ht F_c(I)`; `None` when `F_c(I)` is the unit ideal.
    pub fitting_height: Option<usize>,
    /// `ht F_c(I) >= c + 1`, i.e. `I` is generically a complete intersection.
    pub generically_ci_proxy: bool,
    pub unmixed_status: Status,
    pub radical_status: Status,
    /// How each status was decided.
    pub evidence: Vec<String>,
}

impl AssumptionReport {
    pub fn fitting_height_display(&self) -> String {
        self.fitting_height.map_or_else(|| "unit".to_string(), |h| h.to_string())
    }
}

/// `F_c(I)` together with the hypothesis report.
#[derive(Debug, Clone)]
pub struct Assumptions {
    pub fitting: Ideal,
    pub report: AssumptionReport,
}

/// Checks the hypotheses for a homogeneous proper ideal.
///
/// Monomial ideals are decided exactly. For other ideals unmixedness is
/// verified when `S/I` is certified Cohen–Macaulay (a linear regular sequence
/// of length `dim S/I` is found by comparing Hilbert series), and radicality
/// when in addition the Jacobian criterion shows `I` generically reduced.
pub fn check_assumptions(ideal: &Ideal) -> Result<Assumptions> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit()? {
        return Err(Error::UnitIdeal);
    }
    let (dim, c) = krull_invariants(ideal)?;
    let presentation = syzygy_matrix(ideal)?;
    let mu = presentation.generators.len();
    let fitting = fitting_from_presentation(&presentation, c)?;
    let fitting_height = if fitting.is_unit()? {
        None
    } else if fitting.is_zero() {
        Some(0)
    } else {
        Some(krull_invariants(&fitting)?.1)
    };
    let generically_ci_proxy = fitting_height.is_none_or(|h| h > c);
    let mut evidence = Vec::new();
    let (unmixed_status, radical_status) = match MonomialIdeal::from_ideal(ideal) {
        Ok(mono) => {
            let primes = mono.associated_primes()?;
            let heights: Vec<usize> = primes.iter().map(|p| p.len()).collect();
            let unmixed = if heights.windows(2).all(|w| w[0] == w[1]) {
                Status::Verified
            } else {
                Status::Failed
            };
            evidence.push(format!(
                "monomial ideal; associated prime heights {heights:?}"
            ));
            let radical = if mono.is_squarefree() {
                evidence.push("monomial ideal; squarefree generators".into());
                Status::Verified
            } else {
                evidence.push("monomial ideal; a minimal generator is not squarefree".into());
                Status::Failed
            };
            (unmixed, radical)
        }
        Err(Error::Precondition(_)) => {
            if cohen_macaulay_certificate(ideal, dim)? {
                evidence.push(format!(
                    "Cohen-Macaulay: a linear regular sequence of length {dim} was found"
                ));
                let radical = if generically_reduced(ideal, c)? {
                    evidence.push("Jacobian criterion: generically smooth".into());
                    Status::Verified
                } else {
                    Status::Unverified
                };
                (Status::Verified, radical)
            } else {
                (Status::Unverified, Status::Unverified)
            }
        }
        Err(e) => return Err(e),
    };
    Ok(Assumptions {
        fitting,
        report: AssumptionReport {
            height_c: c,
            mu,
            fitting_height,
            generically_ci_proxy,
            unmixed_status,
            radical_status,
            evidence,
        },
    })
}

/// Looks for linear forms `l_1..l_d` (`d = dim S/I`) with
/// `HS(S/(I, l_1..l_k)) = (1-t)^k HS(S/I)` for every `k`. Each equality
/// forces `l_k` to be a nonzerodivisor modulo the previous ones, so success
/// proves `S/I` Cohen–Macaulay. Candidates are pseudo-random with a fixed seed.
fn cohen_macaulay_certificate(ideal: &Ideal, dim: usize) -> Result<bool> {
    let ring = ideal.ring();
    let target = hilbert_series(ideal)?.numerator;
    if dim == 0 {
        return Ok(true);
    }
    let n = ring.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    'attempt: for attempt in 0..3 {
        let mut cur = ideal.clone();
        for k in 0..dim {
            cancel::checkpoint()?;
            let form = if attempt == 0 {
                Polynomial::var(ring, n - 1 - k)
            } else {
                let terms = (0..n).map(|v| Term {
                    coeff: ring.field().from_int(rng.gen_range(1..=31i64)),
                    mono: crate::monomial::Monomial::var(n, v),
                });
                Polynomial::from_terms(ring, terms)
            };
            cur = cur.sum(&Ideal::new(ring, [form])?)?;
            let h = hilbert_series(&cur)?;
            if h.dim != dim - k - 1 || h.numerator != target {
                continue 'attempt;
            }
        }
        return Ok(true);
    }
    Ok(false)
}

/// Jacobian criterion: `ht(I + I_c(Jac)) > c` means `S/I` is generically
/// smooth, hence reduced when it is also Cohen–Macaulay. Characteristic zero only.
fn generically_reduced(ideal: &Ideal, c: usize) -> Result<bool> {
    let ring = ideal.ring();
    if ring.field().characteristic() != 0 {
        return Ok(false);
    }
    let gens = ideal.minimal_generators()?.gens().to_vec();
    let rows: Vec<Vec<Polynomial>> = gens
        .iter()
        .map(|g| (0..ring.nvars()).map(|v| g.partial_derivative(v)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let jac = PolyMatrix::from_rows(ring, rows)?;
    let minors = minors_ideal(&jac, c)?;
    let sum = ideal.sum(&minors)?;
    if sum.is_unit()? {
        return Ok(true);
    }
    Ok(krull_invariants(&sum)?.1 > c)
}
