//! Symbolic powers through Fitting ideals, and the certificates built on them.
//!
//! For an unmixed ideal `I` of height `c` that is generically a complete
//! intersection, `I^(m) = I^m : F_c(I)^(m-1) = I^m : F_c(I)^∞`. Everything
//! here is computed from one [`SymbolicPowers`] per ideal, which keeps the
//! Fitting ideal, the hypothesis report and the powers already computed.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fitting::{check_assumptions, AssumptionReport, Status};
use crate::hilbert::{graded_quotient_mu, initial_degree, krull_invariants, multiplicity};
use crate::ideal::Ideal;
use crate::monomial_ideal::{symbolic_power_monomial, MonomialIdeal};
use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// `I^m : F_c(I)^(m-1)`.
    ColonPower,
    /// `I^m : F_c(I)^∞`.
    Saturation,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::ColonPower => "colon",
            Strategy::Saturation => "saturation",
        })
    }
}

/// What a computed ideal is known to be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Semantics {
    /// The hypotheses hold (or were attested), so the value is `I^(m)`.
    SymbolicPower,
    /// The formula was evaluated without its hypotheses.
    FormulaValue,
}

#[derive(Debug, Clone)]
pub struct SymbolicResult {
    pub ideal: Ideal,
    pub strategy: Strategy,
    /// `m - 1` for the colon strategy; the stabilization exponent for saturation.
    pub exponent_used: u32,
    pub semantics: Semantics,
    pub assumptions: AssumptionReport,
}

/// Symbolic powers of one homogeneous ideal, with memoized intermediate results.
#[derive(Debug)]
pub struct SymbolicPowers {
    ideal: Ideal,
    fitting: Ideal,
    report: AssumptionReport,
    attested_unmixed: bool,
    attested_radical: bool,
    powers: Mutex<BTreeMap<u32, Ideal>>,
    results: Mutex<BTreeMap<(u32, Strategy), SymbolicResult>>,
}

impl SymbolicPowers {
    /// Computes `F_c(I)` and the hypothesis report. Requires `I` homogeneous and proper.
    pub fn new(ideal: &Ideal) -> Result<SymbolicPowers> {
        let a = check_assumptions(ideal)?;
        Ok(SymbolicPowers {
            ideal: ideal.clone(),
            fitting: a.fitting,
            report: a.report,
            attested_unmixed: false,
            attested_radical: false,
            powers: Mutex::new(BTreeMap::new()),
            results: Mutex::new(BTreeMap::new()),
        })
    }

    /// Accepts unmixedness (and radicality) from the caller where it could not be verified.
    pub fn attest(mut self, unmixed: bool, radical: bool) -> SymbolicPowers {
        self.attested_unmixed = unmixed;
        self.attested_radical = radical;
        self
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// `F_c(I)` with `c = ht I`.
    pub fn fitting(&self) -> &Ideal {
        &self.fitting
    }

    pub fn report(&self) -> &AssumptionReport {
        &self.report
    }

    pub fn height(&self) -> usize {
        self.report.height_c
    }

    fn unmixed_ok(&self) -> bool {
        self.report.unmixed_status == Status::Verified
            || (self.attested_unmixed && self.report.unmixed_status != Status::Failed)
    }

    fn radical_ok(&self) -> bool {
        self.report.radical_status == Status::Verified
            || (self.attested_radical && self.report.radical_status != Status::Failed)
    }

    /// True when the formulas are known to compute `I^(m)`.
    pub fn hypotheses_hold(&self) -> bool {
        self.report.generically_ci_proxy && self.unmixed_ok()
    }

    pub fn semantics(&self) -> Semantics {
        if self.hypotheses_hold() {
            Semantics::SymbolicPower
        } else {
            Semantics::FormulaValue
        }
    }

    /// `I^m` (memoized).
    pub fn power(&self, m: u32) -> Result<Ideal> {
        if let Some(p) = self.powers.lock().expect("power cache").get(&m) {
            return Ok(p.clone());
        }
        let p = self.ideal.power(m)?;
        self.powers.lock().expect("power cache").insert(m, p.clone());
        Ok(p)
    }

    /// The formula value for `I^(m)` under `strategy` (memoized).
    pub fn symbolic_power(&self, m: u32, strategy: Strategy) -> Result<SymbolicResult> {
        if m == 0 {
            return Err(Error::Precondition("the exponent must be positive".into()));
        }
        if let Some(r) = self.results.lock().expect("result cache").get(&(m, strategy)) {
            return Ok(r.clone());
        }
        let (ideal, exponent_used) = if m == 1 {
            (self.ideal.clone(), 0)
        } else if self.fitting.is_unit()? {
            (self.power(m)?, match strategy {
                Strategy::ColonPower => m - 1,
                Strategy::Saturation => 0,
            })
        } else {
            let pm = self.power(m)?;
            match strategy {
                Strategy::ColonPower => (pm.colon_power(&self.fitting, m - 1)?, m - 1),
                Strategy::Saturation => pm.saturate(&self.fitting)?,
            }
        };
        let ideal = ideal.minimal_generators()?;
        let result = SymbolicResult {
            ideal,
            strategy,
            exponent_used,
            semantics: self.semantics(),
            assumptions: self.report.clone(),
        };
        self.results
            .lock()
            .expect("result cache")
            .insert((m, strategy), result.clone());
        Ok(result)
    }

    /// `I^m : F_c(I)^t`.
    pub fn colon_exponent(&self, m: u32, t: u32) -> Result<Ideal> {
        self.power(m)?.colon_power(&self.fitting, t)
    }

    /// Whether `I^(m) = I^m`.
    pub fn equals_ordinary(&self, m: u32) -> Result<bool> {
        let s = self.symbolic_power(m, Strategy::ColonPower)?;
        s.ideal.equal(&self.power(m)?)
    }

    /// Compares `e(S/J)` with `e(S/I)·C(c+m-1, c)` for `J ⊆ I^(m)` of the same height.
    pub fn multiplicity_certificate(&self, j: &Ideal, m: u32) -> Result<CertificateResult> {
        if m == 0 {
            return Err(Error::Precondition("the exponent must be positive".into()));
        }
        let c = self.height();
        let binom = binomial(c as u64 + m as u64 - 1, c as u64);
        let e_i = multiplicity(&self.ideal)?;
        let required = BigUint::from(e_i) * &binom;
        let mut result = CertificateResult {
            verdict: Verdict::Inconclusive,
            lhs_multiplicity: None,
            required: required.to_string(),
            binom_factor: binom.to_string(),
            reason: None,
            caveat: None,
        };
        if !j.is_homogeneous() {
            result.reason = Some("the candidate ideal is not homogeneous".into());
            return Ok(result);
        }
        if j.is_zero() || j.is_unit()? {
            result.reason = Some("the candidate ideal is zero or the unit ideal".into());
            return Ok(result);
        }
        let (_, hj) = krull_invariants(j)?;
        if hj != c {
            result.reason = Some(format!("height of the candidate is {hj}, expected {c}"));
            return Ok(result);
        }
        let sym = self.symbolic_power(m, Strategy::ColonPower)?;
        if !sym.ideal.contains(j)? {
            result.reason = Some("the candidate is not contained in the symbolic power".into());
            return Ok(result);
        }
        let lhs = multiplicity(j)?;
        result.lhs_multiplicity = Some(lhs);
        result.verdict = if BigUint::from(lhs) == required {
            Verdict::CertifiedEqual
        } else {
            Verdict::NotEqual
        };
        if !self.hypotheses_hold() {
            result.caveat = Some("hypotheses on the ideal are not verified".into());
        } else if result.verdict == Verdict::CertifiedEqual && !sym.ideal.equal(j)? {
            result.caveat = Some("the candidate has embedded components; its unmixed part equals the symbolic power".into());
        }
        Ok(result)
    }

    /// `I^m : I^(m) = ann(I^(m)/I^m)`.
    pub fn annihilator_quotient(&self, m: u32) -> Result<Ideal> {
        let pm = self.power(m)?;
        let sym = self.symbolic_power(m, Strategy::ColonPower)?;
        let extra: Vec<Polynomial> = sym
            .ideal
            .gens()
            .iter()
            .filter(|g| !pm.contains_poly(g).unwrap_or(false))
            .cloned()
            .collect();
        if extra.is_empty() {
            return Ok(Ideal::unit(self.ideal.ring()));
        }
        pm.colon(&Ideal::new(self.ideal.ring(), extra)?)
    }

    /// Checks `ann(I^(m)/I^m) = m^⌊m(N-2)/(N-1)⌋` for `N` variables and an
    /// ideal of height `N-1` minimally generated by `C(N,2)` quadrics.
    pub fn em_formula_check(&self, m: u32, n: usize) -> Result<EmCheck> {
        let ring = self.ideal.ring();
        if n < 2 || ring.nvars() != n {
            return Err(Error::Precondition(format!("the ring must have {n} variables")));
        }
        if self.height() != n - 1 {
            return Err(Error::Precondition(format!("the ideal must have height {}", n - 1)));
        }
        let mingens = self.ideal.minimal_generators()?;
        let quadrics = n * (n - 1) / 2;
        if mingens.gens().len() != quadrics || mingens.gens().iter().any(|g| g.degree() != Some(2)) {
            return Err(Error::Precondition(format!(
                "the ideal must be minimally generated by {quadrics} quadrics"
            )));
        }
        if !self.radical_ok() {
            return Err(Error::Precondition("the ideal is not known to be radical".into()));
        }
        let expected = (m as usize * (n - 2) / (n - 1)) as u32;
        let actual = self.annihilator_quotient(m)?;
        let target = Ideal::maximal_power(ring, expected);
        let pass = actual.equal(&target)?;
        Ok(EmCheck {
            pass,
            expected_exponent: expected,
            actual_exponent: actual.maximal_power_exponent()?,
            actual,
        })
    }

    /// `mα(I) - t0·α(F_c(I))`, with `α` of the unit ideal taken as 0.
    pub fn alpha_lower_bound(&self, m: u32, t0: u32) -> Result<i64> {
        let a = initial_degree(&self.ideal)? as i64;
        let af = if self.fitting.is_unit()? {
            0
        } else {
            initial_degree(&self.fitting)? as i64
        };
        Ok(m as i64 * a - t0 as i64 * af)
    }

    /// The bound together with `α(I^(m))`.
    pub fn alpha_check(&self, m: u32, t0: u32) -> Result<AlphaCheck> {
        let bound = self.alpha_lower_bound(m, t0)?;
        let actual = initial_degree(&self.symbolic_power(m, Strategy::ColonPower)?.ideal)?;
        Ok(AlphaCheck {
            bound,
            actual,
            holds: bound <= actual as i64,
            attained: bound == actual as i64,
        })
    }

    /// `sdefect(I, m) = μ(I^(m)/I^m)` with homogeneous lifts of a minimal basis.
    pub fn symbolic_defect(&self, m: u32) -> Result<Defect> {
        let sym = self.symbolic_power(m, Strategy::ColonPower)?;
        let q = graded_quotient_mu(&sym.ideal, &self.power(m)?)?;
        Ok(Defect {
            count: q.count,
            witnesses: q.generators,
        })
    }

    /// Compares `rad(J(g_1) + ... + J(g_s))` with `I` for generators `g_j` of
    /// `I^(m)/I^m` (the defect lifts when `witnesses` is `None`).
    pub fn conjecture_check(&self, m: u32, witnesses: Option<Vec<Polynomial>>) -> Result<ConjectureReport> {
        let ring = self.ideal.ring();
        if ring.field().characteristic() != 0 {
            return Err(Error::UnsupportedCharacteristic(ring.field().to_string()));
        }
        let defect = self.symbolic_defect(m)?;
        let sym = self.symbolic_power(m, Strategy::ColonPower)?;
        let pm = self.power(m)?;
        let witnesses = match witnesses {
            None => defect.witnesses.iter().map(|(_, g)| g.clone()).collect(),
            Some(ws) => {
                for w in &ws {
                    if !sym.ideal.contains_poly(w)? {
                        return Err(Error::Precondition(format!("witness {w} is not in the symbolic power")));
                    }
                }
                let generated = pm.sum(&Ideal::new(ring, ws.iter().cloned())?)?;
                if !generated.contains(&sym.ideal)? {
                    let degrees = if generated.is_homogeneous() {
                        let mut d = graded_quotient_mu(&sym.ideal, &generated)?.degrees();
                        d.dedup();
                        format!("{d:?}")
                    } else {
                        "unknown (inhomogeneous witnesses)".into()
                    };
                    return Err(Error::Precondition(format!(
                        "the witnesses do not generate the symbolic power modulo the ordinary power; missing degrees {degrees}"
                    )));
                }
                ws
            }
        };
        let mut partials = Vec::new();
        let mut containment_zn = true;
        for g in &witnesses {
            for v in 0..ring.nvars() {
                let d = g.partial_derivative(v)?;
                if d.is_zero() {
                    continue;
                }
                if containment_zn && !self.ideal.contains_poly(&d)? {
                    containment_zn = false;
                }
                partials.push(d);
            }
        }
        let jacobian_sum = Ideal::new(ring, partials)?.minimal_generators()?;
        let ideal_in_radical = if jacobian_sum.is_zero() {
            false
        } else {
            jacobian_sum.radical_contains_ideal(&self.ideal)?
        };
        let partials_in_radical = self.ideal.radical_contains_ideal(&jacobian_sum)?;
        let radical_equal = ideal_in_radical && partials_in_radical;
        let jacobian_equals_ideal = jacobian_sum.equal(&self.ideal)?;
        Ok(ConjectureReport {
            sdefect: defect.count,
            witnesses,
            jacobian_sum,
            radical_equal,
            containment_zn,
            jacobian_equals_ideal,
            radical_status: self.report.radical_status,
        })
    }

    /// The monomial oracle for squarefree monomial ideals.
    pub fn oracle(&self, m: u32) -> Result<Ideal> {
        symbolic_power_monomial(&MonomialIdeal::from_ideal(&self.ideal)?, m)
    }
}

/// `C(n, k)` in arbitrary precision.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut r = BigUint::one();
    for i in 0..k {
        r = r * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    r
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    CertifiedEqual,
    NotEqual,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateResult {
    pub verdict: Verdict,
    pub lhs_multiplicity: Option<u64>,
    /// `e(S/I)·C(c+m-1, c)`, in decimal.
    pub required: String,
    pub binom_factor: String,
    pub reason: Option<String>,
    pub caveat: Option<String>,
}

impl CertificateResult {
    pub fn required_u64(&self) -> Option<u64> {
        self.required.parse::<BigUint>().ok().and_then(|b| b.to_u64())
    }
}

#[derive(Debug, Clone)]
pub struct EmCheck {
    pub pass: bool,
    pub expected_exponent: u32,
    /// `k` when the annihilator is a power of the maximal ideal.
    pub actual_exponent: Option<u32>,
    pub actual: Ideal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AlphaCheck {
    pub bound: i64,
    pub actual: u32,
    pub holds: bool,
    pub attained: bool,
}

#[derive(Debug, Clone)]
pub struct Defect {
    pub count: usize,
    /// Homogeneous lifts with their degrees.
    pub witnesses: Vec<(u32, Polynomial)>,
}

impl Defect {
    pub fn degrees(&self) -> Vec<u32> {
        self.witnesses.iter().map(|(d, _)| *d).collect()
    }
}

#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub sdefect: usize,
    pub witnesses: Vec<Polynomial>,
    /// `J(g_1) + ... + J(g_s)`, minimally generated.
    pub jacobian_sum: Ideal,
    pub radical_equal: bool,
    /// Every partial derivative of every witness lies in `I`.
    pub containment_zn: bool,
    pub jacobian_equals_ideal: bool,
    pub radical_status: Status,
}

/// `I^(m)` by the chosen strategy.
pub fn symbolic_power(ideal: &Ideal, m: u32, strategy: Strategy) -> Result<SymbolicResult> {
    SymbolicPowers::new(ideal)?.symbolic_power(m, strategy)
}

pub fn equals_ordinary(ideal: &Ideal, m: u32) -> Result<bool> {
    SymbolicPowers::new(ideal)?.equals_ordinary(m)
}

pub fn multiplicity_certificate(ideal: &Ideal, j: &Ideal, m: u32) -> Result<CertificateResult> {
    SymbolicPowers::new(ideal)?.multiplicity_certificate(j, m)
}

pub fn annihilator_quotient(ideal: &Ideal, m: u32) -> Result<Ideal> {
    SymbolicPowers::new(ideal)?.annihilator_quotient(m)
}

pub fn em_formula_check(ideal: &Ideal, m: u32, n: usize) -> Result<EmCheck> {
    SymbolicPowers::new(ideal)?.em_formula_check(m, n)
}

pub fn alpha_lower_bound(ideal: &Ideal, m: u32, t0: u32) -> Result<i64> {
    SymbolicPowers::new(ideal)?.alpha_lower_bound(m, t0)
}

pub fn symbolic_defect(ideal: &Ideal, m: u32) -> Result<Defect> {
    SymbolicPowers::new(ideal)?.symbolic_defect(m)
}

pub fn conjecture_check(ideal: &Ideal, m: u32, witnesses: Option<Vec<Polynomial>>) -> Result<ConjectureReport> {
    SymbolicPowers::new(ideal)?.conjecture_check(m, witnesses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::PolyRing;
    use std::sync::Arc;

    fn ideal(ring: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
        Ideal::new(ring, gens.iter().map(|s| parse_poly(ring, s).unwrap())).unwrap()
    }

    #[test]
    fn complete_intersection() {
        let r = PolyRing::rationals(&["x", "y", "z"]);
        let ci = SymbolicPowers::new(&ideal(&r, &["x", "y"])).unwrap();
        for m in 1..4 {
            assert!(ci.equals_ordinary(m).unwrap());
            assert_eq!(ci.symbolic_defect(m).unwrap().count, 0);
            assert!(ci.annihilator_quotient(m).unwrap().is_unit().unwrap());
            assert_eq!(ci.alpha_lower_bound(m, 1).unwrap(), m as i64);
        }
        assert!(ci.em_formula_check(2, 3).is_err());
    }

    #[test]
    fn star_configuration() {
        let r = PolyRing::rationals(&["x", "y", "z"]);
        let i = ideal(&r, &["x*y", "x*z", "y*z"]);
        let sp = SymbolicPowers::new(&i).unwrap();
        let s2 = sp.symbolic_power(2, Strategy::ColonPower).unwrap();
        let expected = i.power(2).unwrap().sum(&ideal(&r, &["x*y*z"])).unwrap();
        assert!(s2.ideal.equal(&expected).unwrap());
        assert_eq!(s2.semantics, Semantics::SymbolicPower);
        assert!(sp.oracle(2).unwrap().equal(&expected).unwrap());
        let em = sp.em_formula_check(2, 3).unwrap();
        assert!(em.pass);
        assert_eq!(em.expected_exponent, 1);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 3), BigUint::from(10u32));
        assert_eq!(binomial(3, 3), BigUint::from(1u32));
        assert_eq!(binomial(2, 3), BigUint::from(0u32));
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }
}
