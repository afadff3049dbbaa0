use std::path::PathBuf;
use std::time::{Duration, Instant};

use serde_json::{json, Map, Value};
use sympow::fitting::{check_assumptions, fitting_ideal};
use sympow::hilbert::{hilbert_series, krull_invariants};
use sympow::monomial_ideal::{symbolic_power_monomial, MonomialIdeal};
use sympow::parse::{render_poly, Arg, Session};
use sympow::symbolic::{Semantics, Strategy, SymbolicPowers, Verdict};
use sympow::{Ideal, Polynomial};
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] sympow::Error),
    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Input(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => match e {
                sympow::Error::Parse(_) => 2,
                sympow::Error::Cancelled => 4,
                sympow::Error::Invariant(_) => 5,
                _ => 3,
            },
            CliError::Io { .. } | CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Internal(_) => 5,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.exit_code() {
            2 => "input",
            3 => "precondition",
            4 => "timeout",
            _ => "internal",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    SymbolicPower,
    Fitting,
    Multiplicity,
    Certify,
    Sdefect,
    Annihilator,
    EmCheck,
    AlphaBound,
    ConjectureCheck,
    Assumptions,
    Oracle,
}

const OPS: [Op; 11] = [
    Op::SymbolicPower,
    Op::Fitting,
    Op::Multiplicity,
    Op::Certify,
    Op::Sdefect,
    Op::Annihilator,
    Op::EmCheck,
    Op::AlphaBound,
    Op::ConjectureCheck,
    Op::Assumptions,
    Op::Oracle,
];

impl Op {
    pub fn name(self) -> &'static str {
        match self {
            Op::SymbolicPower => "symbolic-power",
            Op::Fitting => "fitting",
            Op::Multiplicity => "multiplicity",
            Op::Certify => "certify",
            Op::Sdefect => "sdefect",
            Op::Annihilator => "annihilator",
            Op::EmCheck => "em-check",
            Op::AlphaBound => "alpha-bound",
            Op::ConjectureCheck => "conjecture-check",
            Op::Assumptions => "assumptions",
            Op::Oracle => "oracle",
        }
    }

    /// Accepts hyphens or underscores, in any case.
    pub fn from_verb(verb: &str) -> Option<Op> {
        let v = verb.replace('_', "-").to_ascii_lowercase();
        OPS.into_iter().find(|op| op.name() == v)
    }

    /// Operations whose output is only meaningful under the formula hypotheses.
    fn gated(self) -> bool {
        matches!(
            self,
            Op::SymbolicPower | Op::Sdefect | Op::Annihilator | Op::EmCheck | Op::AlphaBound | Op::ConjectureCheck
        )
    }

    fn needs_m(self) -> bool {
        !matches!(self, Op::Fitting | Op::Multiplicity | Op::Assumptions)
    }
}

#[derive(Debug, Clone)]
pub enum Candidate {
    Generators(String),
    Named(String),
}

#[derive(Debug, Clone, Default)]
pub struct Params {
    pub m: Option<u32>,
    pub strategy: Option<Strategy>,
    pub index: Option<usize>,
    pub candidate: Option<Candidate>,
    pub n: Option<usize>,
    pub t0: Option<u32>,
    pub witnesses: Option<String>,
    pub force: bool,
    pub assume_unmixed: bool,
    pub assume_radical: bool,
}

/// A finished operation: its report and whether requested checks passed.
pub struct Outcome {
    pub doc: Map<String, Value>,
    pub ok: bool,
}

#[derive(Debug, Default)]
pub struct Timings(pub Vec<(&'static str, Duration)>);

impl Timings {
    pub fn time<T>(&mut self, phase: &'static str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.0.push((phase, start.elapsed()));
        out
    }
}

fn gens_json(ideal: &Ideal) -> Value {
    Value::Array(ideal.gens().iter().map(|g| Value::String(render_poly(g))).collect())
}

fn polys_json(polys: &[Polynomial]) -> Value {
    Value::Array(polys.iter().map(|g| Value::String(render_poly(g))).collect())
}

fn semantics_name(s: Semantics) -> &'static str {
    match s {
        Semantics::SymbolicPower => "symbolic_power",
        Semantics::FormulaValue => "formula_value",
    }
}

fn parse_polys(session: &Session, target: &Ideal, text: &str) -> Result<Vec<Polynomial>, CliError> {
    let polys = sympow::parse::parse_poly_list(&session.ring, text).map_err(sympow::Error::from)?;
    Ok(polys
        .iter()
        .map(|p| p.to_ring(target.ring()))
        .collect::<sympow::Result<Vec<_>>>()?)
}

fn require_m(op: Op, p: &Params) -> Result<u32, CliError> {
    match p.m {
        Some(0) => Err(CliError::Precondition("m must be positive".into())),
        Some(m) => Ok(m),
        None => Err(CliError::Input(format!("{} needs an exponent m", op.name()))),
    }
}

pub fn execute(
    op: Op,
    session: &Session,
    name: &str,
    ideal: &Ideal,
    p: &Params,
    timings: &mut Timings,
) -> Result<Outcome, CliError> {
    let mut doc = Map::new();
    doc.insert("command".into(), json!(op.name()));
    doc.insert("ideal".into(), json!(name));
    doc.insert("ring".into(), json!(ideal.ring().to_string()));
    doc.insert("order".into(), json!(ideal.ring().order().to_string()));
    doc.insert("input_generators".into(), gens_json(ideal));
    let m = if op.needs_m() { Some(require_m(op, p)?) } else { None };
    if let Some(m) = m {
        doc.insert("m".into(), json!(m));
    }
    let mut ok = true;

    match op {
        Op::Multiplicity => {
            let (hs, (dim, height)) = timings.time("compute", || -> sympow::Result<_> {
                Ok((hilbert_series(ideal)?, krull_invariants(ideal)?))
            })?;
            doc.insert("dim".into(), json!(dim));
            doc.insert("height".into(), json!(height));
            doc.insert("hilbert_numerator".into(), json!(hs.numerator.iter().map(|&c| c as i64).collect::<Vec<_>>()));
            doc.insert("multiplicity".into(), json!(hs.multiplicity() as i64));
        }
        Op::Fitting => {
            let j = match p.index {
                Some(j) => j,
                None => timings.time("assumptions", || krull_invariants(ideal))?.1,
            };
            let f = timings.time("compute", || fitting_ideal(ideal, j))?;
            doc.insert("index".into(), json!(j));
            doc.insert("generators".into(), gens_json(&f));
            let unit = f.is_unit()?;
            doc.insert("unit".into(), json!(unit));
            if !unit && f.is_homogeneous() {
                doc.insert("height".into(), json!(krull_invariants(&f)?.1));
            }
        }
        Op::Assumptions => {
            let a = timings.time("assumptions", || check_assumptions(ideal))?;
            doc.insert("fitting_generators".into(), gens_json(&a.fitting));
            doc.insert("assumptions".into(), serde_json::to_value(&a.report).expect("serializable"));
            doc.insert("hypotheses_hold".into(), json!(a.report.generically_ci_proxy && a.report.unmixed_status == sympow::fitting::Status::Verified));
        }
        Op::Oracle => {
            let m = m.expect("checked");
            let mi = MonomialIdeal::from_ideal(ideal)?;
            let r = timings.time("compute", || symbolic_power_monomial(&mi, m))?;
            doc.insert("generators".into(), gens_json(&r));
        }
        _ => {
            let m = m.expect("checked");
            let sp = timings.time("assumptions", || SymbolicPowers::new(ideal))?;
            let sp = sp.attest(p.assume_unmixed, p.assume_radical);
            doc.insert("assumptions".into(), serde_json::to_value(sp.report()).expect("serializable"));
            doc.insert("fitting_generators".into(), gens_json(sp.fitting()));
            doc.insert("semantics".into(), json!(semantics_name(sp.semantics())));
            if op.gated() && !sp.hypotheses_hold() && !p.force {
                let r = sp.report();
                let mut why = Vec::new();
                if !r.generically_ci_proxy {
                    why.push("not generically a complete intersection".to_string());
                }
                if r.unmixed_status != sympow::fitting::Status::Verified {
                    why.push(format!("unmixedness {}", r.unmixed_status));
                }
                return Err(CliError::Precondition(format!(
                    "{} (pass --force to evaluate the formula anyway)",
                    why.join(", ")
                )));
            }
            timings.time("compute", || -> Result<(), CliError> {
                symbolic_op(op, m, session, ideal, &sp, p, &mut doc, &mut ok)
            })?;
        }
    }
    Ok(Outcome { doc, ok })
}

#[allow(clippy::too_many_arguments)]
fn symbolic_op(
    op: Op,
    m: u32,
    session: &Session,
    ideal: &Ideal,
    sp: &SymbolicPowers,
    p: &Params,
    doc: &mut Map<String, Value>,
    ok: &mut bool,
) -> Result<(), CliError> {
    match op {
        Op::SymbolicPower => {
            let strategy = p.strategy.unwrap_or(Strategy::ColonPower);
            let r = sp.symbolic_power(m, strategy)?;
            doc.insert("strategy".into(), json!(strategy.to_string()));
            doc.insert("exponent_used".into(), json!(r.exponent_used));
            doc.insert("generators".into(), gens_json(&r.ideal));
            doc.insert("equals_ordinary_power".into(), json!(r.ideal.equal(&sp.power(m)?)?));
        }
        Op::Certify => {
            let j = match p.candidate.as_ref().expect("clap requires a candidate") {
                Candidate::Generators(text) => Ideal::new(ideal.ring(), parse_polys(session, ideal, text)?)?,
                Candidate::Named(n) => session
                    .ideal(n)
                    .ok_or_else(|| CliError::Input(format!("no ideal named {n}")))?
                    .with_order(ideal.ring().order())?,
            };
            let c = sp.multiplicity_certificate(&j, m)?;
            doc.insert("candidate".into(), gens_json(&j));
            doc.insert("certificate".into(), serde_json::to_value(&c).expect("serializable"));
            *ok = c.verdict == Verdict::CertifiedEqual;
        }
        Op::Sdefect => {
            let d = sp.symbolic_defect(m)?;
            doc.insert("sdefect".into(), json!(d.count));
            doc.insert(
                "witnesses".into(),
                Value::Array(
                    d.witnesses
                        .iter()
                        .map(|(deg, w)| json!({"degree": deg, "polynomial": render_poly(w)}))
                        .collect(),
                ),
            );
        }
        Op::Annihilator => {
            let a = sp.annihilator_quotient(m)?;
            doc.insert("generators".into(), gens_json(&a));
            doc.insert("maximal_ideal_power".into(), json!(a.maximal_power_exponent()?));
        }
        Op::EmCheck => {
            let n = p.n.unwrap_or(ideal.ring().nvars());
            let e = sp.em_formula_check(m, n)?;
            doc.insert("n".into(), json!(n));
            doc.insert("expected_exponent".into(), json!(e.expected_exponent));
            doc.insert("actual_exponent".into(), json!(e.actual_exponent));
            doc.insert("annihilator".into(), gens_json(&e.actual));
            doc.insert("pass".into(), json!(e.pass));
            *ok = e.pass;
        }
        Op::AlphaBound => {
            let t0 = p.t0.unwrap_or(m - 1);
            let a = sp.alpha_check(m, t0)?;
            doc.insert("t0".into(), json!(t0));
            doc.insert("bound".into(), json!(a.bound));
            doc.insert("actual".into(), json!(a.actual));
            doc.insert("holds".into(), json!(a.holds));
            doc.insert("attained".into(), json!(a.attained));
            *ok = a.holds;
        }
        Op::ConjectureCheck => {
            let witnesses = match &p.witnesses {
                Some(text) => Some(parse_polys(session, ideal, text)?),
                None => None,
            };
            let r = sp.conjecture_check(m, witnesses)?;
            doc.insert("sdefect".into(), json!(r.sdefect));
            doc.insert("witnesses".into(), polys_json(&r.witnesses));
            doc.insert("jacobian_sum".into(), gens_json(&r.jacobian_sum));
            doc.insert("radical_equal".into(), json!(r.radical_equal));
            doc.insert("partials_in_ideal".into(), json!(r.containment_zn));
            doc.insert("jacobian_equals_ideal".into(), json!(r.jacobian_equals_ideal));
            doc.insert("radical_status".into(), json!(r.radical_status.to_string()));
            *ok = r.radical_equal;
        }
        Op::Fitting | Op::Multiplicity | Op::Assumptions | Op::Oracle => unreachable!("handled by execute"),
    }
    Ok(())
}

/// Turns a session command `verb [ideal] [colon|saturation] [m] [k]` into an operation.
/// The second integer is the Fitting index, `t0` or `N` depending on the verb.
pub fn session_command(
    session: &Session,
    verb: &str,
    args: &[Arg],
    base: &Params,
) -> Result<(Op, String, Params), CliError> {
    let op = Op::from_verb(verb).ok_or_else(|| CliError::Input(format!("unknown command {verb}")))?;
    let mut name = None;
    let mut params = base.clone();
    let mut ints = Vec::new();
    for a in args {
        match a {
            Arg::Ident(s) if session.ideal(s).is_some() => name = Some(s.clone()),
            Arg::Ident(s) if s == "colon" => params.strategy = Some(Strategy::ColonPower),
            Arg::Ident(s) if s == "saturation" => params.strategy = Some(Strategy::Saturation),
            Arg::Ident(s) if s == "force" => params.force = true,
            Arg::Ident(s) => return Err(CliError::Input(format!("{verb}: unknown argument {s}"))),
            Arg::Int(k) => ints.push(u32::try_from(*k).map_err(|_| CliError::Input(format!("{verb}: {k} is too large")))?),
        }
    }
    let mut ints = ints.into_iter();
    if op.needs_m() {
        params.m = ints.next().or(params.m);
    }
    if let Some(k) = ints.next() {
        match op {
            Op::Fitting => params.index = Some(k as usize),
            Op::AlphaBound => params.t0 = Some(k),
            Op::EmCheck => params.n = Some(k as usize),
            _ => return Err(CliError::Input(format!("{verb}: too many arguments"))),
        }
    }
    if op == Op::Certify {
        return Err(CliError::Input("certify is only available as a subcommand".into()));
    }
    let name = match name {
        Some(n) => n,
        None => session
            .default_ideal()
            .map(|(n, _)| n.to_string())
            .ok_or_else(|| CliError::Input("the session declares no ideal".into()))?,
    };
    Ok((op, name, params))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_the_contract() {
        let parse = sympow::parse::parse_session("ring QQ[x; ").unwrap_err();
        assert_eq!(CliError::from(sympow::Error::from(parse)).exit_code(), 2);
        assert_eq!(CliError::from(sympow::Error::NotHomogeneous).exit_code(), 3);
        assert_eq!(CliError::from(sympow::Error::Precondition("x".into())).exit_code(), 3);
        assert_eq!(CliError::from(sympow::Error::Cancelled).exit_code(), 4);
        assert_eq!(CliError::from(sympow::Error::Invariant("x".into())).exit_code(), 5);
        assert_eq!(CliError::Internal("panic".into()).exit_code(), 5);
        assert_eq!(CliError::Input("x".into()).kind(), "input");
    }

    #[test]
    fn verbs_accept_either_separator() {
        assert_eq!(Op::from_verb("symbolic_power"), Some(Op::SymbolicPower));
        assert_eq!(Op::from_verb("EM-check"), Some(Op::EmCheck));
        assert_eq!(Op::from_verb("frobnicate"), None);
        for op in OPS {
            assert_eq!(Op::from_verb(op.name()), Some(op));
        }
    }

    #[test]
    fn session_commands_bind_arguments_by_verb() {
        let s = Session::from_text("ring QQ[x,y,z]; ideal I = x*y, x*z, y*z; ideal J = x, y;").unwrap();
        let base = Params::default();
        let (op, name, p) = session_command(&s, "alpha_bound", &[Arg::Ident("I".into()), Arg::Int(4), Arg::Int(2)], &base).unwrap();
        assert_eq!((op, name.as_str(), p.m, p.t0), (Op::AlphaBound, "I", Some(4), Some(2)));
        let (_, name, p) = session_command(&s, "fitting", &[Arg::Int(1)], &base).unwrap();
        assert_eq!((name.as_str(), p.index, p.m), ("J", Some(1), None));
        let (_, _, p) = session_command(&s, "symbolic_power", &[Arg::Ident("saturation".into()), Arg::Int(2)], &base).unwrap();
        assert_eq!(p.strategy, Some(Strategy::Saturation));
        assert!(session_command(&s, "sdefect", &[Arg::Ident("K".into())], &base).is_err());
        assert!(session_command(&s, "sdefect", &[Arg::Int(2), Arg::Int(3)], &base).is_err());
    }
}
