mod args;
mod exec;
mod render;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use clap::Parser;
use serde_json::{json, Map, Value};
use sympow::groebner::cache::{self, GbCache};
use sympow::parse::{parse_session, parse_session_bytes, Session};
use sympow::symbolic::Strategy;
use sympow::MonomialOrder;

use args::{Cli, Command, Common, OrderArg, StrategyArg};
use exec::{execute, session_command, Candidate, CliError, Op, Params, Timings, SCHEMA_VERSION};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(&cli.command);
    ExitCode::from(code as u8)
}

fn load_session(common: &Common) -> Result<Session, CliError> {
    let ast = match (&common.session, &common.inline) {
        (Some(path), _) => {
            let bytes = std::fs::read(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            parse_session_bytes(&bytes)
        }
        (None, Some(text)) => parse_session(text),
        (None, None) => return Err(CliError::Input("give a session file or --inline text".into())),
    }
    .map_err(sympow::Error::from)?;
    Ok(Session::from_ast(ast)?)
}

fn params_for(command: &Command) -> Result<(Option<Op>, Params), CliError> {
    let c = command.common();
    let mut p = Params {
        force: c.force,
        assume_unmixed: c.assume_unmixed,
        assume_radical: c.assume_radical,
        ..Params::default()
    };
    let op = match command {
        Command::SymbolicPower { m, strategy, .. } => {
            p.m = Some(*m);
            p.strategy = Some(match strategy {
                StrategyArg::Colon => Strategy::ColonPower,
                StrategyArg::Saturation => Strategy::Saturation,
            });
            Op::SymbolicPower
        }
        Command::Fitting { index, .. } => {
            p.index = *index;
            Op::Fitting
        }
        Command::Multiplicity { .. } => Op::Multiplicity,
        Command::Certify {
            m,
            candidate,
            candidate_ideal,
            ..
        } => {
            p.m = Some(*m);
            p.candidate = match (candidate, candidate_ideal) {
                (Some(text), _) => Some(Candidate::Generators(text.clone())),
                (None, Some(name)) => Some(Candidate::Named(name.clone())),
                (None, None) => None,
            };
            Op::Certify
        }
        Command::Sdefect { m, .. } => {
            p.m = Some(*m);
            Op::Sdefect
        }
        Command::Annihilator { m, .. } => {
            p.m = Some(*m);
            Op::Annihilator
        }
        Command::EmCheck { m, n, .. } => {
            p.m = Some(*m);
            p.n = *n;
            Op::EmCheck
        }
        Command::AlphaBound { m, t0, .. } => {
            p.m = Some(*m);
            p.t0 = *t0;
            Op::AlphaBound
        }
        Command::ConjectureCheck { m, witnesses, .. } => {
            p.m = Some(*m);
            if let Some(path) = witnesses {
                let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?;
                p.witnesses = Some(text);
            }
            Op::ConjectureCheck
        }
        Command::Assumptions { .. } => Op::Assumptions,
        Command::Oracle { m, .. } => {
            p.m = Some(*m);
            Op::Oracle
        }
        Command::Run { .. } => return Ok((None, p)),
    };
    Ok((Some(op), p))
}

fn run_one(session: &Session, op: Op, name: &str, p: &Params, order: OrderArg, timings: &mut Timings) -> Result<exec::Outcome, CliError> {
    let ideal = session
        .ideal(name)
        .ok_or_else(|| CliError::Input(format!("no ideal named {name}")))?;
    let ideal = match order {
        OrderArg::Grevlex => ideal.with_order(MonomialOrder::Grevlex)?,
        OrderArg::Lex => ideal.with_order(MonomialOrder::Lex)?,
    };
    execute(op, session, name, &ideal, p, timings)
}

/// Runs the whole invocation and returns (report, exit code).
fn invoke(command: &Command, timings: &mut Timings) -> Result<(Map<String, Value>, bool), CliError> {
    let common = command.common();
    let (op, params) = params_for(command)?;
    let session = timings.time("parse", || load_session(common))?;
    match op {
        Some(op) => {
            let name = match &common.ideal {
                Some(n) => n.clone(),
                None => session
                    .default_ideal()
                    .map(|(n, _)| n.to_string())
                    .ok_or_else(|| CliError::Input("the session declares no ideal".into()))?,
            };
            let out = run_one(&session, op, &name, &params, common.order, timings)?;
            Ok((out.doc, out.ok))
        }
        None => {
            if session.commands.is_empty() {
                return Err(CliError::Input("the session contains no commands".into()));
            }
            let mut results = Vec::new();
            let mut all_ok = true;
            for (pos, verb, args) in &session.commands {
                let located = |e: CliError| match e {
                    CliError::Input(msg) => CliError::Input(format!("line {}, column {}: {msg}", pos.line, pos.column)),
                    other => other,
                };
                let (op, name, p) = session_command(&session, verb, args, &params).map_err(located)?;
                let out = run_one(&session, op, &name, &p, common.order, timings).map_err(located)?;
                all_ok &= out.ok;
                results.push(Value::Object(out.doc));
            }
            let mut doc = Map::new();
            doc.insert("command".into(), json!("run"));
            doc.insert("results".into(), Value::Array(results));
            Ok((doc, all_ok))
        }
    }
}

fn run(command: &Command) -> i32 {
    let common = command.common();
    let cache = match &common.cache_dir {
        Some(dir) => match GbCache::with_dir(dir) {
            Ok(c) => Arc::new(c),
            Err(source) => {
                let e = CliError::Io { path: dir.clone(), source };
                return report_error(common, &e);
            }
        },
        None => Arc::new(GbCache::in_memory()),
    };
    cache::install(cache.clone());

    let mut timings = Timings::default();
    let deadline = Instant::now() + Duration::from_secs(common.timeout);
    let result = catch_unwind(AssertUnwindSafe(|| {
        sympow::cancel::with_deadline(deadline, || invoke(command, &mut timings))
    }))
    .unwrap_or_else(|panic| {
        let msg = panic
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(CliError::Internal(msg))
    });

    let mut totals: Vec<(&str, Duration)> = Vec::new();
    for (phase, d) in &timings.0 {
        match totals.iter_mut().find(|(p, _)| p == phase) {
            Some((_, t)) => *t += *d,
            None => totals.push((phase, *d)),
        }
    }
    let phases: Vec<String> = totals
        .iter()
        .map(|(p, d)| format!("{p}={:.3}s", d.as_secs_f64()))
        .collect();
    eprintln!(
        "timings: {}; cache: {} hits, {} misses",
        phases.join(" "),
        cache.hits(),
        cache.misses()
    );

    match result {
        Ok((mut doc, ok)) => {
            doc.insert("schema_version".into(), json!(SCHEMA_VERSION));
            doc.insert("ok".into(), json!(ok));
            emit(common, &doc);
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => report_error(common, &e),
    }
}

fn emit(common: &Common, doc: &Map<String, Value>) {
    if common.json {
        println!("{}", serde_json::to_string_pretty(doc).expect("serializable"));
    } else {
        print!("{}", render::text(doc));
    }
}

fn report_error(common: &Common, e: &CliError) -> i32 {
    let code = e.exit_code();
    let message = if code == 4 {
        format!("time limit of {}s exceeded", common.timeout)
    } else {
        e.to_string()
    };
    if common.json {
        let mut doc = Map::new();
        doc.insert("schema_version".into(), json!(SCHEMA_VERSION));
        doc.insert("ok".into(), json!(false));
        doc.insert("error".into(), json!({"kind": e.kind(), "message": message}));
        doc.insert("exit_code".into(), json!(code));
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    }
    eprintln!("error: {message}");
    code
}
