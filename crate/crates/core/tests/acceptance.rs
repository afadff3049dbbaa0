//! Acceptance suite. Prints one line per criterion and exits non-zero if any fails.
//!
//! Run with `cargo test -p sympow-core --test acceptance`; pass `-- --expensive`
//! to include the third power of the 3x4 minors fixture.

mod common;

use std::time::Instant;

use common::{fixture, ideal, poly, random_gens, random_monomial_gens, ring};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sympow::fitting::{fitting_from_presentation, fitting_ideal, PolyMatrix, Presentation, Status};
use sympow::groebner::{buchberger, is_groebner_basis, syzygies};
use sympow::hilbert::multiplicity;
use sympow::symbolic::{binomial, Strategy, SymbolicPowers, Verdict};
use sympow::{Ideal, Polynomial, Result};

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

/// Folds several named sub-checks into one outcome.
fn all(parts: Vec<(String, bool)>) -> Outcome {
    let failed: Vec<&str> = parts.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
    if failed.is_empty() {
        let names: Vec<&str> = parts.iter().map(|(n, _)| n.as_str()).collect();
        check(true, names.join("; "))
    } else {
        check(false, format!("failed: {}", failed.join("; ")))
    }
}

fn pentagon() -> Result<Outcome> {
    let i = fixture("pentagon");
    let r = i.ring().clone();
    let sp = SymbolicPowers::new(&i)?;
    let e1 = multiplicity(&i)?;
    let e2 = multiplicity(&sp.power(2)?)?;
    let third = sp.symbolic_power(3, Strategy::ColonPower)?;
    let expected = sp.power(3)?.sum(&ideal(&r, &["x*y*z*w*t"]))?;
    let cert = sp.multiplicity_certificate(&expected, 3)?;
    Ok(all(vec![
        (format!("e(S/I)={e1}"), e1 == 5),
        (format!("e(S/I^2)={e2}"), e2 == 20),
        ("I^(2)=I^2".into(), sp.equals_ordinary(2)?),
        ("I^(3)=(I^3,xyzwt)".into(), third.ideal.equal(&expected)?),
        (
            format!("certificate {:?} required={}", cert.verdict, cert.required),
            cert.verdict == Verdict::CertifiedEqual && cert.required_u64() == Some(50),
        ),
    ]))
}

fn strategies_agree() -> Result<Outcome> {
    let mut parts = Vec::new();
    for name in ["pentagon", "three-points", "minors-2x3", "hankel"] {
        let sp = SymbolicPowers::new(&fixture(name))?;
        let colon = sp.symbolic_power(2, Strategy::ColonPower)?;
        let sat = sp.symbolic_power(2, Strategy::Saturation)?;
        let once = sp.colon_exponent(2, 1)?;
        let twice = sp.colon_exponent(2, 2)?;
        parts.push((format!("{name}: colon = saturation"), colon.ideal.equal(&sat.ideal)?));
        parts.push((
            format!("{name}: stable at t=1 (saturation stopped at {})", sat.exponent_used),
            sat.exponent_used <= 1 && once.equal(&twice)? && once.equal(&sat.ideal)?,
        ));
    }
    Ok(all(parts))
}

fn three_points_annihilator() -> Result<Outcome> {
    let sp = SymbolicPowers::new(&fixture("three-points"))?;
    let mut exps = Vec::new();
    let mut ok = true;
    for m in 2..=5 {
        let em = sp.em_formula_check(m, 3)?;
        ok &= em.pass && em.actual_exponent == Some(m / 2);
        exps.push(em.actual_exponent);
    }
    Ok(check(ok, format!("annihilator exponents {exps:?}")))
}

fn alpha_bounds() -> Result<Outcome> {
    let mut parts = Vec::new();
    let sp = SymbolicPowers::new(&fixture("three-points"))?;
    for m in 2..=4u32 {
        let a = sp.alpha_check(m, m / 2)?;
        let expected = m + m.div_ceil(2);
        parts.push((
            format!("three-points m={m}: bound {} actual {}", a.bound, a.actual),
            a.attained && a.actual == expected,
        ));
    }
    let f = SymbolicPowers::new(&fixture("fermat"))?;
    let a = f.alpha_check(2, 1)?;
    parts.push((
        format!("fermat: bound {} actual {}", a.bound, a.actual),
        a.bound == 5 && a.actual == 6 && a.holds && !a.attained,
    ));
    Ok(all(parts))
}

fn defects() -> Result<Outcome> {
    let mut parts = Vec::new();
    let cases: [(&str, u32, &[u32]); 5] = [
        ("minors-2x3", 2, &[3]),
        ("minors-2x3", 3, &[5, 5, 5]),
        ("minors-2x3", 4, &[6, 7, 7, 7]),
        ("hankel", 2, &[3]),
        ("hankel", 3, &[5, 5, 5, 5, 5, 5]),
    ];
    let mut cache: Vec<(&str, SymbolicPowers)> = Vec::new();
    for (name, m, degrees) in cases {
        if !cache.iter().any(|(n, _)| *n == name) {
            cache.push((name, SymbolicPowers::new(&fixture(name))?));
        }
        let sp = &cache.iter().find(|(n, _)| *n == name).expect("cached").1;
        let d = sp.symbolic_defect(m)?;
        parts.push((
            format!("{name} m={m}: sdefect {} degrees {:?}", d.count, d.degrees()),
            d.count == degrees.len() && d.degrees() == degrees,
        ));
    }
    Ok(all(parts))
}

fn conjecture() -> Result<Outcome> {
    let mut parts = Vec::new();
    let sp = SymbolicPowers::new(&fixture("minors-2x3"))?;
    let rep = sp.conjecture_check(2, None)?;
    parts.push(("minors-2x3: J(g) = I".into(), rep.jacobian_equals_ideal && rep.radical_equal));

    let i = fixture("defect-one");
    let r = i.ring().clone();
    let sp = SymbolicPowers::new(&i)?;
    let bad = sp.conjecture_check(2, Some(vec![poly(&r, "x*y*z")]))?;
    parts.push(("defect-one: xyz fails".into(), !bad.radical_equal));
    let good = sp.conjecture_check(2, Some(vec![poly(&r, "x*y*z + t^2*u^2")]))?;
    parts.push(("defect-one: xyz+t^2u^2 passes".into(), good.radical_equal));
    Ok(all(parts))
}

fn counterexamples() -> Result<Outcome> {
    let mut parts = Vec::new();

    let i = fixture("unmixed-not-gci");
    let r = i.ring().clone();
    let sp = SymbolicPowers::new(&i)?;
    let direct = ideal(&r, &["x", "y", "z"]).power(4)?.intersect(&ideal(&r, &["y", "z", "w"]).power(2)?)?;
    let i2 = sp.power(2)?;
    let formula = sp.colon_exponent(2, 1)?;
    parts.push(("unmixed-not-gci: I^2 = I^(2)".into(), i2.equal(&direct)?));
    parts.push((
        "unmixed-not-gci: I^2 strictly inside I^2 : F_3".into(),
        formula.contains(&i2)? && !i2.contains(&formula)?,
    ));
    parts.push((
        "unmixed-not-gci: flagged not generically a complete intersection".into(),
        !sp.report().generically_ci_proxy && sp.report().unmixed_status == Status::Verified,
    ));

    let i = fixture("mixed-monomial");
    let r = i.ring().clone();
    let sp = SymbolicPowers::new(&i)?;
    let g = poly(&r, "x*y*z*w*t*u");
    let sym2 = sp.power(2)?.sum(&Ideal::new(&r, [g.clone()])?)?;
    let witness = poly(&r, "x^2*y*z^2*t");
    parts.push((
        "mixed: x^2yz^2t in I^2 : F_2".into(),
        sp.colon_exponent(2, 1)?.contains_poly(&witness)?,
    ));
    parts.push(("mixed: x^2yz^2t not in (I^2, g)".into(), !sym2.contains_poly(&witness)?));
    parts.push(("mixed: (I^2, g) is the symbolic square".into(), sym2.equal(&sp.oracle(2)?)?));
    let sym3 = sp.power(3)?.sum(&i.product(&Ideal::new(&r, [g])?)?)?;
    let witness3 = poly(&r, "x^3*y^2*z^3*t");
    parts.push((
        "mixed: x^3y^2z^3t in I^3 : F_2 but not in I^3 + gI".into(),
        sp.colon_exponent(3, 1)?.contains_poly(&witness3)? && !sym3.contains_poly(&witness3)?,
    ));
    parts.push((
        "mixed: flagged not unmixed".into(),
        sp.report().generically_ci_proxy && sp.report().unmixed_status == Status::Failed,
    ));
    Ok(all(parts))
}

fn gb_canonicity(rng: &mut ChaCha8Rng, count: usize) -> Result<(usize, usize)> {
    let mut ok = 0;
    for k in 0..count {
        let nv = rng.gen_range(2..=3);
        let r = ring(&["x", "y", "z"][..nv]);
        let homogeneous = k % 2 == 0;
        let count = rng.gen_range(1..=3);
        let gens = random_gens(rng, &r, 3, count, homogeneous);
        let gb = buchberger(&r, &gens)?;
        let elems = gb.elements();
        let reduced = elems.iter().enumerate().all(|(a, f)| {
            f.is_monic()
                && elems.iter().enumerate().all(|(b, g)| {
                    a == b || f.terms().iter().all(|t| !g.lead_monomial().expect("nonzero").divides(&t.mono))
                })
        });
        let members = gens.iter().all(|g| gb.contains(g).unwrap_or(false));
        // Same ideal, different generators: g_0 + h*g_1 replaces g_0, then shuffle.
        let mut other = gens.clone();
        if other.len() > 1 {
            let h = common::random_poly(rng, &r, 1, 2, false);
            other[0] = other[0].add(&h.mul(&other[1])?)?;
        }
        other.push(gens[0].mul(&Polynomial::var(&r, 0))?);
        other.shuffle(rng);
        let again = buchberger(&r, &other)?;
        if is_groebner_basis(elems)? && reduced && members && again.digest() == gb.digest() {
            ok += 1;
        }
    }
    Ok((ok, count))
}

fn fitting_invariance(rng: &mut ChaCha8Rng, count: usize) -> Result<(usize, usize)> {
    let mut ok = 0;
    for k in 0..count {
        let nv = rng.gen_range(1..=3);
        let r = ring(&["x", "y", "z"][..nv]);
        let count = rng.gen_range(1..=3);
        let gens = if k % 3 == 0 {
            random_monomial_gens(rng, &r, 2, count)
        } else {
            random_gens(rng, &r, 2, count, k % 3 == 1)
        };
        let i = Ideal::new(&r, gens.clone())?;
        // A redundant spanning set: the generators, a combination of two of them, reversed.
        let mut span = gens.clone();
        let h = common::random_poly(rng, &r, 1, 2, false);
        span.push(gens[0].mul(&h)?.add(gens.last().expect("nonempty"))?);
        span.reverse();
        let columns: Vec<Vec<Polynomial>> = syzygies(&r, &span)?.into_iter().map(|e| e.components().to_vec()).collect();
        let p = Presentation {
            matrix: PolyMatrix::from_columns(&r, span.len(), &columns)?,
            generators: span,
        };
        let mut same = true;
        for idx in 0..=p.generators.len() + 1 {
            same &= fitting_ideal(&i, idx)?.equal(&fitting_from_presentation(&p, idx)?)?;
        }
        if same {
            ok += 1;
        }
    }
    Ok((ok, count))
}

fn properties() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce97);
    let mut parts = Vec::new();
    let (ok, n) = gb_canonicity(&mut rng, 200)?;
    parts.push((format!("GB canonicity {ok}/{n}"), ok == n));
    let (ok, n) = fitting_invariance(&mut rng, 50)?;
    parts.push((format!("Fitting invariance {ok}/{n}"), ok == n));

    for name in ["pentagon", "three-points", "defect-one", "mixed-monomial"] {
        let sp = SymbolicPowers::new(&fixture(name))?;
        for m in [2, 3] {
            let formula = sp.symbolic_power(m, Strategy::ColonPower)?.ideal;
            let oracle = sp.oracle(m)?;
            let agrees = if sp.hypotheses_hold() {
                formula.equal(&oracle)?
            } else {
                formula.contains(&oracle)? && !oracle.contains(&formula)?
            };
            parts.push((format!("oracle {name} m={m}"), agrees));
        }
    }

    for (name, top) in [
        ("pentagon", 3),
        ("three-points", 3),
        ("minors-2x3", 3),
        ("hankel", 3),
        ("fermat", 3),
        ("defect-one", 3),
        ("complete-intersection", 3),
        ("minors-3x4", 2),
    ] {
        let sp = SymbolicPowers::new(&fixture(name))?;
        if !sp.hypotheses_hold() {
            parts.push((format!("{name}: hypotheses verified"), false));
            continue;
        }
        let e = multiplicity(sp.ideal())?;
        let c = sp.height() as u64;
        for m in 1..=top {
            let lhs = multiplicity(&sp.symbolic_power(m, Strategy::ColonPower)?.ideal)?;
            let rhs = binomial(c + m as u64 - 1, c) * e;
            parts.push((format!("multiplicity law {name} m={m}"), rhs == lhs.into()));
        }
    }
    Ok(all(parts))
}

fn large_minors(expensive: bool) -> Result<Outcome> {
    let i = fixture("minors-3x4");
    let r = i.ring().clone();
    let sp = SymbolicPowers::new(&i)?;
    let f = poly(&r, "x*y - z*t");
    let mut parts = vec![
        ("f = xy - zt in F_2".to_string(), sp.fitting().contains_poly(&f)?),
        ("I^(2) = I^2".to_string(), sp.equals_ordinary(2)?),
        ("I^2 : f = I^2".to_string(), sp.power(2)?.colon_poly(&f)?.equal(&sp.power(2)?)?),
    ];
    if expensive {
        parts.push(("I^(3) = I^3".into(), sp.equals_ordinary(3)?));
        parts.push(("I^3 : f = I^3".into(), sp.power(3)?.colon_poly(&f)?.equal(&sp.power(3)?)?));
    }
    let mut out = all(parts);
    out.detail.push_str(if expensive {
        "; m=3 included; m=4..7 and the five-point inhomogeneous example are out of scope"
    } else {
        "; m=3 skipped (pass --expensive); m=4..7 and the five-point inhomogeneous example are out of scope"
    });
    Ok(out)
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    if args.iter().any(|a| a == "--list") {
        // Discovery probe from test runners: this binary has no libtest cases.
        return;
    }
    let expensive = args.iter().any(|a| a == "--expensive") || std::env::var_os("SYMPOW_EXPENSIVE").is_some();
    let criteria: Vec<(&str, Box<dyn Fn() -> Result<Outcome>>)> = vec![
        ("1 pentagon edge ideal", Box::new(pentagon)),
        ("2 colon and saturation agree at m=2", Box::new(strategies_agree)),
        ("3 annihilator of I^(m)/I^m for three points", Box::new(three_points_annihilator)),
        ("4 initial degree bound", Box::new(alpha_bounds)),
        ("5 symbolic defects", Box::new(defects)),
        ("6 Jacobian radical check", Box::new(conjecture)),
        ("7 hypotheses are necessary", Box::new(counterexamples)),
        ("8 property suites", Box::new(properties)),
        ("9 3x4 maximal minors", Box::new(move || large_minors(expensive))),
    ];
    let mut failures = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        let outcome = run().unwrap_or_else(|e| check(false, format!("error: {e}")));
        let secs = start.elapsed().as_secs_f64();
        if !outcome.pass {
            failures += 1;
        }
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        println!("criterion {name}: {tag} ({}) [{secs:.2}s]", outcome.detail);
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
