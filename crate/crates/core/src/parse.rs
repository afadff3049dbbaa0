//! The session language and the canonical polynomial printer.
//!
//! ```text
//! session     = { statement } ;
//! statement   = ring_decl | ideal_decl | matrix_decl | command ;
//! ring_decl   = "ring" field "[" ident { "," ident } "]" [ "order" ( "grevlex" | "lex" ) ] ";" ;
//! field       = "QQ" | "ZZ" "/" integer ;
//! ideal_decl  = "ideal" ident "=" generator { "," generator } ";" ;
//! generator   = expr | "minors" "(" integer "," ident ")" ;
//! matrix_decl = "matrix" ident "=" "[" row { "," row } "]" ";" ;
//! row         = "[" expr { "," expr } "]" ;
//! command     = ident { ident | integer } ";" ;
//! expr        = term { ( "+" | "-" ) term } ;
//! term        = unary { ( "*" | "/" ) unary } ;
//! unary       = ( "-" | "+" ) unary | power ;
//! power       = atom [ "^" integer ] ;
//! atom        = integer | ident | "(" expr ")" ;
//! ```
//!
//! Comments run from `#` or `//` to the end of the line. Multiplication is
//! always explicit (`x*y`); `xy` is a single identifier. Division is only
//! allowed by nonzero constants.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::Result;
use crate::field::{Field, Scalar};
use crate::fitting::{minors_ideal, PolyMatrix};
use crate::ideal::Ideal;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::PolyRing;

/// Largest exponent accepted by the parser.
pub const MAX_EXPONENT: u64 = (1 << 31) - 1;
const MAX_DEPTH: usize = 200;
const MAX_EXPANSION_TERMS: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Warning {
    pub pos: Pos,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Generator {
    Poly(Polynomial),
    Minors { size: usize, matrix: String },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Statement {
    Ring {
        pos: Pos,
        ring: Arc<PolyRing>,
    },
    Ideal {
        pos: Pos,
        name: String,
        gens: Vec<Generator>,
    },
    Matrix {
        pos: Pos,
        name: String,
        rows: Vec<Vec<Polynomial>>,
    },
    Command {
        pos: Pos,
        verb: String,
        args: Vec<Arg>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Arg {
    Ident(String),
    Int(u64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SessionAst {
    pub statements: Vec<Statement>,
    pub warnings: Vec<Warning>,
}

impl SessionAst {
    pub fn ring(&self) -> Option<&Arc<PolyRing>> {
        self.statements.iter().find_map(|s| match s {
            Statement::Ring { ring, .. } => Some(ring),
            _ => None,
        })
    }
}

/// Parses a whole session.
pub fn parse_session(text: &str) -> Result<SessionAst, ParseError> {
    let tokens = lex(text)?;
    let mut p = Parser {
        tokens,
        at: 0,
        ring: None,
        depth: 0,
        ideals: Vec::new(),
        matrices: Vec::new(),
        warnings: Vec::new(),
    };
    let mut statements = Vec::new();
    while !p.done() {
        statements.push(p.statement()?);
    }
    Ok(SessionAst {
        statements,
        warnings: p.warnings,
    })
}

/// Parses raw bytes, rejecting invalid UTF-8 with a positioned error.
pub fn parse_session_bytes(bytes: &[u8]) -> Result<SessionAst, ParseError> {
    match std::str::from_utf8(bytes) {
        Ok(text) => parse_session(text),
        Err(e) => {
            let prefix = &bytes[..e.valid_up_to()];
            let line = 1 + prefix.iter().filter(|b| **b == b'\n').count();
            let column = 1 + prefix.iter().rev().take_while(|b| **b != b'\n').count();
            Err(ParseError {
                line,
                column,
                message: "invalid UTF-8".into(),
            })
        }
    }
}

/// Parses a single polynomial expression in `ring`.
pub fn parse_poly(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial, ParseError> {
    let tokens = lex(text)?;
    let mut p = Parser {
        tokens,
        at: 0,
        ring: Some(ring.clone()),
        depth: 0,
        ideals: Vec::new(),
        matrices: Vec::new(),
        warnings: Vec::new(),
    };
    let f = p.expr()?;
    if !p.done() {
        return Err(p.error_here("unexpected input after expression"));
    }
    Ok(f)
}

/// Parses a list of polynomials separated by `,`, `;` or newlines.
pub fn parse_poly_list(ring: &Arc<PolyRing>, text: &str) -> Result<Vec<Polynomial>, ParseError> {
    let mut out = Vec::new();
    let mut offset_line = 0;
    for line in text.lines() {
        offset_line += 1;
        let line = strip_comment(line);
        for piece in line.split([',', ';']) {
            if piece.trim().is_empty() {
                continue;
            }
            out.push(parse_poly(ring, piece).map_err(|mut e| {
                e.line = offset_line;
                e
            })?);
        }
    }
    Ok(out)
}

fn strip_comment(line: &str) -> &str {
    let cut = [line.find('#'), line.find("//")].into_iter().flatten().min();
    match cut {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Deterministic canonical rendering; terms appear in the ring's order.
pub fn render_poly(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let vars = f.ring().vars();
    let mut out = String::new();
    for (k, t) in f.terms().iter().enumerate() {
        let neg = t.coeff.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let c = t.coeff.abs();
        let mono = render_monomial(&t.mono, vars);
        if mono.is_empty() {
            out.push_str(&c.to_string());
        } else if c.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&c.to_string());
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

pub fn render_monomial(m: &Monomial, vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars[i].clone()),
            _ => parts.push(format!("{}^{}", vars[i], e)),
        }
    }
    parts.join("*")
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: Pos,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut column) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column };
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            column += 1;
            continue;
        }
        if c == '#' || (c == '/' && chars.get(i + 1) == Some(&'/')) {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            column += i - start;
            tokens.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                pos,
            });
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            column += i - start;
            let digits: String = chars[start..i].iter().collect();
            let v: BigInt = digits.parse().expect("ascii digits");
            tokens.push(Token { tok: Tok::Int(v), pos });
            continue;
        }
        if "+-*/^()[],;=".contains(c) {
            tokens.push(Token { tok: Tok::Sym(c), pos });
            i += 1;
            column += 1;
            continue;
        }
        return Err(ParseError {
            line,
            column,
            message: format!("unexpected character {c:?}"),
        });
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
    ring: Option<Arc<PolyRing>>,
    depth: usize,
    ideals: Vec<String>,
    matrices: Vec<String>,
    warnings: Vec<Warning>,
}

const KEYWORDS: [&str; 4] = ["ring", "ideal", "matrix", "minors"];

impl Parser {
    fn done(&self) -> bool {
        self.at >= self.tokens.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.at).map(|t| &t.tok)
    }

    fn pos(&self) -> Pos {
        match self.tokens.get(self.at) {
            Some(t) => t.pos,
            None => match self.tokens.last() {
                Some(t) => Pos {
                    line: t.pos.line,
                    column: t.pos.column + 1,
                },
                None => Pos { line: 1, column: 1 },
            },
        }
    }

    fn error_at(&self, pos: Pos, message: impl Into<String>) -> ParseError {
        ParseError {
            line: pos.line,
            column: pos.column,
            message: message.into(),
        }
    }

    fn error_here(&self, message: impl Into<String>) -> ParseError {
        let found = match self.peek() {
            None => "end of input".to_string(),
            Some(Tok::Ident(s)) => format!("`{s}`"),
            Some(Tok::Int(v)) => format!("`{v}`"),
            Some(Tok::Sym(c)) => format!("`{c}`"),
        };
        self.error_at(self.pos(), format!("{}, found {found}", message.into()))
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.at).cloned();
        self.at += 1;
        t
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.error_here(format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.at += 1;
                Ok(s)
            }
            _ => Err(self.error_here("expected an identifier")),
        }
    }

    fn small_int(&mut self, what: &str, max: u64) -> Result<u64, ParseError> {
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = v.clone();
                self.at += 1;
                match v.to_u64() {
                    Some(x) if x <= max => Ok(x),
                    _ => Err(self.error_at(pos, format!("{what} {v} is out of range (max {max})"))),
                }
            }
            _ => Err(self.error_here(format!("expected {what}"))),
        }
    }

    fn ring(&self, pos: Pos) -> Result<Arc<PolyRing>, ParseError> {
        self.ring
            .clone()
            .ok_or_else(|| self.error_at(pos, "no ring declared"))
    }

    fn statement(&mut self) -> Result<Statement, ParseError> {
        let pos = self.pos();
        let head = self.ident()?;
        let stmt = match head.as_str() {
            "ring" => self.ring_decl(pos)?,
            "ideal" => {
                let ring = self.ring(pos)?;
                let name = self.fresh_name()?;
                self.expect_sym('=')?;
                let mut gens = Vec::new();
                loop {
                    gens.push(self.generator(&ring)?);
                    if !self.eat_sym(',') {
                        break;
                    }
                }
                self.ideals.push(name.clone());
                Statement::Ideal { pos, name, gens }
            }
            "matrix" => {
                self.ring(pos)?;
                let name = self.fresh_name()?;
                self.expect_sym('=')?;
                self.expect_sym('[')?;
                let mut rows = Vec::new();
                loop {
                    let row_pos = self.pos();
                    self.expect_sym('[')?;
                    let mut row = Vec::new();
                    loop {
                        row.push(self.expr()?);
                        if !self.eat_sym(',') {
                            break;
                        }
                    }
                    self.expect_sym(']')?;
                    if let Some(first) = rows.first() {
                        let first: &Vec<Polynomial> = first;
                        if first.len() != row.len() {
                            return Err(self.error_at(row_pos, "matrix rows have different lengths"));
                        }
                    }
                    rows.push(row);
                    if !self.eat_sym(',') {
                        break;
                    }
                }
                self.expect_sym(']')?;
                self.matrices.push(name.clone());
                Statement::Matrix { pos, name, rows }
            }
            "minors" => return Err(self.error_at(pos, "`minors` is only valid inside an ideal")),
            _ => {
                let mut args = Vec::new();
                loop {
                    let arg_pos = self.pos();
                    match self.peek() {
                        Some(Tok::Ident(s)) => {
                            let s = s.clone();
                            if !self.ideals.contains(&s) && !self.matrices.contains(&s) {
                                return Err(self.error_at(arg_pos, format!("`{s}` is not declared")));
                            }
                            self.at += 1;
                            args.push(Arg::Ident(s));
                        }
                        Some(Tok::Int(_)) => {
                            args.push(Arg::Int(self.small_int("integer argument", u32::MAX as u64)?))
                        }
                        _ => break,
                    }
                }
                Statement::Command {
                    pos,
                    verb: head,
                    args,
                }
            }
        };
        self.expect_sym(';')?;
        Ok(stmt)
    }

    fn fresh_name(&mut self) -> Result<String, ParseError> {
        let pos = self.pos();
        let name = self.ident()?;
        if KEYWORDS.contains(&name.as_str()) {
            return Err(self.error_at(pos, format!("`{name}` is a keyword")));
        }
        if self.ideals.contains(&name) || self.matrices.contains(&name) {
            return Err(self.error_at(pos, format!("`{name}` is already declared")));
        }
        if let Some(r) = &self.ring {
            if r.var_index(&name).is_some() {
                return Err(self.error_at(pos, format!("`{name}` is a ring variable")));
            }
        }
        Ok(name)
    }

    fn ring_decl(&mut self, pos: Pos) -> Result<Statement, ParseError> {
        if self.ring.is_some() {
            return Err(self.error_at(pos, "a ring is already declared"));
        }
        let field_pos = self.pos();
        let field = match self.ident()?.as_str() {
            "QQ" => Field::Rationals,
            "ZZ" => {
                self.expect_sym('/')?;
                let p = self.small_int("characteristic", u32::MAX as u64)?;
                Field::prime(p).map_err(|e| self.error_at(field_pos, e.to_string()))?
            }
            other => return Err(self.error_at(field_pos, format!("unknown field `{other}`"))),
        };
        self.expect_sym('[')?;
        let mut vars = Vec::new();
        loop {
            let vpos = self.pos();
            let v = self.ident()?;
            if KEYWORDS.contains(&v.as_str()) {
                return Err(self.error_at(vpos, format!("`{v}` is a keyword")));
            }
            if vars.contains(&v) {
                return Err(self.error_at(vpos, format!("duplicate variable `{v}`")));
            }
            vars.push(v);
            if !self.eat_sym(',') {
                break;
            }
        }
        self.expect_sym(']')?;
        let mut order = MonomialOrder::Grevlex;
        if self.peek() == Some(&Tok::Ident("order".into())) {
            self.at += 1;
            let opos = self.pos();
            order = match self.ident()?.as_str() {
                "grevlex" => MonomialOrder::Grevlex,
                "lex" => MonomialOrder::Lex,
                other => return Err(self.error_at(opos, format!("unknown order `{other}`"))),
            };
        }
        let ring = PolyRing::new(field, vars, order).map_err(|e| self.error_at(pos, e.to_string()))?;
        self.ring = Some(ring.clone());
        Ok(Statement::Ring { pos, ring })
    }

    fn generator(&mut self, ring: &Arc<PolyRing>) -> Result<Generator, ParseError> {
        let pos = self.pos();
        if self.peek() == Some(&Tok::Ident("minors".into())) {
            self.at += 1;
            self.expect_sym('(')?;
            let size = self.small_int("minor size", 64)? as usize;
            self.expect_sym(',')?;
            let mpos = self.pos();
            let matrix = self.ident()?;
            if !self.matrices.contains(&matrix) {
                return Err(self.error_at(mpos, format!("`{matrix}` is not a declared matrix")));
            }
            self.expect_sym(')')?;
            return Ok(Generator::Minors { size, matrix });
        }
        let _ = ring;
        let f = self.expr()?;
        if f.is_zero() {
            self.warnings.push(Warning {
                pos,
                message: "zero generator".into(),
            });
        }
        Ok(Generator::Poly(f))
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.error_here("expression nested too deeply"));
        }
        let mut acc = self.term()?;
        loop {
            if self.eat_sym('+') {
                let t = self.term()?;
                acc = acc.add(&t).expect("same ring");
            } else if self.eat_sym('-') {
                let t = self.term()?;
                acc = acc.sub(&t).expect("same ring");
            } else {
                break;
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat_sym('*') {
                let f = self.unary()?;
                acc = self.checked_product(&acc, &f)?;
            } else if self.peek() == Some(&Tok::Sym('/')) {
                let pos = self.pos();
                self.at += 1;
                let d = self.unary()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(self.error_at(pos, "division is only allowed by nonzero constants"));
                }
                let ring = acc.ring().clone();
                let c = d.lead_coeff().expect("nonzero");
                acc = acc.scale(&ring.field().inv(c));
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn checked_product(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial, ParseError> {
        let overflow = a.terms().iter().any(|s| {
            b.terms()
                .iter()
                .any(|t| s.mono.checked_mul(&t.mono).is_none_or(|m| m.exps().iter().any(|&e| e as u64 > MAX_EXPONENT)))
        });
        if overflow {
            return Err(self.error_here("exponent overflow"));
        }
        if (a.len() as u64).saturating_mul(b.len() as u64) > MAX_EXPANSION_TERMS * 10 {
            return Err(self.error_here("expression too large"));
        }
        Ok(a.mul(b).expect("same ring"))
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.error_here("expression nested too deeply"));
        }
        let r = if self.eat_sym('-') {
            self.unary()?.neg()
        } else if self.eat_sym('+') {
            self.unary()?
        } else {
            self.power()?
        };
        self.depth -= 1;
        Ok(r)
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if !self.eat_sym('^') {
            return Ok(base);
        }
        let pos = self.pos();
        let e = self.small_int("exponent", MAX_EXPONENT)?;
        if base.is_zero() || e == 0 {
            return Ok(if e == 0 {
                Polynomial::one(base.ring())
            } else {
                base
            });
        }
        if base.len() == 1 {
            let t = &base.terms()[0];
            let mut exps = Vec::with_capacity(t.mono.nvars());
            for &x in t.mono.exps() {
                let v = x as u64 * e;
                if v > MAX_EXPONENT {
                    return Err(self.error_at(pos, "exponent overflow"));
                }
                exps.push(v as u32);
            }
            let ring = base.ring().clone();
            let c = pow_scalar(ring.field(), &t.coeff, e);
            return Ok(Polynomial::monomial(&ring, c, Monomial::new(exps)));
        }
        if binom_bound(e + base.len() as u64 - 1, base.len() as u64 - 1) > MAX_EXPANSION_TERMS {
            return Err(self.error_at(pos, "expression too large"));
        }
        let deg = base.degree().unwrap_or(0) as u64;
        if deg.saturating_mul(e) > MAX_EXPONENT {
            return Err(self.error_at(pos, "exponent overflow"));
        }
        Ok(base.pow(e as u32))
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let pos = self.pos();
        let ring = self.ring(pos)?;
        match self.bump().map(|t| t.tok) {
            Some(Tok::Int(v)) => Ok(Polynomial::constant(&ring, ring.field().from_int(v))),
            Some(Tok::Ident(name)) => match ring.var_index(&name) {
                Some(i) => Ok(Polynomial::var(&ring, i)),
                None => Err(self.error_at(pos, format!("unknown variable `{name}`"))),
            },
            Some(Tok::Sym('(')) => {
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            _ => {
                self.at -= 1;
                Err(self.error_here("expected a number, variable or `(`"))
            }
        }
    }
}

fn pow_scalar(field: Field, c: &Scalar, e: u64) -> Scalar {
    if c.is_one() {
        return c.clone();
    }
    if c.abs().is_one() {
        return if e % 2 == 0 { Scalar::one() } else { c.clone() };
    }
    let mut r = Scalar::one();
    for _ in 0..e.min(1 << 16) {
        r = field.mul(&r, c);
    }
    r
}

fn binom_bound(n: u64, k: u64) -> u64 {
    let k = k.min(n - k.min(n));
    let mut r: u64 = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
        if r > MAX_EXPANSION_TERMS {
            return r;
        }
    }
    r
}

/// A session with all declarations evaluated.
#[derive(Debug, Clone)]
pub struct Session {
    pub ring: Arc<PolyRing>,
    pub ideals: Vec<(String, Ideal)>,
    pub matrices: Vec<(String, PolyMatrix)>,
    pub commands: Vec<(Pos, String, Vec<Arg>)>,
    pub warnings: Vec<Warning>,
}

impl Session {
    pub fn from_text(text: &str) -> crate::Result<Session> {
        Session::from_ast(parse_session(text)?)
    }

    pub fn from_ast(ast: SessionAst) -> crate::Result<Session> {
        let Some(ring) = ast.ring().cloned() else {
            return Err(ParseError {
                line: 1,
                column: 1,
                message: "no ring declared".into(),
            }
            .into());
        };
        let mut session = Session {
            ring: ring.clone(),
            ideals: Vec::new(),
            matrices: Vec::new(),
            commands: Vec::new(),
            warnings: ast.warnings,
        };
        for st in ast.statements {
            match st {
                Statement::Ring { .. } => {}
                Statement::Matrix { name, rows, .. } => {
                    let m = PolyMatrix::from_rows(&ring, rows)?;
                    session.matrices.push((name, m));
                }
                Statement::Ideal { name, gens, .. } => {
                    let mut polys = Vec::new();
                    for g in gens {
                        match g {
                            Generator::Poly(f) => polys.push(f),
                            Generator::Minors { size, matrix } => {
                                let m = session.matrix(&matrix).expect("checked by the parser");
                                polys.extend(minors_ideal(m, size)?.gens().iter().cloned());
                            }
                        }
                    }
                    session.ideals.push((name, Ideal::new(&ring, polys)?));
                }
                Statement::Command { pos, verb, args } => session.commands.push((pos, verb, args)),
            }
        }
        Ok(session)
    }

    pub fn ideal(&self, name: &str) -> Option<&Ideal> {
        self.ideals.iter().find(|(n, _)| n == name).map(|(_, i)| i)
    }

    pub fn matrix(&self, name: &str) -> Option<&PolyMatrix> {
        self.matrices.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    /// The last declared ideal.
    pub fn default_ideal(&self) -> Option<(&str, &Ideal)> {
        self.ideals.last().map(|(n, i)| (n.as_str(), i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn simple_session() {
        let ast = parse_session("ring QQ[x,y,z]; ideal I = x*y, x*z, y*z;").unwrap();
        assert_eq!(ast.statements.len(), 2);
        match &ast.statements[1] {
            Statement::Ideal { name, gens, .. } => {
                assert_eq!(name, "I");
                assert_eq!(gens.len(), 3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn missing_ring() {
        let err = parse_session("ideal I = x;").unwrap_err();
        assert_eq!(err.message, "no ring declared");
        assert_eq!((err.line, err.column), (1, 1));
    }

    #[test]
    fn five_variable_example() {
        let s = Session::from_text("ring QQ[x,y,z,w,t]; ideal I = x*z, x*w, y*w, y*t, z*t;").unwrap();
        let (_, i) = s.default_ideal().unwrap();
        assert_eq!(i.gens().len(), 5);
        assert!(i.gens().iter().all(|g| g.is_monomial() && g.degree() == Some(2)));
    }

    #[test]
    fn implicit_multiplication_rejected() {
        let err = parse_session("ring QQ[x,y];\nideal I = xy;").unwrap_err();
        assert!(err.message.contains("unknown variable"));
        assert_eq!((err.line, err.column), (2, 11));
    }

    #[test]
    fn undeclared_identifier_in_command() {
        let err = parse_session("ring QQ[x]; sdefect J 2;").unwrap_err();
        assert!(err.message.contains("not declared"));
    }

    #[test]
    fn zero_generator_warns() {
        let ast = parse_session("ring QQ[x]; ideal I = x - x, x;").unwrap();
        assert_eq!(ast.warnings.len(), 1);
    }

    #[test]
    fn exponent_limits() {
        let r = PolyRing::rationals(&["x", "y"]);
        assert!(parse_poly(&r, "x^2147483647").is_ok());
        assert!(parse_poly(&r, "x^2147483648").is_err());
        assert!(parse_poly(&r, "(x^2147483647)^2").is_err());
        assert!(parse_poly(&r, "x^2147483647*x").is_err());
    }

    #[test]
    fn render_examples() {
        let r = PolyRing::rationals(&["x", "y"]);
        assert_eq!(render_poly(&Polynomial::zero(&r)), "0");
        let f = parse_poly(&r, "(x+y)*(x-y)").unwrap();
        assert_eq!(render_poly(&f), "x^2 - y^2");
        let g = parse_poly(&r, "-3/2*x*y + 1/3 - 1").unwrap();
        assert_eq!(render_poly(&g), "-3/2*x*y - 2/3");
    }

    #[test]
    fn hankel_quintic_round_trip() {
        let r = PolyRing::rationals(&["x", "y", "z", "w", "t"]);
        let g = parse_poly(&r, "z^3-2*y*z*w+x*w^2+y^2*t-x*z*t").unwrap();
        let s = render_poly(&g);
        assert_eq!(parse_poly(&r, &s).unwrap(), g);
        assert_eq!(g.len(), 5);
    }

    #[test]
    fn minors_and_matrices() {
        let s = Session::from_text(
            "ring QQ[x,y,z,w,t];\nmatrix H = [[x,y,z],[y,z,w],[z,w,t]];\nideal I = minors(2, H);",
        )
        .unwrap();
        assert_eq!(s.ideal("I").unwrap().gens().len(), 6);
    }

    fn poly_strategy() -> impl Strategy<Value = Polynomial> {
        let r = PolyRing::rationals(&["x", "y", "z"]);
        proptest::collection::vec(
            ((-20i64..20), (1i64..5), proptest::collection::vec(0u32..4, 3)),
            0..6,
        )
        .prop_map(move |terms| {
            Polynomial::from_terms(
                &r,
                terms.into_iter().map(|(n, d, e)| crate::poly::Term {
                    coeff: r.field().from_ratio(n.into(), d.into()).unwrap(),
                    mono: Monomial::new(e),
                }),
            )
        })
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(f in poly_strategy()) {
            let s = render_poly(&f);
            let g = parse_poly(f.ring(), &s).unwrap();
            prop_assert_eq!(&g, &f);
            prop_assert_eq!(render_poly(&g), s);
        }

        #[test]
        fn never_panics_on_bytes(bytes in proptest::collection::vec(any::<u8>(), 0..200)) {
            let _ = parse_session_bytes(&bytes);
        }

        #[test]
        fn never_panics_on_token_soup(
            parts in proptest::collection::vec(
                prop_oneof![
                    Just("ring"), Just("ideal"), Just("matrix"), Just("minors"), Just("QQ"),
                    Just("ZZ"), Just("x"), Just("y"), Just("I"), Just("["), Just("]"),
                    Just("("), Just(")"), Just(","), Just(";"), Just("="), Just("+"),
                    Just("-"), Just("*"), Just("/"), Just("^"), Just("2"), Just("0"),
                    Just("99999999999999"), Just("7"), Just("sdefect"),
                ],
                0..40,
            )
        ) {
            let text = parts.join(" ");
            let _ = parse_session(&text);
            let _ = Session::from_text(&text);
        }
    }
}
