//! Line-oriented scene files.
//!
//! ```text
//! name <text>
//! description <text>
//! tolerance <rational>
//! radius <name> root <ascending-coeffs> in <lo> <hi>
//! radius <name> rational <p>/<q>
//! radius <name> expr <expression>
//! define <name> <expression>
//! lattice <x1> <y1> ; <x2> <y2>
//! disc <id> <x> <y> <radius-name>
//! contact <id1> <id2> [<m> <n>]
//! solve <id> <radius-name> tangent <id1> [<m> <n>] tangent <id2> [<m> <n>] pick <side>
//! ```
//!
//! Expressions use rationals, earlier names, `pi`, `+ - * /`, `sqrt(...)`
//! and parentheses; they contain no spaces except inside parentheses.
//! Everything after `#` is a comment.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::exactnum::{
    isolate_roots, parse_rational, Bindings, Expr, IntegerPolynomial, Interval, Node, Rational,
};
use crate::packing::{
    self, complete_tangencies, CheckConfig, Contact, Disc, DiscId, Lattice, Offset, PackingParts,
    PeriodicPacking, Point, RadiusClass, Side, SolveRule,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RadiusValue {
    Root {
        poly: IntegerPolynomial,
        lo: Rational,
        hi: Rational,
    },
    Rational(Rational),
    Expr(Expr),
}

/// A named value, in declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decl {
    Radius { name: String, value: RadiusValue },
    Define { name: String, expr: Expr },
}

impl Decl {
    pub fn name(&self) -> &str {
        match self {
            Decl::Radius { name, .. } | Decl::Define { name, .. } => name,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscDecl {
    pub id: DiscId,
    pub x: Expr,
    pub y: Expr,
    pub radius: String,
}

/// Parsed scene. Expressions keep the names as written; [`Scene::resolve`]
/// expands them.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Scene {
    pub name: Option<String>,
    pub description: Option<String>,
    pub tolerance: Option<Rational>,
    pub decls: Vec<Decl>,
    pub lattice: Option<[Expr; 4]>,
    pub discs: Vec<DiscDecl>,
    pub solves: Vec<SolveRule>,
    pub contacts: Vec<Contact>,
    /// Isolated roots of the `root` radii.
    pub bindings: Bindings,
}

impl Scene {
    pub fn radius_names(&self) -> impl Iterator<Item = &str> {
        self.decls.iter().filter_map(|d| match d {
            Decl::Radius { name, .. } => Some(name.as_str()),
            _ => None,
        })
    }

    /// Every name expanded down to constants, `pi`, roots and `sqrt`.
    fn environment(&self) -> BTreeMap<String, Expr> {
        let mut env: BTreeMap<String, Expr> = BTreeMap::new();
        for d in &self.decls {
            let value = match d {
                Decl::Radius { name, value } => match value {
                    RadiusValue::Root { .. } => Expr::var(name.clone()),
                    RadiusValue::Rational(x) => Expr::constant(x.clone()),
                    RadiusValue::Expr(e) => substitute(e, &env),
                },
                Decl::Define { expr, .. } => substitute(expr, &env),
            };
            env.insert(d.name().to_string(), value);
        }
        env
    }

    pub fn resolve(&self, e: &Expr) -> Expr {
        substitute(e, &self.environment())
    }

    /// Expanded value of a radius or definition.
    pub fn named(&self, name: &str) -> Option<Expr> {
        self.environment().get(name).cloned()
    }

    /// Parses an expression over this scene's names.
    pub fn parse_expr(&self, text: &str) -> Result<Expr, ParseError> {
        let known: BTreeSet<String> = self.decls.iter().map(|d| d.name().to_string()).collect();
        parse_expr(text, &known, 1, 1)
    }

    pub fn check_config(&self, max_depth: u32) -> CheckConfig {
        let mut cfg = CheckConfig {
            max_depth,
            ..CheckConfig::default()
        };
        if let Some(t) = &self.tolerance {
            cfg.tol = t.clone();
        }
        cfg
    }

    pub fn has_geometry(&self) -> bool {
        self.lattice.is_some()
    }

    pub fn to_packing(&self, max_depth: u32) -> Result<PeriodicPacking, packing::Error> {
        let env = self.environment();
        let sub = |e: &Expr| substitute(e, &env);
        let lattice = self.lattice.as_ref().map(|[a, b, c, d]| Lattice {
            t1: Point::new(sub(a), sub(b)),
            t2: Point::new(sub(c), sub(d)),
        });
        let radii = self
            .radius_names()
            .map(|n| RadiusClass {
                name: n.to_string(),
                value: env[n].clone(),
            })
            .collect();
        let discs = self
            .discs
            .iter()
            .map(|d| Disc {
                id: d.id,
                center: Point::new(sub(&d.x), sub(&d.y)),
                radius: d.radius.clone(),
            })
            .collect();
        let parts = PackingParts {
            lattice,
            radii,
            discs,
            bindings: self.bindings.clone(),
            contacts: self.contacts.clone(),
        };
        complete_tangencies(parts, &self.solves, max_depth)
    }
}

fn substitute(e: &Expr, env: &BTreeMap<String, Expr>) -> Expr {
    e.substitute(&|name: &str| env.get(name).cloned())
}

impl fmt::Display for Scene {
    /// Canonical text: metadata, declarations, lattice, discs, solve rules,
    /// contacts. Parsing it back gives an equal scene.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = &self.name {
            writeln!(f, "name {n}")?;
        }
        if let Some(d) = &self.description {
            writeln!(f, "description {d}")?;
        }
        if let Some(t) = &self.tolerance {
            writeln!(f, "tolerance {t}")?;
        }
        for d in &self.decls {
            match d {
                Decl::Radius { name, value } => match value {
                    RadiusValue::Root { poly, lo, hi } => {
                        writeln!(f, "radius {name} root {poly} in {lo} {hi}")?
                    }
                    RadiusValue::Rational(x) => writeln!(f, "radius {name} rational {x}")?,
                    RadiusValue::Expr(e) => writeln!(f, "radius {name} expr {e}")?,
                },
                Decl::Define { name, expr } => writeln!(f, "define {name} {expr}")?,
            }
        }
        if let Some([a, b, c, d]) = &self.lattice {
            writeln!(f, "lattice {a} {b} ; {c} {d}")?;
        }
        for d in &self.discs {
            writeln!(f, "disc {} {} {} {}", d.id, d.x, d.y, d.radius)?;
        }
        let offset = |o: &Offset| {
            if o.is_zero() {
                String::new()
            } else {
                format!(" {} {}", o.m, o.n)
            }
        };
        for s in &self.solves {
            let [(a, oa), (b, ob)] = &s.anchors;
            writeln!(
                f,
                "solve {} {} tangent {a}{} tangent {b}{} pick {}",
                s.id,
                s.radius,
                offset(oa),
                offset(ob),
                s.side
            )?;
        }
        for c in &self.contacts {
            writeln!(f, "contact {} {}{}", c.a, c.b, offset(&c.offset))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
struct Token<'a> {
    text: &'a str,
    column: usize,
    start: usize,
}

/// Splits on whitespace outside parentheses; `;` at depth 0 is its own
/// token. Columns are 1-based.
fn tokenize<'a>(line: &'a str) -> Vec<Token<'a>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start: Option<usize> = None;
    let col_of = |i: usize| line[..i].chars().count() + 1;
    let push = |out: &mut Vec<Token<'a>>, s: usize, e: usize, col: usize| {
        if e > s {
            out.push(Token {
                text: &line[s..e],
                column: col,
                start: s,
            });
        }
    };
    for (i, ch) in line.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        let split = depth <= 0 && (ch.is_whitespace() || ch == ';');
        if split {
            if let Some(s) = start.take() {
                push(&mut out, s, i, col_of(s));
            }
            if ch == ';' {
                push(&mut out, i, i + 1, col_of(i));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        push(&mut out, s, line.len(), col_of(s));
    }
    out
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

const RESERVED: [&str; 2] = ["pi", "sqrt"];

struct LineParser<'a> {
    line_no: usize,
    tokens: Vec<Token<'a>>,
    pos: usize,
    line_len: usize,
}

impl<'a> LineParser<'a> {
    fn err_here(&self, msg: impl Into<String>) -> ParseError {
        let column = self
            .tokens
            .get(self.pos)
            .map_or(self.line_len + 1, |t| t.column);
        ParseError::at(self.line_no, column, msg)
    }

    fn next(&mut self, what: &str) -> Result<Token<'a>, ParseError> {
        match self.tokens.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t.clone())
            }
            None => Err(self.err_here(format!("expected {what}"))),
        }
    }

    fn peek(&self) -> Option<&str> {
        self.tokens.get(self.pos).map(|t| t.text)
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        let t = self.next(&format!("'{kw}'"))?;
        if t.text == kw {
            Ok(())
        } else {
            Err(ParseError::at(
                self.line_no,
                t.column,
                format!("expected '{kw}', found '{}'", t.text),
            ))
        }
    }

    fn done(&self) -> Result<(), ParseError> {
        match self.tokens.get(self.pos) {
            None => Ok(()),
            Some(t) => Err(ParseError::at(
                self.line_no,
                t.column,
                format!("unexpected '{}'", t.text),
            )),
        }
    }

    fn int<T: std::str::FromStr>(&mut self, what: &str) -> Result<T, ParseError> {
        let t = self.next(what)?;
        t.text
            .parse()
            .map_err(|_| ParseError::at(self.line_no, t.column, format!("expected {what}, found '{}'", t.text)))
    }

    fn rational(&mut self, what: &str) -> Result<Rational, ParseError> {
        let t = self.next(what)?;
        parse_rational(t.text)
            .ok_or_else(|| ParseError::at(self.line_no, t.column, format!("expected {what}, found '{}'", t.text)))
    }

    fn expr(&mut self, known: &BTreeSet<String>, what: &str) -> Result<Expr, ParseError> {
        let t = self.next(what)?;
        parse_expr(t.text, known, self.line_no, t.column)
    }

    /// Optional `<m> <n>` lattice offset.
    fn offset(&mut self) -> Result<Offset, ParseError> {
        match self.peek() {
            Some(t) if t.parse::<i64>().is_ok() => {
                let m = self.int("offset m")?;
                let n = self.int("offset n")?;
                Ok(Offset::new(m, n))
            }
            _ => Ok(Offset::ZERO),
        }
    }
}

pub fn parse_scene(text: &str) -> Result<Scene, ParseError> {
    let mut scene = Scene::default();
    let mut known: BTreeSet<String> = BTreeSet::new();
    let mut radius_names: BTreeSet<String> = BTreeSet::new();
    let mut ids: BTreeMap<DiscId, usize> = BTreeMap::new();
    let mut contact_refs: Vec<(usize, usize, DiscId)> = Vec::new();
    let mut first_disc_line: Option<usize> = None;
    let mut lattice_line: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens = tokenize(content);
        if tokens.is_empty() {
            continue;
        }
        let rest_of_line = |t: &Token| content[t.start..].trim().to_string();
        let mut lp = LineParser {
            line_no,
            tokens: tokens.clone(),
            pos: 1,
            line_len: content.chars().count(),
        };
        let head = &tokens[0];
        match head.text {
            "name" | "description" => {
                let Some(first) = tokens.get(1) else {
                    return Err(lp.err_here("expected text"));
                };
                let value = rest_of_line(first);
                if head.text == "name" {
                    scene.name = Some(value);
                } else {
                    scene.description = Some(value);
                }
            }
            "tolerance" => {
                let t = lp.rational("tolerance")?;
                if t <= Rational::zero() {
                    return Err(ParseError::at(line_no, tokens[1].column, "tolerance must be positive"));
                }
                scene.tolerance = Some(t);
                lp.done()?;
            }
            "radius" | "define" => {
                let name_tok = lp.next("name")?;
                let name = name_tok.text.to_string();
                if !is_identifier(&name) || RESERVED.contains(&name.as_str()) {
                    return Err(ParseError::at(line_no, name_tok.column, format!("invalid name '{name}'")));
                }
                if known.contains(&name) {
                    return Err(ParseError::at(line_no, name_tok.column, format!("duplicate name '{name}'")));
                }
                let decl = if head.text == "define" {
                    let Some(first) = tokens.get(2) else {
                        return Err(lp.err_here("expected expression"));
                    };
                    // the expression may contain spaces at depth 0
                    let body = rest_of_line(first);
                    let expr = parse_expr(&body, &known, line_no, first.column)?;
                    Decl::Define { name: name.clone(), expr }
                } else {
                    let kind = lp.next("'root', 'rational' or 'expr'")?;
                    let value = match kind.text {
                        "root" => {
                            let ptok = lp.next("coefficients")?;
                            let poly: IntegerPolynomial = ptok
                                .text
                                .parse()
                                .map_err(|e| ParseError::at(line_no, ptok.column, format!("{e}")))?;
                            lp.keyword("in")?;
                            let lo_col = lp.tokens.get(lp.pos).map_or(0, |t| t.column);
                            let lo = lp.rational("lower bound")?;
                            let hi = lp.rational("upper bound")?;
                            lp.done()?;
                            if lo > hi {
                                return Err(ParseError::at(line_no, lo_col, "empty bracket"));
                            }
                            let roots = isolate_roots(&poly, &Interval::new(lo.clone(), hi.clone()))
                                .map_err(|e| ParseError::at(line_no, ptok.column, format!("{e}")))?;
                            if roots.len() != 1 {
                                return Err(ParseError::at(
                                    line_no,
                                    lo_col,
                                    format!("bracket holds {} roots, expected exactly one", roots.len()),
                                ));
                            }
                            let root = roots.into_iter().next().expect("one root").with_name(name.clone());
                            scene.bindings.insert(name.clone(), root);
                            RadiusValue::Root { poly, lo, hi }
                        }
                        "rational" => {
                            let x = lp.rational("rational value")?;
                            lp.done()?;
                            RadiusValue::Rational(x)
                        }
                        "expr" => {
                            let Some(first) = lp.tokens.get(lp.pos).cloned() else {
                                return Err(lp.err_here("expected expression"));
                            };
                            let body = rest_of_line(&first);
                            RadiusValue::Expr(parse_expr(&body, &known, line_no, first.column)?)
                        }
                        other => {
                            return Err(ParseError::at(
                                line_no,
                                kind.column,
                                format!("unknown radius kind '{other}'"),
                            ))
                        }
                    };
                    radius_names.insert(name.clone());
                    Decl::Radius { name: name.clone(), value }
                };
                known.insert(name);
                scene.decls.push(decl);
            }
            "lattice" => {
                if lattice_line.is_some() {
                    return Err(ParseError::at(line_no, head.column, "duplicate lattice"));
                }
                let a = lp.expr(&known, "x1")?;
                let b = lp.expr(&known, "y1")?;
                lp.keyword(";")?;
                let c = lp.expr(&known, "x2")?;
                let d = lp.expr(&known, "y2")?;
                lp.done()?;
                scene.lattice = Some([a, b, c, d]);
                lattice_line = Some(line_no);
            }
            "disc" | "solve" => {
                let id_col = lp.tokens.get(1).map_or(0, |t| t.column);
                let id: DiscId = lp.int("disc id")?;
                if let Some(prev) = ids.get(&id) {
                    return Err(ParseError::at(
                        line_no,
                        id_col,
                        format!("duplicate disc id {id} (first declared on line {prev})"),
                    ));
                }
                first_disc_line.get_or_insert(line_no);
                if head.text == "disc" {
                    let x = lp.expr(&known, "x")?;
                    let y = lp.expr(&known, "y")?;
                    let radius = radius_ref(&mut lp, &radius_names)?;
                    lp.done()?;
                    scene.discs.push(DiscDecl { id, x, y, radius });
                } else {
                    let radius = radius_ref(&mut lp, &radius_names)?;
                    let mut anchors = [(0, Offset::ZERO); 2];
                    for anchor in &mut anchors {
                        lp.keyword("tangent")?;
                        let col = lp.tokens.get(lp.pos).map_or(0, |t| t.column);
                        let a: DiscId = lp.int("anchor id")?;
                        if !ids.contains_key(&a) {
                            return Err(ParseError::at(line_no, col, format!("unknown disc {a}")));
                        }
                        *anchor = (a, lp.offset()?);
                    }
                    lp.keyword("pick")?;
                    let side_tok = lp.next("side")?;
                    let side: Side = side_tok
                        .text
                        .parse()
                        .map_err(|e: String| ParseError::at(line_no, side_tok.column, e))?;
                    lp.done()?;
                    scene.solves.push(SolveRule {
                        id,
                        radius,
                        anchors,
                        side,
                    });
                }
                ids.insert(id, line_no);
            }
            "contact" => {
                let ca = lp.tokens.get(1).map_or(0, |t| t.column);
                let a: DiscId = lp.int("disc id")?;
                let cb = lp.tokens.get(2).map_or(0, |t| t.column);
                let b: DiscId = lp.int("disc id")?;
                let offset = lp.offset()?;
                lp.done()?;
                if a == b && offset.is_zero() {
                    return Err(ParseError::at(line_no, ca, "self gap: contact of a disc with itself"));
                }
                contact_refs.push((line_no, ca, a));
                contact_refs.push((line_no, cb, b));
                scene.contacts.push(Contact::new(a, b, offset));
            }
            other => {
                return Err(ParseError::at(line_no, head.column, format!("unknown directive '{other}'")));
            }
        }
    }
    for (line, col, id) in contact_refs {
        if !ids.contains_key(&id) {
            return Err(ParseError::at(line, col, format!("unknown disc {id}")));
        }
    }
    if let (Some(line), None) = (first_disc_line, lattice_line) {
        return Err(ParseError::at(line, 1, "missing lattice"));
    }
    Ok(scene)
}

fn radius_ref(lp: &mut LineParser, radius_names: &BTreeSet<String>) -> Result<String, ParseError> {
    let t = lp.next("radius name")?;
    if radius_names.contains(t.text) {
        Ok(t.text.to_string())
    } else {
        Err(ParseError::at(lp.line_no, t.column, format!("unknown radius '{}'", t.text)))
    }
}

/// Recursive-descent expression parser. Negated constants and quotients of
/// constants are folded, which keeps printing and re-parsing stable.
pub fn parse_expr(
    text: &str,
    known: &BTreeSet<String>,
    line: usize,
    column: usize,
) -> Result<Expr, ParseError> {
    let mut p = ExprParser {
        chars: text.chars().collect(),
        pos: 0,
        known,
        line,
        column,
    };
    let e = p.sum()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err(format!("unexpected '{}'", p.chars[p.pos])));
    }
    Ok(e)
}

struct ExprParser<'a> {
    chars: Vec<char>,
    pos: usize,
    known: &'a BTreeSet<String>,
    line: usize,
    column: usize,
}

impl ExprParser<'_> {
    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::at(self.line, self.column + self.pos, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.product()?;
        loop {
            if self.eat('+') {
                acc = acc + self.product()?;
            } else if self.eat('-') {
                acc = acc - self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc * self.unary()?;
            } else if self.peek() == Some('/') {
                let at = self.pos;
                self.pos += 1;
                let rhs = self.unary()?;
                acc = match (acc.as_const(), rhs.as_const()) {
                    (Some(a), Some(b)) => {
                        if b.is_zero() {
                            self.pos = at;
                            return Err(self.err("division by zero"));
                        }
                        Expr::constant(a / b)
                    }
                    _ => acc / rhs,
                };
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            let inner = self.unary()?;
            return Ok(match inner.node() {
                Node::Const(c) => Expr::constant(-c),
                _ => -inner,
            });
        }
        if self.eat('+') {
            return self.unary();
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let Some(c) = self.peek() else {
            return Err(self.err("unexpected end of expression"));
        };
        if c == '(' {
            self.pos += 1;
            let e = self.sum()?;
            if !self.eat(')') {
                return Err(self.err("expected ')'"));
            }
            return Ok(e);
        }
        if c.is_ascii_digit() || c == '.' {
            return self.number();
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = self.pos;
            while self.pos < self.chars.len()
                && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
            {
                self.pos += 1;
            }
            let word: String = self.chars[start..self.pos].iter().collect();
            return match word.as_str() {
                "pi" => Ok(Expr::pi()),
                "sqrt" => {
                    if !self.eat('(') {
                        return Err(self.err("expected '(' after sqrt"));
                    }
                    let e = self.sum()?;
                    if !self.eat(')') {
                        return Err(self.err("expected ')'"));
                    }
                    Ok(e.sqrt())
                }
                _ if self.known.contains(&word) => Ok(Expr::var(word)),
                _ => {
                    self.pos = start;
                    Err(self.err(format!("unknown identifier '{word}'")))
                }
            };
        }
        Err(self.err(format!("unexpected '{c}'")))
    }

    fn number(&mut self) -> Result<Expr, ParseError> {
        let start = self.pos;
        let digits = |p: &mut Self| {
            while p.pos < p.chars.len() && p.chars[p.pos].is_ascii_digit() {
                p.pos += 1;
            }
        };
        digits(self);
        if self.chars.get(self.pos) == Some(&'.') {
            self.pos += 1;
            digits(self);
        }
        // exponent only when digits follow, so `2e` stays an error
        if matches!(self.chars.get(self.pos), Some('e') | Some('E')) {
            let save = self.pos;
            self.pos += 1;
            if matches!(self.chars.get(self.pos), Some('+') | Some('-')) {
                self.pos += 1;
            }
            if self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                digits(self);
            } else {
                self.pos = save;
            }
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        match parse_rational(&text) {
            Some(x) => Ok(Expr::constant(x)),
            None => {
                self.pos = start;
                Err(self.err(format!("malformed number '{text}'")))
            }
        }
    }
}
