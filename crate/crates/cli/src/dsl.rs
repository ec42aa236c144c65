//! The line-oriented scenario language.
//!
//! ```text
//! char 32003
//! ring R vars U V W
//! rel V^2 - U*W
//! ideal I = U, V
//! functor ext i=2 first=quotient(I^n) second=R
//! range 2 12
//! fit max_period 6
//! audit dim spread
//! oracle on
//! ```
//!
//! Beyond those directives the language accepts `functor h0 first=<expr>`,
//! `module <name> = free <r>`, `module <name> = image <r>x<c> [ ... ]`,
//! several `ring` blocks in one file, and
//! `artin_rees M=<expr> N=<expr> I=<ideal> window <a> <b>`.
//!
//! Parsing validates everything it can (names, polynomials, homogeneity,
//! characteristic) and reports `line:column` positions. The result is a plain
//! syntax tree; [`compile`] turns it into algebra objects.

use std::collections::BTreeMap;
use std::fmt;

use hgl_core::homology::{ComposeKind, FunctorKind};
use hgl_core::monomial::OrderKind;
use hgl_core::scalar::{Field, DEFAULT_PRIME};
use hgl_core::{Ring, RingPresentation};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Syntax(String),
    UnknownName(String),
    InconsistentCharacteristic(String),
    Algebra(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {}", describe(.kind))]
pub struct DslError {
    pub line: usize,
    pub column: usize,
    pub kind: ErrorKind,
}

fn describe(kind: &ErrorKind) -> String {
    match kind {
        ErrorKind::Syntax(m) => format!("syntax error: {}", m),
        ErrorKind::UnknownName(n) => format!("unknown name `{}`", n),
        ErrorKind::InconsistentCharacteristic(m) => format!("inconsistent characteristic: {}", m),
        ErrorKind::Algebra(m) => m.clone(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenarioSpec {
    pub characteristic: u32,
    pub rings: Vec<RingDecl>,
    pub functor: FunctorDecl,
    pub compose: Option<ComposeDecl>,
    pub range: (u32, u32),
    pub max_period: u32,
    pub audit: AuditDecl,
    pub oracle: bool,
    pub artin_rees: Vec<ArtinReesDecl>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDecl {
    pub name: String,
    pub vars: Vec<String>,
    pub weights: Option<Vec<u32>>,
    pub relations: Vec<String>,
    pub ideals: Vec<IdealDecl>,
    pub modules: Vec<ModuleDecl>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDecl {
    pub name: String,
    pub gens: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDecl {
    pub name: String,
    pub body: ModuleBody,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleBody {
    /// Cokernel of a rows × cols matrix (columns are relations).
    Coker { rows: usize, cols: usize, entries: Vec<Vec<String>> },
    /// Submodule of R^rows spanned by the columns.
    Image { rows: usize, cols: usize, entries: Vec<Vec<String>> },
    Free(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// A ring (as a free module of rank one), a module, or an ideal (as a submodule of R).
    Name(String),
    /// `quotient(J)`, `quotient(J^n)`, `quotient(J, B)` or `quotient(J^n, B)`.
    Quotient { ideal: String, power: bool, base: Option<String> },
}

impl Expr {
    pub fn varies(&self) -> bool {
        matches!(self, Expr::Quotient { power: true, .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorDecl {
    pub kind: FunctorKind,
    pub i: usize,
    pub first: Expr,
    /// Absent exactly for `h0`.
    pub second: Option<Expr>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComposeDecl {
    pub kind: ComposeKind,
    pub j: usize,
    pub with: Expr,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AuditDecl {
    pub dim: bool,
    pub spread: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinReesDecl {
    pub m: Expr,
    pub n: Expr,
    pub ideal: String,
    pub window: (u32, u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum NameKind {
    Ring,
    Ideal,
    Module,
}

/// Byte cursor over one line, reporting 1-based character columns.
struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn column_at(&self, pos: usize) -> usize {
        self.text[..pos].chars().count() + 1
    }

    fn err_at(&self, pos: usize, kind: ErrorKind) -> DslError {
        DslError {
            line: self.line,
            column: self.column_at(pos),
            kind,
        }
    }

    fn syntax(&self, msg: impl Into<String>) -> DslError {
        self.err_at(self.pos, ErrorKind::Syntax(msg.into()))
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.text.len()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), DslError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.syntax(format!("expected `{}`", c)))
        }
    }

    fn word(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let len = rest
            .char_indices()
            .find(|(_, c)| !(c.is_alphanumeric() || *c == '_'))
            .map_or(rest.len(), |(i, _)| i);
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some((start, &rest[..len]))
    }

    fn ident(&mut self, what: &str) -> Result<(usize, &'a str), DslError> {
        match self.word() {
            Some((p, w)) if w.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_') => Ok((p, w)),
            Some((p, _)) => Err(self.err_at(p, ErrorKind::Syntax(format!("expected {}", what)))),
            None => Err(self.syntax(format!("expected {}", what))),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), DslError> {
        let save = self.pos;
        match self.word() {
            Some((_, w)) if w == kw => Ok(()),
            _ => {
                self.pos = save;
                self.skip_ws();
                Err(self.syntax(format!("expected `{}`", kw)))
            }
        }
    }

    fn number<T: std::str::FromStr>(&mut self, what: &str) -> Result<T, DslError> {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..].chars().take_while(|c| c.is_ascii_digit()).count();
        if len == 0 {
            return Err(self.syntax(format!("expected {}", what)));
        }
        self.pos += len;
        self.text[start..start + len]
            .parse()
            .map_err(|_| self.err_at(start, ErrorKind::Syntax(format!("{} out of range", what))))
    }

    /// Text up to the next top-level occurrence of one of `stops` (or the end).
    fn until(&mut self, stops: &[char]) -> (usize, &'a str) {
        self.skip_ws();
        let start = self.pos;
        let mut depth = 0i32;
        for (i, c) in self.text[start..].char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                c if depth == 0 && stops.contains(&c) => {
                    self.pos = start + i;
                    return (start, self.text[start..start + i].trim_end());
                }
                _ => {}
            }
        }
        self.pos = self.text.len();
        (start, self.text[start..].trim_end())
    }

    fn finish(&mut self) -> Result<(), DslError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.syntax("unexpected trailing input"))
        }
    }
}

struct RingState {
    decl: RingDecl,
    ambient: Ring,
    ring: Option<Ring>,
    line: usize,
}

#[derive(Default)]
struct Parser {
    characteristic: Option<u32>,
    rings: Vec<RingState>,
    names: BTreeMap<String, (NameKind, usize)>,
    functor: Option<FunctorDecl>,
    compose: Option<ComposeDecl>,
    range: Option<(u32, u32)>,
    max_period: Option<u32>,
    audit: AuditDecl,
    oracle: bool,
    artin_rees: Vec<ArtinReesDecl>,
}

fn algebra(cur: &Cursor, pos: usize, e: hgl_core::AlgebraError) -> DslError {
    match e {
        hgl_core::AlgebraError::Parse { column, message } => DslError {
            line: cur.line,
            column: cur.column_at(pos) + column - 1,
            kind: ErrorKind::Syntax(message),
        },
        other => cur.err_at(pos, ErrorKind::Algebra(other.to_string())),
    }
}

impl Parser {
    fn field(&self) -> Field {
        Field::from_characteristic(self.characteristic.unwrap_or(DEFAULT_PRIME)).expect("validated characteristic")
    }

    /// The current ring, with its relations applied.
    fn current(&mut self, cur: &Cursor, pos: usize) -> Result<(usize, Ring), DslError> {
        let k = self.rings.len();
        let Some(state) = self.rings.last_mut() else {
            return Err(cur.err_at(pos, ErrorKind::Syntax("declare a ring first".into())));
        };
        if state.ring.is_none() {
            let rels = state
                .decl
                .relations
                .iter()
                .map(|r| state.ambient.parse_poly(r).expect("validated relation"))
                .collect();
            let ring = state.ambient.quotient(rels).map_err(|e| DslError {
                line: state.line,
                column: 1,
                kind: ErrorKind::Algebra(e.to_string()),
            })?;
            state.ring = Some(ring);
        }
        Ok((k - 1, state.ring.clone().unwrap()))
    }

    fn bind(&mut self, cur: &Cursor, pos: usize, name: &str, kind: NameKind, ring: usize) -> Result<(), DslError> {
        if self.names.contains_key(name) {
            return Err(cur.err_at(pos, ErrorKind::Syntax(format!("`{}` is already declared", name))));
        }
        self.names.insert(name.to_string(), (kind, ring));
        Ok(())
    }

    fn lookup(&self, cur: &Cursor, pos: usize, name: &str) -> Result<(NameKind, usize), DslError> {
        self.names
            .get(name)
            .copied()
            .ok_or_else(|| cur.err_at(pos, ErrorKind::UnknownName(name.to_string())))
    }

    fn poly_text(&self, cur: &Cursor, ring: &Ring, pos: usize, text: &str) -> Result<String, DslError> {
        let p = ring.parse_poly(text).map_err(|e| algebra(cur, pos, e))?;
        Ok(ring.format_poly(&p))
    }

    fn line(&mut self, cur: &mut Cursor) -> Result<(), DslError> {
        let (pos, kw) = cur.ident("a directive")?;
        match kw {
            "char" => self.char_line(cur, pos),
            "ring" => self.ring_line(cur),
            "rel" => self.rel_line(cur, pos),
            "ideal" => self.ideal_line(cur, pos),
            "module" => self.module_line(cur, pos),
            "functor" => self.functor_line(cur, pos),
            "compose" => self.compose_line(cur, pos),
            "range" => {
                let n0: u32 = cur.number("range start")?;
                let n1: u32 = cur.number("range end")?;
                cur.finish()?;
                if n0 < 1 || n1 < n0 {
                    return Err(cur.err_at(pos, ErrorKind::Syntax(format!("range {} {} is empty or starts below 1", n0, n1))));
                }
                self.once(cur, pos, self.range.is_some(), "range")?;
                self.range = Some((n0, n1));
                Ok(())
            }
            "fit" => {
                cur.keyword("max_period")?;
                let p: u32 = cur.number("period bound")?;
                cur.finish()?;
                if p == 0 {
                    return Err(cur.err_at(pos, ErrorKind::Syntax("max_period must be at least 1".into())));
                }
                self.once(cur, pos, self.max_period.is_some(), "fit")?;
                self.max_period = Some(p);
                Ok(())
            }
            "audit" => {
                let mut any = false;
                while let Some((p, w)) = cur.word() {
                    match w {
                        "dim" => self.audit.dim = true,
                        "spread" => self.audit.spread = true,
                        _ => return Err(cur.err_at(p, ErrorKind::Syntax("expected `dim` or `spread`".into()))),
                    }
                    any = true;
                }
                cur.finish()?;
                if !any {
                    return Err(cur.syntax("expected `dim` or `spread`"));
                }
                Ok(())
            }
            "oracle" => {
                match cur.word() {
                    Some((_, "on")) => self.oracle = true,
                    Some((_, "off")) => self.oracle = false,
                    _ => return Err(cur.syntax("expected `on` or `off`")),
                }
                cur.finish()
            }
            "artin_rees" => self.artin_rees_line(cur),
            other => Err(cur.err_at(pos, ErrorKind::Syntax(format!("unknown directive `{}`", other)))),
        }
    }

    fn once(&self, cur: &Cursor, pos: usize, seen: bool, what: &str) -> Result<(), DslError> {
        if seen {
            Err(cur.err_at(pos, ErrorKind::Syntax(format!("`{}` given twice", what))))
        } else {
            Ok(())
        }
    }

    fn char_line(&mut self, cur: &mut Cursor, pos: usize) -> Result<(), DslError> {
        let p: u32 = cur.number("characteristic")?;
        cur.finish()?;
        if let Err(e) = Field::from_characteristic(p) {
            return Err(cur.err_at(pos, ErrorKind::InconsistentCharacteristic(e.to_string())));
        }
        if let Some(q) = self.characteristic {
            if q != p {
                return Err(cur.err_at(pos, ErrorKind::InconsistentCharacteristic(format!("{} was already declared as {}", p, q))));
            }
        }
        if !self.rings.is_empty() && self.characteristic.is_none() && p != DEFAULT_PRIME {
            return Err(cur.err_at(
                pos,
                ErrorKind::InconsistentCharacteristic(format!("rings above were built over F_{}", DEFAULT_PRIME)),
            ));
        }
        self.characteristic = Some(p);
        Ok(())
    }

    fn ring_line(&mut self, cur: &mut Cursor) -> Result<(), DslError> {
        let (npos, name) = cur.ident("a ring name")?;
        cur.keyword("vars")?;
        let mut vars: Vec<String> = Vec::new();
        let mut weights = None;
        while let Some((p, w)) = cur.word() {
            if w == "weights" {
                let mut ws = Vec::new();
                while !cur.at_end() {
                    ws.push(cur.number::<u32>("weight")?);
                }
                weights = Some(ws);
                break;
            }
            if !w.chars().next().is_some_and(|c| c.is_alphabetic()) {
                return Err(cur.err_at(p, ErrorKind::Syntax(format!("`{}` is not a variable name", w))));
            }
            if vars.iter().any(|v| v == w) {
                return Err(cur.err_at(p, ErrorKind::Syntax(format!("variable `{}` repeated", w))));
            }
            vars.push(w.to_string());
        }
        cur.finish()?;
        if vars.is_empty() {
            return Err(cur.syntax("expected at least one variable"));
        }
        if let Some(ws) = &weights {
            if ws.len() != vars.len() || ws.contains(&0) {
                return Err(cur.syntax(format!("expected {} positive weights", vars.len())));
            }
        }
        let refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        let ambient = RingPresentation::polynomial_ring(&refs, self.field(), weights.as_deref(), OrderKind::Grevlex)
            .map_err(|e| algebra(cur, npos, e))?;
        let idx = self.rings.len();
        self.bind(cur, npos, name, NameKind::Ring, idx)?;
        self.rings.push(RingState {
            decl: RingDecl {
                name: name.to_string(),
                vars,
                weights,
                relations: Vec::new(),
                ideals: Vec::new(),
                modules: Vec::new(),
            },
            ambient,
            ring: None,
            line: cur.line,
        });
        Ok(())
    }

    fn rel_line(&mut self, cur: &mut Cursor, pos: usize) -> Result<(), DslError> {
        let Some(state) = self.rings.last() else {
            return Err(cur.err_at(pos, ErrorKind::Syntax("declare a ring first".into())));
        };
        if state.ring.is_some() {
            return Err(cur.err_at(pos, ErrorKind::Syntax("relations must directly follow their ring".into())));
        }
        let ambient = state.ambient.clone();
        let (p, text) = cur.until(&[]);
        let poly = ambient.parse_poly(text).map_err(|e| algebra(cur, p, e))?;
        if !poly.is_homogeneous() {
            return Err(cur.err_at(p, ErrorKind::Algebra(format!("relation {} is not homogeneous", text))));
        }
        let formatted = ambient.format_poly(&poly);
        self.rings.last_mut().unwrap().decl.relations.push(formatted);
        Ok(())
    }

    fn ideal_line(&mut self, cur: &mut Cursor, pos: usize) -> Result<(), DslError> {
        let (npos, name) = cur.ident("an ideal name")?;
        cur.expect('=')?;
        let (ri, ring) = self.current(cur, pos)?;
        let mut gens = Vec::new();
        loop {
            let (p, text) = cur.until(&[',']);
            let g = self.poly_text(cur, &ring, p, text)?;
            let poly = ring.parse_poly(&g).unwrap();
            if !poly.is_homogeneous() {
                return Err(cur.err_at(p, ErrorKind::Algebra(format!("generator {} is not homogeneous", text))));
            }
            gens.push(g);
            if !cur.eat(',') {
                break;
            }
        }
        cur.finish()?;
        self.bind(cur, npos, name, NameKind::Ideal, ri)?;
        self.rings[ri].decl.ideals.push(IdealDecl {
            name: name.to_string(),
            gens,
        });
        Ok(())
    }

    fn matrix(&mut self, cur: &mut Cursor, ring: &Ring) -> Result<(usize, usize, Vec<Vec<String>>), DslError> {
        cur.skip_ws();
        let dpos = cur.pos;
        let rows: usize = cur.number("row count")?;
        match cur.word() {
            Some((_, w)) if w.starts_with('x') && w.len() > 1 && w[1..].chars().all(|c| c.is_ascii_digit()) => {
                let cols: usize = w[1..].parse().map_err(|_| cur.syntax("bad column count"))?;
                if rows == 0 || cols == 0 {
                    return Err(cur.err_at(dpos, ErrorKind::Syntax("matrix dimensions must be positive".into())));
                }
                cur.expect('[')?;
                let mut entries = Vec::new();
                loop {
                    let mut row = Vec::new();
                    loop {
                        let (p, text) = cur.until(&[',', ';', ']']);
                        row.push(self.poly_text(cur, ring, p, text)?);
                        if !cur.eat(',') {
                            break;
                        }
                    }
                    if row.len() != cols {
                        return Err(cur.syntax(format!("row {} has {} entries, expected {}", entries.len() + 1, row.len(), cols)));
                    }
                    entries.push(row);
                    if !cur.eat(';') {
                        break;
                    }
                }
                cur.expect(']')?;
                if entries.len() != rows {
                    return Err(cur.err_at(dpos, ErrorKind::Syntax(format!("matrix has {} rows, expected {}", entries.len(), rows))));
                }
                Ok((rows, cols, entries))
            }
            _ => Err(cur.err_at(dpos, ErrorKind::Syntax("expected `<rows>x<cols>`".into()))),
        }
    }

    fn module_line(&mut self, cur: &mut Cursor, pos: usize) -> Result<(), DslError> {
        let (npos, name) = cur.ident("a module name")?;
        cur.expect('=')?;
        let (ri, ring) = self.current(cur, pos)?;
        let (kpos, kind) = cur.ident("`coker`, `image` or `free`")?;
        let body = match kind {
            "coker" => {
                let (rows, cols, entries) = self.matrix(cur, &ring)?;
                ModuleBody::Coker { rows, cols, entries }
            }
            "image" => {
                let (rows, cols, entries) = self.matrix(cur, &ring)?;
                ModuleBody::Image { rows, cols, entries }
            }
            "free" => {
                let r: usize = cur.number("rank")?;
                if r == 0 {
                    return Err(cur.err_at(kpos, ErrorKind::Syntax("rank must be positive".into())));
                }
                ModuleBody::Free(r)
            }
            _ => return Err(cur.err_at(kpos, ErrorKind::Syntax("expected `coker`, `image` or `free`".into()))),
        };
        cur.finish()?;
        let decl = ModuleDecl {
            name: name.to_string(),
            body,
        };
        build_module(&ring, &decl).map_err(|e| cur.err_at(kpos, ErrorKind::Algebra(e.to_string())))?;
        self.bind(cur, npos, name, NameKind::Module, ri)?;
        self.rings[ri].decl.modules.push(decl);
        Ok(())
    }

    /// Parses an expression and returns it with the ring it lives over.
    fn expr(&mut self, cur: &mut Cursor) -> Result<(Expr, usize), DslError> {
        let (pos, head) = cur.ident("an expression")?;
        if head != "quotient" || cur.peek() != Some('(') {
            let (_, ring) = self.lookup(cur, pos, head)?;
            return Ok((Expr::Name(head.to_string()), ring));
        }
        cur.expect('(')?;
        let (ipos, ideal) = cur.ident("an ideal name")?;
        let (kind, ring) = self.lookup(cur, ipos, ideal)?;
        if kind != NameKind::Ideal {
            return Err(cur.err_at(ipos, ErrorKind::Syntax(format!("`{}` is not an ideal", ideal))));
        }
        let mut power = false;
        if cur.eat('^') {
            match cur.word() {
                Some((_, "n")) => power = true,
                _ => return Err(cur.syntax("expected `n` after `^`")),
            }
        }
        let mut base = None;
        if cur.eat(',') {
            let (bpos, b) = cur.ident("a module name")?;
            let (bkind, bring) = self.lookup(cur, bpos, b)?;
            if bkind == NameKind::Ideal {
                return Err(cur.err_at(bpos, ErrorKind::Syntax(format!("`{}` is an ideal, expected a module", b))));
            }
            if bring != ring {
                return Err(cur.err_at(bpos, ErrorKind::Syntax(format!("`{}` lives over a different ring", b))));
            }
            base = Some(b.to_string());
        }
        cur.expect(')')?;
        Ok((
            Expr::Quotient {
                ideal: ideal.to_string(),
                power,
                base,
            },
            ring,
        ))
    }

    /// `key=` prefix.
    fn key(&mut self, cur: &mut Cursor, key: &str) -> Result<(), DslError> {
        cur.keyword(key)?;
        cur.expect('=')
    }

    fn functor_line(&mut self, cur: &mut Cursor, pos: usize) -> Result<(), DslError> {
        let (kpos, kind) = cur.until(&[' ', '\t']);
        let kind = match kind {
            "ext" => FunctorKind::Ext,
            "tor" => FunctorKind::Tor,
            "ext-swapped" => FunctorKind::ExtSwapped,
            "h0" => FunctorKind::H0,
            _ => return Err(cur.err_at(kpos, ErrorKind::Syntax("expected `ext`, `tor`, `ext-swapped` or `h0`".into()))),
        };
        let mut i = 0;
        let save = cur.pos;
        if matches!(cur.word(), Some((_, "i"))) {
            cur.expect('=')?;
            i = cur.number("homological index")?;
        } else {
            cur.pos = save;
            if kind != FunctorKind::H0 {
                cur.skip_ws();
                return Err(cur.syntax("expected `i=`"));
            }
        }
        if kind == FunctorKind::H0 && i != 0 {
            return Err(cur.err_at(kpos, ErrorKind::Syntax("h0 takes no index other than 0".into())));
        }
        self.key(cur, "first")?;
        cur.skip_ws();
        let fpos = cur.pos;
        let (first, ring) = self.expr(cur)?;
        let second = if kind == FunctorKind::H0 {
            None
        } else {
            self.key(cur, "second")?;
            cur.skip_ws();
            let spos = cur.pos;
            let (second, sring) = self.expr(cur)?;
            if sring != ring {
                return Err(cur.err_at(spos, ErrorKind::Syntax("both arguments must live over the same ring".into())));
            }
            if second.varies() && first.varies() {
                return Err(cur.err_at(spos, ErrorKind::Syntax("at most one argument may depend on n".into())));
            }
            Some(second)
        };
        cur.finish()?;
        if !first.varies() && !second.as_ref().is_some_and(|s| s.varies()) {
            return Err(cur.err_at(fpos, ErrorKind::Syntax("one argument must have the form quotient(<ideal>^n[, <module>])".into())));
        }
        self.once(cur, pos, self.functor.is_some(), "functor")?;
        self.functor = Some(FunctorDecl { kind, i, first, second });
        Ok(())
    }

    fn compose_line(&mut self, cur: &mut Cursor, pos: usize) -> Result<(), DslError> {
        let kind = match cur.word() {
            Some((_, "tor")) => ComposeKind::Tor,
            Some((_, "ext")) => ComposeKind::Ext,
            _ => return Err(cur.syntax("expected `tor` or `ext`")),
        };
        self.key(cur, "j")?;
        let j = cur.number("index")?;
        self.key(cur, "with")?;
        cur.skip_ws();
        let wpos = cur.pos;
        let (with, _) = self.expr(cur)?;
        cur.finish()?;
        if with.varies() {
            return Err(cur.err_at(wpos, ErrorKind::Syntax("the composing module must not depend on n".into())));
        }
        self.once(cur, pos, self.compose.is_some(), "compose")?;
        self.compose = Some(ComposeDecl { kind, j, with });
        Ok(())
    }

    fn artin_rees_line(&mut self, cur: &mut Cursor) -> Result<(), DslError> {
        self.key(cur, "M")?;
        let (m, ring) = self.expr(cur)?;
        self.key(cur, "N")?;
        cur.skip_ws();
        let npos = cur.pos;
        let (n, nring) = self.expr(cur)?;
        self.key(cur, "I")?;
        let (ipos, ideal) = cur.ident("an ideal name")?;
        let (ikind, iring) = self.lookup(cur, ipos, ideal)?;
        if ikind != NameKind::Ideal {
            return Err(cur.err_at(ipos, ErrorKind::Syntax(format!("`{}` is not an ideal", ideal))));
        }
        cur.keyword("window")?;
        let lo: u32 = cur.number("window start")?;
        let hi: u32 = cur.number("window end")?;
        cur.finish()?;
        if nring != ring || iring != ring {
            return Err(cur.err_at(npos, ErrorKind::Syntax("M, N and I must live over the same ring".into())));
        }
        if m.varies() || n.varies() {
            return Err(cur.err_at(npos, ErrorKind::Syntax("M and N must not depend on n".into())));
        }
        if hi < lo {
            return Err(cur.syntax("empty window"));
        }
        self.artin_rees.push(ArtinReesDecl {
            m,
            n,
            ideal: ideal.to_string(),
            window: (lo, hi),
        });
        Ok(())
    }
}

/// Parses and validates a scenario.
pub fn parse_scenario(text: &str) -> Result<ScenarioSpec, DslError> {
    let mut p = Parser::default();
    let mut last_line = 1;
    let mut saw_content = false;
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut cur = Cursor { text: line, pos: 0, line: k + 1 };
        last_line = k + 1;
        if cur.at_end() {
            continue;
        }
        saw_content = true;
        p.line(&mut cur)?;
        // close the relation block so later `rel` lines are rejected
        if !line.trim_start().starts_with("rel") && !line.trim_start().starts_with("ring") && !p.rings.is_empty() {
            let end = Cursor { text: line, pos: 0, line: k + 1 };
            p.current(&end, 0)?;
        }
    }
    if !saw_content {
        return Err(DslError {
            line: 1,
            column: 1,
            kind: ErrorKind::Syntax("empty scenario".into()),
        });
    }
    let missing = |what: &str| DslError {
        line: last_line,
        column: 1,
        kind: ErrorKind::Syntax(format!("scenario has no `{}` line", what)),
    };
    let functor = p.functor.take().ok_or_else(|| missing("functor"))?;
    let range = p.range.ok_or_else(|| missing("range"))?;
    let end = Cursor { text: "", pos: 0, line: last_line };
    for state in &mut p.rings {
        if state.ring.is_none() {
            let rels = state.decl.relations.iter().map(|r| state.ambient.parse_poly(r).unwrap()).collect();
            state.ring = Some(state.ambient.quotient(rels).map_err(|e| algebra(&end, 0, e))?);
        }
    }
    Ok(ScenarioSpec {
        characteristic: p.characteristic.unwrap_or(DEFAULT_PRIME),
        rings: p.rings.into_iter().map(|s| s.decl).collect(),
        functor,
        compose: p.compose,
        range,
        max_period: p.max_period.unwrap_or(6),
        audit: p.audit,
        oracle: p.oracle,
        artin_rees: p.artin_rees,
    })
}

fn kind_name(kind: FunctorKind) -> &'static str {
    match kind {
        FunctorKind::Ext => "ext",
        FunctorKind::Tor => "tor",
        FunctorKind::ExtSwapped => "ext-swapped",
        FunctorKind::H0 => "h0",
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Name(n) => f.write_str(n),
            Expr::Quotient { ideal, power, base } => {
                write!(f, "quotient({}", ideal)?;
                if *power {
                    f.write_str("^n")?;
                }
                if let Some(b) = base {
                    write!(f, ", {}", b)?;
                }
                f.write_str(")")
            }
        }
    }
}

fn write_matrix(f: &mut fmt::Formatter<'_>, rows: usize, cols: usize, entries: &[Vec<String>]) -> fmt::Result {
    let body: Vec<String> = entries.iter().map(|r| r.join(", ")).collect();
    write!(f, "{}x{} [ {} ]", rows, cols, body.join(" ; "))
}

impl fmt::Display for ScenarioSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "char {}", self.characteristic)?;
        for r in &self.rings {
            write!(f, "ring {} vars {}", r.name, r.vars.join(" "))?;
            if let Some(w) = &r.weights {
                let ws: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                write!(f, " weights {}", ws.join(" "))?;
            }
            writeln!(f)?;
            for rel in &r.relations {
                writeln!(f, "rel {}", rel)?;
            }
            for i in &r.ideals {
                writeln!(f, "ideal {} = {}", i.name, i.gens.join(", "))?;
            }
            for m in &r.modules {
                write!(f, "module {} = ", m.name)?;
                match &m.body {
                    ModuleBody::Coker { rows, cols, entries } => {
                        f.write_str("coker ")?;
                        write_matrix(f, *rows, *cols, entries)?;
                    }
                    ModuleBody::Image { rows, cols, entries } => {
                        f.write_str("image ")?;
                        write_matrix(f, *rows, *cols, entries)?;
                    }
                    ModuleBody::Free(r) => write!(f, "free {}", r)?,
                }
                writeln!(f)?;
            }
        }
        let fd = &self.functor;
        match &fd.second {
            Some(s) => writeln!(f, "functor {} i={} first={} second={}", kind_name(fd.kind), fd.i, fd.first, s)?,
            None => writeln!(f, "functor {} first={}", kind_name(fd.kind), fd.first)?,
        }
        if let Some(c) = &self.compose {
            let k = match c.kind {
                ComposeKind::Tor => "tor",
                ComposeKind::Ext => "ext",
            };
            writeln!(f, "compose {} j={} with={}", k, c.j, c.with)?;
        }
        writeln!(f, "range {} {}", self.range.0, self.range.1)?;
        writeln!(f, "fit max_period {}", self.max_period)?;
        if self.audit.dim || self.audit.spread {
            let mut words = Vec::new();
            if self.audit.dim {
                words.push("dim");
            }
            if self.audit.spread {
                words.push("spread");
            }
            writeln!(f, "audit {}", words.join(" "))?;
        }
        if self.oracle {
            writeln!(f, "oracle on")?;
        }
        for a in &self.artin_rees {
            writeln!(f, "artin_rees M={} N={} I={} window {} {}", a.m, a.n, a.ideal, a.window.0, a.window.1)?;
        }
        Ok(())
    }
}

pub use crate::compile::{build_module, compile, Compiled};
