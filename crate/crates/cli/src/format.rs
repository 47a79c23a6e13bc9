//! Definition files.
//!
//! A file starts with a `ring` line and then defines named entities, one
//! namespace for all kinds. Blank lines are ignored and `#` starts a comment.
//!
//! ```text
//! ring Q
//! coalgebra D = matrix(2)
//! coalgebra G
//!   rank 2
//!   delta 4x2
//!     1 0
//!     0 0
//!     0 0
//!     0 1
//!   epsilon 1x2
//!     1 1
//! end
//! comodule X right D
//!   generators 2
//!   coaction 8x2
//!     ...
//! end
//! comodule R3 = regular left D
//! comodule S = sum X X
//! bicomodule B = regular D
//! bicomodule F = from X
//! bicomodule M D C
//!   generators 2
//!   relations 0x2
//!   left 8x2
//!     ...
//!   right 2x2
//!     ...
//! end
//! map g 4x1
//!   1
//!   0
//!   0
//!   1
//! context K
//!   d D
//!   c C
//!   m M
//!   n N
//!   f 4x4
//!     ...
//!   g g
//! end
//! ```
//!
//! A matrix header `RxC` is followed by `R` lines of `C` entries. Entries
//! are integer or rational literals, reduced into the ring on parsing.
//! Structure constants are stored one column per basis element; the basis
//! of `A ⊗ B` is ordered left-major, `a_i ⊗ b_j` at index `i * dim B + j`,
//! all zero-based. A right coaction has shape `(m·c) x m`, a left one
//! `(c·m) x m`. Relations are rows over the generators.
//!
//! Builtin coalgebras: `grouplike(d)`, `matrix(n)`, `divided(k)`, `unit`.

use std::fmt::Write as _;

use comod::comodule::Side;
use comod::ring::{Integers, IntegersMod, PrimeField, Rationals, Ring, RingDescriptor};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixLit {
    pub rows: usize,
    pub cols: usize,
    /// Row-major canonical literals.
    pub entries: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    Grouplike(usize),
    Matrix(usize),
    Divided(usize),
    Unit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoalgebraDef {
    Builtin(Builtin),
    Literal { rank: Option<usize>, delta: MatrixLit, epsilon: MatrixLit },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComoduleDef {
    Regular { side: Side, coalgebra: String },
    Sum(String, String),
    Literal { side: Side, coalgebra: String, generators: usize, relations: Option<MatrixLit>, coaction: MatrixLit },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BicomoduleDef {
    Regular(String),
    From(String),
    Literal {
        left: String,
        right: String,
        generators: usize,
        relations: Option<MatrixLit>,
        left_coaction: MatrixLit,
        right_coaction: MatrixLit,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapRef {
    Named(String),
    Inline(MatrixLit),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContextDef {
    pub d: String,
    pub c: String,
    pub m: String,
    pub n: String,
    pub f: MapRef,
    pub g: MapRef,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Def {
    Coalgebra(CoalgebraDef),
    Comodule(ComoduleDef),
    Bicomodule(BicomoduleDef),
    Map(MatrixLit),
    Context(ContextDef),
}

impl Def {
    pub fn kind(&self) -> &'static str {
        match self {
            Def::Coalgebra(_) => "coalgebra",
            Def::Comodule(_) => "comodule",
            Def::Bicomodule(_) => "bicomodule",
            Def::Map(_) => "map",
            Def::Context(_) => "context",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Item {
    pub name: String,
    pub def: Def,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefinitionFile {
    pub ring: RingDescriptor,
    pub items: Vec<Item>,
}

impl DefinitionFile {
    pub fn get(&self, name: &str) -> Option<&Item> {
        self.items.iter().find(|i| i.name == name)
    }
}

/// Canonical literal of an entry in the ring.
fn canonical(ring: RingDescriptor, lit: &str) -> Result<String, String> {
    fn go<R: Ring>(r: &R, lit: &str) -> Result<String, String> {
        r.parse_elem(lit).map(|e| e.to_string()).map_err(|e| e.to_string())
    }
    match ring {
        RingDescriptor::Rationals => go(&Rationals, lit),
        RingDescriptor::Integers => go(&Integers, lit),
        RingDescriptor::PrimeField(p) => go(&PrimeField::new(p).map_err(|e| e.to_string())?, lit),
        RingDescriptor::IntegersMod(n) => go(&IntegersMod::new(n).map_err(|e| e.to_string())?, lit),
    }
}

struct Tok {
    col: usize,
    text: String,
}

struct Line {
    no: usize,
    toks: Vec<Tok>,
}

fn tokenize(text: &str) -> Vec<Line> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut toks = Vec::new();
        let mut start: Option<usize> = None;
        for (c, ch) in body.chars().enumerate() {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(c),
                (true, Some(s)) => {
                    toks.push(Tok { col: s + 1, text: body.chars().skip(s).take(c - s).collect() });
                    start = None;
                }
                _ => {}
            }
        }
        if let Some(s) = start {
            toks.push(Tok { col: s + 1, text: body.chars().skip(s).collect() });
        }
        if !toks.is_empty() {
            out.push(Line { no: i + 1, toks });
        }
    }
    out
}

struct Parser {
    lines: Vec<Line>,
    pos: usize,
    ring: RingDescriptor,
}

fn perr(line: usize, col: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse { line, col, msg: msg.into() }
}

fn is_name(s: &str) -> bool {
    let mut ch = s.chars();
    matches!(ch.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && ch.all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '+' | '.' | '-' | '^'))
}

impl Parser {
    fn next_line(&mut self) -> Option<&Line> {
        let l = self.lines.get(self.pos)?;
        self.pos += 1;
        Some(l)
    }

    fn name(&self, line: &Line, idx: usize) -> Result<String, CliError> {
        let t = line.toks.get(idx).ok_or_else(|| perr(line.no, line.toks.last().map_or(1, |t| t.col), "expected a name"))?;
        if !is_name(&t.text) {
            return Err(perr(line.no, t.col, format!("`{}` is not a valid name", t.text)));
        }
        Ok(t.text.clone())
    }

    fn arity(&self, line: &Line, n: usize) -> Result<(), CliError> {
        if line.toks.len() > n {
            let t = &line.toks[n];
            return Err(perr(line.no, t.col, format!("unexpected `{}`", t.text)));
        }
        if line.toks.len() < n {
            return Err(perr(line.no, line.toks[0].col, format!("`{}` expects {} arguments", line.toks[0].text, n - 1)));
        }
        Ok(())
    }

    fn side(&self, line: &Line, idx: usize) -> Result<Side, CliError> {
        let t = line.toks.get(idx).ok_or_else(|| perr(line.no, 1, "expected `left` or `right`"))?;
        match t.text.as_str() {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(perr(line.no, t.col, format!("expected `left` or `right`, got `{other}`"))),
        }
    }

    /// A matrix with header token `tok` on line `header_no`; rows follow.
    fn matrix(&mut self, header_no: usize, tok: &Tok) -> Result<MatrixLit, CliError> {
        let (r, c) = tok
            .text
            .split_once('x')
            .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
            .ok_or_else(|| perr(header_no, tok.col, format!("`{}` is not a matrix shape RxC", tok.text)))?;
        let mut entries = Vec::with_capacity(r * c);
        if c > 0 {
            for _ in 0..r {
                let ring = self.ring;
                let line = self.next_line().ok_or_else(|| perr(header_no, tok.col, "matrix ends early"))?;
                let no = line.no;
                if line.toks.len() != c {
                    let col = line.toks.get(c).map_or(line.toks[0].col, |t| t.col);
                    return Err(perr(no, col, format!("expected {c} entries, found {}", line.toks.len())));
                }
                for t in &line.toks {
                    entries.push(canonical(ring, &t.text).map_err(|m| perr(no, t.col, m))?);
                }
            }
        }
        Ok(MatrixLit { rows: r, cols: c, entries })
    }

    fn builtin(&self, line: &Line, idx: usize) -> Result<Builtin, CliError> {
        let t = line.toks.get(idx).ok_or_else(|| perr(line.no, 1, "expected a builtin coalgebra"))?;
        let bad = || perr(line.no, t.col, format!("unknown builtin coalgebra `{}`", t.text));
        if t.text == "unit" {
            return Ok(Builtin::Unit);
        }
        let (head, rest) = t.text.split_once('(').ok_or_else(bad)?;
        let n: usize = rest.strip_suffix(')').and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        if n == 0 {
            return Err(perr(line.no, t.col, "builtin size must be positive"));
        }
        match head {
            "grouplike" => Ok(Builtin::Grouplike(n)),
            "matrix" => Ok(Builtin::Matrix(n)),
            "divided" => Ok(Builtin::Divided(n)),
            _ => Err(bad()),
        }
    }

    /// Body lines up to `end`, each handed to `f` with its keyword.
    fn block(&mut self, start: usize, mut f: impl FnMut(&mut Self, usize, &Tok, &[Tok]) -> Result<(), CliError>) -> Result<(), CliError> {
        loop {
            let Some(line) = self.lines.get(self.pos) else {
                return Err(perr(start, 1, "block is missing `end`"));
            };
            self.pos += 1;
            let no = line.no;
            let toks: Vec<Tok> = line.toks.iter().map(|t| Tok { col: t.col, text: t.text.clone() }).collect();
            if toks[0].text == "end" {
                if toks.len() > 1 {
                    return Err(perr(no, toks[1].col, "unexpected text after `end`"));
                }
                return Ok(());
            }
            f(self, no, &toks[0], &toks[1..])?;
        }
    }
}

fn once<T>(slot: &mut Option<T>, v: T, no: usize, kw: &Tok) -> Result<(), CliError> {
    if slot.is_some() {
        return Err(perr(no, kw.col, format!("duplicate `{}`", kw.text)));
    }
    *slot = Some(v);
    Ok(())
}

fn one_arg<'a>(no: usize, kw: &Tok, args: &'a [Tok]) -> Result<&'a Tok, CliError> {
    match args {
        [a] => Ok(a),
        [] => Err(perr(no, kw.col, format!("`{}` expects an argument", kw.text))),
        [_, extra, ..] => Err(perr(no, extra.col, format!("unexpected `{}`", extra.text))),
    }
}

fn require<T>(v: Option<T>, start: usize, what: &str) -> Result<T, CliError> {
    v.ok_or_else(|| perr(start, 1, format!("block is missing `{what}`")))
}

fn parse_count(no: usize, t: &Tok) -> Result<usize, CliError> {
    t.text.parse().map_err(|_| perr(no, t.col, format!("`{}` is not a count", t.text)))
}

fn ident(no: usize, t: &Tok) -> Result<String, CliError> {
    if is_name(&t.text) {
        Ok(t.text.clone())
    } else {
        Err(perr(no, t.col, format!("`{}` is not a valid name", t.text)))
    }
}

pub fn parse(text: &str) -> Result<DefinitionFile, CliError> {
    let lines = tokenize(text);
    let Some(first) = lines.first() else {
        return Err(perr(1, 1, "empty definition file"));
    };
    if first.toks[0].text != "ring" || first.toks.len() != 2 {
        return Err(perr(first.no, first.toks[0].col, "file must start with `ring <Q|Z|Fp|Z/n>`"));
    }
    let ring: RingDescriptor = first.toks[1].text.parse().map_err(|e: comod::ring::RingError| perr(first.no, first.toks[1].col, e.to_string()))?;
    let mut p = Parser { lines, pos: 1, ring };
    let mut items: Vec<Item> = Vec::new();
    while p.pos < p.lines.len() {
        let line = &p.lines[p.pos];
        p.pos += 1;
        let no = line.no;
        let kw = line.toks[0].text.clone();
        if !matches!(kw.as_str(), "coalgebra" | "comodule" | "bicomodule" | "map" | "context") {
            return Err(perr(no, line.toks[0].col, format!("unknown definition `{kw}`")));
        }
        let name = p.name(line, 1)?;
        if items.iter().any(|i| i.name == name) {
            return Err(CliError::Semantic { name, msg: "defined twice".into() });
        }
        let eq = line.toks.get(2).is_some_and(|t| t.text == "=");
        let def = match (kw.as_str(), eq) {
            ("coalgebra", true) => {
                p.arity(line, 4)?;
                Def::Coalgebra(CoalgebraDef::Builtin(p.builtin(line, 3)?))
            }
            ("coalgebra", false) => {
                p.arity(line, 2)?;
                let (mut rank, mut delta, mut epsilon) = (None, None, None);
                p.block(no, |p, no, kw, args| match kw.text.as_str() {
                    "rank" => once(&mut rank, parse_count(no, one_arg(no, kw, args)?)?, no, kw),
                    "delta" => {
                        let m = p.matrix(no, one_arg(no, kw, args)?)?;
                        once(&mut delta, m, no, kw)
                    }
                    "epsilon" => {
                        let m = p.matrix(no, one_arg(no, kw, args)?)?;
                        once(&mut epsilon, m, no, kw)
                    }
                    other => Err(perr(no, kw.col, format!("unknown coalgebra field `{other}`"))),
                })?;
                Def::Coalgebra(CoalgebraDef::Literal { rank, delta: require(delta, no, "delta")?, epsilon: require(epsilon, no, "epsilon")? })
            }
            ("comodule", true) => {
                let t = line.toks.get(3).ok_or_else(|| perr(no, line.toks[2].col, "expected `regular` or `sum`"))?;
                match t.text.as_str() {
                    "regular" => {
                        p.arity(line, 6)?;
                        Def::Comodule(ComoduleDef::Regular { side: p.side(line, 4)?, coalgebra: p.name(line, 5)? })
                    }
                    "sum" => {
                        p.arity(line, 6)?;
                        Def::Comodule(ComoduleDef::Sum(p.name(line, 4)?, p.name(line, 5)?))
                    }
                    other => return Err(perr(no, t.col, format!("expected `regular` or `sum`, got `{other}`"))),
                }
            }
            ("comodule", false) => {
                p.arity(line, 4)?;
                let side = p.side(line, 2)?;
                let coalgebra = p.name(line, 3)?;
                let (mut generators, mut relations, mut coaction) = (None, None, None);
                p.block(no, |p, no, kw, args| match kw.text.as_str() {
                    "generators" => once(&mut generators, parse_count(no, one_arg(no, kw, args)?)?, no, kw),
                    "relations" => {
                        let m = p.matrix(no, one_arg(no, kw, args)?)?;
                        once(&mut relations, m, no, kw)
                    }
                    "coaction" => {
                        let m = p.matrix(no, one_arg(no, kw, args)?)?;
                        once(&mut coaction, m, no, kw)
                    }
                    other => Err(perr(no, kw.col, format!("unknown comodule field `{other}`"))),
                })?;
                Def::Comodule(ComoduleDef::Literal {
                    side,
                    coalgebra,
                    generators: require(generators, no, "generators")?,
                    relations,
                    coaction: require(coaction, no, "coaction")?,
                })
            }
            ("bicomodule", true) => {
                p.arity(line, 5)?;
                let t = &line.toks[3];
                match t.text.as_str() {
                    "regular" => Def::Bicomodule(BicomoduleDef::Regular(p.name(line, 4)?)),
                    "from" => Def::Bicomodule(BicomoduleDef::From(p.name(line, 4)?)),
                    other => return Err(perr(no, t.col, format!("expected `regular` or `from`, got `{other}`"))),
                }
            }
            ("bicomodule", false) => {
                p.arity(line, 4)?;
                let (left, right) = (p.name(line, 2)?, p.name(line, 3)?);
                let (mut generators, mut relations, mut lc, mut rc) = (None, None, None, None);
                p.block(no, |p, no, kw, args| match kw.text.as_str() {
                    "generators" => once(&mut generators, parse_count(no, one_arg(no, kw, args)?)?, no, kw),
                    "relations" => {
                        let m = p.matrix(no, one_arg(no, kw, args)?)?;
                        once(&mut relations, m, no, kw)
                    }
                    "left" => {
                        let m = p.matrix(no, one_arg(no, kw, args)?)?;
                        once(&mut lc, m, no, kw)
                    }
                    "right" => {
                        let m = p.matrix(no, one_arg(no, kw, args)?)?;
                        once(&mut rc, m, no, kw)
                    }
                    other => Err(perr(no, kw.col, format!("unknown bicomodule field `{other}`"))),
                })?;
                Def::Bicomodule(BicomoduleDef::Literal {
                    left,
                    right,
                    generators: require(generators, no, "generators")?,
                    relations,
                    left_coaction: require(lc, no, "left")?,
                    right_coaction: require(rc, no, "right")?,
                })
            }
            ("map", false) => {
                p.arity(line, 3)?;
                let t = Tok { col: line.toks[2].col, text: line.toks[2].text.clone() };
                Def::Map(p.matrix(no, &t)?)
            }
            ("context", false) => {
                p.arity(line, 2)?;
                let mut slots: [Option<String>; 4] = Default::default();
                let (mut f, mut g) = (None, None);
                p.block(no, |p, no, kw, args| {
                    let arg = one_arg(no, kw, args)?;
                    let idx = ["d", "c", "m", "n"].iter().position(|k| *k == kw.text);
                    if let Some(i) = idx {
                        return once(&mut slots[i], ident(no, arg)?, no, kw);
                    }
                    let target = match kw.text.as_str() {
                        "f" => &mut f,
                        "g" => &mut g,
                        other => return Err(perr(no, kw.col, format!("unknown context field `{other}`"))),
                    };
                    let r = if is_name(&arg.text) { MapRef::Named(arg.text.clone()) } else { MapRef::Inline(p.matrix(no, arg)?) };
                    once(target, r, no, kw)
                })?;
                let [d, c, m, n] = slots;
                Def::Context(ContextDef {
                    d: require(d, no, "d")?,
                    c: require(c, no, "c")?,
                    m: require(m, no, "m")?,
                    n: require(n, no, "n")?,
                    f: require(f, no, "f")?,
                    g: require(g, no, "g")?,
                })
            }
            (other, _) => {
                let col = p.lines[p.pos - 1].toks[2].col;
                return Err(perr(no, col, format!("`{other}` cannot be defined with `=`")));
            }
        };
        items.push(Item { name, def });
    }
    Ok(DefinitionFile { ring, items })
}

fn render_matrix(out: &mut String, indent: &str, m: &MatrixLit) {
    if m.cols == 0 {
        return;
    }
    for r in 0..m.rows {
        let row = &m.entries[r * m.cols..(r + 1) * m.cols];
        let _ = writeln!(out, "{indent}{}", row.join(" "));
    }
}

fn shape(m: &MatrixLit) -> String {
    format!("{}x{}", m.rows, m.cols)
}

/// Canonical text: one item after another, two-space indentation, entries
/// in the ring's canonical form.
pub fn render(file: &DefinitionFile) -> String {
    let mut out = format!("ring {}\n", file.ring);
    for item in &file.items {
        out.push('\n');
        let name = &item.name;
        match &item.def {
            Def::Coalgebra(CoalgebraDef::Builtin(b)) => {
                let s = match b {
                    Builtin::Grouplike(d) => format!("grouplike({d})"),
                    Builtin::Matrix(n) => format!("matrix({n})"),
                    Builtin::Divided(k) => format!("divided({k})"),
                    Builtin::Unit => "unit".into(),
                };
                let _ = writeln!(out, "coalgebra {name} = {s}");
            }
            Def::Coalgebra(CoalgebraDef::Literal { rank, delta, epsilon }) => {
                let _ = writeln!(out, "coalgebra {name}");
                if let Some(r) = rank {
                    let _ = writeln!(out, "  rank {r}");
                }
                let _ = writeln!(out, "  delta {}", shape(delta));
                render_matrix(&mut out, "    ", delta);
                let _ = writeln!(out, "  epsilon {}", shape(epsilon));
                render_matrix(&mut out, "    ", epsilon);
                out.push_str("end\n");
            }
            Def::Comodule(ComoduleDef::Regular { side, coalgebra }) => {
                let _ = writeln!(out, "comodule {name} = regular {side} {coalgebra}");
            }
            Def::Comodule(ComoduleDef::Sum(a, b)) => {
                let _ = writeln!(out, "comodule {name} = sum {a} {b}");
            }
            Def::Comodule(ComoduleDef::Literal { side, coalgebra, generators, relations, coaction }) => {
                let _ = writeln!(out, "comodule {name} {side} {coalgebra}");
                let _ = writeln!(out, "  generators {generators}");
                if let Some(r) = relations {
                    let _ = writeln!(out, "  relations {}", shape(r));
                    render_matrix(&mut out, "    ", r);
                }
                let _ = writeln!(out, "  coaction {}", shape(coaction));
                render_matrix(&mut out, "    ", coaction);
                out.push_str("end\n");
            }
            Def::Bicomodule(BicomoduleDef::Regular(c)) => {
                let _ = writeln!(out, "bicomodule {name} = regular {c}");
            }
            Def::Bicomodule(BicomoduleDef::From(x)) => {
                let _ = writeln!(out, "bicomodule {name} = from {x}");
            }
            Def::Bicomodule(BicomoduleDef::Literal { left, right, generators, relations, left_coaction, right_coaction }) => {
                let _ = writeln!(out, "bicomodule {name} {left} {right}");
                let _ = writeln!(out, "  generators {generators}");
                if let Some(r) = relations {
                    let _ = writeln!(out, "  relations {}", shape(r));
                    render_matrix(&mut out, "    ", r);
                }
                let _ = writeln!(out, "  left {}", shape(left_coaction));
                render_matrix(&mut out, "    ", left_coaction);
                let _ = writeln!(out, "  right {}", shape(right_coaction));
                render_matrix(&mut out, "    ", right_coaction);
                out.push_str("end\n");
            }
            Def::Map(m) => {
                let _ = writeln!(out, "map {name} {}", shape(m));
                render_matrix(&mut out, "  ", m);
            }
            Def::Context(ctx) => {
                let _ = writeln!(out, "context {name}");
                for (k, v) in [("d", &ctx.d), ("c", &ctx.c), ("m", &ctx.m), ("n", &ctx.n)] {
                    let _ = writeln!(out, "  {k} {v}");
                }
                for (k, r) in [("f", &ctx.f), ("g", &ctx.g)] {
                    match r {
                        MapRef::Named(n) => {
                            let _ = writeln!(out, "  {k} {n}");
                        }
                        MapRef::Inline(m) => {
                            let _ = writeln!(out, "  {k} {}", shape(m));
                            render_matrix(&mut out, "    ", m);
                        }
                    }
                }
                out.push_str("end\n");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_are_canonicalized() {
        let f = parse("ring Z/4\nmap a 1x3\n  5 -1 2/1\n").unwrap();
        match &f.items[0].def {
            Def::Map(m) => assert_eq!(m.entries, ["1", "3", "2"]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn errors_carry_positions() {
        match parse("ring Q\ncoalgebra G\n  delta 1x2\n    1 x\nend\n") {
            Err(CliError::Parse { line, col, .. }) => assert_eq!((line, col), (4, 7)),
            other => panic!("{other:?}"),
        }
        match parse("ring Q\nmap a 2x2\n  1 2 3\n") {
            Err(CliError::Parse { line, col, .. }) => assert_eq!((line, col), (3, 7)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("ring Q\ncoalgebra G\n  rank 2\n"), Err(CliError::Parse { line: 2, .. })));
        assert!(matches!(parse("ring F4\n"), Err(CliError::Parse { line: 1, col: 6, .. })));
    }

    #[test]
    fn fractions_only_over_fields() {
        assert!(parse("ring Z/4\nmap a 1x1\n  1/2\n").is_err());
        assert!(parse("ring F5\nmap a 1x1\n  1/2\n").is_ok());
        assert!(parse("ring Q\nmap a 1x1\n  -3/6\n").is_ok());
        assert!(parse("ring Z\nmap a 1x1\n  1/2\n").is_err());
    }

    #[test]
    fn zero_width_matrices() {
        let f = parse("ring Q\nmap z 3x0\nmap y 0x2\n").unwrap();
        assert_eq!(f.items.len(), 2);
        assert_eq!(parse(&render(&f)).unwrap(), f);
    }
}
