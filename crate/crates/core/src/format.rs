//! The line-oriented structure file format, version 1.
//!
//! ```text
//! FORMAT 1
//! FIELD Q                      # or FIELD GF 7
//! BLOCK HOPF H                 # ALGEBRA COALGEBRA BIALGEBRA HOPF ACTION COACTION RMATRIX FORM
//! DIM 2
//! BASIS 1 a
//! UNIT 1 0                     # coefficients of 1
//! MULT 1 1 : 1 0               # e_1·e_1 = 1·e_0
//! COMULT 1 : 1 1 1             # Δ(e_1) = 1·e_1⊗e_1; terms `j k c` separated by `;`
//! COUNIT 1 1
//! TWIST 1 : 0 1                # image of e_1; all TWIST lines absent means identity
//! ANTIPODE 1 : 0 1
//! END
//! BLOCK ACTION act
//! OVER H                       # a BIALGEBRA or HOPF block above
//! CARRIER M                    # optional tag pairing an action with a coaction
//! DIM 1
//! BASIS m
//! ACT 1 0 : 1                  # e_1 ▷ m_0 = 1·m_0
//! END
//! BLOCK COACTION co
//! OVER H
//! CARRIER M
//! DIM 1
//! COACT 0 : 0 0 1              # ρ(m_0) = 1·e_0⊗m_0; terms `i k c`
//! END
//! BLOCK RMATRIX R
//! OVER H
//! TERM 0 0 1                   # R = Σ c e_i⊗e_j
//! END
//! BLOCK FORM s
//! OVER H
//! SIGMA 1 1 -1                 # σ(e_i, e_j) = c
//! END
//! ```
//!
//! Omitted structure constants are zero; repeating an entry is an error.
//! Parsing never checks axioms: that is what the checkers are for.
//! [`print`] emits the canonical form, which [`parse`] reads back to an
//! equal document.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::actions::{ActionMap, CoactionMap, YDModule};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::quasitriangular::{CobraidingForm, RMatrix};
use crate::scalar::{Field, Scalar};
use crate::structures::{Basis, HomAlgebra, HomBialgebra, HomCoalgebra, HomHopf};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    Algebra(HomAlgebra),
    Coalgebra(HomCoalgebra),
    Bialgebra(HomBialgebra),
    Hopf(HomHopf),
    Action { over: String, carrier: Option<String>, map: ActionMap },
    Coaction { over: String, carrier: Option<String>, map: CoactionMap },
    RMatrix { over: String, r: RMatrix },
    Form { over: String, sigma: CobraidingForm },
}

impl Body {
    pub fn kind(&self) -> &'static str {
        match self {
            Body::Algebra(_) => "ALGEBRA",
            Body::Coalgebra(_) => "COALGEBRA",
            Body::Bialgebra(_) => "BIALGEBRA",
            Body::Hopf(_) => "HOPF",
            Body::Action { .. } => "ACTION",
            Body::Coaction { .. } => "COACTION",
            Body::RMatrix { .. } => "RMATRIX",
            Body::Form { .. } => "FORM",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    pub body: Body,
}

/// A parsed structure file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub field: Field,
    pub blocks: Vec<Block>,
}

impl Document {
    pub fn new(field: Field) -> Self {
        Document { field, blocks: Vec::new() }
    }

    /// Appends a block; names are unique, and `OVER` references must name an
    /// earlier bialgebra or Hopf block.
    pub fn push(&mut self, name: impl Into<String>, body: Body) -> Result<()> {
        let name = name.into();
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(Error::invalid(format!("block name `{name}` must be non-empty without spaces")));
        }
        if self.get(&name).is_some() {
            return Err(Error::invalid(format!("duplicate block name `{name}`")));
        }
        if let Body::Action { over, .. } | Body::Coaction { over, .. } | Body::RMatrix { over, .. } | Body::Form { over, .. } =
            &body
        {
            self.bialgebra(over)?;
        }
        self.blocks.push(Block { name, body });
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&Body> {
        self.blocks.iter().find(|b| b.name == name).map(|b| &b.body)
    }

    fn require(&self, name: &str) -> Result<&Body> {
        self.get(name).ok_or_else(|| Error::invalid(format!("no block named `{name}`")))
    }

    pub fn bialgebra(&self, name: &str) -> Result<&HomBialgebra> {
        match self.require(name)? {
            Body::Bialgebra(b) => Ok(b),
            Body::Hopf(h) => Ok(h.bialgebra()),
            other => Err(Error::invalid(format!("block `{name}` is {}, not a bialgebra", other.kind()))),
        }
    }

    pub fn hopf(&self, name: &str) -> Result<&HomHopf> {
        match self.require(name)? {
            Body::Hopf(h) => Ok(h),
            other => Err(Error::invalid(format!("block `{name}` is {}, not HOPF", other.kind()))),
        }
    }

    /// The algebra and coalgebra halves of a bialgebra or Hopf block.
    pub fn halves(&self, name: &str) -> Result<(HomAlgebra, HomCoalgebra)> {
        let b = self.bialgebra(name)?;
        Ok((b.algebra().clone(), b.coalgebra().clone()))
    }

    pub fn action(&self, name: &str) -> Result<&ActionMap> {
        match self.require(name)? {
            Body::Action { map, .. } => Ok(map),
            other => Err(Error::invalid(format!("block `{name}` is {}, not ACTION", other.kind()))),
        }
    }

    pub fn coaction(&self, name: &str) -> Result<&CoactionMap> {
        match self.require(name)? {
            Body::Coaction { map, .. } => Ok(map),
            other => Err(Error::invalid(format!("block `{name}` is {}, not COACTION", other.kind()))),
        }
    }

    /// Names of blocks of the given kind, in document order.
    pub fn names(&self, kind: &str) -> Vec<&str> {
        self.blocks.iter().filter(|b| b.body.kind() == kind).map(|b| b.name.as_str()).collect()
    }

    /// Actions and coactions sharing a `CARRIER` tag, paired in document
    /// order of the actions.
    pub fn yd_pairs(&self) -> Vec<(String, &ActionMap, &CoactionMap)> {
        let mut out = Vec::new();
        for b in &self.blocks {
            if let Body::Action { carrier: Some(tag), map, .. } = &b.body {
                let co = self.blocks.iter().find_map(|c| match &c.body {
                    Body::Coaction { carrier: Some(t), map, .. } if t == tag => Some(map),
                    _ => None,
                });
                if let Some(co) = co {
                    out.push((tag.clone(), map, co));
                }
            }
        }
        out
    }

    /// The Yetter-Drinfeld candidates of [`Document::yd_pairs`].
    pub fn yd_modules(&self) -> Result<Vec<(String, YDModule)>> {
        self.yd_pairs()
            .into_iter()
            .map(|(tag, a, c)| Ok((tag, YDModule::new_unchecked(a.clone(), c.clone())?)))
            .collect()
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Attaches a line number to errors that lack one.
fn at<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => e,
        other => parse_err(line, other.to_string()),
    })
}

const KINDS: [&str; 8] = ["ALGEBRA", "COALGEBRA", "BIALGEBRA", "HOPF", "ACTION", "COACTION", "RMATRIX", "FORM"];

fn allowed(kind: &str) -> &'static [&'static str] {
    match kind {
        "ALGEBRA" => &["DIM", "BASIS", "UNIT", "MULT", "TWIST"],
        "COALGEBRA" => &["DIM", "BASIS", "COMULT", "COUNIT", "TWIST"],
        "BIALGEBRA" => &["DIM", "BASIS", "UNIT", "MULT", "COMULT", "COUNIT", "TWIST"],
        "HOPF" => &["DIM", "BASIS", "UNIT", "MULT", "COMULT", "COUNIT", "TWIST", "ANTIPODE"],
        "ACTION" => &["OVER", "CARRIER", "DIM", "BASIS", "TWIST", "ACT"],
        "COACTION" => &["OVER", "CARRIER", "DIM", "BASIS", "TWIST", "COACT"],
        "RMATRIX" => &["OVER", "TERM"],
        _ => &["OVER", "SIGMA"],
    }
}

/// Stanza accumulator for one block.
struct Pending {
    kind: String,
    name: String,
    start: usize,
    over: Option<(String, Arc<HomBialgebra>)>,
    carrier: Option<String>,
    dim: Option<usize>,
    basis: Option<Basis>,
    unit: Option<Matrix>,
    counit: Option<Matrix>,
    mult: Option<Matrix>,
    comult: Option<Matrix>,
    twist: Option<Matrix>,
    antipode: Option<Matrix>,
    act: Option<Matrix>,
    coact: Option<Matrix>,
    vector: Option<Matrix>,
    seen: HashSet<String>,
}

struct Parser<'a> {
    field: Field,
    doc: &'a Document,
    line: usize,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        parse_err(self.line, msg)
    }

    fn scalar(&self, tok: &str) -> Result<Scalar> {
        at(self.line, self.field.parse_scalar(tok))
    }

    fn index(&self, tok: &str, bound: usize, what: &str) -> Result<usize> {
        let i: usize = tok.parse().map_err(|_| self.err(format!("expected a {what} index, found `{tok}`")))?;
        if i >= bound {
            return Err(self.err(format!("index {i} out of range for {what} of dimension {bound}")));
        }
        Ok(i)
    }

    fn scalars(&self, toks: &[&str], count: usize) -> Result<Vec<Scalar>> {
        if toks.len() != count {
            return Err(self.err(format!("expected {count} coefficients, found {}", toks.len())));
        }
        toks.iter().map(|t| self.scalar(t)).collect()
    }

    /// Splits `i j : c c c` at the colon.
    fn colon<'t>(&self, toks: &'t [&'t str], heads: usize) -> Result<(&'t [&'t str], &'t [&'t str])> {
        if toks.len() < heads + 1 || toks[heads] != ":" {
            return Err(self.err(format!("expected {heads} index(es) followed by `:`")));
        }
        Ok((&toks[..heads], &toks[heads + 1..]))
    }

    /// `j k c ; j k c ; …` with indices bounded by `bounds`.
    fn terms(&self, toks: &[&str], bounds: (usize, usize)) -> Result<Vec<(usize, usize, Scalar)>> {
        let mut out: Vec<(usize, usize, Scalar)> = Vec::new();
        for group in toks.split(|t| *t == ";") {
            if group.is_empty() {
                continue;
            }
            if group.len() != 3 {
                return Err(self.err("each term is `index index coefficient`"));
            }
            let j = self.index(group[0], bounds.0, "left leg")?;
            let k = self.index(group[1], bounds.1, "right leg")?;
            if out.iter().any(|(a, b, _)| (*a, *b) == (j, k)) {
                return Err(self.err(format!("duplicate term {j} {k}")));
            }
            out.push((j, k, self.scalar(group[2])?));
        }
        Ok(out)
    }
}

impl Pending {
    fn dim(&self, p: &Parser<'_>) -> Result<usize> {
        self.dim.ok_or_else(|| p.err("DIM must come before structure constants"))
    }

    fn over_dim(&self, p: &Parser<'_>) -> Result<usize> {
        self.over.as_ref().map(|(_, h)| h.dim()).ok_or_else(|| p.err("OVER must come before structure constants"))
    }

    fn once(&mut self, p: &Parser<'_>, key: String) -> Result<()> {
        if !self.seen.insert(key.clone()) {
            return Err(p.err(format!("duplicate entry `{key}`")));
        }
        Ok(())
    }

    fn stanza(&mut self, p: &Parser<'_>, head: &str, rest: &[&str]) -> Result<()> {
        let f = p.field;
        if !allowed(&self.kind).contains(&head) {
            return Err(p.err(format!("`{head}` is not allowed in a {} block", self.kind)));
        }
        match head {
            "DIM" => {
                self.once(p, "DIM".into())?;
                if rest.len() != 1 {
                    return Err(p.err("DIM takes one number"));
                }
                let n: usize = rest[0].parse().map_err(|_| p.err(format!("bad dimension `{}`", rest[0])))?;
                if n == 0 {
                    return Err(p.err("dimension must be positive"));
                }
                self.dim = Some(n);
            }
            "BASIS" => {
                self.once(p, "BASIS".into())?;
                let n = self.dim(p)?;
                if rest.len() != n {
                    return Err(p.err(format!("BASIS needs {n} labels, found {}", rest.len())));
                }
                self.basis = Some(at(p.line, Basis::new(rest.iter().copied()))?);
            }
            "OVER" => {
                self.once(p, "OVER".into())?;
                if rest.len() != 1 {
                    return Err(p.err("OVER takes one block name"));
                }
                let h = at(p.line, p.doc.bialgebra(rest[0]))?;
                self.over = Some((rest[0].to_string(), Arc::new(h.clone())));
            }
            "CARRIER" => {
                self.once(p, "CARRIER".into())?;
                if rest.len() != 1 {
                    return Err(p.err("CARRIER takes one tag"));
                }
                self.carrier = Some(rest[0].to_string());
            }
            "UNIT" | "COUNIT" => {
                self.once(p, head.into())?;
                let n = self.dim(p)?;
                let v = p.scalars(rest, n)?;
                let m = if head == "UNIT" { Matrix::from_fn(f, n, 1, |r, _| v[r].clone()) } else { Matrix::from_fn(f, 1, n, |_, c| v[c].clone()) };
                *(if head == "UNIT" { &mut self.unit } else { &mut self.counit }) = Some(m);
            }
            "MULT" => {
                let n = self.dim(p)?;
                let (idx, vals) = p.colon(rest, 2)?;
                let (i, j) = (p.index(idx[0], n, "basis")?, p.index(idx[1], n, "basis")?);
                self.once(p, format!("MULT {i} {j}"))?;
                let v = p.scalars(vals, n)?;
                let m = self.mult.get_or_insert_with(|| Matrix::zeros(f, n, n * n));
                for (r, s) in v.into_iter().enumerate() {
                    m.set(r, i * n + j, s);
                }
            }
            "TWIST" | "ANTIPODE" => {
                let n = self.dim(p)?;
                let (idx, vals) = p.colon(rest, 1)?;
                let i = p.index(idx[0], n, "basis")?;
                self.once(p, format!("{head} {i}"))?;
                let v = p.scalars(vals, n)?;
                let slot = if head == "TWIST" { &mut self.twist } else { &mut self.antipode };
                let m = slot.get_or_insert_with(|| Matrix::zeros(f, n, n));
                for (r, s) in v.into_iter().enumerate() {
                    m.set(r, i, s);
                }
            }
            "COMULT" => {
                let n = self.dim(p)?;
                let (idx, vals) = p.colon(rest, 1)?;
                let i = p.index(idx[0], n, "basis")?;
                self.once(p, format!("COMULT {i}"))?;
                let m = self.comult.get_or_insert_with(|| Matrix::zeros(f, n * n, n));
                for (j, k, c) in p.terms(vals, (n, n))? {
                    m.set(j * n + k, i, c);
                }
            }
            "ACT" => {
                let (hn, m) = (self.over_dim(p)?, self.dim(p)?);
                let (idx, vals) = p.colon(rest, 2)?;
                let (i, j) = (p.index(idx[0], hn, "acting basis")?, p.index(idx[1], m, "carrier basis")?);
                self.once(p, format!("ACT {i} {j}"))?;
                let v = p.scalars(vals, m)?;
                let a = self.act.get_or_insert_with(|| Matrix::zeros(f, m, hn * m));
                for (r, s) in v.into_iter().enumerate() {
                    a.set(r, i * m + j, s);
                }
            }
            "COACT" => {
                let (hn, m) = (self.over_dim(p)?, self.dim(p)?);
                let (idx, vals) = p.colon(rest, 1)?;
                let j = p.index(idx[0], m, "carrier basis")?;
                self.once(p, format!("COACT {j}"))?;
                let c = self.coact.get_or_insert_with(|| Matrix::zeros(f, hn * m, m));
                for (i, k, s) in p.terms(vals, (hn, m))? {
                    c.set(i * m + k, j, s);
                }
            }
            "TERM" | "SIGMA" => {
                let n = self.over_dim(p)?;
                if rest.len() != 3 {
                    return Err(p.err(format!("{head} takes `index index coefficient`")));
                }
                let (i, j) = (p.index(rest[0], n, "basis")?, p.index(rest[1], n, "basis")?);
                self.once(p, format!("{head} {i} {j}"))?;
                let s = p.scalar(rest[2])?;
                let shape = if head == "TERM" { (n * n, 1) } else { (1, n * n) };
                let v = self.vector.get_or_insert_with(|| Matrix::zeros(f, shape.0, shape.1));
                if head == "TERM" {
                    v.set(i * n + j, 0, s);
                } else {
                    v.set(0, i * n + j, s);
                }
            }
            _ => unreachable!("filtered by allowed()"),
        }
        Ok(())
    }

    fn finish(self, p: &Parser<'_>) -> Result<Body> {
        let f = p.field;
        let over = || self.over.clone().ok_or_else(|| p.err(format!("{} block `{}` needs OVER", self.kind, self.name)));
        if matches!(self.kind.as_str(), "RMATRIX" | "FORM") {
            let (name, h) = over()?;
            let n = h.dim();
            return Ok(if self.kind == "RMATRIX" {
                let v = self.vector.unwrap_or_else(|| Matrix::zeros(f, n * n, 1));
                Body::RMatrix { over: name, r: at(p.line, RMatrix::new(&h, v))? }
            } else {
                let v = self.vector.unwrap_or_else(|| Matrix::zeros(f, 1, n * n));
                Body::Form { over: name, sigma: at(p.line, CobraidingForm::new(&h, v))? }
            });
        }
        let n = self.dim.ok_or_else(|| p.err(format!("block `{}` needs DIM", self.name)))?;
        let basis = self.basis.clone().unwrap_or_else(|| Basis::indexed(n));
        let twist = self.twist.clone().unwrap_or_else(|| Matrix::identity(f, n));
        let alg = || -> Result<HomAlgebra> {
            let mult = self.mult.clone().unwrap_or_else(|| Matrix::zeros(f, n, n * n));
            let unit = self.unit.clone().unwrap_or_else(|| Matrix::zeros(f, n, 1));
            HomAlgebra::new_unchecked(basis.clone(), mult, unit, twist.clone())
        };
        let coalg = || -> Result<HomCoalgebra> {
            let comult = self.comult.clone().unwrap_or_else(|| Matrix::zeros(f, n * n, n));
            let counit = self.counit.clone().unwrap_or_else(|| Matrix::zeros(f, 1, n));
            HomCoalgebra::new_unchecked(basis.clone(), comult, counit, twist.clone())
        };
        let line = p.line;
        Ok(match self.kind.as_str() {
            "ALGEBRA" => Body::Algebra(at(line, alg())?),
            "COALGEBRA" => Body::Coalgebra(at(line, coalg())?),
            "BIALGEBRA" => Body::Bialgebra(at(line, HomBialgebra::new_unchecked(alg()?, coalg()?))?),
            "HOPF" => {
                let bi = at(line, HomBialgebra::new_unchecked(alg()?, coalg()?))?;
                let s = self.antipode.clone().unwrap_or_else(|| Matrix::zeros(f, n, n));
                Body::Hopf(at(line, HomHopf::new_unchecked(bi, s))?)
            }
            "ACTION" => {
                let (name, h) = over()?;
                let m = self.act.clone().unwrap_or_else(|| Matrix::zeros(f, n, h.dim() * n));
                let map = at(line, ActionMap::new_unchecked(h, basis, m, twist))?;
                Body::Action { over: name, carrier: self.carrier.clone(), map }
            }
            _ => {
                let (name, h) = over()?;
                let m = self.coact.clone().unwrap_or_else(|| Matrix::zeros(f, h.dim() * n, n));
                let map = at(line, CoactionMap::new_unchecked(h, basis, m, twist))?;
                Body::Coaction { over: name, carrier: self.carrier.clone(), map }
            }
        })
    }
}

/// Parses a structure document.
pub fn parse(text: &str) -> Result<Document> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (n1, first) = lines.next().ok_or_else(|| parse_err(1, "empty document"))?;
    if first != "FORMAT 1" {
        return Err(parse_err(n1, format!("expected `FORMAT 1`, found `{first}`")));
    }
    let (n2, second) = lines.next().ok_or_else(|| parse_err(n1, "missing FIELD line"))?;
    let toks: Vec<&str> = second.split_whitespace().collect();
    let field = match toks.as_slice() {
        ["FIELD", "Q"] => Field::Rational,
        ["FIELD", "GF", p] => {
            let p: u64 = p.parse().map_err(|_| parse_err(n2, format!("bad modulus `{p}`")))?;
            Field::prime(p).map_err(|e| parse_err(n2, e.to_string()))?
        }
        _ => return Err(parse_err(n2, format!("expected `FIELD Q` or `FIELD GF p`, found `{second}`"))),
    };

    let mut doc = Document::new(field);
    let mut pending: Option<Pending> = None;
    let mut last = n2;
    for (n, l) in lines {
        last = n;
        let toks: Vec<&str> = l.split_whitespace().collect();
        let parser = Parser { field, doc: &doc, line: n };
        match (toks[0], pending.as_mut()) {
            ("BLOCK", None) => {
                if toks.len() != 3 || !KINDS.contains(&toks[1]) {
                    return Err(parse_err(n, format!("expected `BLOCK <{}> <name>`", KINDS.join("|"))));
                }
                if doc.get(toks[2]).is_some() {
                    return Err(parse_err(n, format!("duplicate block name `{}`", toks[2])));
                }
                pending = Some(Pending {
                    kind: toks[1].into(),
                    name: toks[2].into(),
                    start: n,
                    over: None,
                    carrier: None,
                    dim: None,
                    basis: None,
                    unit: None,
                    counit: None,
                    mult: None,
                    comult: None,
                    twist: None,
                    antipode: None,
                    act: None,
                    coact: None,
                    vector: None,
                    seen: HashSet::new(),
                });
            }
            ("BLOCK", Some(p)) => return Err(parse_err(n, format!("block `{}` opened on line {} is not closed", p.name, p.start))),
            ("END", Some(_)) => {
                if toks.len() != 1 {
                    return Err(parse_err(n, "END takes no arguments"));
                }
                let p = pending.take().expect("matched Some");
                let name = p.name.clone();
                let body = p.finish(&parser)?;
                at(n, doc.push(name, body))?;
            }
            (_, None) => return Err(parse_err(n, format!("`{}` outside a block", toks[0]))),
            (head, Some(p)) => p.stanza(&parser, head, &toks[1..])?,
        }
    }
    if let Some(p) = pending {
        return Err(parse_err(last, format!("block `{}` opened on line {} is not closed", p.name, p.start)));
    }
    Ok(doc)
}

fn join(v: impl IntoIterator<Item = Scalar>) -> String {
    v.into_iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
}

fn print_head(out: &mut String, basis: &Basis) {
    let _ = writeln!(out, "DIM {}", basis.dim());
    let _ = writeln!(out, "BASIS {}", basis.labels().join(" "));
}

fn print_twist(out: &mut String, t: &Matrix) {
    if t.is_identity() {
        return;
    }
    for i in 0..t.cols() {
        let _ = writeln!(out, "TWIST {i} : {}", join(t.column_values(i)));
    }
}

fn print_columns(out: &mut String, head: &str, m: &Matrix, split: usize) {
    for c in 0..m.cols() {
        let v = m.column_values(c);
        if v.iter().all(Scalar::is_zero) {
            continue;
        }
        let idx = match c.checked_div(split) {
            None => c.to_string(),
            Some(q) => format!("{q} {}", c % split),
        };
        let _ = writeln!(out, "{head} {idx} : {}", join(v));
    }
}

fn print_terms(out: &mut String, head: &str, m: &Matrix, right: usize) {
    for c in 0..m.cols() {
        let terms: Vec<String> = (0..m.rows())
            .filter(|&r| !m.get(r, c).is_zero())
            .map(|r| format!("{} {} {}", r / right, r % right, m.get(r, c)))
            .collect();
        if !terms.is_empty() {
            let _ = writeln!(out, "{head} {c} : {}", terms.join(" ; "));
        }
    }
}

fn print_algebra(out: &mut String, a: &HomAlgebra) {
    let _ = writeln!(out, "UNIT {}", join(a.unit().column_values(0)));
    print_columns(out, "MULT", a.mult(), a.dim());
}

fn print_coalgebra(out: &mut String, c: &HomCoalgebra) {
    print_terms(out, "COMULT", c.comult(), c.dim());
    let _ = writeln!(out, "COUNIT {}", join(c.counit().row(0).to_vec()));
}

fn print_pairs(out: &mut String, head: &str, v: &Matrix, n: usize) {
    for (k, s) in v.entries().iter().enumerate() {
        if !s.is_zero() {
            let _ = writeln!(out, "{head} {} {} {s}", k / n, k % n);
        }
    }
}

/// Canonical text of a document.
pub fn print(doc: &Document) -> String {
    let mut out = format!("FORMAT 1\nFIELD {}\n", doc.field);
    for b in &doc.blocks {
        let _ = writeln!(out, "BLOCK {} {}", b.body.kind(), b.name);
        match &b.body {
            Body::Algebra(a) => {
                print_head(&mut out, a.basis());
                print_algebra(&mut out, a);
                print_twist(&mut out, a.twist().map());
            }
            Body::Coalgebra(c) => {
                print_head(&mut out, c.basis());
                print_coalgebra(&mut out, c);
                print_twist(&mut out, c.twist().map());
            }
            Body::Bialgebra(h) => {
                print_head(&mut out, h.basis());
                print_algebra(&mut out, h.algebra());
                print_coalgebra(&mut out, h.coalgebra());
                print_twist(&mut out, h.twist().map());
            }
            Body::Hopf(h) => {
                print_head(&mut out, h.basis());
                print_algebra(&mut out, h.bialgebra().algebra());
                print_coalgebra(&mut out, h.bialgebra().coalgebra());
                print_twist(&mut out, h.twist().map());
                print_columns(&mut out, "ANTIPODE", h.antipode(), 0);
            }
            Body::Action { over, carrier, map } => {
                let _ = writeln!(out, "OVER {over}");
                if let Some(c) = carrier {
                    let _ = writeln!(out, "CARRIER {c}");
                }
                print_head(&mut out, map.carrier());
                print_twist(&mut out, map.twist().map());
                print_columns(&mut out, "ACT", map.matrix(), map.dim());
            }
            Body::Coaction { over, carrier, map } => {
                let _ = writeln!(out, "OVER {over}");
                if let Some(c) = carrier {
                    let _ = writeln!(out, "CARRIER {c}");
                }
                print_head(&mut out, map.carrier());
                print_twist(&mut out, map.twist().map());
                print_terms(&mut out, "COACT", map.matrix(), map.dim());
            }
            Body::RMatrix { over, r } => {
                let _ = writeln!(out, "OVER {over}");
                let n = doc.bialgebra(over).map(HomBialgebra::dim).unwrap_or(1);
                print_pairs(&mut out, "TERM", r.vector(), n);
            }
            Body::Form { over, sigma } => {
                let _ = writeln!(out, "OVER {over}");
                let n = doc.bialgebra(over).map(HomBialgebra::dim).unwrap_or(1);
                print_pairs(&mut out, "SIGMA", sigma.row(), n);
            }
        }
        out.push_str("END\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    const KZ2: &str = "FORMAT 1
FIELD Q
BLOCK HOPF H
DIM 2
BASIS 1 a
UNIT 1 0
MULT 0 0 : 1 0
MULT 0 1 : 0 1
MULT 1 0 : 0 1
MULT 1 1 : 1 0
COMULT 0 : 0 0 1
COMULT 1 : 1 1 1
COUNIT 1 1
ANTIPODE 0 : 1 0
ANTIPODE 1 : 0 1
END
";

    #[test]
    fn kz2_text_equals_catalog() {
        let doc = parse(KZ2).unwrap();
        assert_eq!(doc.hopf("H").unwrap(), &catalog::kz2(Field::Rational));
        assert_eq!(print(&doc), KZ2);
    }

    #[test]
    fn zero_row_parses() {
        let text = KZ2.replace("MULT 1 1 : 1 0", "MULT 1 1 : 0 0");
        let doc = parse(&text).unwrap();
        assert!(doc.hopf("H").unwrap().mult().column_values(3).iter().all(Scalar::is_zero));
    }

    #[test]
    fn errors_carry_lines() {
        let e = parse("FORMAT 1\nFIELD GF 4\n").unwrap_err();
        assert!(matches!(&e, Error::Parse { line: 2, message } if message.contains("not prime")), "{e}");
        let dup = KZ2.replace("MULT 1 0 : 0 1", "MULT 0 1 : 0 1");
        assert!(matches!(parse(&dup).unwrap_err(), Error::Parse { line: 9, .. }));
        let over = KZ2.replace("MULT 1 1 :", "MULT 2 1 :");
        assert!(matches!(parse(&over).unwrap_err(), Error::Parse { line: 10, .. }));
        let open = KZ2.replace("END\n", "");
        assert!(parse(&open).is_err());
    }
}
