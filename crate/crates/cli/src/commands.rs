use std::fmt::Write as _;
use std::path::Path;

use hom_yd::actions::{check_action_axioms, check_coaction_axioms, check_hyd, check_hyd_prime, ActionKind, CoactionKind, YDModule};
use hom_yd::braided::{braiding, check_braiding_inverse, check_hexagons, check_hybe, check_morphism};
use hom_yd::catalog;
use hom_yd::constructions::{
    check_biproduct_hypotheses, check_carrier_antipode, check_radford_conditions, radford_biproduct, radford_hopf,
    smash_coproduct, smash_product, t_smash_coproduct, BiproductData, TwistMapT,
};
use hom_yd::format::{self, Body, Document};
use hom_yd::quasitriangular::{check_form_correspondence, check_quasitriangular, check_r_matrix_correspondence};
use hom_yd::structures::{
    check_antipode, check_hom_algebra, check_hom_bialgebra, check_hom_coalgebra, solve_antipode, Basis, HomBialgebra,
};
use hom_yd::{Error, Field, Matrix, Report, Scalar};

use crate::{Catalog, Command, Construct, Emit};

pub struct Options {
    pub witness: bool,
}

pub struct Output {
    pub text: String,
    pub passed: bool,
}

pub enum Failure {
    /// A gate refused; the text is the refusing report.
    Math(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e.report() {
            Some(r) => Failure::Math(r.render(true)),
            None => Failure::Usage(e.to_string()),
        }
    }
}

type Run = Result<Output, Failure>;

/// Accumulates rendered reports and the overall verdict.
struct Sink<'a> {
    opts: &'a Options,
    text: String,
    passed: bool,
    count: usize,
    failed: usize,
}

impl<'a> Sink<'a> {
    fn new(opts: &'a Options) -> Self {
        Sink { opts, text: String::new(), passed: true, count: 0, failed: 0 }
    }

    fn report(&mut self, r: &Report) {
        self.text.push_str(&r.render(self.opts.witness));
        self.count += 1;
        if !r.passed() {
            self.failed += 1;
            self.passed = false;
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn finish(mut self) -> Output {
        let _ = writeln!(self.text, "== {} reports, {} failed", self.count, self.failed);
        Output { text: self.text, passed: self.passed }
    }
}

fn load(path: &Path) -> Result<Document, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    format::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn parse_field(text: &str) -> Result<Field, Failure> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(Field::Rational);
    }
    let digits = t.strip_prefix("GF").or_else(|| t.strip_prefix("gf")).unwrap_or(t).trim();
    let p: u64 = digits.parse().map_err(|_| Failure::Usage(format!("unknown field `{text}`; use Q or GF<p>")))?;
    Ok(Field::prime(p)?)
}

pub fn run(cmd: &Command, opts: &Options) -> Run {
    match cmd {
        Command::Check { file } => check_document(&load(file)?, opts),
        Command::Construct { what } => construct(what, opts),
        Command::Antipode { file, block } => antipode(&load(file)?, block.as_deref(), opts),
        Command::BraidingTest { file } => braiding_test(&load(file)?, opts),
        Command::YbeTest { file } => ybe_test(&load(file)?, opts),
        Command::QuasitriangularCheck { file } => quasitriangular(&load(file)?, opts),
        Command::Catalog { what } => catalog_cmd(what, opts),
    }
}

/// The carrier tag of a YD pair when it names a bialgebra block.
fn biproduct_data(doc: &Document, carrier: &str) -> Result<Option<BiproductData>, Failure> {
    let Some((_, act, co)) = doc.yd_pairs().into_iter().find(|(tag, _, _)| tag == carrier) else {
        return Ok(None);
    };
    if doc.bialgebra(carrier).is_err() {
        return Ok(None);
    }
    let (a, c) = doc.halves(carrier)?;
    Ok(Some(BiproductData::new(a, c, act.clone(), co.clone())?))
}

fn over_of<'d>(doc: &'d Document, name: &str) -> Option<&'d str> {
    doc.blocks.iter().find(|b| b.name == name).and_then(|b| match &b.body {
        Body::Action { over, .. } | Body::Coaction { over, .. } | Body::RMatrix { over, .. } | Body::Form { over, .. } => {
            Some(over.as_str())
        }
        _ => None,
    })
}

pub fn check_document(doc: &Document, opts: &Options) -> Run {
    let mut sink = Sink::new(opts);
    for b in &doc.blocks {
        sink.line(format!("## {} {}", b.body.kind(), b.name));
        match &b.body {
            Body::Algebra(a) => sink.report(&check_hom_algebra(a)?),
            Body::Coalgebra(c) => sink.report(&check_hom_coalgebra(c)?),
            Body::Bialgebra(_) | Body::Hopf(_) => {
                if let Some(d) = biproduct_data(doc, &b.name)? {
                    // A biproduct carrier need only be a bialgebra in the braided sense.
                    sink.report(&check_biproduct_hypotheses(&d)?);
                    sink.report(&check_radford_conditions(&d)?);
                    if let Body::Hopf(h) = &b.body {
                        sink.report(&check_carrier_antipode(d.algebra(), d.coalgebra(), h.antipode())?);
                    }
                } else {
                    let bi = doc.bialgebra(&b.name)?;
                    sink.report(&check_hom_bialgebra(bi)?);
                    if let Body::Hopf(h) = &b.body {
                        sink.report(&check_antipode(bi, h.antipode())?);
                    }
                }
            }
            Body::Action { map, .. } => sink.report(&check_action_axioms(map, ActionKind::Module)?),
            Body::Coaction { map, .. } => sink.report(&check_coaction_axioms(map, CoactionKind::Comodule)?),
            Body::RMatrix { over, r } => sink.report(&check_quasitriangular(doc.hopf(over)?, r)?),
            Body::Form { over, sigma } => sink.report(&check_form_correspondence(doc.hopf(over)?, sigma)?),
        }
    }
    for (tag, act, co) in doc.yd_pairs() {
        sink.line(format!("## YD {tag}"));
        let y = YDModule::new_unchecked(act.clone(), co.clone())?;
        sink.report(&check_hyd(&y)?);
        let over = doc.blocks.iter().find_map(|b| match &b.body {
            Body::Action { over, map, .. } if map == act => Some(over.clone()),
            _ => None,
        });
        if let Some(Ok(h)) = over.map(|o| doc.hopf(&o)) {
            sink.report(&check_hyd_prime(&y, h)?);
        }
    }
    Ok(sink.finish())
}

fn emit(sink: &mut Sink<'_>, field: Field, e: &Emit, body: Body) -> Result<(), Failure> {
    let kind = body.kind();
    let mut doc = Document::new(field);
    doc.push(e.name.clone(), body)?;
    sink.line(format!("constructed {kind} {}", e.name));
    if let Some(path) = &e.emit {
        std::fs::write(path, format::print(&doc)).map_err(|err| Failure::Usage(format!("{}: {err}", path.display())))?;
        sink.line(format!("wrote {}", path.display()));
    }
    Ok(())
}

fn construct(what: &Construct, opts: &Options) -> Run {
    let mut sink = Sink::new(opts);
    match what {
        Construct::Smash { file, algebra, action, emit: e } => {
            let doc = load(file)?;
            let alg = match doc.get(algebra) {
                Some(Body::Algebra(a)) => a.clone(),
                _ => doc.halves(algebra)?.0,
            };
            let built = smash_product(&alg, doc.action(action)?)?;
            sink.report(&built.gate);
            emit(&mut sink, doc.field, e, Body::Algebra(built.value))?;
        }
        Construct::Cosmash { file, coalgebra, coaction, emit: e } => {
            let doc = load(file)?;
            let c = match doc.get(coalgebra) {
                Some(Body::Coalgebra(c)) => c.clone(),
                _ => doc.halves(coalgebra)?.1,
            };
            let built = smash_coproduct(&c, doc.coaction(coaction)?)?;
            sink.report(&built.gate);
            emit(&mut sink, doc.field, e, Body::Coalgebra(built.value))?;
        }
        Construct::Tsmash { file, coalgebra, coaction, emit: e } => {
            let doc = load(file)?;
            let c = match doc.get(coalgebra) {
                Some(Body::Coalgebra(c)) => c.clone(),
                _ => doc.halves(coalgebra)?.1,
            };
            let co = doc.coaction(coaction)?;
            let t = TwistMapT::from_coaction(&c, co)?;
            let built = t_smash_coproduct(&c, co.coacting().coalgebra(), &t)?;
            sink.report(&built.gate);
            emit(&mut sink, doc.field, e, Body::Coalgebra(built.value))?;
        }
        Construct::Biproduct { file, carrier, emit: e } => {
            let doc = load(file)?;
            let tag = match carrier {
                Some(c) => c.clone(),
                None => doc
                    .yd_pairs()
                    .into_iter()
                    .map(|(t, _, _)| t)
                    .find(|t| doc.bialgebra(t).is_ok())
                    .ok_or_else(|| Failure::Usage("no ACTION/COACTION pair whose CARRIER names a bialgebra block".into()))?,
            };
            let d = biproduct_data(&doc, &tag)?
                .ok_or_else(|| Failure::Usage(format!("`{tag}` is not the carrier of an action and a coaction")))?;
            let over = doc
                .names("ACTION")
                .into_iter()
                .find(|n| doc.action(n).map(|a| a == d.action()).unwrap_or(false))
                .and_then(|n| over_of(&doc, n))
                .expect("the action came from the document");
            match (doc.get(&tag), doc.hopf(over)) {
                (Some(Body::Hopf(a)), Ok(h)) => {
                    let built = radford_hopf(&d, a.antipode(), h)?;
                    sink.report(&built.gate);
                    emit(&mut sink, doc.field, e, Body::Hopf(built.value))?;
                }
                _ => {
                    let built = radford_biproduct(&d)?;
                    sink.report(&built.gate);
                    emit(&mut sink, doc.field, e, Body::Bialgebra(built.value))?;
                }
            }
        }
    }
    Ok(sink.finish())
}

/// `2·x⊗1 - y⊗a` style rendering of a vector.
fn combination(values: &[Scalar], labels: &[String]) -> String {
    let mut out = String::new();
    for (v, l) in values.iter().zip(labels) {
        if v.is_zero() {
            continue;
        }
        let text = v.to_string();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, text),
        };
        let coeff = if mag == "1" { String::new() } else { format!("{mag}·") };
        match (out.is_empty(), neg) {
            (true, false) => out = format!("{coeff}{l}"),
            (true, true) => out = format!("-{coeff}{l}"),
            (false, false) => { let _ = write!(out, " + {coeff}{l}"); }
            (false, true) => { let _ = write!(out, " - {coeff}{l}"); }
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn print_images(sink: &mut Sink<'_>, name: &str, s: &Matrix, basis: &Basis) {
    for c in 0..s.cols() {
        sink.line(format!("{name}({}) = {}", basis.label(c), combination(&s.column_values(c), basis.labels())));
    }
}

fn antipode(doc: &Document, block: Option<&str>, opts: &Options) -> Run {
    let mut sink = Sink::new(opts);
    let name = match block {
        Some(b) => b.to_string(),
        None => doc
            .blocks
            .iter()
            .find(|b| matches!(b.body, Body::Hopf(_) | Body::Bialgebra(_)))
            .map(|b| b.name.clone())
            .ok_or_else(|| Failure::Usage("no HOPF or BIALGEBRA block".into()))?,
    };
    let bi: &HomBialgebra = doc.bialgebra(&name)?;
    let s = match doc.get(&name) {
        Some(Body::Hopf(h)) => h.antipode().clone(),
        _ => {
            let s = solve_antipode(bi)?;
            sink.line(format!("solved antipode of {name}"));
            s
        }
    };
    print_images(&mut sink, "S", &s, bi.basis());
    sink.report(&check_antipode(bi, &s)?);
    Ok(sink.finish())
}

fn modules(doc: &Document) -> Result<Vec<(String, YDModule)>, Failure> {
    let ms = doc.yd_modules()?;
    if ms.is_empty() {
        return Err(Failure::Usage("no ACTION/COACTION pairs sharing a CARRIER tag".into()));
    }
    Ok(ms)
}

fn hopf_for(doc: &Document, y: &YDModule) -> Option<hom_yd::structures::HomHopf> {
    doc.blocks.iter().find_map(|b| match &b.body {
        Body::Hopf(h) if h.bialgebra() == y.h().as_ref() => Some(h.clone()),
        _ => None,
    })
}

fn braiding_test(doc: &Document, opts: &Options) -> Run {
    let ms = modules(doc)?;
    let mut sink = Sink::new(opts);
    for (mn, m) in &ms {
        for (nn, n) in &ms {
            sink.line(format!("## braiding {mn}, {nn}"));
            sink.report(&check_morphism(&braiding(m, n)?)?);
            if let Some(h) = hopf_for(doc, m) {
                sink.report(&check_braiding_inverse(m, n, &h)?);
            }
        }
    }
    for (mn, m) in &ms {
        for (nn, n) in &ms {
            for (pn, p) in &ms {
                sink.line(format!("## hexagons {mn}, {nn}, {pn}"));
                sink.report(&check_hexagons(m, n, p)?);
            }
        }
    }
    Ok(sink.finish())
}

fn ybe_test(doc: &Document, opts: &Options) -> Run {
    let ms = modules(doc)?;
    let mut sink = Sink::new(opts);
    for (mn, m) in &ms {
        for (nn, n) in &ms {
            for (pn, p) in &ms {
                sink.line(format!("## HYBE {mn}, {nn}, {pn}"));
                sink.report(&check_hybe(m, n, p)?);
            }
        }
    }
    Ok(sink.finish())
}

fn quasitriangular(doc: &Document, opts: &Options) -> Run {
    let mut sink = Sink::new(opts);
    let mut any = false;
    for b in &doc.blocks {
        match &b.body {
            Body::RMatrix { over, r } => {
                any = true;
                sink.line(format!("## RMATRIX {}", b.name));
                let e = check_r_matrix_correspondence(doc.hopf(over)?, r)?;
                sink.report(&e.left);
                sink.report(&e.right);
                sink.line(format!(
                    "equivalence: {} ⇔ {} ({})",
                    e.left.passed(),
                    e.right.passed(),
                    if e.agree() { "agree" } else { "DISAGREE" }
                ));
            }
            Body::Form { over, sigma } => {
                any = true;
                sink.line(format!("## FORM {}", b.name));
                sink.report(&check_form_correspondence(doc.hopf(over)?, sigma)?);
            }
            _ => {}
        }
    }
    if !any {
        return Err(Failure::Usage("no RMATRIX or FORM blocks".into()));
    }
    Ok(sink.finish())
}

fn catalog_doc(id: &str, field: &str, param: Option<&str>) -> Result<Document, Failure> {
    let field = parse_field(field)?;
    let p = param.map(|p| field.parse_scalar(p)).transpose()?;
    Ok(catalog::document(id, field, p.as_ref())?)
}

fn catalog_cmd(what: &Catalog, opts: &Options) -> Run {
    match what {
        Catalog::List => {
            let mut text = String::new();
            for e in catalog::entries() {
                let p = match e.parameter {
                    catalog::Parameter::None => "-",
                    catalog::Parameter::K => "k",
                    catalog::Parameter::L => "l",
                };
                let _ = writeln!(text, "{:<22} {p}  {}", e.id, e.summary);
            }
            Ok(Output { text, passed: true })
        }
        Catalog::Show { id, field, param } => {
            Ok(Output { text: format::print(&catalog_doc(id, field, param.as_deref())?), passed: true })
        }
        Catalog::Check { id, field, param } => check_document(&catalog_doc(id, field, param.as_deref())?, opts),
    }
}
