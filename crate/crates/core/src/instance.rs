//! The line-oriented instance format.
//!
//! ```text
//! # F2[x]/(x^2) graded by parity of degree, over itself
//! name = dual
//! [group]
//! order = 2
//! identity = 0
//! table = 0 1 / 1 0
//! [ring]
//! component 0 = 2
//! component 1 = 2
//! mul 0 0 (1) (1) = (1)
//! mul 0 1 (1) (1) = (1)
//! mul 1 1 (1) (1) = (0)
//! one = 0:(1)
//! [module]
//! regular
//! ```
//!
//! A product may pin its target component, `= 1:(1)`; it is otherwise the
//! product of the two grades. An empty `[module]` section is the zero
//! module. Without `[group]` the grading group is trivial.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::context::ModuleContext;
use crate::desc::{ComponentDecl, GroupDesc, ModuleDesc, Product, RingDesc, Tagged};
use crate::error::{AlgebraError, Error, ParseError};
use crate::limits::Limits;
use crate::module::GradedModule;
use crate::ring::GradedRing;
use crate::spectrum::VarietySemantics;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct InstanceOptions {
    pub semantics: Option<VarietySemantics>,
    /// `false` drops the primeful requirement from `qp.Spec_g(M)`.
    pub require_primeful: Option<bool>,
    pub max_carrier: Option<usize>,
    pub max_group: Option<usize>,
    pub max_lattice: Option<usize>,
}

impl InstanceOptions {
    fn is_empty(&self) -> bool {
        *self == InstanceOptions::default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceDesc {
    pub name: Option<String>,
    pub group: GroupDesc,
    pub ring: RingDesc,
    pub module: Option<ModuleDesc>,
    pub options: InstanceOptions,
}

impl InstanceDesc {
    pub fn display_name(&self) -> &str {
        self.name.as_deref().unwrap_or("unnamed")
    }

    /// `base` with this instance's cap overrides applied.
    pub fn limits(&self, base: Limits) -> Limits {
        Limits {
            max_carrier: self.options.max_carrier.unwrap_or(base.max_carrier),
            max_group: self.options.max_group.unwrap_or(base.max_group),
            max_lattice: self.options.max_lattice.unwrap_or(base.max_lattice),
        }
    }

    pub fn semantics(&self) -> VarietySemantics {
        self.options.semantics.unwrap_or_default()
    }

    pub fn require_primeful(&self) -> bool {
        self.options.require_primeful.unwrap_or(true)
    }

    pub fn build_ring(&self, limits: &Limits) -> Result<Arc<GradedRing>, AlgebraError> {
        GradedRing::from_desc(&self.group, &self.ring, limits).map(Arc::new)
    }

    pub fn build_module(&self, ring: Arc<GradedRing>, limits: &Limits) -> Result<GradedModule, AlgebraError> {
        let desc = self.module.as_ref().ok_or(AlgebraError::MissingModule)?;
        GradedModule::from_desc(ring, desc, limits)
    }

    /// Ring, module, both lattices and the quotient by the annihilator.
    pub fn context(&self, limits: &Limits) -> Result<ModuleContext, AlgebraError> {
        let ring = self.build_ring(limits)?;
        let module = self.build_module(ring, limits)?;
        ModuleContext::new(module, limits, self.require_primeful())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Word(String),
    Punct(char),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    col: usize,
}

fn tokenize(line: &str, lineno: usize) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = line.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
        } else if "=(),:/[]".contains(c) {
            out.push(Token {
                tok: Tok::Punct(c),
                col: i + 1,
            });
            i += 1;
        } else if c.is_alphanumeric() || "_-.".contains(c) {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || "_-.".contains(chars[i])) {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Word(chars[start..i].iter().collect()),
                col: start + 1,
            });
        } else {
            return Err(ParseError::Syntax {
                line: lineno,
                col: i + 1,
                expected: format!("a word or one of `=(),:/[]`, found `{c}`"),
            });
        }
    }
    Ok(out)
}

/// Cursor over one line's tokens.
struct Line {
    no: usize,
    toks: Vec<Token>,
    pos: usize,
    end_col: usize,
}

impl Line {
    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.col)
    }

    fn err(&self, expected: &str) -> ParseError {
        ParseError::Syntax {
            line: self.no,
            col: self.col(),
            expected: expected.to_string(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn punct(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::Punct(p)) if *p == c => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(&format!("`{c}`"))),
        }
    }

    fn eat_punct(&mut self, c: char) -> bool {
        self.punct(c).is_ok()
    }

    fn word(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Word(w)) => {
                let w = w.clone();
                self.pos += 1;
                Ok(w)
            }
            _ => Err(self.err(what)),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::Word(w)) if w == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(&format!("`{kw}`"))),
        }
    }

    fn number<T: std::str::FromStr>(&mut self, what: &str) -> Result<(T, usize), ParseError> {
        let col = self.col();
        match self.peek() {
            Some(Tok::Word(w)) => match w.parse::<T>() {
                Ok(v) => {
                    self.pos += 1;
                    Ok((v, col))
                }
                Err(_) => Err(self.err(what)),
            },
            _ => Err(self.err(what)),
        }
    }

    fn tuple(&mut self) -> Result<(Vec<u32>, usize), ParseError> {
        let col = self.col();
        self.punct('(')?;
        let mut out = Vec::new();
        if self.eat_punct(')') {
            return Ok((out, col));
        }
        loop {
            out.push(self.number::<u32>("a residue")?.0);
            if self.eat_punct(')') {
                return Ok((out, col));
            }
            self.punct(',')?;
        }
    }

    fn done(&self) -> Result<(), ParseError> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(self.err("end of line"))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Section {
    Top,
    Group,
    Ring,
    Module,
    Options,
}

/// Source position of a parsed item, kept for semantic diagnostics.
#[derive(Debug, Clone, Copy)]
struct At {
    line: usize,
    col: usize,
}

fn semantic(at: At, message: String) -> ParseError {
    ParseError::Semantic {
        line: at.line,
        col: at.col,
        message,
    }
}

struct TaggedAt {
    grade: usize,
    grade_at: At,
    residues: Vec<u32>,
    residues_at: At,
}

impl TaggedAt {
    fn tagged(&self) -> Tagged {
        Tagged {
            grade: self.grade,
            residues: self.residues.clone(),
        }
    }
}

struct ProductAt {
    left: TaggedAt,
    right: TaggedAt,
    target: Option<(usize, At)>,
    value: Vec<u32>,
    value_at: At,
}

#[derive(Default)]
struct Raw {
    name: Option<String>,
    order: Option<(usize, At)>,
    identity: Option<(usize, At)>,
    table: Option<(Vec<Vec<usize>>, At)>,
    ring_seen: bool,
    ring_components: Vec<(ComponentDecl, At)>,
    mul: Vec<ProductAt>,
    one: Option<TaggedAt>,
    module_seen: bool,
    regular: bool,
    module_components: Vec<(ComponentDecl, At)>,
    act: Vec<ProductAt>,
    options: InstanceOptions,
}

fn parse_product(l: &mut Line) -> Result<ProductAt, ParseError> {
    let at = |l: &Line| At {
        line: l.no,
        col: l.col(),
    };
    let lg_at = at(l);
    let (lg, _) = l.number::<usize>("a component index")?;
    let rg_at = at(l);
    let (rg, _) = l.number::<usize>("a component index")?;
    let (lr, lc) = l.tuple()?;
    let (rr, rc) = l.tuple()?;
    l.punct('=')?;
    let mut target = None;
    if let Some(Tok::Word(_)) = l.peek() {
        let t_at = at(l);
        let (t, _) = l.number::<usize>("a component index or a tuple")?;
        l.punct(':')?;
        target = Some((t, t_at));
    }
    let (value, vc) = l.tuple()?;
    l.done()?;
    Ok(ProductAt {
        left: TaggedAt {
            grade: lg,
            grade_at: lg_at,
            residues: lr,
            residues_at: At { line: l.no, col: lc },
        },
        right: TaggedAt {
            grade: rg,
            grade_at: rg_at,
            residues: rr,
            residues_at: At { line: l.no, col: rc },
        },
        target,
        value,
        value_at: At { line: l.no, col: vc },
    })
}

fn parse_component(l: &mut Line) -> Result<(ComponentDecl, At), ParseError> {
    let at = At {
        line: l.no,
        col: l.col(),
    };
    let (grade, _) = l.number::<usize>("a component index")?;
    l.punct('=')?;
    let mut orders = vec![l.number::<u32>("a cyclic order")?.0];
    while l.peek().is_some() {
        l.keyword("x")?;
        orders.push(l.number::<u32>("a cyclic order")?.0);
    }
    Ok((ComponentDecl { grade, orders }, at))
}

fn parse_tagged(l: &mut Line) -> Result<TaggedAt, ParseError> {
    let grade_at = At {
        line: l.no,
        col: l.col(),
    };
    let (grade, _) = l.number::<usize>("a component index")?;
    l.punct(':')?;
    let (residues, c) = l.tuple()?;
    l.done()?;
    Ok(TaggedAt {
        grade,
        grade_at,
        residues,
        residues_at: At { line: l.no, col: c },
    })
}

fn parse_raw(text: &str) -> Result<(Raw, usize), ParseError> {
    let mut raw = Raw::default();
    let mut section = Section::Top;
    let mut seen: Vec<Section> = Vec::new();
    let mut last = 0;
    for (i, src) in text.lines().enumerate() {
        let no = i + 1;
        last = no;
        let toks = tokenize(src, no)?;
        if toks.is_empty() {
            continue;
        }
        let mut l = Line {
            no,
            toks,
            pos: 0,
            end_col: src.chars().count() + 1,
        };
        if l.eat_punct('[') {
            let name = l.word("a section name")?;
            l.punct(']')?;
            l.done()?;
            section = match name.as_str() {
                "group" => Section::Group,
                "ring" => Section::Ring,
                "module" => Section::Module,
                "options" => Section::Options,
                _ => {
                    return Err(ParseError::Syntax {
                        line: no,
                        col: 2,
                        expected: "one of `group`, `ring`, `module`, `options`".into(),
                    })
                }
            };
            if seen.contains(&section) {
                return Err(ParseError::DuplicateSection {
                    line: no,
                    section: name,
                });
            }
            seen.push(section);
            match section {
                Section::Ring => raw.ring_seen = true,
                Section::Module => raw.module_seen = true,
                _ => {}
            }
            continue;
        }
        let here = At { line: no, col: l.col() };
        let key = l.word("a key")?;
        match (section, key.as_str()) {
            (Section::Top, "name") => {
                l.punct('=')?;
                let mut parts = Vec::new();
                while let Some(Tok::Word(_)) = l.peek() {
                    parts.push(l.word("a name")?);
                }
                if parts.is_empty() {
                    return Err(l.err("a name"));
                }
                l.done()?;
                raw.name = Some(parts.join(" "));
            }
            (Section::Group, "order") => {
                l.punct('=')?;
                let (v, col) = l.number::<usize>("the group order")?;
                l.done()?;
                raw.order = Some((v, At { line: no, col }));
            }
            (Section::Group, "identity") => {
                l.punct('=')?;
                let (v, col) = l.number::<usize>("the identity index")?;
                l.done()?;
                raw.identity = Some((v, At { line: no, col }));
            }
            (Section::Group, "table") => {
                l.punct('=')?;
                let at = At { line: no, col: l.col() };
                let mut rows = vec![Vec::new()];
                while l.peek().is_some() {
                    if l.eat_punct('/') {
                        rows.push(Vec::new());
                    } else {
                        rows.last_mut()
                            .expect("nonempty")
                            .push(l.number::<usize>("a group element or `/`")?.0);
                    }
                }
                raw.table = Some((rows, at));
            }
            (Section::Ring, "component") => raw.ring_components.push(parse_component(&mut l)?),
            (Section::Ring, "mul") => raw.mul.push(parse_product(&mut l)?),
            (Section::Ring, "one") => {
                l.punct('=')?;
                raw.one = Some(parse_tagged(&mut l)?);
            }
            (Section::Module, "regular") => {
                l.done()?;
                raw.regular = true;
            }
            (Section::Module, "component") => raw.module_components.push(parse_component(&mut l)?),
            (Section::Module, "act") => raw.act.push(parse_product(&mut l)?),
            (Section::Options, key) => {
                l.punct('=')?;
                let v_at = At { line: no, col: l.col() };
                let v = l.word("an option value")?;
                l.done()?;
                let bad = |what: &str| semantic(v_at, format!("invalid value `{v}` for {what}"));
                let o = &mut raw.options;
                match key {
                    "semantics" => o.semantics = Some(v.parse().map_err(|_| bad("semantics"))?),
                    "primeful" => {
                        o.require_primeful = Some(match v.as_str() {
                            "required" => true,
                            "dropped" => false,
                            _ => return Err(bad("primeful (required|dropped)")),
                        })
                    }
                    "max_carrier" => o.max_carrier = Some(v.parse().map_err(|_| bad(key))?),
                    "max_group" => o.max_group = Some(v.parse().map_err(|_| bad(key))?),
                    "max_lattice" => o.max_lattice = Some(v.parse().map_err(|_| bad(key))?),
                    _ => return Err(semantic(here, format!("unknown option `{key}`"))),
                }
            }
            _ => {
                let expected = match section {
                    Section::Top => "`name` or a section header",
                    Section::Group => "`order`, `identity` or `table`",
                    Section::Ring => "`component`, `mul` or `one`",
                    Section::Module => "`regular`, `component` or `act`",
                    Section::Options => unreachable!(),
                };
                return Err(ParseError::Syntax {
                    line: no,
                    col: here.col,
                    expected: expected.into(),
                });
            }
        }
    }
    Ok((raw, last))
}

type Layout = Vec<Option<Vec<u32>>>;

fn layout(decls: &[(ComponentDecl, At)], order: usize, what: &str) -> Result<Layout, ParseError> {
    let mut out: Layout = vec![None; order];
    for (d, at) in decls {
        if d.grade >= order {
            return Err(semantic(
                *at,
                format!("{what} component {} is not a group element", d.grade),
            ));
        }
        if out[d.grade].is_some() {
            return Err(semantic(*at, format!("{what} component {} declared twice", d.grade)));
        }
        if let Some(&z) = d.orders.iter().find(|&&z| z == 0) {
            return Err(semantic(*at, format!("cyclic order {z} must be at least 1")));
        }
        out[d.grade] = Some(d.orders.clone());
    }
    Ok(out)
}

fn check_tuple(
    layout: &Layout,
    grade: usize,
    grade_at: At,
    residues: &[u32],
    at: At,
    what: &str,
) -> Result<(), ParseError> {
    let orders = layout
        .get(grade)
        .and_then(|o| o.as_ref())
        .ok_or_else(|| semantic(grade_at, format!("undeclared {what} component {grade}")))?;
    if orders.len() != residues.len() {
        return Err(semantic(
            at,
            format!(
                "tuple has {} residues but {what} component {grade} has {} cyclic factors",
                residues.len(),
                orders.len()
            ),
        ));
    }
    for (&r, &d) in residues.iter().zip(orders) {
        if r >= d {
            return Err(semantic(at, format!("residue {r} out of range for Z/{d}")));
        }
    }
    Ok(())
}

fn check_product(
    p: &ProductAt,
    group: &GroupDesc,
    left: &Layout,
    right: &Layout,
    target: &Layout,
    sides: (&str, &str),
) -> Result<Product, ParseError> {
    check_tuple(
        left,
        p.left.grade,
        p.left.grade_at,
        &p.left.residues,
        p.left.residues_at,
        sides.0,
    )?;
    check_tuple(
        right,
        p.right.grade,
        p.right.grade_at,
        &p.right.residues,
        p.right.residues_at,
        sides.1,
    )?;
    let (t, t_at) = match p.target {
        Some((t, at)) => {
            if t >= group.order() {
                return Err(semantic(at, format!("target component {t} is not a group element")));
            }
            (t, at)
        }
        None => (group.table[p.left.grade][p.right.grade], p.value_at),
    };
    check_tuple(target, t, t_at, &p.value, p.value_at, sides.1)?;
    Ok(Product {
        left: p.left.tagged(),
        right: p.right.tagged(),
        target: p.target.map(|(t, _)| t),
        value: p.value.clone(),
    })
}

/// Parse an instance file. Group axioms and ring/module axioms are left to
/// validation; the parser checks that every reference is in range.
pub fn parse_instance(text: &str) -> Result<InstanceDesc, ParseError> {
    let (raw, last) = parse_raw(text)?;
    if !raw.ring_seen {
        return Err(ParseError::Syntax {
            line: last.max(1),
            col: 1,
            expected: "a [ring] section".into(),
        });
    }

    let group = match (&raw.order, &raw.identity, &raw.table) {
        (None, None, None) => GroupDesc::trivial(),
        (Some((order, order_at)), Some((identity, id_at)), Some((table, t_at))) => {
            if *order == 0 {
                return Err(semantic(*order_at, "group order must be positive".into()));
            }
            if identity >= order {
                return Err(semantic(
                    *id_at,
                    format!("identity {identity} is not below the order {order}"),
                ));
            }
            if table.len() != *order || table.iter().any(|r| r.len() != *order) {
                return Err(semantic(
                    *t_at,
                    format!("table must be {order} rows of {order} entries"),
                ));
            }
            if let Some(&x) = table.iter().flatten().find(|&&x| x >= *order) {
                return Err(semantic(
                    *t_at,
                    format!("table entry {x} is not below the order {order}"),
                ));
            }
            GroupDesc {
                identity: *identity,
                table: table.clone(),
            }
        }
        _ => {
            return Err(ParseError::Syntax {
                line: last.max(1),
                col: 1,
                expected: "`order`, `identity` and `table` in [group]".into(),
            })
        }
    };
    let n = group.order();

    let ring_layout = layout(&raw.ring_components, n, "ring")?;
    let mul = raw
        .mul
        .iter()
        .map(|p| check_product(p, &group, &ring_layout, &ring_layout, &ring_layout, ("ring", "ring")))
        .collect::<Result<Vec<_>, _>>()?;
    let one = raw.one.as_ref().ok_or(ParseError::Syntax {
        line: last.max(1),
        col: 1,
        expected: "`one = <g>:(..)` in [ring]".into(),
    })?;
    check_tuple(
        &ring_layout,
        one.grade,
        one.grade_at,
        &one.residues,
        one.residues_at,
        "ring",
    )?;
    let ring = RingDesc {
        components: raw.ring_components.iter().map(|(d, _)| d.clone()).collect(),
        mul,
        one: one.tagged(),
    };

    let module = if !raw.module_seen {
        None
    } else if raw.regular {
        if let Some((_, c_at)) = raw.module_components.first() {
            return Err(semantic(*c_at, "a regular module takes no components".into()));
        }
        if let Some(p) = raw.act.first() {
            return Err(semantic(
                p.left.grade_at,
                "a regular module takes no action constants".into(),
            ));
        }
        Some(ModuleDesc::regular())
    } else {
        let mod_layout = layout(&raw.module_components, n, "module")?;
        let act = raw
            .act
            .iter()
            .map(|p| check_product(p, &group, &ring_layout, &mod_layout, &mod_layout, ("ring", "module")))
            .collect::<Result<Vec<_>, _>>()?;
        Some(ModuleDesc {
            regular: false,
            components: raw.module_components.iter().map(|(d, _)| d.clone()).collect(),
            act,
        })
    };

    Ok(InstanceDesc {
        name: raw.name,
        group,
        ring,
        module,
        options: raw.options,
    })
}

pub fn read_instance(path: &std::path::Path) -> Result<InstanceDesc, Error> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(parse_instance(&text)?)
}

fn tuple(r: &[u32]) -> String {
    let inner: Vec<String> = r.iter().map(u32::to_string).collect();
    format!("({})", inner.join(","))
}

fn write_components(out: &mut String, decls: &[ComponentDecl]) {
    for d in decls {
        let orders: Vec<String> = d.orders.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "component {} = {}", d.grade, orders.join(" x "));
    }
}

fn write_products(out: &mut String, kw: &str, products: &[Product]) {
    for p in products {
        let target = p.target.map(|t| format!("{t}:")).unwrap_or_default();
        let _ = writeln!(
            out,
            "{kw} {} {} {} {} = {target}{}",
            p.left.grade,
            p.right.grade,
            tuple(&p.left.residues),
            tuple(&p.right.residues),
            tuple(&p.value)
        );
    }
}

/// Canonical text of an instance. Parsing it gives back `desc`, and
/// serializing that again gives the same bytes.
pub fn serialize_instance(desc: &InstanceDesc) -> String {
    let mut out = String::new();
    if let Some(name) = &desc.name {
        let _ = writeln!(out, "name = {name}");
    }
    let rows: Vec<String> = desc
        .group
        .table
        .iter()
        .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
        .collect();
    let _ = writeln!(out, "[group]");
    let _ = writeln!(out, "order = {}", desc.group.order());
    let _ = writeln!(out, "identity = {}", desc.group.identity);
    let _ = writeln!(out, "table = {}", rows.join(" / "));
    let _ = writeln!(out, "[ring]");
    write_components(&mut out, &desc.ring.components);
    write_products(&mut out, "mul", &desc.ring.mul);
    let _ = writeln!(out, "one = {}:{}", desc.ring.one.grade, tuple(&desc.ring.one.residues));
    if let Some(m) = &desc.module {
        let _ = writeln!(out, "[module]");
        if m.regular {
            let _ = writeln!(out, "regular");
        } else {
            write_components(&mut out, &m.components);
            write_products(&mut out, "act", &m.act);
        }
    }
    if !desc.options.is_empty() {
        let o = &desc.options;
        let _ = writeln!(out, "[options]");
        if let Some(s) = o.semantics {
            let _ = writeln!(out, "semantics = {s}");
        }
        if let Some(p) = o.require_primeful {
            let _ = writeln!(out, "primeful = {}", if p { "required" } else { "dropped" });
        }
        for (k, v) in [
            ("max_carrier", o.max_carrier),
            ("max_group", o.max_group),
            ("max_lattice", o.max_lattice),
        ] {
            if let Some(v) = v {
                let _ = writeln!(out, "{k} = {v}");
            }
        }
    }
    out
}
