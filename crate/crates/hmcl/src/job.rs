//! The text job format: categories, groups, actions, bimodule expressions
//! and a command list, parsed into a [`JobFile`] and executed by
//! [`run_job`]. The grammar is documented in `docs/job-format.md`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;
use std::time::Instant;

use crate::bimodule::Bimodule;
use crate::category::{Arrow, PresentedCategory, QuiverPresentation, Relation};
use crate::covering::{Covering, FiniteGroup, GroupAction, GroupPresentation};
use crate::hochschild;
use crate::linalg::{FieldSpec, Scalar};
use crate::report::{CommandOutcome, CommandReport, PageCell, Report};
use crate::spectral::{self, Filtration};

/// A parse or validation error with its source line.
#[derive(Debug, Clone, PartialEq)]
pub struct JobError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for JobError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for JobError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, JobError> {
    Err(JobError { line, message: message.into() })
}

// ---------------------------------------------------------------------------
// AST

#[derive(Debug, Clone, PartialEq)]
pub struct JobFile {
    pub field: FieldDecl,
    pub statements: Vec<Statement>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum FieldDecl {
    Rationals,
    PrimeField(u64),
}

impl FieldDecl {
    pub fn to_field(&self) -> Result<FieldSpec, JobError> {
        match self {
            FieldDecl::Rationals => Ok(FieldSpec::Rationals),
            FieldDecl::PrimeField(p) => {
                FieldSpec::prime_field(*p).map_err(|e| JobError { line: 0, message: e.to_string() })
            }
        }
    }
}

/// A rational literal `num/den`, interpreted in the declared field at run
/// time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fraction {
    pub num: i64,
    pub den: i64,
}

impl Fraction {
    pub fn int(n: i64) -> Self {
        Fraction { num: n, den: 1 }
    }

    pub fn to_scalar(&self, field: FieldSpec) -> Result<Scalar, JobError> {
        field
            .from_fraction(self.num, self.den)
            .map_err(|e| JobError { line: 0, message: e.to_string() })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Statement {
    Category { name: String, def: CategoryDef, line: usize },
    Group { name: String, def: GroupDef, line: usize },
    Action { name: String, def: ActionDef, line: usize },
    Bimodule { name: String, expr: BimoduleExpr, line: usize },
    Run { command: Command, line: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CategoryDef {
    pub objects: Vec<String>,
    pub arrows: Vec<(String, String, String)>,
    pub relations: Vec<Vec<(Fraction, Vec<String>)>>,
    pub nilpotence: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum GroupDef {
    Cyclic(usize),
    Table { elements: Vec<String>, rows: Vec<Vec<String>> },
    Presentation { generators: Vec<String>, relators: Vec<Vec<(String, i64)>> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ActionDef {
    pub group: String,
    pub category: String,
    /// Per named generator: object map and arrow map (with scalars).
    pub generators: Vec<(String, Vec<(String, String)>, Vec<(String, Fraction, String)>)>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum BimoduleExpr {
    Standard(String),
    Lift(String, String),
    Dual(String),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Quotient { action: String, name: String },
    Homology { category: String, bimodule: String, max_degree: usize },
    Cohomology { category: String, bimodule: String, max_degree: usize },
    Center { category: String },
    ClPages { covering: String, bimodule: String, p_max: usize, q_max: usize, page: usize, filtration: FiltrationArg },
    VerifyMaschke { covering: String, bimodule: String, n_max: usize },
    VerifyDuality { category: String, bimodule: String, n_max: usize },
    VerifyAgreement { category: String, bimodule: String, max_degree: usize },
    VerifyContraction { category: String, objects: Vec<String>, max_degree: usize },
    VerifyHomEmbed { covering: String, presentation: String },
    VerifyRankBound { covering: String, presentation: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiltrationArg {
    Columns,
    Rows,
}

// ---------------------------------------------------------------------------
// Lexer

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Number(u64),
    Arrow, // ->
    Sym(char),
}

#[derive(Debug, Clone)]
struct Lexed {
    tok: Tok,
    line: usize,
}

fn lex(text: &str) -> Result<Vec<Lexed>, JobError> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let src = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let bytes: Vec<char> = src.chars().collect();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if c == '-' && i + 1 < bytes.len() && bytes[i + 1] == '>' {
                out.push(Lexed { tok: Tok::Arrow, line });
                i += 2;
                continue;
            }
            if c.is_ascii_digit() {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let s: String = bytes[i..j].iter().collect();
                let n = s.parse::<u64>().map_err(|_| JobError { line, message: format!("bad number `{s}`") })?;
                out.push(Lexed { tok: Tok::Number(n), line });
                i = j;
                continue;
            }
            if c.is_alphabetic() || c == '_' {
                let mut j = i;
                while j < bytes.len() && (bytes[j].is_alphanumeric() || bytes[j] == '_') {
                    j += 1;
                }
                out.push(Lexed { tok: Tok::Ident(bytes[i..j].iter().collect()), line });
                i = j;
                continue;
            }
            if "{}():;,=*/.^-+[]".contains(c) {
                out.push(Lexed { tok: Tok::Sym(c), line });
                i += 1;
                continue;
            }
            return err(line, format!("unexpected character `{c}`"));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Parser

struct Parser {
    toks: Vec<Lexed>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|l| &l.tok)
    }

    fn line(&self) -> usize {
        self.toks.get(self.pos.min(self.toks.len().saturating_sub(1))).map_or(0, |l| l.line)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|l| l.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_sym(&mut self, c: char) -> Result<(), JobError> {
        let line = self.line();
        match self.next() {
            Some(Tok::Sym(s)) if s == c => Ok(()),
            other => err(line, format!("expected `{c}`, found {other:?}")),
        }
    }

    fn expect_ident(&mut self) -> Result<String, JobError> {
        let line = self.line();
        match self.next() {
            Some(Tok::Ident(s)) => Ok(s),
            other => err(line, format!("expected a name, found {other:?}")),
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<(), JobError> {
        let line = self.line();
        let id = self.expect_ident()?;
        if id == kw {
            Ok(())
        } else {
            err(line, format!("expected `{kw}`, found `{id}`"))
        }
    }

    fn expect_number(&mut self) -> Result<u64, JobError> {
        let line = self.line();
        match self.next() {
            Some(Tok::Number(n)) => Ok(n),
            other => err(line, format!("expected a number, found {other:?}")),
        }
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if matches!(self.peek(), Some(Tok::Sym(s)) if *s == c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident_list(&mut self) -> Result<Vec<String>, JobError> {
        let mut v = vec![self.expect_ident()?];
        while self.eat_sym(',') {
            v.push(self.expect_ident()?);
        }
        Ok(v)
    }

    /// `num` or `num/den`, with an optional leading sign already consumed.
    fn fraction(&mut self, negative: bool) -> Result<Fraction, JobError> {
        let n = self.expect_number()? as i64;
        let den = if self.eat_sym('/') { self.expect_number()? as i64 } else { 1 };
        Ok(Fraction { num: if negative { -n } else { n }, den })
    }

    /// A path `a.b.c` as arrow names.
    fn path(&mut self) -> Result<Vec<String>, JobError> {
        let mut v = vec![self.expect_ident()?];
        while self.eat_sym('.') {
            v.push(self.expect_ident()?);
        }
        Ok(v)
    }

    /// A linear combination of paths: `[coef *] path (+|- [coef *] path)*`.
    fn relation(&mut self) -> Result<Vec<(Fraction, Vec<String>)>, JobError> {
        let mut terms = Vec::new();
        let mut negative = self.eat_sym('-');
        loop {
            let coef = if matches!(self.peek(), Some(Tok::Number(_))) {
                let f = self.fraction(negative)?;
                self.expect_sym('*')?;
                f
            } else {
                Fraction::int(if negative { -1 } else { 1 })
            };
            let path = self.path()?;
            terms.push((coef, path));
            if self.eat_sym('+') {
                negative = false;
            } else if self.eat_sym('-') {
                negative = true;
            } else {
                break;
            }
        }
        Ok(terms)
    }

    fn category_def(&mut self) -> Result<CategoryDef, JobError> {
        self.expect_sym('{')?;
        let mut objects = Vec::new();
        let mut arrows = Vec::new();
        let mut relations = Vec::new();
        let mut nilpotence = None;
        while !self.eat_sym('}') {
            let line = self.line();
            let key = self.expect_ident()?;
            self.expect_sym(':')?;
            match key.as_str() {
                "objects" => objects = self.ident_list()?,
                "arrows" => loop {
                    let name = self.expect_ident()?;
                    self.expect_sym(':')?;
                    let src = self.expect_ident()?;
                    let line = self.line();
                    match self.next() {
                        Some(Tok::Arrow) => {}
                        other => return err(line, format!("expected `->`, found {other:?}")),
                    }
                    let tgt = self.expect_ident()?;
                    arrows.push((name, src, tgt));
                    if !self.eat_sym(';') {
                        break;
                    }
                    // allow a trailing `;` before another key or `}`
                    if matches!(self.peek(), Some(Tok::Sym('}'))) {
                        break;
                    }
                    if let Some(Tok::Ident(id)) = self.peek() {
                        if ["objects", "arrows", "relations", "nilpotence"].contains(&id.as_str())
                            && matches!(self.toks.get(self.pos + 1).map(|l| &l.tok), Some(Tok::Sym(':')))
                        {
                            break;
                        }
                    }
                },
                "relations" => loop {
                    relations.push(self.relation()?);
                    if !self.eat_sym(';') {
                        break;
                    }
                    if matches!(self.peek(), Some(Tok::Sym('}'))) {
                        break;
                    }
                    if let Some(Tok::Ident(id)) = self.peek() {
                        if ["objects", "arrows", "relations", "nilpotence"].contains(&id.as_str())
                            && matches!(self.toks.get(self.pos + 1).map(|l| &l.tok), Some(Tok::Sym(':')))
                        {
                            break;
                        }
                    }
                },
                "nilpotence" => nilpotence = Some(self.expect_number()? as usize),
                other => return err(line, format!("unknown category key `{other}`")),
            }
        }
        Ok(CategoryDef { objects, arrows, relations, nilpotence })
    }

    fn group_def(&mut self) -> Result<GroupDef, JobError> {
        let line = self.line();
        let kind = self.expect_ident()?;
        match kind.as_str() {
            "cyclic" => {
                self.expect_sym('(')?;
                let n = self.expect_number()? as usize;
                self.expect_sym(')')?;
                Ok(GroupDef::Cyclic(n))
            }
            "table" => {
                self.expect_sym('{')?;
                self.expect_keyword("elements")?;
                self.expect_sym(':')?;
                let elements = self.ident_list()?;
                self.expect_sym(';')?;
                self.expect_keyword("rows")?;
                self.expect_sym(':')?;
                let mut rows = Vec::new();
                loop {
                    let mut row = Vec::new();
                    for _ in 0..elements.len() {
                        row.push(self.expect_ident()?);
                    }
                    rows.push(row);
                    if !self.eat_sym(';') {
                        break;
                    }
                    if matches!(self.peek(), Some(Tok::Sym('}'))) {
                        break;
                    }
                }
                self.expect_sym('}')?;
                Ok(GroupDef::Table { elements, rows })
            }
            "presentation" => {
                self.expect_sym('{')?;
                self.expect_keyword("generators")?;
                self.expect_sym(':')?;
                let generators = if matches!(self.peek(), Some(Tok::Sym(';'))) {
                    Vec::new()
                } else {
                    self.ident_list()?
                };
                self.expect_sym(';')?;
                self.expect_keyword("relators")?;
                self.expect_sym(':')?;
                let mut relators = Vec::new();
                if !matches!(self.peek(), Some(Tok::Sym('}'))) {
                    loop {
                        relators.push(self.relator_word()?);
                        if !self.eat_sym(',') {
                            break;
                        }
                    }
                }
                self.expect_sym('}')?;
                Ok(GroupDef::Presentation { generators, relators })
            }
            other => err(line, format!("unknown group constructor `{other}`")),
        }
    }

    /// `a^2.b^-1.a` as `(generator, exponent)` pairs.
    fn relator_word(&mut self) -> Result<Vec<(String, i64)>, JobError> {
        let mut word = Vec::new();
        loop {
            let gen = self.expect_ident()?;
            let exp = if self.eat_sym('^') {
                let neg = self.eat_sym('-');
                let n = self.expect_number()? as i64;
                if neg {
                    -n
                } else {
                    n
                }
            } else {
                1
            };
            word.push((gen, exp));
            if !self.eat_sym('.') {
                break;
            }
        }
        Ok(word)
    }

    fn action_def(&mut self) -> Result<ActionDef, JobError> {
        self.expect_sym('{')?;
        self.expect_keyword("group")?;
        self.expect_sym(':')?;
        let group = self.expect_ident()?;
        self.eat_sym(';');
        self.expect_keyword("category")?;
        self.expect_sym(':')?;
        let category = self.expect_ident()?;
        self.eat_sym(';');
        let mut generators = Vec::new();
        while !self.eat_sym('}') {
            self.expect_keyword("on")?;
            let elt = self.expect_ident()?;
            self.expect_sym(':')?;
            let mut objects = Vec::new();
            let mut arrows = Vec::new();
            loop {
                let line = self.line();
                match self.peek() {
                    Some(Tok::Ident(id)) if id == "objects" => {
                        self.next();
                        self.expect_sym('(')?;
                        if !self.eat_sym(')') {
                            loop {
                                let from = self.expect_ident()?;
                                match self.next() {
                                    Some(Tok::Arrow) => {}
                                    other => return err(line, format!("expected `->`, found {other:?}")),
                                }
                                let to = self.expect_ident()?;
                                objects.push((from, to));
                                if !self.eat_sym(',') {
                                    break;
                                }
                            }
                            self.expect_sym(')')?;
                        }
                    }
                    Some(Tok::Ident(id)) if id == "arrows" => {
                        self.next();
                        self.expect_sym('(')?;
                        if !self.eat_sym(')') {
                            loop {
                                let from = self.expect_ident()?;
                                match self.next() {
                                    Some(Tok::Arrow) => {}
                                    other => return err(line, format!("expected `->`, found {other:?}")),
                                }
                                // optional scalar: `coef *` or `- coef *` or `-`
                                let mut coef = Fraction::int(1);
                                if self.eat_sym('-') {
                                    if matches!(self.peek(), Some(Tok::Number(_))) {
                                        coef = self.fraction(true)?;
                                        self.expect_sym('*')?;
                                    } else {
                                        coef = Fraction::int(-1);
                                        self.expect_sym('*')?;
                                    }
                                } else if matches!(self.peek(), Some(Tok::Number(_))) {
                                    coef = self.fraction(false)?;
                                    self.expect_sym('*')?;
                                }
                                let to = self.expect_ident()?;
                                arrows.push((from, coef, to));
                                if !self.eat_sym(',') {
                                    break;
                                }
                            }
                            self.expect_sym(')')?;
                        }
                    }
                    _ => break,
                }
            }
            self.eat_sym(';');
            generators.push((elt, objects, arrows));
        }
        Ok(ActionDef { group, category, generators })
    }

    fn bimodule_expr(&mut self) -> Result<BimoduleExpr, JobError> {
        let line = self.line();
        let kind = self.expect_ident()?;
        self.expect_sym('(')?;
        let expr = match kind.as_str() {
            "standard" => BimoduleExpr::Standard(self.expect_ident()?),
            "lift" => {
                let cov = self.expect_ident()?;
                self.expect_sym(',')?;
                BimoduleExpr::Lift(cov, self.expect_ident()?)
            }
            "dual" => BimoduleExpr::Dual(self.expect_ident()?),
            other => return err(line, format!("unknown bimodule expression `{other}`")),
        };
        self.expect_sym(')')?;
        Ok(expr)
    }

    fn named_usize(&mut self, key: &str) -> Result<usize, JobError> {
        self.expect_keyword(key)?;
        self.expect_sym('=')?;
        Ok(self.expect_number()? as usize)
    }

    fn command(&mut self) -> Result<Command, JobError> {
        let line = self.line();
        let head = self.expect_ident()?;
        match head.as_str() {
            "quotient" => {
                let action = self.expect_ident()?;
                self.expect_keyword("as")?;
                let name = self.expect_ident()?;
                Ok(Command::Quotient { action, name })
            }
            "hh" | "cohh" => {
                let category = self.expect_ident()?;
                let bimodule = self.expect_ident()?;
                let max_degree = self.named_usize("max_degree")?;
                if head == "hh" {
                    Ok(Command::Homology { category, bimodule, max_degree })
                } else {
                    Ok(Command::Cohomology { category, bimodule, max_degree })
                }
            }
            "center" => Ok(Command::Center { category: self.expect_ident()? }),
            "cl" => {
                // `cl-pages` lexes as: cl - pages
                self.expect_sym('-')?;
                self.expect_keyword("pages")?;
                let covering = self.expect_ident()?;
                let bimodule = self.expect_ident()?;
                let p_max = self.named_usize("p_max")?;
                let q_max = self.named_usize("q_max")?;
                let page = self.named_usize("page")?;
                self.expect_keyword("filtration")?;
                self.expect_sym('=')?;
                let f = self.expect_ident()?;
                let filtration = match f.as_str() {
                    "columns" => FiltrationArg::Columns,
                    "rows" => FiltrationArg::Rows,
                    other => return err(line, format!("unknown filtration `{other}`")),
                };
                Ok(Command::ClPages { covering, bimodule, p_max, q_max, page, filtration })
            }
            "verify" => {
                let what = self.expect_ident()?;
                match what.as_str() {
                    "maschke" => {
                        let covering = self.expect_ident()?;
                        let bimodule = self.expect_ident()?;
                        let n_max = self.named_usize("n_max")?;
                        Ok(Command::VerifyMaschke { covering, bimodule, n_max })
                    }
                    "duality" => {
                        let category = self.expect_ident()?;
                        let bimodule = self.expect_ident()?;
                        let n_max = self.named_usize("n_max")?;
                        Ok(Command::VerifyDuality { category, bimodule, n_max })
                    }
                    "agreement" => {
                        let category = self.expect_ident()?;
                        let bimodule = self.expect_ident()?;
                        let max_degree = self.named_usize("max_degree")?;
                        Ok(Command::VerifyAgreement { category, bimodule, max_degree })
                    }
                    "contraction" => {
                        let category = self.expect_ident()?;
                        self.expect_keyword("objects")?;
                        self.expect_sym('(')?;
                        let objects = self.ident_list()?;
                        self.expect_sym(')')?;
                        let max_degree = self.named_usize("max_degree")?;
                        Ok(Command::VerifyContraction { category, objects, max_degree })
                    }
                    "hom" => {
                        self.expect_sym('-')?;
                        self.expect_keyword("embed")?;
                        let covering = self.expect_ident()?;
                        let presentation = self.expect_ident()?;
                        Ok(Command::VerifyHomEmbed { covering, presentation })
                    }
                    "rank" => {
                        self.expect_sym('-')?;
                        self.expect_keyword("bound")?;
                        let covering = self.expect_ident()?;
                        let presentation = self.expect_ident()?;
                        Ok(Command::VerifyRankBound { covering, presentation })
                    }
                    other => err(line, format!("unknown verification `{other}`")),
                }
            }
            other => err(line, format!("unknown command `{other}`")),
        }
    }
}

/// Parses a job file; errors carry line numbers.
pub fn parse_job(text: &str) -> Result<JobFile, JobError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let mut field: Option<FieldDecl> = None;
    let mut statements = Vec::new();
    while let Some(tok) = p.peek() {
        let line = p.line();
        let head = match tok {
            Tok::Ident(s) => s.clone(),
            other => return err(line, format!("expected a statement, found {other:?}")),
        };
        p.next();
        match head.as_str() {
            "field" => {
                if field.is_some() {
                    return err(line, "field declared twice");
                }
                let id = p.expect_ident()?;
                field = Some(match id.as_str() {
                    "Q" => FieldDecl::Rationals,
                    "GF" => {
                        p.expect_sym('(')?;
                        let q = p.expect_number()?;
                        p.expect_sym(')')?;
                        FieldDecl::PrimeField(q)
                    }
                    other => return err(line, format!("unknown field `{other}` (use `Q` or `GF(p)`)")),
                });
            }
            "category" => {
                let name = p.expect_ident()?;
                let def = p.category_def()?;
                statements.push(Statement::Category { name, def, line });
            }
            "group" => {
                let name = p.expect_ident()?;
                p.expect_sym('=')?;
                let def = p.group_def()?;
                statements.push(Statement::Group { name, def, line });
            }
            "action" => {
                let name = p.expect_ident()?;
                let def = p.action_def()?;
                statements.push(Statement::Action { name, def, line });
            }
            "bimodule" => {
                let name = p.expect_ident()?;
                p.expect_sym('=')?;
                let expr = p.bimodule_expr()?;
                statements.push(Statement::Bimodule { name, expr, line });
            }
            "run" => {
                let command = p.command()?;
                statements.push(Statement::Run { command, line });
            }
            other => return err(line, format!("unknown statement `{other}`")),
        }
    }
    let Some(field) = field else {
        return err(0, "no field declared");
    };
    Ok(JobFile { field, statements })
}

// ---------------------------------------------------------------------------
// Printer (canonical form; parse . print . parse = parse)

fn print_fraction(f: &Fraction) -> String {
    if f.den == 1 {
        format!("{}", f.num)
    } else {
        format!("{}/{}", f.num, f.den)
    }
}

fn print_relation(terms: &[(Fraction, Vec<String>)]) -> String {
    let mut out = String::new();
    for (i, (coef, path)) in terms.iter().enumerate() {
        let mag = Fraction { num: coef.num.abs(), den: coef.den };
        if i == 0 {
            if coef.num < 0 {
                out.push_str("- ");
            }
        } else if coef.num < 0 {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if !(mag.num == 1 && mag.den == 1) {
            let _ = write!(out, "{}*", print_fraction(&mag));
        }
        out.push_str(&path.join("."));
    }
    out
}

/// Renders a job file in canonical form.
pub fn print_job(job: &JobFile) -> String {
    let mut s = String::new();
    match &job.field {
        FieldDecl::Rationals => s.push_str("field Q\n"),
        FieldDecl::PrimeField(p) => {
            let _ = writeln!(s, "field GF({p})");
        }
    }
    for st in &job.statements {
        s.push('\n');
        match st {
            Statement::Category { name, def, .. } => {
                let _ = writeln!(s, "category {name} {{");
                let _ = writeln!(s, "  objects: {}", def.objects.join(", "));
                if !def.arrows.is_empty() {
                    let arrows: Vec<String> =
                        def.arrows.iter().map(|(n, a, b)| format!("{n}: {a} -> {b}")).collect();
                    let _ = writeln!(s, "  arrows: {}", arrows.join("; "));
                }
                if !def.relations.is_empty() {
                    let rels: Vec<String> = def.relations.iter().map(|r| print_relation(r)).collect();
                    let _ = writeln!(s, "  relations: {}", rels.join("; "));
                }
                if let Some(n) = def.nilpotence {
                    let _ = writeln!(s, "  nilpotence: {n}");
                }
                s.push_str("}\n");
            }
            Statement::Group { name, def, .. } => match def {
                GroupDef::Cyclic(n) => {
                    let _ = writeln!(s, "group {name} = cyclic({n})");
                }
                GroupDef::Table { elements, rows } => {
                    let rws: Vec<String> = rows.iter().map(|r| r.join(" ")).collect();
                    let _ = writeln!(
                        s,
                        "group {name} = table {{ elements: {}; rows: {} }}",
                        elements.join(", "),
                        rws.join("; ")
                    );
                }
                GroupDef::Presentation { generators, relators } => {
                    let words: Vec<String> = relators
                        .iter()
                        .map(|w| {
                            w.iter()
                                .map(|(g, e)| if *e == 1 { g.clone() } else { format!("{g}^{e}") })
                                .collect::<Vec<_>>()
                                .join(".")
                        })
                        .collect();
                    let _ = writeln!(
                        s,
                        "group {name} = presentation {{ generators: {}; relators: {} }}",
                        generators.join(", "),
                        words.join(", ")
                    );
                }
            },
            Statement::Action { name, def, .. } => {
                let _ = writeln!(s, "action {name} {{");
                let _ = writeln!(s, "  group: {}", def.group);
                let _ = writeln!(s, "  category: {}", def.category);
                for (elt, objs, arrs) in &def.generators {
                    let om: Vec<String> = objs.iter().map(|(a, b)| format!("{a} -> {b}")).collect();
                    let am: Vec<String> = arrs
                        .iter()
                        .map(|(a, c, b)| {
                            if c.num == 1 && c.den == 1 {
                                format!("{a} -> {b}")
                            } else {
                                format!("{a} -> {}*{b}", print_fraction(c))
                            }
                        })
                        .collect();
                    let _ = writeln!(s, "  on {elt}: objects({}) arrows({})", om.join(", "), am.join(", "));
                }
                s.push_str("}\n");
            }
            Statement::Bimodule { name, expr, .. } => {
                let e = match expr {
                    BimoduleExpr::Standard(c) => format!("standard({c})"),
                    BimoduleExpr::Lift(cov, m) => format!("lift({cov}, {m})"),
                    BimoduleExpr::Dual(m) => format!("dual({m})"),
                };
                let _ = writeln!(s, "bimodule {name} = {e}");
            }
            Statement::Run { command, .. } => {
                let c = match command {
                    Command::Quotient { action, name } => format!("quotient {action} as {name}"),
                    Command::Homology { category, bimodule, max_degree } => {
                        format!("hh {category} {bimodule} max_degree={max_degree}")
                    }
                    Command::Cohomology { category, bimodule, max_degree } => {
                        format!("cohh {category} {bimodule} max_degree={max_degree}")
                    }
                    Command::Center { category } => format!("center {category}"),
                    Command::ClPages { covering, bimodule, p_max, q_max, page, filtration } => {
                        let f = match filtration {
                            FiltrationArg::Columns => "columns",
                            FiltrationArg::Rows => "rows",
                        };
                        format!(
                            "cl-pages {covering} {bimodule} p_max={p_max} q_max={q_max} page={page} filtration={f}"
                        )
                    }
                    Command::VerifyMaschke { covering, bimodule, n_max } => {
                        format!("verify maschke {covering} {bimodule} n_max={n_max}")
                    }
                    Command::VerifyDuality { category, bimodule, n_max } => {
                        format!("verify duality {category} {bimodule} n_max={n_max}")
                    }
                    Command::VerifyAgreement { category, bimodule, max_degree } => {
                        format!("verify agreement {category} {bimodule} max_degree={max_degree}")
                    }
                    Command::VerifyContraction { category, objects, max_degree } => {
                        format!(
                            "verify contraction {category} objects({}) max_degree={max_degree}",
                            objects.join(", ")
                        )
                    }
                    Command::VerifyHomEmbed { covering, presentation } => {
                        format!("verify hom-embed {covering} {presentation}")
                    }
                    Command::VerifyRankBound { covering, presentation } => {
                        format!("verify rank-bound {covering} {presentation}")
                    }
                };
                let _ = writeln!(s, "run {c}");
            }
        }
    }
    s
}

// ---------------------------------------------------------------------------
// Name/type checking (no heavy computation)

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Category,
    Group,
    Presentation,
    Action,
    CoveringCategory,
    Bimodule,
}

/// Validates name resolution, reference kinds, and presentation-level
/// invariants without executing commands.
pub fn check_job(job: &JobFile) -> Result<(), JobError> {
    let field = job.field.to_field()?;
    let mut names: BTreeMap<String, Kind> = BTreeMap::new();
    // base category of each bimodule / covering, by name
    let mut bimodule_base: BTreeMap<String, String> = BTreeMap::new();
    let mut covering_base: BTreeMap<String, String> = BTreeMap::new();
    let mut action_category: BTreeMap<String, String> = BTreeMap::new();

    let declare = |names: &mut BTreeMap<String, Kind>, line: usize, name: &str, kind: Kind| {
        if names.insert(name.to_string(), kind).is_some() {
            return err(line, format!("duplicate name `{name}`"));
        }
        Ok(())
    };
    let lookup = |names: &BTreeMap<String, Kind>, line: usize, name: &str, kind: Kind| {
        match names.get(name) {
            None => err(line, format!("unknown identifier `{name}`")),
            Some(k) if *k == kind || (kind == Kind::Category && *k == Kind::CoveringCategory) => Ok(()),
            Some(k) => err(line, format!("`{name}` is a {k:?}, expected {kind:?}")),
        }
    };

    for st in &job.statements {
        match st {
            Statement::Category { name, def, line } => {
                declare(&mut names, *line, name, Kind::Category)?;
                // presentation-level validation
                build_presentation(def, field).map_err(|m| JobError { line: *line, message: m })?;
            }
            Statement::Group { name, def, line } => {
                match def {
                    GroupDef::Presentation { .. } => declare(&mut names, *line, name, Kind::Presentation)?,
                    _ => declare(&mut names, *line, name, Kind::Group)?,
                }
                if let GroupDef::Cyclic(0) = def {
                    return err(*line, "cyclic(0) is not a group");
                }
                if let GroupDef::Table { elements, rows } = def {
                    if rows.len() != elements.len() {
                        return err(*line, "group table must have one row per element");
                    }
                    for row in rows {
                        for e in row {
                            if !elements.contains(e) {
                                return err(*line, format!("table entry `{e}` is not an element"));
                            }
                        }
                    }
                }
                if let GroupDef::Presentation { generators, relators } = def {
                    for w in relators {
                        for (g, _) in w {
                            if !generators.contains(g) {
                                return err(*line, format!("relator uses unknown generator `{g}`"));
                            }
                        }
                    }
                }
            }
            Statement::Action { name, def, line } => {
                lookup(&names, *line, &def.group, Kind::Group)?;
                lookup(&names, *line, &def.category, Kind::Category)?;
                declare(&mut names, *line, name, Kind::Action)?;
                action_category.insert(name.clone(), def.category.clone());
            }
            Statement::Bimodule { name, expr, line } => {
                let base = match expr {
                    BimoduleExpr::Standard(c) => {
                        lookup(&names, *line, c, Kind::Category)?;
                        c.clone()
                    }
                    BimoduleExpr::Lift(cov, m) => {
                        lookup(&names, *line, cov, Kind::CoveringCategory)?;
                        lookup(&names, *line, m, Kind::Bimodule)?;
                        if bimodule_base.get(m) != Some(cov) {
                            return err(*line, format!("`{m}` does not live over the quotient `{cov}`"));
                        }
                        covering_base.get(cov).expect("recorded with the covering").clone()
                    }
                    BimoduleExpr::Dual(m) => {
                        lookup(&names, *line, m, Kind::Bimodule)?;
                        bimodule_base.get(m).expect("recorded with the bimodule").clone()
                    }
                };
                declare(&mut names, *line, name, Kind::Bimodule)?;
                bimodule_base.insert(name.clone(), base);
            }
            Statement::Run { command, line } => match command {
                Command::Quotient { action, name } => {
                    lookup(&names, *line, action, Kind::Action)?;
                    declare(&mut names, *line, name, Kind::CoveringCategory)?;
                    covering_base.insert(name.clone(), action_category[action].clone());
                }
                Command::Homology { category, bimodule, .. }
                | Command::Cohomology { category, bimodule, .. }
                | Command::VerifyDuality { category, bimodule, .. }
                | Command::VerifyAgreement { category, bimodule, .. } => {
                    lookup(&names, *line, category, Kind::Category)?;
                    lookup(&names, *line, bimodule, Kind::Bimodule)?;
                    if bimodule_base.get(bimodule).map(|s| s.as_str()) != Some(category.as_str()) {
                        return err(*line, format!("`{bimodule}` does not live over `{category}`"));
                    }
                }
                Command::Center { category } => lookup(&names, *line, category, Kind::Category)?,
                Command::ClPages { covering, bimodule, .. }
                | Command::VerifyMaschke { covering, bimodule, .. } => {
                    lookup(&names, *line, covering, Kind::CoveringCategory)?;
                    lookup(&names, *line, bimodule, Kind::Bimodule)?;
                    if bimodule_base.get(bimodule).map(|s| s.as_str()) != Some(covering.as_str()) {
                        return err(*line, format!("`{bimodule}` does not live over the quotient `{covering}`"));
                    }
                }
                Command::VerifyContraction { category, .. } => {
                    lookup(&names, *line, category, Kind::Category)?
                }
                Command::VerifyHomEmbed { covering, presentation }
                | Command::VerifyRankBound { covering, presentation } => {
                    lookup(&names, *line, covering, Kind::CoveringCategory)?;
                    lookup(&names, *line, presentation, Kind::Presentation)?;
                }
            },
        }
    }
    Ok(())
}

fn build_presentation(def: &CategoryDef, field: FieldSpec) -> Result<QuiverPresentation, String> {
    let arrows: Vec<Arrow> = def
        .arrows
        .iter()
        .map(|(n, s, t)| Arrow { name: n.clone(), source: s.clone(), target: t.clone() })
        .collect();
    let mut relations = Vec::new();
    for r in &def.relations {
        let mut terms = Vec::new();
        for (coef, path) in r {
            let s = coef.to_scalar(field).map_err(|e| e.message)?;
            terms.push((s, path.clone()));
        }
        relations.push(Relation { terms });
    }
    QuiverPresentation::new(def.objects.clone(), arrows, relations, def.nilpotence)
        .map_err(|e| e.to_string())
}

// ---------------------------------------------------------------------------
// Runner

struct Env {
    field: FieldSpec,
    categories: BTreeMap<String, Arc<crate::category::LinearCategory>>,
    presented: BTreeMap<String, PresentedCategory>,
    groups: BTreeMap<String, FiniteGroup>,
    presentations: BTreeMap<String, GroupPresentation>,
    actions: BTreeMap<String, GroupAction>,
    coverings: BTreeMap<String, Covering>,
    bimodules: BTreeMap<String, (String, Bimodule)>,
}

/// Executes a job; the returned report records one entry per command.
pub fn run_job(job: &JobFile) -> Result<Report, JobError> {
    check_job(job)?;
    let field = job.field.to_field()?;
    let mut env = Env {
        field,
        categories: BTreeMap::new(),
        presented: BTreeMap::new(),
        groups: BTreeMap::new(),
        presentations: BTreeMap::new(),
        actions: BTreeMap::new(),
        coverings: BTreeMap::new(),
        bimodules: BTreeMap::new(),
    };
    let mut commands = Vec::new();
    let mut all_passed = true;
    for st in &job.statements {
        match st {
            Statement::Category { name, def, line } => {
                let q = build_presentation(def, field).map_err(|m| JobError { line: *line, message: m })?;
                let pc = PresentedCategory::build(q, field)
                    .map_err(|e| JobError { line: *line, message: e.to_string() })?;
                env.categories.insert(name.clone(), pc.category().clone());
                env.presented.insert(name.clone(), pc);
            }
            Statement::Group { name, def, line } => match def {
                GroupDef::Cyclic(n) => {
                    env.groups.insert(name.clone(), FiniteGroup::cyclic(*n));
                }
                GroupDef::Table { elements, rows } => {
                    let mul: Vec<Vec<usize>> = rows
                        .iter()
                        .map(|row| {
                            row.iter()
                                .map(|e| elements.iter().position(|x| x == e).expect("checked"))
                                .collect()
                        })
                        .collect();
                    let g = FiniteGroup::new(elements.clone(), mul)
                        .map_err(|e| JobError { line: *line, message: e.to_string() })?;
                    env.groups.insert(name.clone(), g);
                }
                GroupDef::Presentation { generators, relators } => {
                    let words: Vec<Vec<(usize, i64)>> = relators
                        .iter()
                        .map(|w| {
                            w.iter()
                                .map(|(g, e)| {
                                    (generators.iter().position(|x| x == g).expect("checked"), *e)
                                })
                                .collect()
                        })
                        .collect();
                    let p = GroupPresentation::new(generators.clone(), words)
                        .map_err(|e| JobError { line: *line, message: e.to_string() })?;
                    env.presentations.insert(name.clone(), p);
                }
            },
            Statement::Action { name, def, line } => {
                let action = build_action(&env, def).map_err(|m| JobError { line: *line, message: m })?;
                env.actions.insert(name.clone(), action);
            }
            Statement::Bimodule { name, expr, line } => {
                let (base, m) = match expr {
                    BimoduleExpr::Standard(c) => {
                        (c.clone(), Bimodule::standard(env.categories[c].clone()))
                    }
                    BimoduleExpr::Lift(cov, mname) => {
                        let covering = &env.coverings[cov];
                        let (_, m) = &env.bimodules[mname];
                        let lifted = covering
                            .lift_bimodule(m)
                            .map_err(|e| JobError { line: *line, message: e.to_string() })?;
                        // the lift lives over the covering category
                        let base_name = env
                            .categories
                            .iter()
                            .find(|(_, c)| ***c == **covering.base())
                            .map(|(n, _)| n.clone())
                            .unwrap_or_else(|| format!("<base of {cov}>"));
                        (base_name, lifted)
                    }
                    BimoduleExpr::Dual(mname) => {
                        let (base, m) = &env.bimodules[mname];
                        (base.clone(), m.dual())
                    }
                };
                env.bimodules.insert(name.clone(), (base, m));
            }
            Statement::Run { command, line } => {
                let started = Instant::now();
                let outcome = execute_command(&mut env, command)
                    .map_err(|m| JobError { line: *line, message: m })?;
                if let CommandOutcome::Verification { passed, .. } = &outcome {
                    all_passed &= *passed;
                }
                commands.push(CommandReport {
                    command: command_text(command),
                    outcome,
                    elapsed_ms: started.elapsed().as_millis() as u64,
                });
            }
        }
    }
    Ok(Report {
        schema_version: crate::report::SCHEMA_VERSION,
        field: field.to_string(),
        commands,
        all_verifications_passed: all_passed,
    })
}

fn command_text(c: &Command) -> String {
    // reuse the canonical printer
    let job = JobFile {
        field: FieldDecl::Rationals,
        statements: vec![Statement::Run { command: c.clone(), line: 0 }],
    };
    print_job(&job).lines().last().unwrap_or_default().trim_start_matches("run ").to_string()
}

fn build_action(env: &Env, def: &ActionDef) -> Result<GroupAction, String> {
    let group = env.groups.get(&def.group).ok_or("unknown group")?.clone();
    let pc = env.presented.get(&def.category).ok_or("unknown category")?;
    let q = pc.presentation();
    let cat = pc.category().clone();
    let mut gens = Vec::new();
    for (elt, objects, arrows) in &def.generators {
        let e = group.element_index(elt).ok_or_else(|| format!("`{elt}` is not a group element"))?;
        // identity defaults for unmentioned vertices/arrows
        let mut vertex_map: Vec<usize> = (0..q.vertices.len()).collect();
        for (from, to) in objects {
            let f = q.vertex_index(from).ok_or_else(|| format!("unknown vertex `{from}`"))?;
            let t = q.vertex_index(to).ok_or_else(|| format!("unknown vertex `{to}`"))?;
            vertex_map[f] = t;
        }
        let mut arrow_map: Vec<(Scalar, usize)> =
            (0..q.arrows.len()).map(|i| (env.field.one(), i)).collect();
        for (from, coef, to) in arrows {
            let f = q.arrow_index(from).ok_or_else(|| format!("unknown arrow `{from}`"))?;
            let t = q.arrow_index(to).ok_or_else(|| format!("unknown arrow `{to}`"))?;
            let s = coef.to_scalar(env.field).map_err(|e| e.message)?;
            arrow_map[f] = (s, t);
        }
        let functor = pc.monomial_endofunctor(&vertex_map, &arrow_map).map_err(|e| e.to_string())?;
        gens.push((e, functor));
    }
    GroupAction::from_generators(group, cat, &gens).map_err(|e| e.to_string())
}

fn execute_command(env: &mut Env, command: &Command) -> Result<CommandOutcome, String> {
    match command {
        Command::Quotient { action, name } => {
            let act = env.actions[action].clone();
            let cov = Covering::quotient_category(act).map_err(|e| e.to_string())?;
            let quotient = cov.quotient().clone();
            let outcome = CommandOutcome::Quotient {
                objects: quotient.objects().to_vec(),
                hom_dims: quotient.hom_dims(),
                orbits: (0..cov.orbit_count())
                    .map(|u| {
                        cov.orbit_members(u)
                            .iter()
                            .map(|&x| cov.base().objects()[x].clone())
                            .collect()
                    })
                    .collect(),
            };
            env.categories.insert(name.clone(), quotient);
            env.coverings.insert(name.clone(), cov);
            Ok(outcome)
        }
        Command::Homology { category, bimodule, max_degree } => {
            let cat = env.categories[category].clone();
            let (_, m) = &env.bimodules[bimodule];
            let cx = hochschild::chain_complex(&cat, m, max_degree + 1);
            Ok(CommandOutcome::Dims { theory: "hh".into(), degrees: cx.homology_dims()[..=*max_degree].to_vec() })
        }
        Command::Cohomology { category, bimodule, max_degree } => {
            let cat = env.categories[category].clone();
            let (_, m) = &env.bimodules[bimodule];
            let cx = hochschild::cochain_complex(&cat, m, max_degree + 1);
            Ok(CommandOutcome::Dims { theory: "cohh".into(), degrees: cx.homology_dims()[..=*max_degree].to_vec() })
        }
        Command::Center { category } => {
            let cat = env.categories[category].clone();
            Ok(CommandOutcome::Center { dim: hochschild::center(&cat).dim })
        }
        Command::ClPages { covering, bimodule, p_max, q_max, page, filtration } => {
            let cov = &env.coverings[covering];
            let (_, m) = &env.bimodules[bimodule];
            let (dc, _) = spectral::cartan_leray_double_complex(cov, m, *p_max, *q_max)
                .map_err(|e| e.to_string())?;
            let f = match filtration {
                FiltrationArg::Columns => Filtration::ByColumns,
                FiltrationArg::Rows => Filtration::ByRows,
            };
            let ss = spectral::spectral_pages(&dc, f, *page);
            let pg = ss.page(*page);
            let entries = pg
                .entries
                .iter()
                .flatten()
                .map(|e| PageCell { p: e.p, q: e.q, dim: e.dim, reliable: e.reliable })
                .collect();
            let abutment = spectral::abutment_dims(&dc);
            Ok(CommandOutcome::Pages {
                page: *page,
                filtration: match filtration {
                    FiltrationArg::Columns => "columns".into(),
                    FiltrationArg::Rows => "rows".into(),
                },
                entries,
                stabilized_at: ss.stabilized_at,
                abutment,
            })
        }
        Command::VerifyMaschke { covering, bimodule, n_max } => {
            let cov = &env.coverings[covering];
            let (_, m) = &env.bimodules[bimodule];
            let report = spectral::maschke_compare(cov, m, *n_max).map_err(|e| e.to_string())?;
            let details = report
                .degrees
                .iter()
                .map(|d| {
                    format!(
                        "n={}: H^n(B,M)={} vs invariants={}; H_n(B,M)={} vs coinvariants={}",
                        d.n,
                        d.quotient_cohomology,
                        d.invariants_of_cover_cohomology,
                        d.quotient_homology,
                        d.coinvariants_of_cover_homology
                    )
                })
                .collect();
            Ok(CommandOutcome::Verification { name: "maschke".into(), passed: report.holds, details })
        }
        Command::VerifyDuality { category, bimodule, n_max } => {
            let cat = env.categories[category].clone();
            let (_, m) = &env.bimodules[bimodule];
            let dual = m.dual();
            let hom = hochschild::chain_complex(&cat, m, n_max + 1).homology_dims();
            let coh = hochschild::cochain_complex(&cat, &dual, n_max + 1).homology_dims();
            let mut passed = true;
            let mut details = Vec::new();
            for n in 0..=*n_max {
                passed &= hom[n] == coh[n];
                details.push(format!("n={n}: dim H_n(B,Y)={} vs dim H^n(B,DY)={}", hom[n], coh[n]));
            }
            Ok(CommandOutcome::Verification { name: "duality".into(), passed, details })
        }
        Command::VerifyAgreement { category, bimodule, max_degree } => {
            let cat = env.categories[category].clone();
            let (_, m) = &env.bimodules[bimodule];
            let a = crate::category::FlatAlgebra::from_category(&cat);
            let category_side = hochschild::cochain_complex(&cat, m, max_degree + 1).homology_dims();
            let oracle = hochschild::algebra_cochain_complex(&a, m, max_degree + 1, 5_000_000)
                .map_err(|e| e.to_string())?
                .homology_dims();
            let mut passed = true;
            let mut details = Vec::new();
            for n in 0..=*max_degree {
                passed &= category_side[n] == oracle[n];
                details.push(format!("n={n}: category={} vs algebra={}", category_side[n], oracle[n]));
            }
            Ok(CommandOutcome::Verification { name: "agreement".into(), passed, details })
        }
        Command::VerifyContraction { category, objects, max_degree } => {
            let cat = env.categories[category].clone();
            let idx: Result<Vec<usize>, String> = objects
                .iter()
                .map(|o| cat.object_index(o).ok_or_else(|| format!("unknown object `{o}`")))
                .collect();
            let idx = idx?;
            let contracted = Arc::new(cat.contract(&idx).map_err(|e| e.to_string())?);
            // matching expansion: the original identities inside the lump
            let lump = contracted.object_count() - 1;
            let mut idems = Vec::new();
            {
                // entries of the lumped End space follow (y, x, basis) order
                let mut sorted = idx.clone();
                sorted.sort_unstable();
                for &x in &sorted {
                    let mut v = vec![env.field.zero(); contracted.dim_hom(lump, lump)];
                    let mut pos = 0usize;
                    for &oy in &sorted {
                        for &ox in &sorted {
                            for j in 0..cat.dim_hom(oy, ox) {
                                if oy == x && ox == x {
                                    v[pos] = cat.identity(x)[j].clone();
                                }
                                pos += 1;
                            }
                        }
                    }
                    idems.push(v);
                }
            }
            let expanded = Arc::new(contracted.expand(lump, &idems).map_err(|e| e.to_string())?);
            let orig = hochschild::cochain_complex(&cat, &Bimodule::standard(cat.clone()), max_degree + 1)
                .homology_dims();
            let contr = hochschild::cochain_complex(
                &contracted,
                &Bimodule::standard(contracted.clone()),
                max_degree + 1,
            )
            .homology_dims();
            let expd = hochschild::cochain_complex(&expanded, &Bimodule::standard(expanded.clone()), max_degree + 1)
                .homology_dims();
            let mut passed = true;
            let mut details = Vec::new();
            for n in 0..=*max_degree {
                passed &= orig[n] == contr[n] && orig[n] == expd[n];
                details.push(format!(
                    "n={n}: original={} contracted={} re-expanded={}",
                    orig[n], contr[n], expd[n]
                ));
            }
            Ok(CommandOutcome::Verification { name: "contraction".into(), passed, details })
        }
        Command::VerifyHomEmbed { covering, presentation } => {
            let cov = &env.coverings[covering];
            let pres = &env.presentations[presentation];
            let report = spectral::verify_hom_embedding(cov, pres).map_err(|e| e.to_string())?;
            let details = vec![
                format!("dim Hom(G,k+) = {}", report.hom_dim),
                format!("dim H^1(B,B) = {}", report.h1_dim),
                format!(
                    "H^0 splitting: dim={} constant-in-H0={} nilpotent-part={} splits={}",
                    report.splitting.h0_dim,
                    report.splitting.constant_tuple_in_h0,
                    report.splitting.nilpotent_intersection_dim,
                    report.splitting.splits
                ),
            ];
            let passed = report.bound_holds && report.splitting.splits;
            Ok(CommandOutcome::Verification { name: "hom-embed".into(), passed, details })
        }
        Command::VerifyRankBound { covering, presentation } => {
            let cov = &env.coverings[covering];
            let pres = &env.presentations[presentation];
            let report = spectral::verify_rank_bound(cov, pres).map_err(|e| e.to_string())?;
            let details = vec![format!("rank G = {} <= dim H^1(B,B) = {}", report.rank, report.h1_dim)];
            Ok(CommandOutcome::Verification { name: "rank-bound".into(), passed: report.holds, details })
        }
    }
}
