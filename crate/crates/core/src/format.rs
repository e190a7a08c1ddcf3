//! The presentation file format and the expression syntax of every kind.
//!
//! ```text
//! # comment
//! kind assoc            # assoc | dialgebra | module | ac
//! gens x y              # smallest first
//! mgens y1 y2           # module kind only
//! bracket e2 e2 = e1    # dialgebra kind only: Leibniz structure constants
//! rel y*x - x*y
//! ```
//!
//! Monomials: `x*y` (`1` is the empty word), `x*@y*z` (center marked),
//! `x*x*[y1]`, `((x2 x1) x1)`. Coefficients are `p/q`, joined by `*`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::alphabet::Alphabet;
use crate::anticomm::{ac_display, ac_mul_poly, AcPolynomial, AcSystem, AcWord};
use crate::dialgebra::{
    di_display, leibniz_enveloping, DiPolynomial, DiSystem, Diword, LeibnizAlgebra,
};
use crate::error::{Error, Result};
use crate::freemodule::{module_display, ModuleElement, ModuleSystem, ModuleWord};
use crate::lincomb::{LinComb, Scalar};
use crate::poly::{self, Polynomial};
use crate::rewrite::RewriteSystem;
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Assoc,
    Dialgebra,
    Module,
    Ac,
}

impl Kind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::Assoc => "assoc",
            Kind::Dialgebra => "dialgebra",
            Kind::Module => "module",
            Kind::Ac => "ac",
        }
    }

    fn from_name(s: &str) -> Option<Kind> {
        Some(match s {
            "assoc" => Kind::Assoc,
            "dialgebra" => Kind::Dialgebra,
            "module" => Kind::Module,
            "ac" => Kind::Ac,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relations {
    Assoc(Vec<Polynomial>),
    Dialgebra(Vec<DiPolynomial>),
    Module(Vec<ModuleElement>),
    Ac(Vec<AcPolynomial>),
}

impl Relations {
    fn empty(kind: Kind) -> Self {
        match kind {
            Kind::Assoc => Relations::Assoc(Vec::new()),
            Kind::Dialgebra => Relations::Dialgebra(Vec::new()),
            Kind::Module => Relations::Module(Vec::new()),
            Kind::Ac => Relations::Ac(Vec::new()),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Relations::Assoc(v) => v.len(),
            Relations::Dialgebra(v) => v.len(),
            Relations::Module(v) => v.len(),
            Relations::Ac(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A parsed presentation file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationFile {
    pub kind: Kind,
    pub gens: Alphabet,
    /// Module generators (module kind only).
    pub mgens: Option<Alphabet>,
    /// Nonzero Leibniz brackets `{eᵢ, eⱼ}` as coordinate vectors (dialgebra kind only).
    pub brackets: Vec<((usize, usize), Vec<Scalar>)>,
    pub relations: Relations,
}

impl PresentationFile {
    pub fn rewrite_system(&self) -> Result<RewriteSystem> {
        match &self.relations {
            Relations::Assoc(rels) => {
                let nonzero = rels.iter().filter(|p| !p.is_zero()).cloned().collect();
                RewriteSystem::new(self.gens.clone(), nonzero)
            }
            _ => Err(self.wrong_kind(Kind::Assoc)),
        }
    }

    /// The Leibniz algebra declared by `bracket` lines, if any.
    pub fn leibniz(&self) -> Result<Option<LeibnizAlgebra>> {
        if self.brackets.is_empty() {
            return Ok(None);
        }
        LeibnizAlgebra::new(self.gens.len(), self.brackets.iter().cloned()).map(Some)
    }

    /// Explicit relations, plus the enveloping relations when brackets are given.
    pub fn di_system(&self) -> Result<DiSystem> {
        let Relations::Dialgebra(rels) = &self.relations else {
            return Err(self.wrong_kind(Kind::Dialgebra));
        };
        let mut all: Vec<DiPolynomial> = Vec::new();
        if let Some(l) = self.leibniz()? {
            if l.i0().is_none() {
                return Err(Error::InvalidAlgebra(
                    "the span of symmetric brackets is not spanned by generators; list an adapted basis".into(),
                ));
            }
            all.extend(leibniz_enveloping(&l)?.elements().iter().cloned());
        }
        all.extend(rels.iter().filter(|p| !p.is_zero()).cloned());
        DiSystem::new(self.gens.clone(), all)
    }

    pub fn module_system(&self) -> Result<ModuleSystem> {
        let Relations::Module(rels) = &self.relations else {
            return Err(self.wrong_kind(Kind::Module));
        };
        let y = self.mgens.clone().expect("module kind has mgens");
        let nonzero = rels.iter().filter(|p| !p.is_zero()).cloned().collect();
        ModuleSystem::new(self.gens.clone(), y, nonzero)
    }

    pub fn ac_system(&self) -> Result<AcSystem> {
        let Relations::Ac(rels) = &self.relations else {
            return Err(self.wrong_kind(Kind::Ac));
        };
        let nonzero = rels.iter().filter(|p| !p.is_zero()).cloned().collect();
        AcSystem::new(self.gens.clone(), nonzero)
    }

    fn wrong_kind(&self, wanted: Kind) -> Error {
        Error::InvalidAlgebra(format!(
            "expected a {} presentation, found {}",
            wanted.as_str(),
            self.kind.as_str()
        ))
    }

    /// Parses one element of this presentation's kind.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let mut cur = Cursor::new(text, 1, 1);
        let ctx = Context {
            kind: self.kind,
            gens: &self.gens,
            mgens: self.mgens.as_ref(),
        };
        let e = ctx.element(&mut cur)?;
        cur.end()?;
        Ok(e)
    }
}

/// One parsed element of any kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Assoc(Polynomial),
    Dialgebra(DiPolynomial),
    Module(ModuleElement),
    Ac(AcPolynomial),
}

/// Canonical rendering of an element over the given generators.
pub fn display_element(e: &Element, gens: &Alphabet, mgens: Option<&Alphabet>) -> String {
    match e {
        Element::Assoc(p) => poly::display(p, gens).to_string(),
        Element::Dialgebra(p) => di_display(p, gens),
        Element::Module(p) => module_display(p, gens, mgens.expect("module generators")),
        Element::Ac(p) => ac_display(p, gens),
    }
}

impl fmt::Display for PresentationFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "kind {}", self.kind.as_str())?;
        writeln!(f, "gens {}", self.gens.names().join(" "))?;
        if let Some(m) = &self.mgens {
            writeln!(f, "mgens {}", m.names().join(" "))?;
        }
        for ((i, j), v) in &self.brackets {
            let rhs = DiPolynomial::from_terms(
                v.iter()
                    .enumerate()
                    .map(|(k, c)| (Diword::letter(k as u32), c.clone())),
            );
            writeln!(
                f,
                "bracket {} {} = {}",
                self.gens.name(*i),
                self.gens.name(*j),
                di_display(&rhs, &self.gens)
            )?;
        }
        let lines: Vec<String> = match &self.relations {
            Relations::Assoc(v) => v
                .iter()
                .map(|p| poly::display(p, &self.gens).to_string())
                .collect(),
            Relations::Dialgebra(v) => v.iter().map(|p| di_display(p, &self.gens)).collect(),
            Relations::Module(v) => v
                .iter()
                .map(|p| {
                    module_display(
                        p,
                        &self.gens,
                        self.mgens.as_ref().expect("module generators"),
                    )
                })
                .collect(),
            Relations::Ac(v) => v.iter().map(|p| ac_display(p, &self.gens)).collect(),
        };
        for l in lines {
            writeln!(f, "rel {l}")?;
        }
        Ok(())
    }
}

pub fn print(p: &PresentationFile) -> String {
    p.to_string()
}

pub fn parse(text: &str) -> Result<PresentationFile> {
    let mut kind: Option<(Kind, usize)> = None;
    let mut gens: Option<Alphabet> = None;
    let mut mgens: Option<Alphabet> = None;
    let mut brackets: Vec<((usize, usize), Vec<Scalar>)> = Vec::new();
    let mut rel_lines: Vec<(usize, usize, &str)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let start_col = content[..content.len() - trimmed.len()].chars().count() + 1;
        let (keyword, rest) = trimmed
            .split_once(char::is_whitespace)
            .unwrap_or((trimmed, ""));
        let rest_col = start_col + trimmed[..trimmed.len() - rest.len()].chars().count();
        let err = |col: usize, msg: String| Error::parse(line_no, col, msg);
        match keyword {
            "kind" => {
                if kind.is_some() {
                    return Err(err(start_col, "duplicate kind".into()));
                }
                if gens.is_some() {
                    return Err(err(start_col, "kind must precede gens".into()));
                }
                let name = rest.trim();
                let k = Kind::from_name(name)
                    .ok_or_else(|| err(rest_col, format!("unknown kind `{name}`")))?;
                kind = Some((k, line_no));
            }
            "gens" | "mgens" => {
                let names: Vec<&str> = rest.split_whitespace().collect();
                let mut cur = Cursor::new(rest, line_no, rest_col);
                for _ in &names {
                    cur.skip_ws();
                    let col = cur.col();
                    cur.name()
                        .ok_or_else(|| err(col, "expected a generator name".into()))?;
                }
                cur.end()?;
                let alpha = Alphabet::new(names.iter().copied())
                    .map_err(|e| err(rest_col, e.to_string()))?;
                let slot = if keyword == "gens" {
                    &mut gens
                } else {
                    &mut mgens
                };
                if slot.is_some() {
                    return Err(err(start_col, format!("duplicate {keyword}")));
                }
                if keyword == "mgens" && kind.map(|k| k.0) != Some(Kind::Module) {
                    return Err(err(start_col, "mgens requires kind module".into()));
                }
                *slot = Some(alpha);
            }
            "bracket" => {
                if kind.map(|k| k.0) != Some(Kind::Dialgebra) {
                    return Err(err(start_col, "bracket requires kind dialgebra".into()));
                }
                let g = gens
                    .as_ref()
                    .ok_or_else(|| err(start_col, "gens must precede bracket".into()))?;
                let mut cur = Cursor::new(rest, line_no, rest_col);
                let i = cur.generator(g)?;
                let j = cur.generator(g)?;
                cur.skip_ws();
                cur.expect('=')?;
                let ctx = Context {
                    kind: Kind::Dialgebra,
                    gens: g,
                    mgens: None,
                };
                let col = {
                    cur.skip_ws();
                    cur.col()
                };
                let Element::Dialgebra(rhs) = ctx.element(&mut cur)? else {
                    unreachable!()
                };
                cur.end()?;
                let mut v = vec![Scalar::zero(); g.len()];
                for (d, c) in rhs.terms() {
                    if d.len() != 1 {
                        return Err(err(
                            col,
                            "a bracket value is a combination of generators".into(),
                        ));
                    }
                    v[d.letters().letters()[0] as usize] = c.clone();
                }
                if brackets.iter().any(|(k, _)| *k == (i, j)) {
                    return Err(err(start_col, "duplicate bracket".into()));
                }
                brackets.push(((i, j), v));
            }
            "rel" => rel_lines.push((line_no, rest_col, rest)),
            other => return Err(err(start_col, format!("unknown directive `{other}`"))),
        }
    }
    let kind = kind.map_or(Kind::Assoc, |k| k.0);
    let gens = gens.ok_or_else(|| Error::parse(1, 1, "missing gens line"))?;
    if kind == Kind::Module && mgens.is_none() {
        return Err(Error::parse(1, 1, "module kind requires an mgens line"));
    }
    let ctx = Context {
        kind,
        gens: &gens,
        mgens: mgens.as_ref(),
    };
    let mut relations = Relations::empty(kind);
    for (line, col, text) in rel_lines {
        let mut cur = Cursor::new(text, line, col);
        let e = ctx.element(&mut cur)?;
        cur.end()?;
        match (&mut relations, e) {
            (Relations::Assoc(v), Element::Assoc(p)) => v.push(p),
            (Relations::Dialgebra(v), Element::Dialgebra(p)) => v.push(p),
            (Relations::Module(v), Element::Module(p)) => v.push(p),
            (Relations::Ac(v), Element::Ac(p)) => v.push(p),
            _ => unreachable!("context fixes the kind"),
        }
    }
    brackets.sort_by_key(|(k, _)| *k);
    brackets.retain(|(_, v)| v.iter().any(|c| !c.is_zero()));
    Ok(PresentationFile {
        kind,
        gens,
        mgens,
        brackets,
        relations,
    })
}

/// Parses an associative polynomial over `gens`.
pub fn parse_polynomial(text: &str, gens: &Alphabet) -> Result<Polynomial> {
    let ctx = Context {
        kind: Kind::Assoc,
        gens,
        mgens: None,
    };
    let mut cur = Cursor::new(text, 1, 1);
    let Element::Assoc(p) = ctx.element(&mut cur)? else {
        unreachable!()
    };
    cur.end()?;
    Ok(p)
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    base_col: usize,
}

impl Cursor {
    fn new(text: &str, line: usize, base_col: usize) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
            line,
            base_col,
        }
    }

    fn col(&self) -> usize {
        self.base_col + self.pos
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.col(), msg)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{c}`")))
        }
    }

    fn unexpected(&self, wanted: &str) -> Error {
        match self.peek() {
            Some(c) => self.err(format!("expected {wanted}, found `{c}`")),
            None => self.err(format!("expected {wanted}, found end of line")),
        }
    }

    fn end(&mut self) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
        }
    }

    fn name(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        if !self.peek().is_some_and(|c| c.is_alphabetic() || c == '_') {
            return None;
        }
        while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        Some(self.chars[start..self.pos].iter().collect())
    }

    fn generator(&mut self, alphabet: &Alphabet) -> Result<usize> {
        self.skip_ws();
        let col = self.col();
        let name = self.name().ok_or_else(|| self.unexpected("a generator"))?;
        alphabet
            .rank(&name)
            .ok_or_else(|| Error::parse(self.line, col, format!("unknown generator `{name}`")))
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            let s: String = self.chars[start..self.pos].iter().collect();
            s.parse().expect("digits")
        })
    }

    fn coefficient(&mut self) -> Result<Option<Scalar>> {
        let Some(n) = self.integer() else {
            return Ok(None);
        };
        if self.eat('/') {
            self.skip_ws();
            let col = self.col();
            let d = self
                .integer()
                .ok_or_else(|| self.unexpected("a denominator"))?;
            if d.is_zero() {
                return Err(Error::parse(self.line, col, "zero denominator"));
            }
            return Ok(Some(Scalar::new(n, d)));
        }
        Ok(Some(Scalar::from_integer(n)))
    }
}

struct Context<'a> {
    kind: Kind,
    gens: &'a Alphabet,
    mgens: Option<&'a Alphabet>,
}

impl Context<'_> {
    fn element(&self, cur: &mut Cursor) -> Result<Element> {
        Ok(match self.kind {
            Kind::Assoc => {
                Element::Assoc(self.sum(cur, Some(Word::empty()), |c| self.assoc_monomial(c))?)
            }
            Kind::Dialgebra => Element::Dialgebra(self.sum(cur, None, |c| self.di_monomial(c))?),
            Kind::Module => Element::Module(self.sum(cur, None, |c| self.module_monomial(c))?),
            Kind::Ac => Element::Ac(self.sum(cur, None, |c| self.ac_monomial(c))?),
        })
    }

    /// `[-] term ((+|-) term)*` where a term is `coef`, `coef*monomial` or
    /// `monomial`. A bare coefficient needs a unit monomial unless it is zero.
    fn sum<M: Ord + Clone>(
        &self,
        cur: &mut Cursor,
        unit: Option<M>,
        mut monomial: impl FnMut(&mut Cursor) -> Result<LinComb<M>>,
    ) -> Result<LinComb<M>> {
        let mut out = LinComb::zero();
        let mut negative = cur.eat('-');
        if !negative {
            cur.eat('+');
        }
        loop {
            cur.skip_ws();
            let col = cur.col();
            let coef = cur.coefficient()?;
            let term = match coef {
                Some(c) if cur.eat('*') => monomial(cur)?.scale(&c),
                Some(c) if c.is_zero() => LinComb::zero(),
                Some(c) => match &unit {
                    Some(u) => LinComb::term(c, u.clone()),
                    None => {
                        return Err(Error::parse(
                            cur.line,
                            col,
                            "a bare coefficient is not an element of this kind",
                        ))
                    }
                },
                None => monomial(cur)?,
            };
            if negative {
                out = &out - &term;
            } else {
                out = &out + &term;
            }
            if cur.eat('+') {
                negative = false;
            } else if cur.eat('-') {
                negative = true;
            } else {
                return Ok(out);
            }
        }
    }

    fn assoc_monomial(&self, cur: &mut Cursor) -> Result<Polynomial> {
        cur.skip_ws();
        if cur.peek() == Some('1') {
            cur.pos += 1;
            return Ok(Polynomial::monomial(Word::empty()));
        }
        let mut letters = vec![cur.generator(self.gens)? as u32];
        while cur.eat('*') {
            letters.push(cur.generator(self.gens)? as u32);
        }
        Ok(Polynomial::monomial(Word::new(letters)))
    }

    fn di_monomial(&self, cur: &mut Cursor) -> Result<DiPolynomial> {
        cur.skip_ws();
        let start = cur.col();
        let mut letters = Vec::new();
        let mut center = None;
        loop {
            cur.skip_ws();
            if cur.peek() == Some('@') {
                if center.is_some() {
                    return Err(cur.err("second center marker"));
                }
                cur.pos += 1;
                center = Some(letters.len());
            }
            letters.push(cur.generator(self.gens)? as u32);
            if !cur.eat('*') {
                break;
            }
        }
        let center = match center {
            Some(c) => c,
            None if letters.len() == 1 => 0,
            None => return Err(Error::parse(cur.line, start, "missing center marker `@`")),
        };
        Ok(DiPolynomial::monomial(Diword::new(
            Word::new(letters),
            center,
        )?))
    }

    fn module_monomial(&self, cur: &mut Cursor) -> Result<ModuleElement> {
        let mgens = self.mgens.expect("module kind has mgens");
        let mut u = Vec::new();
        loop {
            if cur.eat('[') {
                let y = cur.generator(mgens)? as u32;
                cur.expect(']')?;
                return Ok(ModuleElement::monomial(ModuleWord::new(Word::new(u), y)));
            }
            u.push(cur.generator(self.gens)? as u32);
            if !cur.eat('*') {
                return Err(cur.unexpected("`*[generator]`"));
            }
        }
    }

    /// A parenthesized tree, evaluated with the signed product.
    fn ac_monomial(&self, cur: &mut Cursor) -> Result<AcPolynomial> {
        if cur.eat('(') {
            let l = self.ac_monomial(cur)?;
            let r = self.ac_monomial(cur)?;
            cur.expect(')')?;
            Ok(ac_mul_poly(&l, &r))
        } else {
            let x = cur.generator(self.gens)? as u32;
            Ok(AcPolynomial::monomial(AcWord::leaf(x)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::{ratio, scalar};

    fn parse_err(text: &str) -> (usize, usize) {
        match parse(text) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn tensor_style_file() {
        let p = parse("kind assoc\ngens x y\nrel y*x - x*y\n").unwrap();
        assert_eq!(p.kind, Kind::Assoc);
        let s = p.rewrite_system().unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(
            poly::display(&s.elements()[0], &p.gens).to_string(),
            "y*x - x*y"
        );
    }

    #[test]
    fn rational_coefficients() {
        let p = parse("gens x\nrel x*x - 3/2*x\n").unwrap();
        let Relations::Assoc(rels) = &p.relations else {
            panic!()
        };
        let x = Word::letter(0);
        assert_eq!(rels[0].coefficient(&x), Some(&ratio(-3, 2)));
        assert_eq!(rels[0].coefficient(&x.concat(&x)), Some(&scalar(1)));
    }

    #[test]
    fn error_positions() {
        assert_eq!(parse_err("gens x y\nrel x**y"), (2, 7));
        assert_eq!(parse_err("gens x y\nrel x*z"), (2, 7));
        assert_eq!(parse_err("kind assoc\nkind ac\ngens x"), (2, 1));
        assert_eq!(parse_err("gens x\n  frob"), (2, 3));
        assert_eq!(parse_err("gens x\nrel 1/0*x"), (2, 7));
        assert_eq!(parse_err("kind dialgebra\ngens x y\nrel x*y"), (3, 5));
        assert_eq!(parse_err("kind dialgebra\ngens x y\nrel @x*@y"), (3, 8));
        assert_eq!(parse_err("kind module\ngens x\nmgens y\nrel x*x"), (4, 8));
    }

    #[test]
    fn comments_and_constants() {
        let p = parse("# header\ngens x # trailing\nrel x*x - 2 # two\nrel 0\n").unwrap();
        let Relations::Assoc(rels) = &p.relations else {
            panic!()
        };
        assert_eq!(rels[0].coefficient(&Word::empty()), Some(&scalar(-2)));
        assert!(rels[1].is_zero());
        assert_eq!(p.rewrite_system().unwrap().len(), 1);
    }

    #[test]
    fn every_kind_round_trips() {
        let files = [
            "kind assoc\ngens x y\nrel y*x - x*y\nrel x*x - 3/2*x + 2\n",
            "kind dialgebra\ngens e1 e2\nbracket e2 e2 = e1\nrel e2*@e1 - @e1*e2 + 1/3*e1\n",
            "kind module\ngens x\nmgens y1 y2\nrel x*x*[y1] - x*[y2]\nrel [y2] - 2*[y1]\n",
            "kind ac\ngens x1 x2 x3\nrel ((x3 x2) x1) - ((x3 x1) x2) + ((x2 x1) x3)\n",
        ];
        for text in files {
            let p = parse(text).unwrap();
            assert_eq!(print(&p), text);
            assert_eq!(parse(&print(&p)).unwrap(), p);
        }
    }

    #[test]
    fn ac_trees_are_evaluated() {
        let p = parse("kind ac\ngens x1 x2\nrel (x1 x2) + (x1 x1)\n").unwrap();
        let Relations::Ac(rels) = &p.relations else {
            panic!()
        };
        assert_eq!(ac_display(&rels[0], &p.gens), "-(x2 x1)");
        assert_eq!(p.ac_system().unwrap().elements()[0].len(), 1);
    }

    #[test]
    fn leibniz_file_builds_enveloping_relations() {
        let p = parse("kind dialgebra\ngens e1 e2\nbracket e2 e2 = e1\n").unwrap();
        assert_eq!(p.di_system().unwrap().len(), 12);
    }

    #[test]
    fn elements_parse_against_a_presentation() {
        let p = parse("kind module\ngens x\nmgens y\n").unwrap();
        let e = p.parse_element("x*[y] - [y]").unwrap();
        assert_eq!(
            display_element(&e, &p.gens, p.mgens.as_ref()),
            "x*[y] - [y]"
        );
        assert!(p.parse_element("x*").is_err());
    }
}
