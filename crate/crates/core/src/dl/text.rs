//! Plain-text notation for concepts, axioms and knowledge bases.
//!
//! ```text
//! PARENT == E Parent-of.SOMEONE     # equivalence, stored as two inclusions
//! CAT => ANIMAL                     # inclusion
//! c1 : CAT & !DOG                   # concept assertion
//! (ct1,j1) : Buyer                  # role assertion
//! (s1,a) : Father-of^-              # stored as (a,s1) : Father-of
//! ```
//!
//! `!` binds tighter than `&`, which binds tighter than `|`. `E R.C` and
//! `A R.C` take a single unary filler, so `E R.C & D` is a conjunction.
//! `Top` and `Bottom` are keywords; concept names are upper-case.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Assertion, ConceptExpr, ConceptName, Gci, Individual, KnowledgeBase, RoleExpr, RoleName};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

pub fn print_role(r: &RoleExpr) -> String {
    match r {
        RoleExpr::Atomic(n) => n.to_string(),
        RoleExpr::Inverse(n) => format!("{n}^-"),
    }
}

pub fn print_concept(c: &ConceptExpr) -> String {
    let mut out = String::new();
    write_concept(&mut out, c, 0);
    out
}

// Precedence: 0 = disjunction, 1 = conjunction, 2 = unary.
fn write_concept(out: &mut String, c: &ConceptExpr, ctx: u8) {
    match c {
        ConceptExpr::Top => out.push_str("Top"),
        ConceptExpr::Bottom => out.push_str("Bottom"),
        ConceptExpr::Atomic(n) => out.push_str(n.as_str()),
        ConceptExpr::Not(inner) => {
            out.push('!');
            write_concept(out, inner, 2);
        }
        ConceptExpr::Exists(r, f) | ConceptExpr::Forall(r, f) => {
            out.push_str(if matches!(c, ConceptExpr::Exists(..)) { "E " } else { "A " });
            out.push_str(&print_role(r));
            out.push('.');
            write_concept(out, f, 2);
        }
        ConceptExpr::And(ms) | ConceptExpr::Or(ms) => {
            let (level, sep) = match c {
                ConceptExpr::And(_) => (1, " & "),
                _ => (0, " | "),
            };
            if ctx > level {
                out.push('(');
            }
            for (i, m) in ms.iter().enumerate() {
                if i > 0 {
                    out.push_str(sep);
                }
                write_concept(out, m, level + 1);
            }
            if ctx > level {
                out.push(')');
            }
        }
    }
}

pub fn print_gci(g: &Gci) -> String {
    format!("{} => {}", print_concept(&g.lhs), print_concept(&g.rhs))
}

pub fn print_assertion(a: &Assertion) -> String {
    match a {
        Assertion::ConceptAssert { ind, concept } => format!("{ind} : {}", print_concept(concept)),
        Assertion::RoleAssert { src, tgt, role } => format!("({src},{tgt}) : {role}"),
    }
}

/// Inclusions first, then assertions, one per line.
pub fn print_kb(kb: &KnowledgeBase) -> String {
    let mut out = String::new();
    for g in &kb.tbox {
        let _ = writeln!(out, "{}", print_gci(g));
    }
    for a in &kb.abox {
        let _ = writeln!(out, "{}", print_assertion(a));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Bang,
    Amp,
    Pipe,
    Dot,
    LParen,
    RParen,
    Comma,
    Colon,
    Implies,
    Equiv,
    Inv,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Bang => "`!`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Dot => "`.`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Implies => "`=>`".into(),
            Tok::Equiv => "`==`".into(),
            Tok::Inv => "`^-`".into(),
        }
    }
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '-'
}

fn lex(src: &str, line: usize) -> Result<Vec<(usize, Tok)>, SyntaxError> {
    let mut toks = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    let err = |col: usize, message: String| SyntaxError {
        line,
        column: col + 1,
        message,
    };
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '#' => break,
            '!' => Tok::Bang,
            '&' => Tok::Amp,
            '|' => Tok::Pipe,
            '.' => Tok::Dot,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            ':' => Tok::Colon,
            '=' if chars.get(i + 1) == Some(&'>') => {
                i += 1;
                Tok::Implies
            }
            '=' if chars.get(i + 1) == Some(&'=') => {
                i += 1;
                Tok::Equiv
            }
            '^' if chars.get(i + 1) == Some(&'-') => {
                i += 1;
                Tok::Inv
            }
            c if is_ident_char(c) && c != '-' => {
                while i + 1 < chars.len() && is_ident_char(chars[i + 1]) {
                    i += 1;
                }
                Tok::Ident(chars[start..=i].iter().collect())
            }
            other => return Err(err(i, format!("unexpected character `{other}`"))),
        };
        toks.push((start, tok));
        i += 1;
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    line: usize,
    end: usize,
}

impl Parser {
    fn new(src: &str, line: usize) -> Result<Self, SyntaxError> {
        Ok(Parser {
            toks: lex(src, line)?,
            pos: 0,
            line,
            end: src.chars().count(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|(_, t)| t)
    }

    fn error(&self, expected: &str) -> SyntaxError {
        let (column, found) = match self.toks.get(self.pos) {
            Some((col, t)) => (*col, t.describe()),
            None => (self.end, "end of input".to_string()),
        };
        SyntaxError {
            line: self.line,
            column: column + 1,
            message: format!("expected {expected}, found {found}"),
        }
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok) -> Result<(), SyntaxError> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(self.error(&t.describe()))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, SyntaxError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.error(what)),
        }
    }

    fn finish(&self) -> Result<(), SyntaxError> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }

    fn role(&mut self) -> Result<RoleExpr, SyntaxError> {
        let name = RoleName::new(&self.ident("a role name")?);
        Ok(if self.eat(&Tok::Inv) {
            RoleExpr::Inverse(name)
        } else {
            RoleExpr::Atomic(name)
        })
    }

    fn concept(&mut self) -> Result<ConceptExpr, SyntaxError> {
        let mut members = vec![self.conjunction()?];
        while self.eat(&Tok::Pipe) {
            members.push(self.conjunction()?);
        }
        Ok(if members.len() == 1 {
            members.pop().unwrap()
        } else {
            ConceptExpr::or(members)
        })
    }

    fn conjunction(&mut self) -> Result<ConceptExpr, SyntaxError> {
        let mut members = vec![self.unary()?];
        while self.eat(&Tok::Amp) {
            members.push(self.unary()?);
        }
        Ok(if members.len() == 1 {
            members.pop().unwrap()
        } else {
            ConceptExpr::and(members)
        })
    }

    fn starts_quantifier(&self) -> bool {
        matches!(self.peek(), Some(Tok::Ident(q)) if q == "E" || q == "A")
            && matches!(self.peek_at(1), Some(Tok::Ident(_)))
            && matches!(self.peek_at(2), Some(Tok::Dot) | Some(Tok::Inv))
    }

    fn unary(&mut self) -> Result<ConceptExpr, SyntaxError> {
        if self.eat(&Tok::Bang) {
            return Ok(ConceptExpr::not(self.unary()?));
        }
        if self.eat(&Tok::LParen) {
            let c = self.concept()?;
            self.expect(Tok::RParen)?;
            return Ok(c);
        }
        if self.starts_quantifier() {
            let existential = self.ident("a quantifier")? == "E";
            let role = self.role()?;
            self.expect(Tok::Dot)?;
            let filler = self.unary()?;
            return Ok(if existential {
                ConceptExpr::exists(role, filler)
            } else {
                ConceptExpr::forall(role, filler)
            });
        }
        let name = self.ident("a concept")?;
        Ok(match name.as_str() {
            "Top" => ConceptExpr::Top,
            "Bottom" => ConceptExpr::Bottom,
            _ => ConceptExpr::Atomic(ConceptName::new(&name)),
        })
    }

    fn assertion(&mut self) -> Result<Assertion, SyntaxError> {
        if self.eat(&Tok::LParen) {
            let src = Individual::new(&self.ident("an individual")?);
            self.expect(Tok::Comma)?;
            let tgt = Individual::new(&self.ident("an individual")?);
            self.expect(Tok::RParen)?;
            self.expect(Tok::Colon)?;
            let role = self.role()?;
            Ok(Assertion::role(src, tgt, role))
        } else {
            let ind = Individual::new(&self.ident("an individual")?);
            self.expect(Tok::Colon)?;
            Ok(Assertion::concept(ind, self.concept()?))
        }
    }

    fn has_colon(&self) -> bool {
        self.toks.iter().any(|(_, t)| *t == Tok::Colon)
    }
}

pub fn parse_concept(src: &str) -> Result<ConceptExpr, SyntaxError> {
    let mut p = Parser::new(src, 1)?;
    let c = p.concept()?;
    p.finish()?;
    Ok(c)
}

pub fn parse_role(src: &str) -> Result<RoleExpr, SyntaxError> {
    let mut p = Parser::new(src, 1)?;
    let r = p.role()?;
    p.finish()?;
    Ok(r)
}

pub fn parse_assertion(src: &str) -> Result<Assertion, SyntaxError> {
    let mut p = Parser::new(src, 1)?;
    let a = p.assertion()?;
    p.finish()?;
    Ok(a)
}

pub fn parse_gci(src: &str) -> Result<Gci, SyntaxError> {
    let mut p = Parser::new(src, 1)?;
    let lhs = p.concept()?;
    p.expect(Tok::Implies)?;
    let rhs = p.concept()?;
    p.finish()?;
    Ok(Gci::new(lhs, rhs))
}

/// One axiom or assertion per line; `C == D` adds both inclusions; `#`
/// starts a comment.
pub fn parse_kb(src: &str) -> Result<KnowledgeBase, SyntaxError> {
    let mut kb = KnowledgeBase::new();
    for (idx, raw) in src.lines().enumerate() {
        let mut p = Parser::new(raw, idx + 1)?;
        if p.toks.is_empty() {
            continue;
        }
        if p.has_colon() {
            kb.abox.insert(p.assertion()?);
        } else {
            let lhs = p.concept()?;
            if p.eat(&Tok::Equiv) {
                let rhs = p.concept()?;
                kb.tbox.extend(Gci::equivalence(lhs, rhs));
            } else {
                p.expect(Tok::Implies)?;
                let rhs = p.concept()?;
                kb.tbox.insert(Gci::new(lhs, rhs));
            }
        }
        p.finish()?;
    }
    Ok(kb)
}
