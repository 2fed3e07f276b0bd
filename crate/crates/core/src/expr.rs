//! Text syntax for states and eidostates.
//!
//! ```text
//! term    := atom | "(" term "+" term ")"
//! atom    := "h" | "t" | "r" ident? | "s" nat | "b" nat
//!          | "box[" coinset ";" nat "]" | "@" ident
//! coinset := "{" term ("," term)* "}"
//! eido    := term | "{" term ("," term)* "}" | "(" eido "+" eido ")"
//! ```
//!
//! `+` is never implicit: every pair is parenthesized. Whitespace between
//! tokens is ignored.

use std::collections::BTreeMap;
use std::fmt;

use crate::term::{combine, CoinSet, Eidostate, Term, TermError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("{message} at offset {offset}")]
    Syntax { offset: usize, message: String },
    #[error("undeclared atom `@{name}` at offset {offset}")]
    Undeclared { offset: usize, name: String },
    #[error("invalid expression at offset {offset}: {source}")]
    Invalid { offset: usize, source: TermError },
    #[error("expected a single state, found a set at offset {offset}")]
    NotATerm { offset: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AtomExpr {
    Heads,
    Tails,
    Record(String),
    Stack(usize),
    BasicBox(u32),
    Box { base: Vec<Expr>, level: u32 },
    Named(String),
}

/// Parse tree. Equality ignores spans.
#[derive(Debug, Clone)]
pub enum Expr {
    Atom(AtomExpr, Span),
    Pair(Box<Expr>, Box<Expr>, Span),
    Set(Vec<Expr>, Span),
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Expr::Atom(a, _), Expr::Atom(b, _)) => a == b,
            (Expr::Pair(a, b, _), Expr::Pair(c, d, _)) => a == c && b == d,
            (Expr::Set(a, _), Expr::Set(b, _)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Expr {}

impl Expr {
    pub fn span(&self) -> Span {
        match self {
            Expr::Atom(_, s) | Expr::Pair(_, _, s) | Expr::Set(_, s) => *s,
        }
    }

    /// Whether the expression denotes a single state (no set literal).
    pub fn is_term(&self) -> bool {
        match self {
            Expr::Atom(..) => true,
            Expr::Pair(l, r, _) => l.is_term() && r.is_term(),
            Expr::Set(..) => false,
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Atom(a, _) => write!(f, "{a}"),
            Expr::Pair(l, r, _) => write!(f, "({l}+{r})"),
            Expr::Set(items, _) => {
                f.write_str("{")?;
                for (i, t) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{t}")?;
                }
                f.write_str("}")
            }
        }
    }
}

impl fmt::Display for AtomExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AtomExpr::Heads => f.write_str("h"),
            AtomExpr::Tails => f.write_str("t"),
            AtomExpr::Record(l) => f.write_str(l),
            AtomExpr::Stack(n) => write!(f, "s{n}"),
            AtomExpr::BasicBox(n) => write!(f, "b{n}"),
            AtomExpr::Box { base, level } => {
                f.write_str("box[{")?;
                for (i, t) in base.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{t}")?;
                }
                write!(f, "}};{level}]")
            }
            AtomExpr::Named(n) => write!(f, "@{n}"),
        }
    }
}

/// Declared abstract atoms, looked up by `@name`.
#[derive(Debug, Clone, Default)]
pub struct Declarations {
    atoms: BTreeMap<String, Term>,
}

impl Declarations {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn declare(&mut self, name: &str, term: Term) {
        self.atoms.insert(name.to_string(), term);
    }

    pub fn get(&self, name: &str) -> Option<&Term> {
        self.atoms.get(name)
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.eido()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

/// Parses and evaluates an eidostate expression.
pub fn parse_eidostate(text: &str, decls: &Declarations) -> Result<Eidostate, ParseError> {
    to_eidostate(&parse(text)?, decls)
}

/// Parses and evaluates a single-state expression.
pub fn parse_term(text: &str, decls: &Declarations) -> Result<Term, ParseError> {
    to_term(&parse(text)?, decls)
}

pub fn to_term(e: &Expr, decls: &Declarations) -> Result<Term, ParseError> {
    match e {
        Expr::Atom(a, span) => atom_term(a, *span, decls),
        Expr::Pair(l, r, _) => Ok(Term::pair(to_term(l, decls)?, to_term(r, decls)?)),
        Expr::Set(_, span) => Err(ParseError::NotATerm { offset: span.start }),
    }
}

pub fn to_eidostate(e: &Expr, decls: &Declarations) -> Result<Eidostate, ParseError> {
    let invalid = |source| ParseError::Invalid {
        offset: e.span().start,
        source,
    };
    match e {
        Expr::Atom(..) => Ok(Eidostate::singleton(to_term(e, decls)?)),
        Expr::Pair(..) if e.is_term() => Ok(Eidostate::singleton(to_term(e, decls)?)),
        Expr::Pair(l, r, _) => Ok(combine(&to_eidostate(l, decls)?, &to_eidostate(r, decls)?)),
        Expr::Set(items, _) => {
            let terms = items
                .iter()
                .map(|t| to_term(t, decls))
                .collect::<Result<Vec<_>, _>>()?;
            Eidostate::new(terms).map_err(invalid)
        }
    }
}

fn atom_term(a: &AtomExpr, span: Span, decls: &Declarations) -> Result<Term, ParseError> {
    let invalid = |source| ParseError::Invalid {
        offset: span.start,
        source,
    };
    Ok(match a {
        AtomExpr::Heads => Term::heads(),
        AtomExpr::Tails => Term::tails(),
        AtomExpr::Record(l) => Term::record(l),
        AtomExpr::Stack(n) => Term::stack(*n).map_err(invalid)?,
        AtomExpr::BasicBox(n) => Term::basic_box(*n),
        AtomExpr::Box { base, level } => {
            let elems = base
                .iter()
                .map(|t| to_term(t, decls))
                .collect::<Result<Vec<_>, _>>()?;
            Term::boxed(CoinSet::new(elems).map_err(invalid)?, *level)
        }
        AtomExpr::Named(n) => decls
            .get(n)
            .cloned()
            .ok_or_else(|| ParseError::Undeclared {
                offset: span.start,
                name: n.clone(),
            })?,
    })
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ParseError {
        ParseError::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn word(&mut self) -> String {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        self.pos += len;
        rest[..len].to_string()
    }

    fn nat(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        let w = self.word();
        if w.is_empty() || !w.bytes().all(|b| b.is_ascii_digit()) {
            self.pos = start;
            return Err(self.error("expected a natural number"));
        }
        w.parse().map_err(|_| ParseError::Syntax {
            offset: start,
            message: "number too large".into(),
        })
    }

    fn eido(&mut self) -> Result<Expr, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('{') => {
                let items = self.term_list()?;
                Ok(Expr::Set(
                    items,
                    Span {
                        start,
                        end: self.pos,
                    },
                ))
            }
            Some('(') => {
                self.pos += 1;
                let l = self.eido()?;
                self.expect('+')?;
                let r = self.eido()?;
                self.expect(')')?;
                Ok(Expr::Pair(
                    Box::new(l),
                    Box::new(r),
                    Span {
                        start,
                        end: self.pos,
                    },
                ))
            }
            _ => self.atom(),
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('(') {
            self.pos += 1;
            let l = self.term()?;
            self.expect('+')?;
            let r = self.term()?;
            self.expect(')')?;
            return Ok(Expr::Pair(
                Box::new(l),
                Box::new(r),
                Span {
                    start,
                    end: self.pos,
                },
            ));
        }
        self.atom()
    }

    fn term_list(&mut self) -> Result<Vec<Expr>, ParseError> {
        self.expect('{')?;
        let mut items = vec![self.term()?];
        while self.peek() == Some(',') {
            self.pos += 1;
            items.push(self.term()?);
        }
        self.expect('}')?;
        Ok(items)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('@') {
            self.pos += 1;
            let name = self.word();
            if name.is_empty() {
                return Err(self.error("expected a name after `@`"));
            }
            return Ok(Expr::Atom(
                AtomExpr::Named(name),
                Span {
                    start,
                    end: self.pos,
                },
            ));
        }
        let w = self.word();
        let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
        let atom = match w.as_str() {
            "" => {
                self.pos = start;
                return Err(self.error("expected a state"));
            }
            "h" => AtomExpr::Heads,
            "t" => AtomExpr::Tails,
            "s" => AtomExpr::Stack(self.nat()? as usize),
            "b" => AtomExpr::BasicBox(self.level()?),
            "box" => {
                self.expect('[')?;
                let base = self.term_list()?;
                self.expect(';')?;
                let level = self.level()?;
                self.expect(']')?;
                AtomExpr::Box { base, level }
            }
            w if w.starts_with('s') && digits(&w[1..]) => {
                AtomExpr::Stack(w[1..].parse().map_err(|_| self.error("number too large"))?)
            }
            w if w.starts_with('b') && digits(&w[1..]) => {
                AtomExpr::BasicBox(w[1..].parse().map_err(|_| self.error("number too large"))?)
            }
            w if w.starts_with('r') => AtomExpr::Record(w.to_string()),
            _ => {
                self.pos = start;
                return Err(self.error(&format!("unknown atom `{w}`")));
            }
        };
        Ok(Expr::Atom(
            atom,
            Span {
                start,
                end: self.pos,
            },
        ))
    }

    fn level(&mut self) -> Result<u32, ParseError> {
        let n = self.nat()?;
        u32::try_from(n).map_err(|_| self.error("box level too large"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::Weight;

    fn eido(s: &str) -> Eidostate {
        parse_eidostate(s, &Declarations::new()).unwrap()
    }

    #[test]
    fn stacks_parse_to_right_nested_heads() {
        let d = Declarations::new();
        assert_eq!(
            parse_term("(h+(h+h))", &d).unwrap(),
            Term::stack(3).unwrap()
        );
        assert_eq!(parse_term("s3", &d).unwrap(), Term::stack(3).unwrap());
        assert_eq!(parse_term("s 3", &d).unwrap(), Term::stack(3).unwrap());
    }

    #[test]
    fn set_literals_and_products() {
        assert_eq!(eido("{h,t}").len(), 2);
        let p = eido("( {h,t} + b2 )");
        assert_eq!(p.len(), 2);
        assert_eq!(p.weight(), Weight::from_int(8));
        assert_eq!(eido("(h + {r0, r1})").len(), 2);
    }

    #[test]
    fn boxes_with_custom_bases() {
        let t = parse_term("box[{(h+h),(h+t),(t+h)};2]", &Declarations::new()).unwrap();
        assert_eq!(t.weight(), Weight::from_int(9));
        assert_eq!(
            parse_term("box[{h,t};3]", &Declarations::new()).unwrap(),
            Term::basic_box(3)
        );
    }

    #[test]
    fn errors_carry_offsets() {
        match parse("(h+t") {
            Err(ParseError::Syntax { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("{other:?}"),
        }
        match parse_eidostate("(h + @demon)", &Declarations::new()) {
            Err(ParseError::Undeclared { offset, name }) => {
                assert_eq!(offset, 5);
                assert_eq!(name, "demon");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("h + t"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("q"), Err(ParseError::Syntax { .. })));
        assert!(matches!(
            parse_eidostate("{h,(h+t)}", &Declarations::new()),
            Err(ParseError::Invalid { .. })
        ));
        assert!(matches!(
            parse_term("{h}", &Declarations::new()),
            Err(ParseError::NotATerm { .. })
        ));
    }

    #[test]
    fn printing_reparses() {
        for s in [
            "(h+(h+h))",
            "{h,t}",
            "({h,t}+b2)",
            "box[{(h+h),(t+t)};4]",
            "(r0+@x)",
            "rfoo",
        ] {
            let e = parse(s).unwrap();
            assert_eq!(parse(&e.to_string()).unwrap(), e, "{s}");
        }
    }
}
