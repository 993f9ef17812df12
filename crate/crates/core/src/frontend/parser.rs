//! Declarations of the model file format.
//!
//! ```text
//! file  := decl*
//! decl  := kind name "{" entry* "}" ";"?
//! entry := key word* ";" | key "[" index ("," index)* "]" "=" expr ";"
//! expr  := polynomial with + - * ^ ( ) and rationals p/q
//! ```

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::lexer::{tokenize, Pos, Tok, Token};
use crate::error::{Error, Result};
use crate::symbolic::{Polynomial, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Algebroid,
    Rep,
    MatchedPair,
    Bialgebroid,
    Manin,
    Dvb,
    Poisson,
}

impl Kind {
    pub const ALL: [Kind; 7] = [
        Kind::Algebroid,
        Kind::Rep,
        Kind::MatchedPair,
        Kind::Bialgebroid,
        Kind::Manin,
        Kind::Dvb,
        Kind::Poisson,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            Kind::Algebroid => "algebroid",
            Kind::Rep => "rep",
            Kind::MatchedPair => "matchedpair",
            Kind::Bialgebroid => "bialgebroid",
            Kind::Manin => "manin",
            Kind::Dvb => "dvb",
            Kind::Poisson => "poisson",
        }
    }

    fn from_keyword(s: &str) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.keyword() == s)
    }

    /// Entry keys whose first word names another declaration.
    fn reference_keys(self) -> &'static [&'static str] {
        match self {
            Kind::Rep => &["actor"],
            Kind::MatchedPair => &["a", "b"],
            Kind::Bialgebroid => &["e", "estar", "pair", "poisson"],
            Kind::Manin => &["g", "gstar"],
            _ => &[],
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Debug, Clone)]
pub enum EntryBody {
    Words(Vec<String>),
    Assign { index: Vec<String>, value: Polynomial },
}

#[derive(Debug, Clone)]
pub struct Entry {
    pub key: String,
    pub body: EntryBody,
    pub pos: Pos,
}

#[derive(Debug, Clone)]
pub struct Decl {
    pub kind: Kind,
    pub name: String,
    pub entries: Vec<Entry>,
    pub pos: Pos,
}

/// Parsed declarations in file order. Equality ignores source positions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ModelFile {
    pub decls: Vec<Decl>,
}

impl PartialEq for EntryBody {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (EntryBody::Words(a), EntryBody::Words(b)) => a == b,
            (EntryBody::Assign { index: i, value: v }, EntryBody::Assign { index: j, value: w }) => i == j && v == w,
            _ => false,
        }
    }
}
impl Eq for EntryBody {}

impl PartialEq for Entry {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key && self.body == other.body
    }
}
impl Eq for Entry {}

impl PartialEq for Decl {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.name == other.name && self.entries == other.entries
    }
}
impl Eq for Decl {}

impl Entry {
    pub fn words(key: &str, words: Vec<String>) -> Self {
        Entry {
            key: key.into(),
            body: EntryBody::Words(words),
            pos: Pos::default(),
        }
    }

    pub fn assign(key: &str, index: Vec<String>, value: Polynomial) -> Self {
        Entry {
            key: key.into(),
            body: EntryBody::Assign { index, value },
            pos: Pos::default(),
        }
    }
}

impl Decl {
    pub fn new(kind: Kind, name: &str, entries: Vec<Entry>) -> Self {
        Decl {
            kind,
            name: name.into(),
            entries,
            pos: Pos::default(),
        }
    }
}

impl ModelFile {
    pub fn get(&self, name: &str) -> Option<&Decl> {
        self.decls.iter().find(|d| d.name == name)
    }

    /// Appends the declarations of `other`, refusing name clashes.
    pub fn extend(&mut self, other: ModelFile) -> Result<()> {
        for d in other.decls {
            if self.get(&d.name).is_some() {
                return Err(Error::DuplicateName(d.name));
            }
            self.decls.push(d);
        }
        Ok(())
    }
}

pub(crate) fn error_at(pos: Pos, message: impl Into<String>, expected: &[&str]) -> Error {
    Error::Parse {
        line: pos.line,
        col: pos.col,
        message: message.into(),
        expected: expected.iter().map(|s| s.to_string()).collect(),
    }
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&str]) -> Error {
        let t = self.peek();
        error_at(t.pos, format!("unexpected {}", t.tok.describe()), expected)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Punct(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&[&format!("`{c}`")]))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, Pos)> {
        match self.peek().tok.clone() {
            Tok::Ident(s) => {
                let pos = self.bump().pos;
                Ok((s, pos))
            }
            _ => Err(self.unexpected(&[what])),
        }
    }

    fn file(&mut self) -> Result<ModelFile> {
        let mut m = ModelFile::default();
        while self.peek().tok != Tok::Eof {
            let d = self.decl()?;
            if m.get(&d.name).is_some() {
                return Err(Error::DuplicateName(d.name));
            }
            m.decls.push(d);
        }
        Ok(m)
    }

    fn decl(&mut self) -> Result<Decl> {
        let kinds: Vec<&str> = Kind::ALL.iter().map(|k| k.keyword()).collect();
        let (kw, pos) = match self.peek().tok.clone() {
            Tok::Ident(s) => (s, self.peek().pos),
            _ => return Err(self.unexpected(&kinds)),
        };
        let kind =
            Kind::from_keyword(&kw).ok_or_else(|| error_at(pos, format!("unknown declaration kind `{kw}`"), &kinds))?;
        self.bump();
        let (name, _) = self.ident("name")?;
        self.expect('{')?;
        let mut entries = Vec::new();
        while !self.eat('}') {
            if self.peek().tok == Tok::Eof {
                return Err(self.unexpected(&["key", "`}`"]));
            }
            entries.push(self.entry()?);
        }
        self.eat(';');
        Ok(Decl {
            kind,
            name,
            entries,
            pos,
        })
    }

    fn entry(&mut self) -> Result<Entry> {
        let (key, pos) = self.ident("key")?;
        if self.eat('[') {
            let mut index = vec![self.index_item()?];
            while self.eat(',') {
                index.push(self.index_item()?);
            }
            self.expect(']')?;
            self.expect('=')?;
            let value = self.expr()?;
            self.expect(';')?;
            return Ok(Entry {
                key,
                body: EntryBody::Assign { index, value },
                pos,
            });
        }
        let mut words = Vec::new();
        loop {
            let t = self.peek().tok.clone();
            match t {
                Tok::Punct(';') => {
                    self.bump();
                    break;
                }
                Tok::Ident(s) | Tok::Int(s) => {
                    self.bump();
                    words.push(s);
                }
                Tok::Punct(c @ ('+' | '-')) => {
                    self.bump();
                    words.push(c.to_string());
                }
                _ => return Err(self.unexpected(&["`;`", "`[`", "word"])),
            }
        }
        Ok(Entry {
            key,
            body: EntryBody::Words(words),
            pos,
        })
    }

    fn index_item(&mut self) -> Result<String> {
        match self.peek().tok.clone() {
            Tok::Ident(s) | Tok::Int(s) => {
                self.bump();
                Ok(s)
            }
            _ => Err(self.unexpected(&["number", "identifier"])),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc += self.term()?;
            } else if self.eat('-') {
                acc -= self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        if self.eat('^') {
            let t = self.peek().clone();
            let Tok::Int(s) = &t.tok else {
                return Err(self.unexpected(&["exponent"]));
            };
            let e = u32::from_str(s).map_err(|_| error_at(t.pos, "exponent too large", &[]))?;
            self.bump();
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(n) => {
                self.bump();
                let num = BigInt::from_str(n).expect("digits");
                if self.eat('/') {
                    let dt = self.peek().clone();
                    let Tok::Int(d) = &dt.tok else {
                        return Err(self.unexpected(&["denominator"]));
                    };
                    self.bump();
                    let den = BigInt::from_str(d).expect("digits");
                    if den.is_zero() {
                        return Err(error_at(dt.pos, "zero denominator", &[]));
                    }
                    return Ok(Polynomial::constant(Rational::new(num, den)));
                }
                Ok(Polynomial::constant(Rational::from_integer(num)))
            }
            Tok::Ident(s) => {
                self.bump();
                Ok(Polynomial::var(s))
            }
            Tok::Punct('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            _ => Err(self.unexpected(&["number", "identifier", "`(`", "`-`"])),
        }
    }
}

/// Parses a model file and checks that names are unique and that every
/// reference names some declaration.
pub fn parse_model(text: &str) -> Result<ModelFile> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
    };
    let m = p.file()?;
    for d in &m.decls {
        for e in &d.entries {
            if !d.kind.reference_keys().contains(&e.key.as_str()) {
                continue;
            }
            if let EntryBody::Words(w) = &e.body {
                for r in w.iter().take(1) {
                    if m.get(r).is_none() {
                        return Err(Error::UnresolvedReference(r.clone()));
                    }
                }
            }
        }
    }
    Ok(m)
}

/// Parses a standalone polynomial expression.
pub fn parse_expr(text: &str) -> Result<Polynomial> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
    };
    let e = p.expr()?;
    if p.peek().tok != Tok::Eof {
        return Err(p.unexpected(&["operator", "end of input"]));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_aff1() {
        let m = parse_model("algebroid A { base; rank 2; bracket [1,2] = e2; }").unwrap();
        let d = m.get("A").unwrap();
        assert_eq!(d.kind, Kind::Algebroid);
        assert_eq!(d.entries.len(), 3);
        assert_eq!(d.entries[1].body, EntryBody::Words(vec!["2".into()]));
    }

    #[test]
    fn empty_file() {
        assert_eq!(parse_model("").unwrap(), ModelFile::default());
        assert_eq!(parse_model("  # only a comment\n").unwrap(), ModelFile::default());
    }

    #[test]
    fn zero_denominator() {
        let err = parse_model("algebroid A {\n  bracket [1,2] = 2/0*e1;\n}").unwrap_err();
        assert_eq!(err.to_string(), "2:21: zero denominator");
    }

    #[test]
    fn expected_tokens_reported() {
        let err = parse_model("algebroid A { rank 2 }").unwrap_err();
        match err {
            Error::Parse {
                line, col, expected, ..
            } => {
                assert_eq!((line, col), (1, 22));
                assert!(expected.contains(&"`;`".to_string()));
            }
            e => panic!("{e}"),
        }
        let err = parse_model("lattice A {}").unwrap_err().to_string();
        assert!(err.starts_with("1:1: unknown declaration kind `lattice`"));
    }

    #[test]
    fn names_and_references() {
        let dup = parse_model("dvb D { dimH 1; } dvb D { dimH 2; }").unwrap_err();
        assert_eq!(dup, Error::DuplicateName("D".into()));
        let unres = parse_model("manin M { g G; gstar H; }").unwrap_err();
        assert_eq!(unres, Error::UnresolvedReference("G".into()));
    }

    #[test]
    fn expressions() {
        let p = parse_expr("2/3*x^2*y - z").unwrap();
        assert_eq!(p.to_string(), "2/3*x^2*y - z");
        assert_eq!(parse_expr("-(x + 1)^2").unwrap().to_string(), "-x^2 - 2*x - 1");
        assert!(parse_expr("x y").is_err());
    }
}
