//! Reader and printer for the `.poly` text format.
//!
//! ```text
//! defs   := (def)*
//! def    := IDENT ":=" expr ";"
//! expr   := term (("+" | "-") term)*
//! term   := ("-")? factor ("*" factor)*
//! factor := atom ("^" UINT)?
//! atom   := IDENT | UINT ("/" UINT)? | "(" expr ")"
//! ```
//!
//! Identifiers match `[~A-Za-z][A-Za-z0-9]*`. Implicit multiplication is not
//! accepted. A unary minus negates the whole term it starts. `#` comments run
//! to end of line.

mod lexer;
mod render;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::poly::{Polynomial, Rational, Ring};
use lexer::{tokenize, Tok, Token};

pub use render::render;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind} (at `{token}`)")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub token: String,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    Expected(&'static str),
    UnknownVariable(String),
    MalformedExponent,
    Unterminated(String),
    DuplicateName(String),
    ZeroDenominator,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::Expected(what) => write!(f, "expected {what}"),
            ParseErrorKind::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            ParseErrorKind::MalformedExponent => {
                f.write_str("malformed exponent, expected an unsigned integer")
            }
            ParseErrorKind::Unterminated(name) => {
                write!(f, "definition `{name}` is not terminated by `;`")
            }
            ParseErrorKind::DuplicateName(name) => write!(f, "duplicate definition `{name}`"),
            ParseErrorKind::ZeroDenominator => f.write_str("zero denominator"),
        }
    }
}

/// Named polynomials in file order.
#[derive(Debug, Clone, PartialEq)]
pub struct DefinitionSet {
    entries: Vec<(String, Polynomial)>,
    source: String,
}

impl DefinitionSet {
    pub fn new(source: impl Into<String>) -> Self {
        DefinitionSet {
            entries: Vec::new(),
            source: source.into(),
        }
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&Polynomial> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(n, _)| n.as_str())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Polynomial)> {
        self.entries.iter().map(|(n, p)| (n.as_str(), p))
    }

    pub fn into_entries(self) -> Vec<(String, Polynomial)> {
        self.entries
    }
}

/// Parses `name := expr ;` definitions over `ring`.
pub fn parse_definitions(text: &str, ring: &Ring) -> Result<DefinitionSet, ParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser::new(&tokens, ring);
    let mut defs = DefinitionSet::new("text");
    while !p.at(&Tok::Eof) {
        let (name, tok) = p.ident("definition name")?;
        if defs.get(&name).is_some() {
            return Err(p.error_at(&tok, ParseErrorKind::DuplicateName(name)));
        }
        p.expect(&Tok::Assign, "`:=`")?;
        let value = p.expr()?;
        if p.at(&Tok::Eof) {
            let tok = p.peek().clone();
            return Err(p.error_at(&tok, ParseErrorKind::Unterminated(name)));
        }
        p.expect(&Tok::Semi, "`;`")?;
        defs.entries.push((name, value));
    }
    Ok(defs)
}

/// Parses a single expression; a trailing `;` is allowed.
pub fn parse_expression(text: &str, ring: &Ring) -> Result<Polynomial, ParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser::new(&tokens, ring);
    let value = p.expr()?;
    if p.at(&Tok::Semi) {
        p.bump();
    }
    p.expect(&Tok::Eof, "end of input")?;
    Ok(value)
}

/// Accepts either a definition file or one bare expression (named `_`).
pub fn parse_source(text: &str, ring: &Ring) -> Result<DefinitionSet, ParseError> {
    let tokens = tokenize(text)?;
    let is_defs = matches!(
        tokens.as_slice(),
        [
            Token {
                tok: Tok::Ident(_),
                ..
            },
            Token {
                tok: Tok::Assign,
                ..
            },
            ..
        ]
    ) || matches!(tokens.as_slice(), [Token { tok: Tok::Eof, .. }]);
    if is_defs {
        parse_definitions(text, ring)
    } else {
        let value = parse_expression(text, ring)?;
        let mut defs = DefinitionSet::new("expression");
        defs.entries.push(("_".to_string(), value));
        Ok(defs)
    }
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn new(tokens: &'a [Token], ring: &'a Ring) -> Self {
        Parser {
            tokens,
            pos: 0,
            ring,
        }
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn at(&self, tok: &Tok) -> bool {
        &self.peek().tok == tok
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, tok: &Token, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: tok.line,
            column: tok.column,
            token: tok.tok.text(),
            kind,
        }
    }

    fn expect(&mut self, tok: &Tok, what: &'static str) -> Result<Token, ParseError> {
        if self.at(tok) {
            Ok(self.bump())
        } else {
            Err(self.error_at(self.peek(), ParseErrorKind::Expected(what)))
        }
    }

    fn ident(&mut self, what: &'static str) -> Result<(String, Token), ParseError> {
        match &self.peek().tok {
            Tok::Ident(name) => {
                let name = name.clone();
                Ok((name, self.bump()))
            }
            _ => Err(self.error_at(self.peek(), ParseErrorKind::Expected(what))),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.at(&Tok::Plus) {
                self.bump();
                acc = &acc + &self.term()?;
            } else if self.at(&Tok::Minus) {
                self.bump();
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let negate = if self.at(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let mut acc = self.factor()?;
        while self.at(&Tok::Star) {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(if negate { -acc } else { acc })
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if !self.at(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let tok = self.peek().clone();
        let exp = match &tok.tok {
            Tok::Int(n) => n
                .to_u16()
                .ok_or_else(|| self.error_at(&tok, ParseErrorKind::MalformedExponent))?,
            _ => return Err(self.error_at(&tok, ParseErrorKind::MalformedExponent)),
        };
        self.bump();
        Ok(base.pow(exp as u32))
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let tok = self.peek().clone();
        match &tok.tok {
            Tok::Ident(name) => {
                self.bump();
                match self.ring.index_of(name) {
                    Some(i) => Ok(Polynomial::var_at(self.ring, i)),
                    None => Err(self.error_at(&tok, ParseErrorKind::UnknownVariable(name.clone()))),
                }
            }
            Tok::Int(n) => {
                self.bump();
                let num = BigInt::from(n.clone());
                if self.at(&Tok::Slash) {
                    self.bump();
                    let dtok = self.peek().clone();
                    let Tok::Int(d) = &dtok.tok else {
                        return Err(
                            self.error_at(&dtok, ParseErrorKind::Expected("integer denominator"))
                        );
                    };
                    if d.is_zero() {
                        return Err(self.error_at(&dtok, ParseErrorKind::ZeroDenominator));
                    }
                    self.bump();
                    Ok(Polynomial::constant(
                        self.ring,
                        Rational::new(num, BigInt::from(d.clone())),
                    ))
                } else {
                    Ok(Polynomial::constant(self.ring, Rational::from_integer(num)))
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(self.error_at(&tok, ParseErrorKind::Expected("variable, number or `(`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, RingSignature};

    fn el() -> Ring {
        RingSignature::el()
    }

    fn mql() -> Ring {
        RingSignature::mql()
    }

    #[test]
    fn zero_definition() {
        let defs = parse_definitions("q:=0;", &el()).unwrap();
        assert_eq!(defs.len(), 1);
        assert!(defs.get("q").unwrap().is_zero());
    }

    #[test]
    fn eform_first_equation() {
        let p = parse_definitions("p:=E10^2-2*E20-L^2;", &el()).unwrap();
        let p = p.get("p").unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(render(p), "E10^2-L^2-2*E20");
    }

    #[test]
    fn square_of_sum_expands() {
        let p = parse_expression("(x1+x2+x3)^2", &mql()).unwrap();
        assert_eq!(p.num_terms(), 6);
        assert_eq!(render(&p), "x1^2+2*x1*x2+x2^2+2*x1*x3+2*x2*x3+x3^2");
    }

    #[test]
    fn cancellation_to_zero() {
        assert!(parse_expression("-L^2+L^2", &mql()).unwrap().is_zero());
    }

    #[test]
    fn product_from_factor_generator() {
        let p = parse_expression("d1*(x2^2+x3^2-d1^2)", &mql()).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(render(&p), "x2^2*d1+x3^2*d1-d1^3");
    }

    #[test]
    fn unary_minus_binds_to_term() {
        let a = parse_expression("-3*E02*E21", &el()).unwrap();
        let b = parse_expression("(0-3)*E02*E21", &el()).unwrap();
        assert_eq!(a, b);
        let c = parse_expression("E10--E01", &el()).unwrap();
        assert_eq!(c, parse_expression("E10+E01", &el()).unwrap());
    }

    #[test]
    fn rational_literals() {
        let p = parse_expression("3/2*E10^2-6/4", &el()).unwrap();
        assert_eq!(render(&p), "3/2*E10^2-3/2");
        let err = parse_expression("1/0", &el()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::ZeroDenominator);
    }

    #[test]
    fn malformed_exponent_is_positioned() {
        let err = parse_expression("E10+E01^*2", &el()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MalformedExponent);
        assert_eq!((err.line, err.column), (1, 9));
        assert_eq!(err.token, "*");
    }

    #[test]
    fn unknown_variable_is_positioned() {
        let err = parse_definitions("a:=E10;\nb:=E10*x1;", &el()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownVariable("x1".into()));
        assert_eq!((err.line, err.column), (2, 8));
    }

    #[test]
    fn unterminated_definition() {
        let err = parse_definitions("a:=E10;\nb:=E10*E01", &el()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Unterminated("b".into()));
    }

    #[test]
    fn implicit_multiplication_rejected() {
        assert!(parse_expression("2 E10", &el()).is_err());
        assert!(parse_expression("E10(E01)", &el()).is_err());
    }

    #[test]
    fn duplicate_names_rejected() {
        let err = parse_definitions("a:=1;a:=2;", &el()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::DuplicateName("a".into()));
    }

    #[test]
    fn line_breaks_between_tokens() {
        let p = parse_definitions("~q:=-4*E02\n*E10*E20+E01^\n3;", &el()).unwrap();
        let q = p.get("~q").unwrap();
        assert_eq!(q, &parse_expression("E01^3-4*E02*E10*E20", &el()).unwrap());
    }

    #[test]
    fn source_detection() {
        let defs = parse_source("0;", &el()).unwrap();
        assert_eq!(defs.names().collect::<Vec<_>>(), vec!["_"]);
        assert!(defs.get("_").unwrap().is_zero());
        assert_eq!(parse_source("# nothing\n", &el()).unwrap().len(), 0);
        assert_eq!(parse_source("a:=L;b:=2*L;", &el()).unwrap().len(), 2);
    }

    #[test]
    fn large_exponent_of_variable() {
        let p = parse_expression("(L^3)^4", &el()).unwrap();
        assert_eq!(p.total_degree(), Some(12));
        let q = parse_expression("(2*L)^3", &el()).unwrap();
        assert_eq!(q.leading_term().unwrap().1, &rat(8, 1));
    }
}
