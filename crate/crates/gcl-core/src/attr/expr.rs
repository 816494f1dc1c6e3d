//! Recursive-descent parser for attribute expressions.
//!
//! Grammar: `expr := term {("+"|"|") term}`, `term := factor {("*"|"&")? factor}`,
//! `factor := ("~"|"!") factor | "(" expr ")" | ident | "0" | "1"`.
//! The `*` may be omitted between juxtaposed factors, e.g. `~d(b + ~e)`.
//! Identifiers are maximal-munch, so `ace` is one name, not `a*c*e`.

use crate::attr::AttrSpace;
use crate::error::{Error, Result};

/// Attribute expression tree; variables are alphabet indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AttrExpr {
    Var(usize),
    Not(Box<AttrExpr>),
    And(Box<AttrExpr>, Box<AttrExpr>),
    Or(Box<AttrExpr>, Box<AttrExpr>),
    Zero,
    One,
}

impl AttrExpr {
    /// Fully parenthesized rendering; parses back to an equal tree.
    pub fn display(&self, space: &AttrSpace) -> String {
        match self {
            AttrExpr::Var(j) => space.attr_name(*j).to_string(),
            AttrExpr::Not(e) => format!("~{}", e.display_atom(space)),
            AttrExpr::And(l, r) => {
                format!("({} * {})", l.display(space), r.display(space))
            }
            AttrExpr::Or(l, r) => {
                format!("({} + {})", l.display(space), r.display(space))
            }
            AttrExpr::Zero => "0".into(),
            AttrExpr::One => "1".into(),
        }
    }

    fn display_atom(&self, space: &AttrSpace) -> String {
        match self {
            AttrExpr::Var(_) | AttrExpr::Zero | AttrExpr::One => self.display(space),
            _ => format!("({})", self.display(space)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Or,
    And,
    Not,
    LParen,
    RParen,
    Zero,
    One,
}

struct Lexer {
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Lexer {
    fn new(text: &str) -> Result<Self> {
        let mut tokens = Vec::new();
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let start = i;
            match c {
                c if c.is_whitespace() => {
                    i += 1;
                    continue;
                }
                '+' | '|' => tokens.push((start, Token::Or)),
                '*' | '&' => tokens.push((start, Token::And)),
                '~' | '!' => tokens.push((start, Token::Not)),
                '(' => tokens.push((start, Token::LParen)),
                ')' => tokens.push((start, Token::RParen)),
                '0' => tokens.push((start, Token::Zero)),
                '1' => tokens.push((start, Token::One)),
                c if c.is_ascii_alphabetic() => {
                    let mut j = i;
                    while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                        j += 1;
                    }
                    tokens.push((start, Token::Ident(chars[i..j].iter().collect())));
                    i = j;
                    continue;
                }
                other => {
                    return Err(Error::ExprParse {
                        pos: start,
                        msg: format!("unexpected character `{other}`"),
                    })
                }
            }
            i += 1;
        }
        Ok(Lexer { tokens, pos: 0 })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn next(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .or(self.tokens.last())
            .map_or(0, |(p, _)| *p)
    }
}

/// Parses `text` against the alphabet of `space`.
pub fn parse(text: &str, space: &AttrSpace) -> Result<AttrExpr> {
    let mut lex = Lexer::new(text)?;
    let expr = parse_or(&mut lex, space)?;
    if let Some((pos, tok)) = lex.next() {
        return Err(Error::ExprParse {
            pos,
            msg: format!("unexpected trailing token {tok:?}"),
        });
    }
    Ok(expr)
}

fn parse_or(lex: &mut Lexer, space: &AttrSpace) -> Result<AttrExpr> {
    let mut expr = parse_and(lex, space)?;
    while matches!(lex.peek(), Some(Token::Or)) {
        lex.next();
        let rhs = parse_and(lex, space)?;
        expr = AttrExpr::Or(Box::new(expr), Box::new(rhs));
    }
    Ok(expr)
}

fn starts_factor(token: Option<&Token>) -> bool {
    matches!(
        token,
        Some(Token::Ident(_) | Token::Not | Token::LParen | Token::Zero | Token::One)
    )
}

fn parse_and(lex: &mut Lexer, space: &AttrSpace) -> Result<AttrExpr> {
    let mut expr = parse_factor(lex, space)?;
    loop {
        match lex.peek() {
            Some(Token::And) => {
                lex.next();
            }
            t if starts_factor(t) => {} // implicit conjunction by juxtaposition
            _ => break,
        }
        let rhs = parse_factor(lex, space)?;
        expr = AttrExpr::And(Box::new(expr), Box::new(rhs));
    }
    Ok(expr)
}

fn parse_factor(lex: &mut Lexer, space: &AttrSpace) -> Result<AttrExpr> {
    let here = lex.here();
    match lex.next() {
        Some((_, Token::Not)) => Ok(AttrExpr::Not(Box::new(parse_factor(lex, space)?))),
        Some((_, Token::LParen)) => {
            let inner = parse_or(lex, space)?;
            match lex.next() {
                Some((_, Token::RParen)) => Ok(inner),
                _ => Err(Error::ExprParse {
                    pos: lex.here(),
                    msg: "expected `)`".into(),
                }),
            }
        }
        Some((pos, Token::Ident(name))) => match space.attr_index(&name) {
            Ok(j) => Ok(AttrExpr::Var(j)),
            Err(_) => Err(Error::ExprParse {
                pos,
                msg: format!("unknown attribute `{name}`"),
            }),
        },
        Some((_, Token::Zero)) => Ok(AttrExpr::Zero),
        Some((_, Token::One)) => Ok(AttrExpr::One),
        Some((pos, tok)) => Err(Error::ExprParse {
            pos,
            msg: format!("unexpected token {tok:?}"),
        }),
        None => Err(Error::ExprParse {
            pos: here,
            msg: "unexpected end of expression".into(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abcde() -> AttrSpace {
        let names: Vec<String> = ["a", "b", "c", "d", "e"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        AttrSpace::new(&names).unwrap()
    }

    #[test]
    fn precedence_not_and_or() {
        let space = abcde();
        let got = parse("a*~e + c", &space).unwrap();
        let want = AttrExpr::Or(
            Box::new(AttrExpr::And(
                Box::new(AttrExpr::Var(0)),
                Box::new(AttrExpr::Not(Box::new(AttrExpr::Var(4)))),
            )),
            Box::new(AttrExpr::Var(2)),
        );
        assert_eq!(got, want);
    }

    #[test]
    fn negated_group() {
        let space = abcde();
        let got = parse("~(a+b)", &space).unwrap();
        let want = AttrExpr::Not(Box::new(AttrExpr::Or(
            Box::new(AttrExpr::Var(0)),
            Box::new(AttrExpr::Var(1)),
        )));
        assert_eq!(got, want);
    }

    #[test]
    fn juxtaposition_is_conjunction() {
        let space = abcde();
        assert_eq!(
            parse("~d(b + ~e)", &space).unwrap(),
            parse("~d * (b + ~e)", &space).unwrap()
        );
        assert_eq!(
            parse("c~d", &space).unwrap(),
            parse("c * ~d", &space).unwrap()
        );
    }

    #[test]
    fn idents_are_maximal_munch() {
        let space = abcde();
        match parse("ace", &space) {
            Err(Error::ExprParse { pos, msg }) => {
                assert_eq!(pos, 0);
                assert!(msg.contains("ace"));
            }
            other => panic!("expected unknown attribute, got {other:?}"),
        }
    }

    #[test]
    fn alternative_operator_spellings() {
        let space = abcde();
        assert_eq!(
            parse("a & b | !c", &space).unwrap(),
            parse("a*b + ~c", &space).unwrap()
        );
    }

    #[test]
    fn error_positions() {
        let space = abcde();
        match parse("a + )", &space) {
            Err(Error::ExprParse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse("", &space).is_err());
        assert!(parse("a b ~", &space).is_err());
    }

    #[test]
    fn display_roundtrip() {
        let space = abcde();
        let e = parse("~(a*~b) + c*(d + ~e)", &space).unwrap();
        let text = e.display(&space);
        assert_eq!(parse(&text, &space).unwrap(), e);
    }
}
