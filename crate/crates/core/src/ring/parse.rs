//! Tokenizer and recursive-descent parser for polynomial expressions.
//!
//! Accepted syntax: integers, identifiers, `+`, `-`, `*` (optional between
//! factors), `/` by a nonzero constant, `^` with a nonnegative integer
//! exponent, and parentheses. `#` starts a comment running to end of line.
//! The grammar parser reuses this tokenizer, which also knows `->` and `;`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{Polynomial, Rational, Symbol};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum TokenKind {
    Number(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Arrow,
    Semi,
    End,
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub kind: TokenKind,
    pub line: usize,
    pub column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        let simple = match c {
            '\n' => {
                line += 1;
                col = 1;
                i += 1;
                continue;
            }
            c if c.is_whitespace() => {
                col += 1;
                i += 1;
                continue;
            }
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                continue;
            }
            '+' => Some(TokenKind::Plus),
            '*' => Some(TokenKind::Star),
            '/' => Some(TokenKind::Slash),
            '^' => Some(TokenKind::Caret),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            ';' => Some(TokenKind::Semi),
            '-' if chars.get(i + 1) == Some(&'>') => {
                i += 2;
                col += 2;
                tokens.push(Token {
                    kind: TokenKind::Arrow,
                    line: tl,
                    column: tc,
                });
                continue;
            }
            '-' => Some(TokenKind::Minus),
            _ => None,
        };
        if let Some(kind) = simple {
            tokens.push(Token {
                kind,
                line: tl,
                column: tc,
            });
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            col += i - start;
            tokens.push(Token {
                kind: TokenKind::Number(digits.parse().expect("digit run")),
                line: tl,
                column: tc,
            });
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            tokens.push(Token {
                kind: TokenKind::Ident(chars[start..i].iter().collect()),
                line: tl,
                column: tc,
            });
        } else {
            return Err(Error::Syntax {
                line: tl,
                column: tc,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    tokens.push(Token {
        kind: TokenKind::End,
        line,
        column: col,
    });
    Ok(tokens)
}

pub(crate) struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    pub fn new(text: &str) -> Result<Self> {
        Ok(Parser {
            tokens: tokenize(text)?,
            pos: 0,
        })
    }

    pub fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn peek_kind_at(&self, offset: usize) -> &TokenKind {
        let idx = (self.pos + offset).min(self.tokens.len() - 1);
        &self.tokens[idx].kind
    }

    pub fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    pub fn at_end(&self) -> bool {
        self.peek().kind == TokenKind::End
    }

    pub fn error_here(&self, message: impl Into<String>) -> Error {
        let t = self.peek();
        Error::Syntax {
            line: t.line,
            column: t.column,
            message: message.into(),
        }
    }

    pub fn expect_end(&self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error_here(format!("unexpected {}", describe(&self.peek().kind))))
        }
    }

    /// Parses one polynomial expression. Stops before `;`, `)`, end of input,
    /// or an identifier that opens the next rule (`ident ->`).
    pub fn expression(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek().kind {
            TokenKind::Plus => {
                self.next();
                self.term()?
            }
            TokenKind::Minus => {
                self.next();
                -self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek().kind {
                TokenKind::Plus => {
                    self.next();
                    acc += self.term()?;
                }
                TokenKind::Minus => {
                    self.next();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_implicit_factor(&self) -> bool {
        match self.peek().kind {
            TokenKind::Number(_) | TokenKind::LParen => true,
            TokenKind::Ident(_) => *self.peek_kind_at(1) != TokenKind::Arrow,
            _ => false,
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek().kind {
                TokenKind::Star => {
                    self.next();
                    acc = acc * self.factor()?;
                }
                TokenKind::Slash => {
                    self.next();
                    let (line, column) = (self.peek().line, self.peek().column);
                    let divisor = self.factor()?;
                    match divisor.constant_value() {
                        Some(c) if !c.is_zero() => {
                            acc = acc.scale(&(Rational::from_integer(1.into()) / c))
                        }
                        _ => {
                            return Err(Error::Syntax {
                                line,
                                column,
                                message: "division only by a nonzero constant".into(),
                            })
                        }
                    }
                }
                _ if self.starts_implicit_factor() => {
                    acc = acc * self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        if self.peek().kind == TokenKind::Minus {
            self.next();
            return Ok(-self.factor()?);
        }
        let base = self.base()?;
        if self.peek().kind == TokenKind::Caret {
            self.next();
            let t = self.next();
            let e = match &t.kind {
                TokenKind::Number(n) => n.to_u32(),
                _ => None,
            };
            let Some(e) = e else {
                return Err(Error::Syntax {
                    line: t.line,
                    column: t.column,
                    message: "expected a nonnegative integer exponent".into(),
                });
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial> {
        let t = self.next();
        match t.kind {
            TokenKind::Number(n) => Ok(Polynomial::from_int(n)),
            TokenKind::Ident(name) => Ok(Polynomial::symbol(Symbol::new(&name))),
            TokenKind::LParen => {
                let inner = self.expression()?;
                if self.peek().kind != TokenKind::RParen {
                    return Err(self.error_here("expected `)`"));
                }
                self.next();
                Ok(inner)
            }
            other => Err(Error::Syntax {
                line: t.line,
                column: t.column,
                message: format!("expected a number, symbol or `(`, found {}", describe(&other)),
            }),
        }
    }
}

fn describe(kind: &TokenKind) -> String {
    match kind {
        TokenKind::Number(n) => format!("number `{n}`"),
        TokenKind::Ident(s) => format!("symbol `{s}`"),
        TokenKind::Plus => "`+`".into(),
        TokenKind::Minus => "`-`".into(),
        TokenKind::Star => "`*`".into(),
        TokenKind::Slash => "`/`".into(),
        TokenKind::Caret => "`^`".into(),
        TokenKind::LParen => "`(`".into(),
        TokenKind::RParen => "`)`".into(),
        TokenKind::Arrow => "`->`".into(),
        TokenKind::Semi => "`;`".into(),
        TokenKind::End => "end of input".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn implicit_multiplication() {
        assert_eq!(p("2x y"), p("2*x*y"));
        assert_eq!(p("(x+1)(x-1)"), p("x^2 - 1"));
    }

    #[test]
    fn precedence_and_signs() {
        assert_eq!(p("-x^2"), -p("x^2"));
        assert_eq!(p("2*-x"), p("-2*x"));
        assert_eq!(p("3/2*x"), p("x*3/2"));
        assert_eq!(p("x - y - z"), p("x - (y + z)"));
    }

    #[test]
    fn comments_and_whitespace() {
        assert_eq!(p("x  # trailing\n + y"), p("x+y"));
    }

    #[test]
    fn errors_carry_positions() {
        match "x +".parse::<Polynomial>() {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (1, 4)),
            other => panic!("{other:?}"),
        }
        match "x\n  / y".parse::<Polynomial>() {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 5)),
            other => panic!("{other:?}"),
        }
        assert!("x $ y".parse::<Polynomial>().is_err());
        assert!("x^y".parse::<Polynomial>().is_err());
        assert!("(x".parse::<Polynomial>().is_err());
        assert!("x )".parse::<Polynomial>().is_err());
        assert!("x / 0".parse::<Polynomial>().is_err());
    }
}
