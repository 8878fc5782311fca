//! Recursive-descent parser for the scalar expression grammar.
//!
//! ```text
//! scalar := expr ( '/' expr )?          -- at most one top-level division
//! expr   := ['+'|'-']? term ( ('+'|'-') term )*
//! term   := factor ( '*' factor )*
//! factor := atom ( '^' uint )?
//! atom   := uint ( '/' uint )?          -- rational literal, binds tightly
//!         | 'a'                         -- the indeterminate (Qa only)
//!         | '(' expr ')'
//! ```
//!
//! A `/` directly between two integer literals is a rational literal
//! (`3/4` in `3/4 + 1` is the number three-quarters); any other `/` is the
//! single top-level split between numerator and denominator expressions,
//! as in `(1+a)/(1-a)`.

use num_traits::Zero;

use super::{FieldTag, Integer, Rational, Scalar, ScalarError};

const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(Integer),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn parse_err(position: usize, message: impl Into<String>) -> ScalarError {
    ScalarError::Parse {
        position,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>, ScalarError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let pos = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '+' => {
                tokens.push(Token { tok: Tok::Plus, pos });
                i += 1;
            }
            '-' => {
                tokens.push(Token { tok: Tok::Minus, pos });
                i += 1;
            }
            '*' => {
                tokens.push(Token { tok: Tok::Star, pos });
                i += 1;
            }
            '/' => {
                tokens.push(Token { tok: Tok::Slash, pos });
                i += 1;
            }
            '^' => {
                tokens.push(Token { tok: Tok::Caret, pos });
                i += 1;
            }
            '(' => {
                tokens.push(Token { tok: Tok::LParen, pos });
                i += 1;
            }
            ')' => {
                tokens.push(Token { tok: Tok::RParen, pos });
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                let value: Integer = digits.parse().expect("digit run parses as integer");
                tokens.push(Token {
                    tok: Tok::Int(value),
                    pos,
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                tokens.push(Token {
                    tok: Tok::Ident(text[start..i].to_string()),
                    pos,
                });
            }
            other => {
                return Err(parse_err(pos, format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    idx: usize,
    tag: FieldTag,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.idx)
    }

    fn peek_at(&self, offset: usize) -> Option<&Token> {
        self.tokens.get(self.idx + offset)
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.idx).cloned();
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |t| t.pos)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek().is_some_and(|t| &t.tok == tok) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar, ScalarError> {
        let negate_first = if self.eat(&Tok::Minus) {
            true
        } else {
            self.eat(&Tok::Plus);
            false
        };
        let mut acc = self.term()?;
        if negate_first {
            acc = -acc;
        }
        loop {
            if self.eat(&Tok::Plus) {
                let t = self.term()?;
                acc = acc + t;
            } else if self.eat(&Tok::Minus) {
                let t = self.term()?;
                acc = acc - t;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.factor()?;
        while self.eat(&Tok::Star) {
            let f = self.factor()?;
            acc = acc * f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Scalar, ScalarError> {
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            let pos = self.here();
            match self.advance() {
                Some(Token {
                    tok: Tok::Int(n), ..
                }) => {
                    let exp = u32::try_from(&n)
                        .ok()
                        .filter(|e| *e <= MAX_EXPONENT)
                        .ok_or_else(|| {
                            parse_err(pos, format!("exponent must be an integer in 0..={MAX_EXPONENT}"))
                        })?;
                    Ok(base.pow(exp))
                }
                _ => Err(parse_err(pos, "expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Scalar, ScalarError> {
        let pos = self.here();
        match self.advance() {
            Some(Token {
                tok: Tok::Int(n), ..
            }) => {
                // rational literal: integer '/' integer with nothing between
                if self.peek().is_some_and(|t| t.tok == Tok::Slash)
                    && matches!(self.peek_at(1), Some(Token { tok: Tok::Int(_), .. }))
                {
                    self.advance();
                    let den_tok = self.advance().expect("peeked integer token");
                    let Tok::Int(d) = den_tok.tok else { unreachable!() };
                    if d.is_zero() {
                        return Err(ScalarError::DivisionByZero);
                    }
                    return Ok(Scalar::from_rational(Rational::new(n, d), self.tag));
                }
                Ok(Scalar::from_rational(Rational::from_integer(n), self.tag))
            }
            Some(Token {
                tok: Tok::Ident(name),
                pos,
            }) => {
                if name == "a" {
                    match self.tag {
                        FieldTag::Qa => Ok(Scalar::indeterminate()),
                        FieldTag::Q => Err(ScalarError::FieldMismatch { position: pos }),
                    }
                } else {
                    Err(parse_err(pos, format!("unknown identifier `{name}`")))
                }
            }
            Some(Token { tok: Tok::LParen, .. }) => {
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(parse_err(self.here(), "expected `)`"));
                }
                Ok(inner)
            }
            Some(t) => Err(parse_err(t.pos, "expected a number, `a`, or `(`")),
            None => Err(parse_err(pos, "unexpected end of input")),
        }
    }
}

/// Parses a scalar expression under the given field tag. The result is
/// canonical; rendering it reproduces an equivalent expression.
pub fn parse_scalar(text: &str, tag: FieldTag) -> Result<Scalar, ScalarError> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        idx: 0,
        tag,
        end: text.len(),
    };
    if p.peek().is_none() {
        return Err(parse_err(0, "empty scalar expression"));
    }
    let num = p.expr()?;
    let value = if p.eat(&Tok::Slash) {
        let den = p.expr()?;
        num.checked_div(&den)?
    } else {
        num
    };
    if let Some(t) = p.peek() {
        return Err(parse_err(t.pos, "unexpected trailing input"));
    }
    Ok(value)
}
