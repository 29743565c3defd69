//! Parser for the series grammar.
//!
//! ```text
//! list    := expr (',' expr)*
//! expr    := ['+' | '-'] term (('+' | '-') term)*
//! term    := power (('*' | '/') power)*
//! power   := atom ['^' integer]
//! atom    := integer | 't' | '(' expr ')' | 'O' '(' 't' ['^' integer] ')'
//! ```
//!
//! `O(t^d)` may appear once as a summand and marks the series as known
//! modulo `t^d`. Division is only by nonzero constants.

use hkc_core::{scalar, Parametrization, Scalar, Series};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at position {pos}: {message}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error("generator {0} is a unit or zero")]
    UnitOrZero(usize),
    #[error("no generators given")]
    Empty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Num(u64),
    T,
    Big,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = input[start..i].parse().map_err(|_| ParseError {
                    pos: start,
                    message: "integer literal too large".into(),
                })?;
                out.push((Tok::Num(n), start));
                continue;
            }
            b't' => Tok::T,
            b'O' => Tok::Big,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            _ => {
                let ch = input[i..].chars().next().unwrap_or('?');
                return Err(ParseError {
                    pos: i,
                    message: format!("unexpected character '{ch}'"),
                });
            }
        };
        out.push((tok, i));
        i += 1;
    }
    out.push((Tok::End, input.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> Tok {
        self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.peek();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            message: message.into(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.fail(format!("expected {what}"))
        }
    }

    fn integer(&mut self) -> Result<u64, ParseError> {
        match self.peek() {
            Tok::Num(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.fail("expected an integer"),
        }
    }

    fn expr(&mut self) -> Result<Series, ParseError> {
        let mut negate = false;
        match self.peek() {
            Tok::Plus => {
                self.bump();
            }
            Tok::Minus => {
                self.bump();
                negate = true;
            }
            _ => {}
        }
        let mut acc = self.summand()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.summand()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.summand()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    // a term, or the big-O marker
    fn summand(&mut self) -> Result<Series, ParseError> {
        if self.peek() == Tok::Big {
            let start = self.pos();
            self.bump();
            self.expect(Tok::LParen, "'(' after O")?;
            self.expect(Tok::T, "'t' inside O(...)")?;
            let d = if self.peek() == Tok::Caret {
                self.bump();
                self.integer()?
            } else {
                1
            };
            self.expect(Tok::RParen, "')'")?;
            let d = usize::try_from(d).map_err(|_| ParseError {
                pos: start,
                message: "precision too large".into(),
            })?;
            return Ok(Series::big_o(d));
        }
        self.term()
    }

    fn term(&mut self) -> Result<Series, ParseError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.power()?;
                }
                Tok::Slash => {
                    self.bump();
                    let pos = self.pos();
                    let d = self.power()?;
                    let c = constant_value(&d).ok_or(ParseError {
                        pos,
                        message: "division is only by nonzero constants".into(),
                    })?;
                    acc = acc.scale(&c.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Series, ParseError> {
        let base = self.atom()?;
        if self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        let k = self.integer()?;
        let k = u32::try_from(k).map_err(|_| ParseError {
            pos,
            message: "exponent too large".into(),
        })?;
        if base == Series::t() {
            return Ok(Series::t_pow(k as usize));
        }
        Ok(base.pow(k))
    }

    fn atom(&mut self) -> Result<Series, ParseError> {
        match self.peek() {
            Tok::Num(n) => {
                self.bump();
                Ok(Series::constant(Scalar::from_integer(n.into())))
            }
            Tok::T => {
                self.bump();
                Ok(Series::t())
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::Big => self.fail("O(t^d) must be a summand"),
            Tok::End => self.fail("unexpected end of input"),
            _ => self.fail("expected a number, 't' or '('"),
        }
    }
}

fn constant_value(s: &Series) -> Option<Scalar> {
    if !s.is_exact() || s.max_exponent().unwrap_or(0) > 0 {
        return None;
    }
    let c = s.coeff(0);
    (!c.is_zero()).then_some(c)
}

/// Parses a single series.
pub fn parse_series(input: &str) -> Result<Series, ParseError> {
    let mut p = Parser {
        toks: lex(input)?,
        at: 0,
    };
    let s = p.expr()?;
    if p.peek() != Tok::End {
        return p.fail("unexpected input after expression");
    }
    Ok(s)
}

/// Parses a comma-separated list of series.
pub fn parse_series_list(input: &str) -> Result<Vec<Series>, ParseError> {
    let mut p = Parser {
        toks: lex(input)?,
        at: 0,
    };
    let mut out = vec![p.expr()?];
    while p.peek() == Tok::Comma {
        p.bump();
        out.push(p.expr()?);
    }
    if p.peek() != Tok::End {
        return p.fail("expected ',' or end of input");
    }
    Ok(out)
}

/// The generators as typed and the (monic) parametrization they define.
#[derive(Clone, Debug)]
pub struct ParsedInput {
    pub raw: Vec<Series>,
    pub param: Parametrization,
}

pub fn parse_generators(input: &str) -> Result<ParsedInput, InputError> {
    if input.trim().is_empty() {
        return Err(InputError::Empty);
    }
    let raw = parse_series_list(input)?;
    for (i, g) in raw.iter().enumerate() {
        match g.order() {
            Ok(Some(o)) if o >= 1 => {}
            _ => return Err(InputError::UnitOrZero(i + 1)),
        }
    }
    let param = Parametrization::new(raw.clone()).map_err(|_| InputError::UnitOrZero(0))?;
    Ok(ParsedInput { raw, param })
}

/// Canonical text for a scalar: integer or `p/q`.
pub fn scalar_text(c: &Scalar) -> String {
    if scalar::is_integer(c) {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}
