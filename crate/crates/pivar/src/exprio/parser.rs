//! Recursive-descent parser for the identity grammar.

use super::ExprError;
use crate::freealg::{capelli_d3, standard_polynomial, symmetric_polynomial, Polynomial, Var};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Var(Var),
    Int(BigInt),
    Standard(usize),
    Symmetric(usize),
    Capelli,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semicolon,
}

#[derive(Debug, Clone)]
struct Spanned {
    token: Token,
    line: usize,
    column: usize,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            chars: src.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn error(&self, message: impl Into<String>) -> ExprError {
        ExprError::Syntax {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn read_uint(&mut self) -> Option<u64> {
        let mut digits = String::new();
        while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(self.bump().unwrap());
        }
        if digits.is_empty() {
            None
        } else {
            digits.parse().ok()
        }
    }

    fn tokenize(mut self) -> Result<Vec<Spanned>, ExprError> {
        let mut out = Vec::new();
        loop {
            while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
                self.bump();
            }
            let (line, column) = (self.line, self.column);
            let Some(&c) = self.chars.peek() else { break };
            let token = match c {
                '+' => {
                    self.bump();
                    Token::Plus
                }
                '-' => {
                    self.bump();
                    Token::Minus
                }
                '*' => {
                    self.bump();
                    Token::Star
                }
                '/' => {
                    self.bump();
                    Token::Slash
                }
                '^' => {
                    self.bump();
                    Token::Caret
                }
                '(' => {
                    self.bump();
                    Token::LParen
                }
                ')' => {
                    self.bump();
                    Token::RParen
                }
                '[' => {
                    self.bump();
                    Token::LBracket
                }
                ']' => {
                    self.bump();
                    Token::RBracket
                }
                ',' => {
                    self.bump();
                    Token::Comma
                }
                ';' => {
                    self.bump();
                    Token::Semicolon
                }
                '0'..='9' => {
                    let n = self
                        .read_uint()
                        .ok_or_else(|| self.error("integer too large"))?;
                    Token::Int(BigInt::from(n))
                }
                'S' => {
                    self.bump();
                    let n = self
                        .read_uint()
                        .ok_or_else(|| self.error("expected arity digits after 'S'"))?;
                    Token::Standard(n as usize)
                }
                'h' => {
                    self.bump();
                    let n = self
                        .read_uint()
                        .ok_or_else(|| self.error("expected arity digits after 'h'"))?;
                    Token::Symmetric(n as usize)
                }
                'd' => {
                    self.bump();
                    match self.read_uint() {
                        Some(3) => Token::Capelli,
                        _ => return Err(self.error("only 'd3' is supported")),
                    }
                }
                'x' => {
                    self.bump();
                    match self.read_uint() {
                        Some(0) => return Err(self.error("variable indices start at 1")),
                        Some(n) => Token::Var(n as Var),
                        None => Token::Var(1),
                    }
                }
                'y' => {
                    self.bump();
                    Token::Var(2)
                }
                'z' => {
                    self.bump();
                    Token::Var(3)
                }
                't' => {
                    self.bump();
                    Token::Var(4)
                }
                'u' => {
                    self.bump();
                    Token::Var(5)
                }
                'v' => {
                    self.bump();
                    Token::Var(6)
                }
                other => return Err(self.error(format!("unexpected character '{other}'"))),
            };
            out.push(Spanned {
                token,
                line,
                column,
            });
        }
        Ok(out)
    }
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
    end_line: usize,
    end_column: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|s| &s.token)
    }

    fn bump(&mut self) -> Option<&Spanned> {
        let s = self.tokens.get(self.pos);
        if s.is_some() {
            self.pos += 1;
        }
        s
    }

    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .map(|s| (s.line, s.column))
            .unwrap_or((self.end_line, self.end_column))
    }

    fn syntax(&self, message: impl Into<String>) -> ExprError {
        let (line, column) = self.here();
        ExprError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn arity(&self, message: impl Into<String>) -> ExprError {
        let (line, column) = self.here();
        ExprError::Arity {
            line,
            column,
            message: message.into(),
        }
    }

    fn expect(&mut self, token: Token, what: &str) -> Result<(), ExprError> {
        match self.peek() {
            Some(t) if *t == token => {
                self.bump();
                Ok(())
            }
            _ => Err(self.syntax(format!("expected {what}"))),
        }
    }

    /// expr := ['+'|'-'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Polynomial, ExprError> {
        let negate_head = match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                true
            }
            Some(Token::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate_head {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    /// term := [rational] factor ('*'? factor)*
    fn term(&mut self) -> Result<Polynomial, ExprError> {
        let coefficient = match self.peek() {
            Some(Token::Int(_)) => Some(self.rational()?),
            _ => None,
        };
        let mut factors: Option<Polynomial> = None;
        loop {
            let starts_factor = matches!(
                self.peek(),
                Some(
                    Token::Var(_)
                        | Token::LParen
                        | Token::LBracket
                        | Token::Standard(_)
                        | Token::Symmetric(_)
                        | Token::Capelli
                )
            );
            if !starts_factor {
                if matches!(self.peek(), Some(Token::Star)) {
                    self.bump();
                    continue;
                }
                break;
            }
            let f = self.factor()?;
            factors = Some(match factors {
                None => f,
                Some(acc) => acc.mul(&f),
            });
        }
        match (coefficient, factors) {
            (Some(c), Some(p)) => Ok(p.scale(&c)),
            (None, Some(p)) => Ok(p),
            (Some(c), None) => {
                if c.is_zero() {
                    Ok(Polynomial::zero())
                } else {
                    Err(self.syntax(
                        "a bare non-zero constant is not an element of the non-unitary algebra",
                    ))
                }
            }
            (None, None) => Err(self.syntax("expected a term")),
        }
    }

    fn rational(&mut self) -> Result<BigRational, ExprError> {
        let n = match self.bump().map(|s| s.token.clone()) {
            Some(Token::Int(n)) => n,
            _ => return Err(self.syntax("expected an integer")),
        };
        if matches!(self.peek(), Some(Token::Slash)) {
            self.bump();
            let d = match self.bump().map(|s| s.token.clone()) {
                Some(Token::Int(d)) if !d.is_zero() => d,
                _ => return Err(self.syntax("expected a non-zero denominator")),
            };
            Ok(BigRational::new(n, d))
        } else {
            Ok(BigRational::from_integer(n))
        }
    }

    /// factor := primary ('^' uint)*
    fn factor(&mut self) -> Result<Polynomial, ExprError> {
        let mut base = self.primary()?;
        while matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            match self.bump().map(|s| s.token.clone()) {
                Some(Token::Int(e)) => {
                    let e: u32 = e
                        .try_into()
                        .map_err(|_| self.syntax("exponent too large"))?;
                    if e == 0 {
                        return Err(self.syntax("exponent 0 would be the absent empty word"));
                    }
                    base = base.pow(e);
                }
                _ => return Err(self.syntax("expected an exponent")),
            }
        }
        Ok(base)
    }

    fn args_until_rparen(&mut self) -> Result<Vec<Polynomial>, ExprError> {
        let mut args = vec![self.expr()?];
        while matches!(self.peek(), Some(Token::Comma)) {
            self.bump();
            args.push(self.expr()?);
        }
        self.expect(Token::RParen, "')'")?;
        Ok(args)
    }

    fn primary(&mut self) -> Result<Polynomial, ExprError> {
        match self.peek().cloned() {
            Some(Token::Var(v)) => {
                self.bump();
                Ok(Polynomial::var(v))
            }
            Some(Token::LParen) => {
                self.bump();
                let e = self.expr()?;
                self.expect(Token::RParen, "')'")?;
                Ok(e)
            }
            Some(Token::LBracket) => {
                self.bump();
                let mut args = vec![self.expr()?];
                while matches!(self.peek(), Some(Token::Comma)) {
                    self.bump();
                    args.push(self.expr()?);
                }
                self.expect(Token::RBracket, "']'")?;
                if args.len() < 2 {
                    return Err(self.arity("commutator needs at least two arguments"));
                }
                Ok(Polynomial::commutator_chain(&args))
            }
            Some(Token::Standard(n)) => {
                self.bump();
                self.expect(Token::LParen, "'('")?;
                let args = self.args_until_rparen()?;
                if args.len() != n {
                    return Err(self.arity(format!("S{n} takes {n} arguments, got {}", args.len())));
                }
                Ok(standard_polynomial(&args))
            }
            Some(Token::Symmetric(n)) => {
                self.bump();
                self.expect(Token::LParen, "'('")?;
                let args = self.args_until_rparen()?;
                if args.len() != n {
                    return Err(self.arity(format!("h{n} takes {n} arguments, got {}", args.len())));
                }
                Ok(symmetric_polynomial(&args))
            }
            Some(Token::Capelli) => {
                self.bump();
                self.expect(Token::LParen, "'('")?;
                let a1 = self.expr()?;
                self.expect(Token::Comma, "','")?;
                let a2 = self.expr()?;
                self.expect(Token::Comma, "','")?;
                let a3 = self.expr()?;
                self.expect(Token::Semicolon, "';'")?;
                let m1 = self.expr()?;
                self.expect(Token::Comma, "','")?;
                let m2 = self.expr()?;
                self.expect(Token::RParen, "')'")?;
                Ok(capelli_d3(&[a1, a2, a3], Some(&m1), Some(&m2)))
            }
            _ => Err(self.syntax("expected a variable, '(', '[', 'S', 'h' or 'd3'")),
        }
    }
}

/// Parses a single expression into a polynomial in canonical form.
pub fn parse(src: &str) -> Result<Polynomial, ExprError> {
    let end_line = src.lines().count().max(1);
    let end_column = src
        .lines()
        .last()
        .map(|l| l.chars().count() + 1)
        .unwrap_or(1);
    let tokens = Lexer::new(src).tokenize()?;
    if tokens.is_empty() {
        return Err(ExprError::Syntax {
            line: 1,
            column: 1,
            message: "empty expression".into(),
        });
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        end_line,
        end_column,
    };
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.syntax("unexpected trailing input"));
    }
    Ok(poly)
}

/// Parses the on-disk ideal format: one identity per line, `#` comments,
/// blank lines ignored.
pub fn parse_ideal_file(text: &str) -> Result<Vec<Polynomial>, ExprError> {
    let mut out = Vec::new();
    for line in text.lines() {
        let body = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        if body.trim().is_empty() {
            continue;
        }
        out.push(parse(body)?);
    }
    Ok(out)
}
