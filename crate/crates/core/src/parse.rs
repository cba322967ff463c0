//! Text format for polynomials and rational functions.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' '-'? integer)?
//! atom   := integer | variable | '(' expr ')'
//! ```
//!
//! Variables are single letters from `x y z t w`. Rationals are written as
//! integer quotients, e.g. `-2/5*z`. Products and quotients keep their
//! factors; a sum is multiplied out into a single numerator.

use num_bigint::BigInt;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::ratfunc::{FactoredRatFunc, Polynomial};
use crate::rational::{self, Rational};
use crate::var::Var;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Var(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Token::Num(s[start..i].parse().expect("digits"))));
                continue;
            }
            _ => match Var::from_char(c) {
                Some(v) => Token::Var(v),
                None => {
                    return Err(Error::Parse {
                        pos: i,
                        msg: format!("unexpected character `{c}`"),
                    })
                }
            },
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

#[derive(Debug, Clone)]
enum Expr {
    Num(BigInt),
    Var(Var),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Token::Slash) => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Token::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.bump();
        let negative = if self.peek() == Some(&Token::Minus) {
            self.bump();
            true
        } else {
            false
        };
        match self.bump() {
            Some(Token::Num(n)) => {
                let e: i32 = match i32::try_from(n) {
                    Ok(e) if e <= 10_000 => e,
                    _ => {
                        self.pos -= 1;
                        return self.error("exponent too large");
                    }
                };
                Ok(Expr::Pow(Box::new(base), if negative { -e } else { e }))
            }
            _ => {
                self.pos -= 1;
                self.error("expected an integer exponent")
            }
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.bump() {
            Some(Token::Num(n)) => Ok(Expr::Num(n)),
            Some(Token::Var(v)) => Ok(Expr::Var(v)),
            Some(Token::LParen) => {
                let e = self.expr()?;
                if self.bump() != Some(Token::RParen) {
                    self.pos -= 1;
                    return self.error("expected `)`");
                }
                Ok(e)
            }
            _ => {
                self.pos -= 1;
                self.error("expected a number, variable or `(`")
            }
        }
    }
}

fn parse_expr(text: &str) -> Result<Expr> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Parse {
            pos: 0,
            msg: "empty expression".into(),
        });
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.pos < p.tokens.len() {
        return p.error("trailing input");
    }
    Ok(e)
}

fn collect_vars(e: &Expr, out: &mut Vec<Var>) {
    match e {
        Expr::Num(_) => {}
        Expr::Var(v) => {
            if !out.contains(v) {
                out.push(*v);
            }
        }
        Expr::Neg(a) | Expr::Pow(a, _) => collect_vars(a, out),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
            collect_vars(a, out);
            collect_vars(b, out);
        }
    }
}

fn build<P: Polynomial>(e: &Expr, vars: P::Vars) -> Result<FactoredRatFunc<P>> {
    Ok(match e {
        Expr::Num(n) => FactoredRatFunc::constant(vars, rational::from_bigint(n.clone())),
        Expr::Var(v) => {
            FactoredRatFunc::from_poly(P::variable(vars, *v).ok_or(Error::UnexpectedVariable(*v))?)
        }
        Expr::Neg(a) => build::<P>(a, vars)?.neg(),
        Expr::Add(a, b) => build::<P>(a, vars)?.add(&build(b, vars)?)?,
        Expr::Sub(a, b) => build::<P>(a, vars)?.sub(&build(b, vars)?)?,
        Expr::Mul(a, b) => build::<P>(a, vars)?.mul(&build(b, vars)?)?,
        Expr::Div(a, b) => {
            let d = build::<P>(b, vars)?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            build::<P>(a, vars)?.div(&d)?
        }
        Expr::Pow(a, k) => {
            let base = build::<P>(a, vars)?;
            if *k < 0 && base.is_zero() {
                return Err(Error::DivisionByZero);
            }
            base.powi(*k)?
        }
    })
}

/// Parses a rational function in one variable. The variable is whichever one
/// appears; a constant expression lands in `z`.
pub fn parse_univariate(text: &str) -> Result<FactoredRatFunc<UniPoly>> {
    let e = parse_expr(text)?;
    let mut vars = Vec::new();
    collect_vars(&e, &mut vars);
    match vars.as_slice() {
        [] => build(&e, Var::Z),
        [v] => build(&e, *v),
        [_, extra, ..] => Err(Error::UnexpectedVariable(*extra)),
    }
}

/// Parses a rational function in `outer` and `inner`.
pub fn parse_bivariate(text: &str, outer: Var, inner: Var) -> Result<FactoredRatFunc<BiPoly>> {
    let e = parse_expr(text)?;
    build(&e, (outer, inner))
}

pub fn parse_univariate_in(text: &str, var: Var) -> Result<FactoredRatFunc<UniPoly>> {
    let e = parse_expr(text)?;
    build(&e, var)
}

/// Parses a comma- or whitespace-separated list of rationals.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(rational::parse_rational)
        .collect()
}

impl std::str::FromStr for BiPoly {
    type Err = Error;

    /// Parses a polynomial in `x` (outer) and `y` (inner).
    fn from_str(s: &str) -> Result<Self> {
        parse_bivariate(s, Var::X, Var::Y)?.into_polynomial()
    }
}
