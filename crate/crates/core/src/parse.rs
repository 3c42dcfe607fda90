//! Recursive-descent parser for the expression language shared by scalars
//! and noncommutative polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nat)*
//! atom   := rational | 'q' | 'X[' label ']' | '(' expr ')'
//! ```

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Number(BigRational),
    Q,
    /// `X[label]`, with the byte offset of the label for error reporting.
    Symbol(String, usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = if self.eat('-') {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while self.eat('*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        let mut base = self.atom()?;
        while self.eat('^') {
            self.skip_ws();
            let digits = self.digits();
            if digits.is_empty() {
                return self.err("expected a natural number exponent");
            }
            let e: u32 = match digits.parse() {
                Ok(e) => e,
                Err(_) => return self.err("exponent too large"),
            };
            base = Expr::Pow(Box::new(base), e);
        }
        Ok(base)
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        let len = self.src[start..].chars().take_while(char::is_ascii_digit).count();
        self.pos += len;
        &self.src[start..start + len]
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some('q') => {
                self.pos += 1;
                Ok(Expr::Q)
            }
            Some('X') => {
                self.pos += 1;
                if !self.src[self.pos..].starts_with('[') {
                    return self.err("expected `[` after X");
                }
                self.pos += 1;
                let start = self.pos;
                match self.src[start..].find(']') {
                    Some(len) => {
                        self.pos = start + len + 1;
                        Ok(Expr::Symbol(self.src[start..start + len].trim().to_string(), start))
                    }
                    None => self.err("unterminated `X[`"),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().expect("digit run");
                let save = self.pos;
                // a '/' directly followed by digits belongs to the literal
                if self.eat('/') {
                    self.skip_ws();
                    let d = self.digits();
                    if d.is_empty() {
                        self.pos = save;
                        return self.err("expected denominator after `/`");
                    }
                    let den: BigInt = d.parse().expect("digit run");
                    if den.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    return Ok(Expr::Number(BigRational::new(num, den)));
                }
                Ok(Expr::Number(BigRational::from_integer(num)))
            }
            Some(c) => self.err(format!("unexpected `{c}`")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a complete expression.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Evaluates a symbol-free expression in the field.
pub fn eval_scalar(e: &Expr, field: &Field) -> Result<Scalar> {
    Ok(match e {
        Expr::Number(r) => Scalar::from_rational(field, r.clone()),
        Expr::Q => Scalar::q(field),
        Expr::Symbol(_, pos) => {
            return Err(Error::Parse { pos: *pos, msg: "symbols are not allowed in a scalar".into() })
        }
        Expr::Add(a, b) => &eval_scalar(a, field)? + &eval_scalar(b, field)?,
        Expr::Sub(a, b) => &eval_scalar(a, field)? - &eval_scalar(b, field)?,
        Expr::Mul(a, b) => &eval_scalar(a, field)? * &eval_scalar(b, field)?,
        Expr::Neg(a) => -eval_scalar(a, field)?,
        Expr::Pow(a, k) => eval_scalar(a, field)?.pow(*k as i64)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::make_field;

    #[test]
    fn precedence() {
        let f = make_field(5).unwrap();
        let s = Scalar::parse("1 + 2*q^2 - (q - 1)", &f).unwrap();
        let expect = &(&Scalar::from_int(&f, 2) + &(&Scalar::q_pow(&f, 2) * &Scalar::from_int(&f, 2))) - &Scalar::q(&f);
        assert_eq!(s, expect);
        assert_eq!(Scalar::parse("-3/6", &f).unwrap(), Scalar::ratio(&f, -1, 2));
    }

    #[test]
    fn symbols() {
        let e = parse_expr("X[x^2y]*X[1]").unwrap();
        match e {
            Expr::Mul(a, b) => {
                assert_eq!(*a, Expr::Symbol("x^2y".into(), 2));
                assert_eq!(*b, Expr::Symbol("1".into(), 10));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_expr("1 + ").unwrap_err(), Error::Parse { pos: 4, msg: "unexpected end of input".into() });
        assert!(matches!(parse_expr("X[y"), Err(Error::Parse { .. })));
        assert!(matches!(parse_expr("(1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_expr("2 3"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_expr("q^"), Err(Error::Parse { .. })));
        assert_eq!(parse_expr("1/0"), Err(Error::DivisionByZero));
    }
}
