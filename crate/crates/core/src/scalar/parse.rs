//! Textual form of scalars: integers, `q`, `t`, `+ - * / ^` and parentheses.
//!
//! Parameter families additionally accept the index variable `k`, so a whole
//! sequence `a_k` can be written as one expression, e.g. `(1-t^k)/(1-q^k)`.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::{Bindings, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Q,
    T,
    /// The parameter index in `a_k` expressions.
    K,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Evaluates with `k` bound to `index`; an unbound `k` is an error.
    pub fn eval(&self, index: Option<i64>) -> Result<Scalar> {
        Ok(match self {
            Expr::Int(n) => Scalar::from_bigint(n.clone()),
            Expr::Q => Scalar::q(),
            Expr::T => Scalar::t(),
            Expr::K => match index {
                Some(k) => Scalar::from_int(k),
                None => {
                    return Err(Error::Parse {
                        pos: 0,
                        msg: String::from("`k` is only allowed in parameter expressions"),
                    })
                }
            },
            Expr::Neg(a) => -a.eval(index)?,
            Expr::Add(a, b) => &a.eval(index)? + &b.eval(index)?,
            Expr::Sub(a, b) => &a.eval(index)? - &b.eval(index)?,
            Expr::Mul(a, b) => &a.eval(index)? * &b.eval(index)?,
            Expr::Div(a, b) => a.eval(index)?.checked_div(&b.eval(index)?)?,
            Expr::Pow(a, b) => {
                let e = b.eval(index)?;
                let e = e
                    .as_integer()
                    .and_then(|n| i64::try_from(n).ok())
                    .ok_or_else(|| Error::Parse {
                        pos: 0,
                        msg: format!("exponent `{e}` is not an integer"),
                    })?;
                a.eval(index)?.pow(e)?
            }
        })
    }

    /// Replaces bound variables by the textual form of their values.
    pub fn substitute(&self, bindings: &Bindings) -> Expr {
        let bound = |v: &Option<Scalar>, fallback: Expr| match v {
            Some(v) => parse_expr(&format!("{v}")).expect("scalar display parses"),
            None => fallback,
        };
        let sub = |e: &Expr| Box::new(e.substitute(bindings));
        match self {
            Expr::Q => bound(&bindings.q, Expr::Q),
            Expr::T => bound(&bindings.t, Expr::T),
            Expr::Int(_) | Expr::K => self.clone(),
            Expr::Neg(a) => Expr::Neg(sub(a)),
            Expr::Add(a, b) => Expr::Add(sub(a), sub(b)),
            Expr::Sub(a, b) => Expr::Sub(sub(a), sub(b)),
            Expr::Mul(a, b) => Expr::Mul(sub(a), sub(b)),
            Expr::Div(a, b) => Expr::Div(sub(a), sub(b)),
            Expr::Pow(a, b) => Expr::Pow(sub(a), sub(b)),
        }
    }

    pub fn mentions_index(&self) -> bool {
        match self {
            Expr::K => true,
            Expr::Int(_) | Expr::Q | Expr::T => false,
            Expr::Neg(a) => a.mentions_index(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) | Expr::Pow(a, b) => {
                a.mentions_index() || b.mentions_index()
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Q => f.write_str("q"),
            Expr::T => f.write_str("t"),
            Expr::K => f.write_str("k"),
            Expr::Neg(a) => write!(f, "-({a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "{a}*{b}"),
            Expr::Div(a, b) => write!(f, "({a})/({b})"),
            Expr::Pow(a, b) => write!(f, "({a})^({b})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(char),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = s[start..i].parse().map_err(|_| Error::Parse {
                pos: start,
                msg: String::from("bad integer"),
            })?;
            out.push((start, Tok::Num(n)));
        } else if matches!(c, 'q' | 't' | 'k') {
            out.push((i, Tok::Ident(c)));
            i += 1;
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse {
                pos: i,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.offset(),
            msg: String::from(msg),
        })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
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

    fn starts_primary(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('('))
        )
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if self.starts_primary() {
                // juxtaposition, as in `2q` or `(1-q)(1-t)`
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if self.eat('^') {
            let exp = self.unary()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Ident(c)) => {
                self.pos += 1;
                Ok(match c {
                    'q' => Expr::Q,
                    't' => Expr::T,
                    _ => Expr::K,
                })
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            Some(_) => self.err("expected a number, `q`, `t`, `k` or `(`"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses an expression over `q`, `t` and `k`.
pub fn parse_expr(s: &str) -> Result<Expr> {
    let toks = tokenize(s)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: s.len(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let v = parse_expr("1 + 2*3^2 - 4/2").unwrap().eval(None).unwrap();
        assert_eq!(v, Scalar::from_int(17));
        let v = parse_expr("-q^2").unwrap().eval(None).unwrap();
        assert_eq!(v, -Scalar::q().pow(2).unwrap());
        let v = parse_expr("2^-1").unwrap().eval(None).unwrap();
        assert_eq!(v, Scalar::ratio(1, 2).unwrap());
    }

    #[test]
    fn juxtaposition_multiplies() {
        let a = parse_expr("(1-q)(1+q)").unwrap().eval(None).unwrap();
        let b = parse_expr("1-q^2").unwrap().eval(None).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            parse_expr("2q").unwrap().eval(None).unwrap(),
            &Scalar::q() * &Scalar::from_int(2)
        );
    }

    #[test]
    fn index_variable() {
        let e = parse_expr("(1-t^k)/(1-q^k)").unwrap();
        assert!(e.mentions_index());
        let a2 = e.eval(Some(2)).unwrap();
        assert_eq!(a2, parse_expr("(1-t^2)/(1-q^2)").unwrap().eval(None).unwrap());
        assert!(e.eval(None).is_err());
    }

    #[test]
    fn errors_carry_offsets() {
        assert!(matches!(parse_expr("1 + x"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_expr("(1 + q"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_expr("q^(1/2)").unwrap().eval(None),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_expr("1/0").unwrap().eval(None),
            Err(Error::DivisionByZero)
        ));
    }
}
