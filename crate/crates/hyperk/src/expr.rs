//! A one-variable expression language for component functions.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := base ('^' factor)?            -- '^' associates right
//! base   := NUMBER | 'x' | FUNC '(' expr ')' | '(' expr ')' | '-' base
//! FUNC   := sin | cos | exp | log | sqrt | abs
//! ```
//!
//! Note the grammar puts unary minus at the base level, so `-x^2` is
//! `(-x)^2`. Errors carry the byte offset of the offending token.
//!
//! Differentiation is symbolic with constant folding and nothing more; it
//! refuses any tree containing `abs`, whose kink has no derivative there.

use std::fmt;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Exp,
    Log,
    Sqrt,
    Abs,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Sqrt => "sqrt",
            Func::Abs => "abs",
        }
    }

    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "exp" => Func::Exp,
            "log" => Func::Log,
            "sqrt" => Func::Sqrt,
            "abs" => Func::Abs,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

impl Expr {
    pub fn parse(input: &str) -> Result<Expr, Error> {
        let mut p = Parser { input: input.as_bytes(), pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < p.input.len() {
            return Err(p.syntax("unexpected trailing input"));
        }
        Ok(e)
    }

    pub fn eval(&self, x: f64) -> Result<f64, Error> {
        match self {
            Expr::Num(c) => Ok(*c),
            Expr::Var => Ok(x),
            Expr::Neg(u) => Ok(-u.eval(x)?),
            Expr::Add(u, v) => Ok(u.eval(x)? + v.eval(x)?),
            Expr::Sub(u, v) => Ok(u.eval(x)? - v.eval(x)?),
            Expr::Mul(u, v) => Ok(u.eval(x)? * v.eval(x)?),
            Expr::Div(u, v) => {
                let d = v.eval(x)?;
                if d == 0.0 {
                    return Err(Error::Domain("division by zero".into()));
                }
                Ok(u.eval(x)? / d)
            }
            Expr::Pow(u, v) => eval_pow(u.eval(x)?, v.eval(x)?),
            Expr::Call(f, u) => {
                let a = u.eval(x)?;
                match f {
                    Func::Sin => Ok(a.sin()),
                    Func::Cos => Ok(a.cos()),
                    Func::Exp => Ok(a.exp()),
                    Func::Log => {
                        if a <= 0.0 {
                            Err(Error::Domain(format!("log of {}", a)))
                        } else {
                            Ok(a.ln())
                        }
                    }
                    Func::Sqrt => {
                        if a < 0.0 {
                            Err(Error::Domain(format!("sqrt of {}", a)))
                        } else {
                            Ok(a.sqrt())
                        }
                    }
                    Func::Abs => Ok(a.abs()),
                }
            }
        }
    }

    /// Symbolic derivative with constant folding. Any `abs` in the tree,
    /// reachable or not, is refused.
    pub fn differentiate(&self) -> Result<Expr, Error> {
        if self.contains_abs() {
            return Err(Error::NotDifferentiable);
        }
        Ok(fold(self.d()))
    }

    fn contains_abs(&self) -> bool {
        match self {
            Expr::Num(_) | Expr::Var => false,
            Expr::Neg(u) => u.contains_abs(),
            Expr::Add(u, v)
            | Expr::Sub(u, v)
            | Expr::Mul(u, v)
            | Expr::Div(u, v)
            | Expr::Pow(u, v) => u.contains_abs() || v.contains_abs(),
            Expr::Call(Func::Abs, _) => true,
            Expr::Call(_, u) => u.contains_abs(),
        }
    }

    fn d(&self) -> Expr {
        use Expr::*;
        match self {
            Num(_) => Num(0.0),
            Var => Num(1.0),
            Neg(u) => Neg(b(u.d())),
            Add(u, v) => Add(b(u.d()), b(v.d())),
            Sub(u, v) => Sub(b(u.d()), b(v.d())),
            Mul(u, v) => Add(
                b(Mul(b(u.d()), v.clone())),
                b(Mul(u.clone(), b(v.d()))),
            ),
            Div(u, v) => Div(
                b(Sub(b(Mul(b(u.d()), v.clone())), b(Mul(u.clone(), b(v.d()))))),
                b(Pow(v.clone(), b(Num(2.0)))),
            ),
            Pow(u, v) => match v.as_ref() {
                // Power rule for a constant exponent, valid on the whole
                // base domain.
                Num(c) => Mul(
                    b(Mul(b(Num(*c)), b(Pow(u.clone(), b(Num(c - 1.0)))))),
                    b(u.d()),
                ),
                // General exponent via u^v = exp(v·log u); needs u > 0.
                _ => Mul(
                    b(Pow(u.clone(), v.clone())),
                    b(Add(
                        b(Mul(b(v.d()), b(Call(Func::Log, u.clone())))),
                        b(Div(b(Mul(v.clone(), b(u.d()))), u.clone())),
                    )),
                ),
            },
            Call(Func::Sin, u) => Mul(b(Call(Func::Cos, u.clone())), b(u.d())),
            Call(Func::Cos, u) => Neg(b(Mul(b(Call(Func::Sin, u.clone())), b(u.d())))),
            Call(Func::Exp, u) => Mul(b(Call(Func::Exp, u.clone())), b(u.d())),
            Call(Func::Log, u) => Div(b(u.d()), u.clone()),
            Call(Func::Sqrt, u) => Div(
                b(u.d()),
                b(Mul(b(Num(2.0)), b(Call(Func::Sqrt, u.clone())))),
            ),
            Call(Func::Abs, _) => unreachable!("checked by differentiate"),
        }
    }
}

fn b(e: Expr) -> Box<Expr> {
    Box::new(e)
}

fn eval_pow(base: f64, exp: f64) -> Result<f64, Error> {
    let integral = exp.fract() == 0.0 && exp.abs() <= i32::MAX as f64;
    if base == 0.0 && exp < 0.0 {
        return Err(Error::Domain("zero to a negative power".into()));
    }
    if integral {
        Ok(base.powi(exp as i32))
    } else if base < 0.0 {
        Err(Error::Domain(format!("{} to non-integer power {}", base, exp)))
    } else {
        Ok(base.powf(exp))
    }
}

/// Bottom-up constant folding: numeric subtrees collapse, additive and
/// multiplicative identities drop out. No other rewriting.
fn fold(e: Expr) -> Expr {
    use Expr::*;
    let folded = match e {
        Num(_) | Var => return e,
        Neg(u) => Neg(b(fold(*u))),
        Add(u, v) => Add(b(fold(*u)), b(fold(*v))),
        Sub(u, v) => Sub(b(fold(*u)), b(fold(*v))),
        Mul(u, v) => Mul(b(fold(*u)), b(fold(*v))),
        Div(u, v) => Div(b(fold(*u)), b(fold(*v))),
        Pow(u, v) => Pow(b(fold(*u)), b(fold(*v))),
        Call(f, u) => Call(f, b(fold(*u))),
    };
    match folded {
        Neg(u) => match *u {
            Num(a) => Num(-a),
            Neg(w) => *w,
            other => Neg(b(other)),
        },
        Add(u, v) => match (*u, *v) {
            (Num(a), Num(c)) => Num(a + c),
            (Num(0.0), w) | (w, Num(0.0)) => w,
            (u, v) => Add(b(u), b(v)),
        },
        Sub(u, v) => match (*u, *v) {
            (Num(a), Num(c)) => Num(a - c),
            (w, Num(0.0)) => w,
            (Num(0.0), w) => fold(Neg(b(w))),
            (u, v) => Sub(b(u), b(v)),
        },
        Mul(u, v) => match (*u, *v) {
            (Num(a), Num(c)) => Num(a * c),
            (Num(0.0), _) | (_, Num(0.0)) => Num(0.0),
            (Num(1.0), w) | (w, Num(1.0)) => w,
            (u, v) => Mul(b(u), b(v)),
        },
        Div(u, v) => match (*u, *v) {
            (Num(a), Num(c)) if c != 0.0 => Num(a / c),
            (w, Num(1.0)) => w,
            (u, v) => Div(b(u), b(v)),
        },
        Pow(u, v) => match (*u, *v) {
            (Num(a), Num(c)) => match eval_pow(a, c) {
                Ok(r) if r.is_finite() => Num(r),
                _ => Pow(b(Num(a)), b(Num(c))),
            },
            (w, Num(1.0)) => w,
            (_, Num(0.0)) => Num(1.0),
            (u, v) => Pow(b(u), b(v)),
        },
        other => other,
    }
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn syntax(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Expr, Error> {
        let mut lhs = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if op == b'+' {
                Expr::Add(b(lhs), b(rhs))
            } else {
                Expr::Sub(b(lhs), b(rhs))
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, Error> {
        let mut lhs = self.factor()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.factor()?;
            lhs = if op == b'*' {
                Expr::Mul(b(lhs), b(rhs))
            } else {
                Expr::Div(b(lhs), b(rhs))
            };
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, Error> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let exp = self.factor()?;
            return Ok(Expr::Pow(b(base), b(exp)));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Expr, Error> {
        match self.peek() {
            None => Err(self.syntax("expected an expression")),
            Some(b'-') => {
                self.pos += 1;
                Ok(Expr::Neg(b(self.base()?)))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            Some(c) if c.is_ascii_alphabetic() => self.ident(),
            Some(_) => Err(self.syntax("expected number, 'x', function or '('")),
        }
    }

    fn expect(&mut self, want: u8) -> Result<(), Error> {
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(&format!("expected '{}'", want as char)))
        }
    }

    fn number(&mut self) -> Result<Expr, Error> {
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.input.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            if !self.input.get(self.pos).is_some_and(u8::is_ascii_digit) {
                return Err(self.syntax("expected digit after '.'"));
            }
            while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
        }
        if let Some(b'e' | b'E') = self.input.get(self.pos) {
            let mark = self.pos;
            self.pos += 1;
            if let Some(b'+' | b'-') = self.input.get(self.pos) {
                self.pos += 1;
            }
            if self.input.get(self.pos).is_some_and(u8::is_ascii_digit) {
                while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
            } else {
                // Not an exponent: `2e` could start an identifier-like
                // token, which is trailing garbage handled by the caller.
                self.pos = mark;
            }
        }
        let text = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        let value: f64 = text
            .parse()
            .map_err(|_| Error::Syntax { pos: start, msg: format!("bad number '{}'", text) })?;
        Ok(Expr::Num(value))
    }

    fn ident(&mut self) -> Result<Expr, Error> {
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        if name == "x" {
            return Ok(Expr::Var);
        }
        match Func::from_name(name) {
            Some(f) => {
                self.expect(b'(')?;
                let arg = self.expr()?;
                self.expect(b')')?;
                Ok(Expr::Call(f, b(arg)))
            }
            None => Err(Error::UnknownFunction { pos: start, name: name.into() }),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_prec(self, 1, f)
    }
}

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Pow(..) => 3,
        Expr::Num(_) | Expr::Var | Expr::Call(..) | Expr::Neg(_) => 4,
    }
}

fn fmt_prec(e: &Expr, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if prec(e) < min {
        write!(f, "(")?;
        fmt_prec(e, 1, f)?;
        return write!(f, ")");
    }
    match e {
        Expr::Num(c) => write!(f, "{}", c),
        Expr::Var => write!(f, "x"),
        Expr::Neg(u) => {
            write!(f, "-")?;
            // The grammar's unary minus takes a base.
            fmt_prec(u, 4, f)
        }
        Expr::Add(u, v) => {
            fmt_prec(u, 1, f)?;
            write!(f, " + ")?;
            fmt_prec(v, 2, f)
        }
        Expr::Sub(u, v) => {
            fmt_prec(u, 1, f)?;
            write!(f, " - ")?;
            fmt_prec(v, 2, f)
        }
        Expr::Mul(u, v) => {
            fmt_prec(u, 2, f)?;
            write!(f, "*")?;
            fmt_prec(v, 3, f)
        }
        Expr::Div(u, v) => {
            fmt_prec(u, 2, f)?;
            write!(f, "/")?;
            fmt_prec(v, 3, f)
        }
        Expr::Pow(u, v) => {
            fmt_prec(u, 4, f)?;
            write!(f, "^")?;
            fmt_prec(v, 3, f)
        }
        Expr::Call(func, u) => {
            write!(f, "{}(", func.name())?;
            fmt_prec(u, 1, f)?;
            write!(f, ")")
        }
    }
}
