//! Text form of polynomials and rational functions.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := base ('^' uint)?
//! base   := VAR | uint | '(' expr ')'
//! ```
//!
//! `/` is accepted only by the rational-function entry points.  Integer
//! literals are reduced into the prime field.  Over a non-prime `F_q` the
//! symbol `z` denotes the root of the canonical modulus, so that every
//! element has a printable form.  Printing emits exactly this grammar, so
//! output re-parses to the same value.

use super::fq::{FqElem, GaloisField};
use super::poly::{APoly, Poly, Var};
use super::ratfun::RatFun;
use super::ring::{Field, Ring};
use crate::{Error, Result};

/// Canonical text rendering in the parser's grammar.
pub trait Render {
    fn render(&self) -> String;

    /// A rendering that can stand as an operand of `*`.
    fn render_factor(&self) -> String {
        let s = self.render();
        if is_compound(&s) {
            format!("({s})")
        } else {
            s
        }
    }

    /// `self * mono` for a nonempty monomial text such as `x^3`.
    fn render_times(&self, mono: &str) -> String {
        format!("{}*{mono}", self.render_factor())
    }
}

fn is_compound(s: &str) -> bool {
    s.contains(['+', '-', '/'])
}

impl Render for FqElem {
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Render for RatFun {
    fn render(&self) -> String {
        let n = self.num().render();
        if self.is_poly() {
            return n;
        }
        let d = self.den().render();
        let n = if n.contains(['+', '-']) { format!("({n})") } else { n };
        let d = if d.contains(['+', '-', '*', '/']) { format!("({d})") } else { d };
        format!("{n}/{d}")
    }

    fn render_factor(&self) -> String {
        let s = self.render();
        if is_compound(&s) || s.contains('*') && !self.is_poly() {
            format!("({s})")
        } else {
            s
        }
    }

    fn render_times(&self, mono: &str) -> String {
        if self.is_poly() {
            return self.num().render_times(mono);
        }
        let head = if self.num().is_one_poly() { mono.to_string() } else { self.num().render_times(mono) };
        let d = self.den().render();
        let d = if d.contains(['+', '-', '*', '/']) { format!("({d})") } else { d };
        format!("{head}/{d}")
    }
}

impl<C: Ring + Render> Render for Poly<C> {
    fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let x = self.var().symbol();
        let mut parts = Vec::new();
        for (i, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => x.to_string(),
                _ => format!("{x}^{i}"),
            };
            parts.push(if i == 0 {
                c.render()
            } else if c.is_one() {
                mono
            } else {
                c.render_times(&mono)
            });
        }
        parts.join("+")
    }
}

// --- parser ------------------------------------------------------------------

#[derive(Debug, Clone)]
enum Expr {
    Num(u64),
    Var(char),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u64),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    allow_div: bool,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an unsigned integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        s.parse::<u64>().map_err(|_| Error::Syntax { pos: start, msg: "integer literal too large".into() })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(b'/') if self.allow_div => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(b'/') => return self.err("division is not allowed here"),
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let b = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.uint()?;
            return Ok(Expr::Pow(Box::new(b), e));
        }
        Ok(b)
    }

    fn base(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Num(self.uint()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                Ok(Expr::Var(c as char))
            }
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

fn parse_expr(text: &str, allow_div: bool) -> Result<Expr> {
    if !text.is_ascii() {
        let pos = text.char_indices().find(|(_, c)| !c.is_ascii()).map_or(0, |(i, _)| i);
        return Err(Error::Syntax { pos, msg: "non-ASCII input".into() });
    }
    let mut p = Parser { src: text.as_bytes(), pos: 0, allow_div };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

type DivFn<'a, R> = &'a dyn Fn(&R, &R) -> Result<R>;

fn eval<R: Ring>(e: &Expr, ctx: &R::Ctx, var: &dyn Fn(char) -> Option<R>, div: DivFn<'_, R>) -> Result<R> {
    Ok(match e {
        Expr::Num(n) => {
            let p = R::characteristic(ctx);
            R::from_int(ctx, (n % p) as i64)
        }
        Expr::Var(c) => var(*c).ok_or(Error::WrongVariable(*c))?,
        Expr::Add(a, b) => eval(a, ctx, var, div)?.add(&eval(b, ctx, var, div)?),
        Expr::Sub(a, b) => eval(a, ctx, var, div)?.sub(&eval(b, ctx, var, div)?),
        Expr::Mul(a, b) => eval(a, ctx, var, div)?.mul(&eval(b, ctx, var, div)?),
        Expr::Div(a, b) => div(&eval(a, ctx, var, div)?, &eval(b, ctx, var, div)?)?,
        Expr::Pow(a, k) => eval(a, ctx, var, div)?.pow(*k),
    })
}

fn no_div<R>(_: &R, _: &R) -> Result<R> {
    Err(Error::Internal("division node in a division-free parse".into()))
}

fn generator_symbol(field: &'static GaloisField, c: char) -> Option<FqElem> {
    (c == 'z' && field.m() > 1).then(|| field.generator())
}

/// Parses an element of `A = F_q[T]`.
pub fn parse_a_poly(text: &str, field: &'static GaloisField) -> Result<APoly> {
    let e = parse_expr(text, false)?;
    let ctx = Poly::<FqElem>::zero_in(field, Var::T).ctx();
    let var = |c: char| match c {
        'T' => Some(APoly::t(field)),
        _ => generator_symbol(field, c).map(|g| Poly::constant(g, Var::T)),
    };
    eval(&e, &ctx, &var, &no_div)
}

/// Parses an element of `F = F_q(T)`; `/` is allowed.
pub fn parse_ratfun(text: &str, field: &'static GaloisField) -> Result<RatFun> {
    let e = parse_expr(text, true)?;
    let var = |c: char| match c {
        'T' => Some(RatFun::t(field)),
        _ => generator_symbol(field, c).map(RatFun::from_fq),
    };
    let div = |a: &RatFun, b: &RatFun| a.div(b).ok_or(Error::DivisionByZero);
    eval(&e, &field, &var, &div)
}

/// Parses a polynomial in `x` with coefficients in `F`.  Division is by
/// elements of `F` only.
pub fn parse_x_poly(text: &str, field: &'static GaloisField) -> Result<Poly<RatFun>> {
    let e = parse_expr(text, true)?;
    let ctx = Poly::<RatFun>::zero_in(field, Var::X).ctx();
    let var = |c: char| match c {
        'x' => Some(Poly::var_in(field, Var::X)),
        'T' => Some(Poly::constant(RatFun::t(field), Var::X)),
        _ => generator_symbol(field, c).map(|g| Poly::constant(RatFun::from_fq(g), Var::X)),
    };
    let div = |a: &Poly<RatFun>, b: &Poly<RatFun>| match b.degree() {
        None => Err(Error::DivisionByZero),
        Some(0) => Ok(a.scale(&b.coeffs()[0].inv().expect("nonzero"))),
        Some(_) => Err(Error::InvalidArgument("division by a non-constant polynomial in x".into())),
    };
    eval(&e, &ctx, &var, &div)
}
