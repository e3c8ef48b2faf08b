//! A small expression language for closed-form recipes.
//!
//! ```text
//! program  := (`let` ident `=` expr `;`)* expr
//! expr     := term ((`+` | `-`) term)*
//! term     := unary ((`*` | `/`) unary)*
//! unary    := `-` unary | power
//! power    := atom (`^` unary)?
//! atom     := number | ident | ident `(` args `)` | `@`id [`(` name `=` expr, … `)`] | `(` expr `)`
//! ```
//!
//! Built-ins: `pi`, `sqrt(x)`, `root(x, k)` (real branch, odd `k` accepts
//! negative `x`), `cospi(r)` = cos(rπ) for rational `r`, `gamma(r)`,
//! `beta(r, s)`, `G(n)` (tabulated class invariant). `@id` evaluates another
//! registry entry. Integer and decimal literals stay exact rationals until
//! they meet an irrational operation.

use std::collections::HashMap;

use rug::ops::Pow;
use rug::Rational;

use crate::error::{Error, Result};
use crate::precision::{beta_rational, cos_rational_pi, gamma_ratio, Context, Ratio, Real};

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(Rational),
    Var(String),
    Neg(Box<Expr>),
    Bin(Op, Box<Expr>, Box<Expr>),
    Call(String, Vec<Expr>),
    Ref(String, Vec<(String, Expr)>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Program {
    pub bindings: Vec<(String, Expr)>,
    pub body: Expr,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Ref(String),
    Let,
    Sym(char),
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let err = |m: String| Error::Parse { line: 1, message: m };
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            out.push(Tok::Num(chars[start..i].iter().collect()));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            out.push(if word == "let" { Tok::Let } else { Tok::Ident(word) });
        } else if c == '@' {
            i += 1;
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '-' || chars[i] == '_') {
                i += 1;
            }
            if start == i {
                return Err(err("`@` must be followed by an id".into()));
            }
            out.push(Tok::Ref(chars[start..i].iter().collect()));
        } else if "+-*/^(),=;".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(err(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn err<T>(&self, m: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            line: 1,
            message: format!("{} (token {})", m.into(), self.pos),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn program(&mut self) -> Result<Program> {
        let mut bindings = Vec::new();
        while self.peek() == Some(&Tok::Let) {
            self.pos += 1;
            let name = match self.toks.get(self.pos) {
                Some(Tok::Ident(n)) => n.clone(),
                _ => return self.err("expected a name after `let`"),
            };
            self.pos += 1;
            self.expect('=')?;
            let value = self.expr()?;
            self.expect(';')?;
            bindings.push((name, value));
        }
        let body = self.expr()?;
        if self.pos != self.toks.len() {
            return self.err("trailing input");
        }
        Ok(Program { bindings, body })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = if self.eat('+') {
                Op::Add
            } else if self.eat('-') {
                Op::Sub
            } else {
                return Ok(lhs);
            };
            let rhs = self.term()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let op = if self.eat('*') {
                Op::Mul
            } else if self.eat('/') {
                Op::Div
            } else {
                return Ok(lhs);
            };
            let rhs = self.unary()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            let exp = self.unary()?;
            return Ok(Expr::Bin(Op::Pow, Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let tok = match self.peek() {
            Some(t) => t.clone(),
            None => return self.err("unexpected end of expression"),
        };
        self.pos += 1;
        match tok {
            Tok::Num(s) => parse_decimal(&s).map(Expr::Num),
            Tok::Ident(name) => {
                if self.eat('(') {
                    let mut args = Vec::new();
                    if !self.eat(')') {
                        loop {
                            args.push(self.expr()?);
                            if self.eat(')') {
                                break;
                            }
                            self.expect(',')?;
                        }
                    }
                    Ok(Expr::Call(name, args))
                } else {
                    Ok(Expr::Var(name))
                }
            }
            Tok::Ref(id) => {
                let mut args = Vec::new();
                if self.eat('(') {
                    loop {
                        let name = match self.toks.get(self.pos) {
                            Some(Tok::Ident(n)) => n.clone(),
                            _ => return self.err("expected `name = value` in reference arguments"),
                        };
                        self.pos += 1;
                        self.expect('=')?;
                        args.push((name, self.expr()?));
                        if self.eat(')') {
                            break;
                        }
                        self.expect(',')?;
                    }
                }
                Ok(Expr::Ref(id, args))
            }
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            other => self.err(format!("unexpected token {other:?}")),
        }
    }
}

fn parse_decimal(s: &str) -> Result<Rational> {
    let bad = || Error::Parse {
        line: 1,
        message: format!("bad number `{s}`"),
    };
    match s.split_once('.') {
        None => Rational::from_str_radix(s, 10).map_err(|_| bad()),
        Some((int, frac)) => {
            if frac.contains('.') {
                return Err(bad());
            }
            let digits = format!("{int}{frac}");
            let num = Rational::from_str_radix(&digits, 10).map_err(|_| bad())?;
            let scale = Rational::from(rug::Integer::from(10).pow(frac.len() as u32));
            Ok(num / scale)
        }
    }
}

pub fn parse(src: &str) -> Result<Program> {
    let toks = lex(src)?;
    Parser { toks, pos: 0 }.program()
}

/// Exact rational while possible, float once anything irrational enters.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(Rational),
    Approx(Real),
}

impl Value {
    pub fn to_real(&self, ctx: &Context) -> Real {
        match self {
            Value::Exact(r) => ctx.real(r),
            Value::Approx(x) => x.clone(),
        }
    }

    fn exact(&self) -> Option<&Rational> {
        match self {
            Value::Exact(r) => Some(r),
            Value::Approx(_) => None,
        }
    }
}

/// Everything the evaluator needs from outside the expression itself.
pub trait Env {
    fn context(&self) -> &Context;
    fn reference(&self, id: &str, args: &[(String, Value)]) -> Result<Real>;
    fn class_invariant(&self, n: Ratio) -> Result<Real>;
}

pub struct Evaluator<'a> {
    env: &'a dyn Env,
    id: &'a str,
    scope: HashMap<String, Value>,
}

impl<'a> Evaluator<'a> {
    pub fn new(env: &'a dyn Env, id: &'a str, params: &[(String, Value)]) -> Self {
        Evaluator {
            env,
            id,
            scope: params.iter().cloned().collect(),
        }
    }

    fn fail<T>(&self, reason: impl Into<String>) -> Result<T> {
        Err(Error::Construction {
            id: self.id.to_string(),
            reason: reason.into(),
        })
    }

    fn ctx(&self) -> &Context {
        self.env.context()
    }

    pub fn run(mut self, program: &Program) -> Result<Value> {
        for (name, e) in &program.bindings {
            let v = self.eval(e)?;
            self.scope.insert(name.clone(), v);
        }
        let v = self.eval(&program.body)?;
        if let Value::Approx(x) = &v {
            if !x.is_finite() {
                return self.fail("result is not finite");
            }
        }
        Ok(v)
    }

    fn eval(&self, e: &Expr) -> Result<Value> {
        match e {
            Expr::Num(r) => Ok(Value::Exact(r.clone())),
            Expr::Var(name) if name == "pi" => Ok(Value::Approx(self.ctx().pi())),
            Expr::Var(name) => match self.scope.get(name) {
                Some(v) => Ok(v.clone()),
                None => self.fail(format!("unbound name `{name}`")),
            },
            Expr::Neg(inner) => Ok(match self.eval(inner)? {
                Value::Exact(r) => Value::Exact(-r),
                Value::Approx(x) => Value::Approx(-x),
            }),
            Expr::Bin(op, l, r) => {
                let (l, r) = (self.eval(l)?, self.eval(r)?);
                self.binary(*op, l, r)
            }
            Expr::Call(name, args) => {
                let vals = args.iter().map(|a| self.eval(a)).collect::<Result<Vec<_>>>()?;
                self.call(name, &vals)
            }
            Expr::Ref(id, args) => {
                let vals = args
                    .iter()
                    .map(|(n, a)| Ok((n.clone(), self.eval(a)?)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Value::Approx(self.env.reference(id, &vals)?))
            }
        }
    }

    fn binary(&self, op: Op, l: Value, r: Value) -> Result<Value> {
        let ctx = self.ctx();
        if let (Some(a), Some(b)) = (l.exact(), r.exact()) {
            match op {
                Op::Add => return Ok(Value::Exact(Rational::from(a + b))),
                Op::Sub => return Ok(Value::Exact(Rational::from(a - b))),
                Op::Mul => return Ok(Value::Exact(Rational::from(a * b))),
                Op::Div => {
                    if *b == 0 {
                        return self.fail("division by zero");
                    }
                    return Ok(Value::Exact(Rational::from(a / b)));
                }
                Op::Pow => {
                    if let Some(k) = small_integer(b) {
                        if *a == 0 && k < 0 {
                            return self.fail("zero to a negative power");
                        }
                        return Ok(Value::Exact(a.clone().pow(k)));
                    }
                }
            }
        }
        let x = l.to_real(ctx);
        let out = match op {
            Op::Add => x + r.to_real(ctx),
            Op::Sub => x - r.to_real(ctx),
            Op::Mul => x * r.to_real(ctx),
            Op::Div => {
                let y = r.to_real(ctx);
                if y.is_zero() {
                    return self.fail("division by zero");
                }
                x / y
            }
            Op::Pow => match r.exact().and_then(small_integer) {
                Some(k) => x.pow(k),
                None => {
                    if x.is_sign_negative() && !x.is_zero() {
                        return self.fail(format!("negative base {:.6e} under a fractional power", x.to_f64()));
                    }
                    x.pow(r.to_real(ctx))
                }
            },
        };
        if !out.is_finite() {
            return self.fail(format!("{op:?} produced a non-finite value"));
        }
        Ok(Value::Approx(out))
    }

    fn call(&self, name: &str, args: &[Value]) -> Result<Value> {
        let ctx = self.ctx();
        let arity = |n: usize| -> Result<()> {
            if args.len() == n {
                Ok(())
            } else {
                self.fail(format!("`{name}` takes {n} argument(s), got {}", args.len()))
            }
        };
        let exact_arg = |i: usize| -> Result<&Rational> {
            match args[i].exact() {
                Some(r) => Ok(r),
                None => self.fail(format!("`{name}` needs an exact rational argument")),
            }
        };
        match name {
            "sqrt" => {
                arity(1)?;
                let x = args[0].to_real(ctx);
                if x < 0 {
                    return self.fail(format!("negative radicand {:.6e} under sqrt", x.to_f64()));
                }
                Ok(Value::Approx(x.sqrt()))
            }
            "root" => {
                arity(2)?;
                let k = match exact_arg(1).ok().and_then(small_integer) {
                    Some(k) if k > 0 => k as u32,
                    _ => return self.fail("root index must be a positive integer"),
                };
                let x = args[0].to_real(ctx);
                if x < 0 && k % 2 == 0 {
                    return self.fail(format!("negative radicand {:.6e} under an even root", x.to_f64()));
                }
                Ok(Value::Approx(x.root(k)))
            }
            "cospi" => {
                arity(1)?;
                let r = exact_arg(0)?;
                let num = r.numer().to_i64();
                let den = r.denom().to_u64();
                match (num, den) {
                    (Some(n), Some(d)) => Ok(Value::Approx(cos_rational_pi(n, d, ctx)?)),
                    _ => self.fail("cospi argument too large"),
                }
            }
            "gamma" => {
                arity(1)?;
                Ok(Value::Approx(gamma_ratio(exact_arg(0)?, ctx)?))
            }
            "beta" => {
                arity(2)?;
                Ok(Value::Approx(beta_rational(exact_arg(0)?, exact_arg(1)?, ctx)?))
            }
            "G" => {
                arity(1)?;
                let n = Ratio::try_from(exact_arg(0)?)?;
                Ok(Value::Approx(self.env.class_invariant(n)?))
            }
            _ => self.fail(format!("unknown function `{name}`")),
        }
    }
}

fn small_integer(r: &Rational) -> Option<i32> {
    if *r.denom() == 1 {
        r.numer().to_i32()
    } else {
        None
    }
}
