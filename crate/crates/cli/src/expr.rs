//! Expression front end: tokenizer, recursive-descent parser and lowering
//! into the exact polynomial types.
//!
//! Grammar (whitespace insignificant):
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ('^' natural)?
//! atom   := natural | variable | '(' expr ')' | '[' expr ',' expr ']'
//!         | '-' atom
//! ```
//! Juxtaposition is not multiplication: `z*y` needs the explicit `*`.
//! Division requires the divisor to lower to a nonzero element of the
//! coefficient field (a rational, or a rational function of `z` when the
//! field is `q(z)`). Commutator brackets `[f,g]` are free-algebra only.

use std::str::FromStr;
use std::sync::Arc;

use tamecheck_core::field::Field;
use tamecheck_core::freealg::FreePoly;
use tamecheck_core::ring::{CommPoly, VarContext};
use tamecheck_core::zpoly::ZPoly;
use tamecheck_core::{RatFunc, Rational};

#[derive(Clone, Debug, PartialEq)]
pub enum Ast {
    Num(Rational),
    Var(String),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
    Neg(Box<Ast>),
    Comm(Box<Ast>, Box<Ast>),
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(Rational),
    Ident(String),
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
}

fn tokenize(src: &str) -> Result<Vec<Token>, String> {
    let mut out = Vec::new();
    let bytes: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            '[' => {
                out.push(Token::LBracket);
                i += 1;
            }
            ']' => {
                out.push(Token::RBracket);
                i += 1;
            }
            ',' => {
                out.push(Token::Comma);
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = bytes[start..i].iter().collect();
                let n = Rational::from_str(&digits)
                    .map_err(|_| format!("malformed number {digits:?}"))?;
                out.push(Token::Num(n));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_')
                {
                    i += 1;
                }
                out.push(Token::Ident(bytes[start..i].iter().collect()));
            }
            other => return Err(format!("malformed token {other:?} at byte {i}")),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: &Token, what: &str) -> Result<(), String> {
        match self.bump() {
            Some(found) if &found == t => Ok(()),
            Some(found) => Err(format!("expected {what}, found {found:?}")),
            None => Err(format!("expected {what}, found end of input")),
        }
    }

    fn expr(&mut self) -> Result<Ast, String> {
        let mut acc = if matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            Ast::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = Ast::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = Ast::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Ast, String> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    acc = Ast::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Some(Token::Slash) => {
                    self.bump();
                    acc = Ast::Div(Box::new(acc), Box::new(self.factor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Ast, String> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            match self.bump() {
                Some(Token::Num(n)) => {
                    if !n.is_integer() {
                        return Err(format!("exponent {n} is not an integer"));
                    }
                    let e = u32::try_from(n.to_integer())
                        .map_err(|_| format!("exponent {n} out of range"))?;
                    Ok(Ast::Pow(Box::new(base), e))
                }
                other => Err(format!(
                    "expected a nonnegative integer exponent after '^', found {other:?}"
                )),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Ast, String> {
        match self.bump() {
            Some(Token::Num(n)) => Ok(Ast::Num(n)),
            Some(Token::Ident(name)) => Ok(Ast::Var(name)),
            Some(Token::Minus) => Ok(Ast::Neg(Box::new(self.atom()?))),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(&Token::RParen, "')'")?;
                Ok(inner)
            }
            Some(Token::LBracket) => {
                let lhs = self.expr()?;
                self.expect(&Token::Comma, "','")?;
                let rhs = self.expr()?;
                self.expect(&Token::RBracket, "']'")?;
                Ok(Ast::Comm(Box::new(lhs), Box::new(rhs)))
            }
            Some(other) => Err(format!("unexpected token {other:?}")),
            None => Err("unexpected end of input".to_string()),
        }
    }
}

pub fn parse(source: &str) -> Result<Ast, String> {
    let tokens = tokenize(source)?;
    let mut p = Parser { tokens, pos: 0 };
    let ast = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(format!("trailing input after expression: {:?}", p.tokens[p.pos]));
    }
    Ok(ast)
}

fn lower_comm_with<C: Field>(
    ast: &Ast,
    ctx: &Arc<VarContext>,
    resolve: &dyn Fn(&str) -> Option<CommPoly<C>>,
) -> Result<CommPoly<C>, String> {
    let go = |a: &Ast| lower_comm_with(a, ctx, resolve);
    match ast {
        Ast::Num(n) => Ok(CommPoly::constant(ctx, field_from_rational::<C>(n))),
        Ast::Var(name) => match ctx.index_of(name) {
            Some(i) => Ok(CommPoly::var(ctx, i)),
            None => resolve(name).ok_or_else(|| format!("unknown variable {name:?}")),
        },
        Ast::Add(a, b) => Ok(&go(a)? + &go(b)?),
        Ast::Sub(a, b) => Ok(&go(a)? - &go(b)?),
        Ast::Mul(a, b) => Ok(&go(a)? * &go(b)?),
        Ast::Div(a, b) => {
            let d = go(b)?;
            if !d.is_constant() || d.is_zero() {
                return Err(
                    "division is only defined by a nonzero element of the coefficient field"
                        .to_string(),
                );
            }
            Ok(go(a)?.scale(&d.constant_term().inv()))
        }
        Ast::Pow(a, e) => Ok(go(a)?.pow(*e)),
        Ast::Neg(a) => Ok(-&go(a)?),
        Ast::Comm(_, _) => {
            Err("commutator brackets are only defined in the free algebra".to_string())
        }
    }
}

fn field_from_rational<C: Field>(n: &Rational) -> C {
    // Arbitrary-precision literals are rebuilt digit by digit so any field
    // with `from_i64` can host them.
    let digits = |text: String| -> C {
        let (neg, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text.as_str()),
        };
        let mut acc = C::zero();
        let ten = C::from_i64(10);
        for ch in body.chars() {
            let d = i64::from(ch.to_digit(10).expect("digit"));
            acc = acc * ten.clone() + C::from_i64(d);
        }
        if neg {
            -acc
        } else {
            acc
        }
    };
    digits(n.numer().to_string()) / digits(n.denom().to_string())
}

/// Lower over `Q`, every declared variable a polynomial variable.
pub fn lower_comm(ast: &Ast, ctx: &Arc<VarContext>) -> Result<CommPoly<Rational>, String> {
    lower_comm_with(ast, ctx, &|_| None)
}

/// Lower over `Q(z)`: `ctx` excludes `z`, which lowers to the coefficient
/// `z` of the fraction field.
pub fn lower_comm_qz(ast: &Ast, ctx: &Arc<VarContext>) -> Result<CommPoly<RatFunc>, String> {
    lower_comm_with(ast, ctx, &|name| {
        (name == "z").then(|| CommPoly::constant(ctx, RatFunc::var()))
    })
}

/// Lower in the free algebra on the declared variables.
pub fn lower_free(ast: &Ast, ctx: &Arc<VarContext>) -> Result<FreePoly, String> {
    let go = |a: &Ast| lower_free(a, ctx);
    match ast {
        Ast::Num(n) => Ok(FreePoly::constant(ctx, n.clone())),
        Ast::Var(name) => ctx
            .index_of(name)
            .map(|i| FreePoly::var(ctx, i))
            .ok_or_else(|| format!("unknown variable {name:?}")),
        Ast::Add(a, b) => Ok(&go(a)? + &go(b)?),
        Ast::Sub(a, b) => Ok(&go(a)? - &go(b)?),
        Ast::Mul(a, b) => Ok(&go(a)? * &go(b)?),
        Ast::Div(a, b) => {
            let d = go(b)?;
            match d.as_constant() {
                Some(c) if !Field::is_zero(&c) => Ok(go(a)?.scale(&c.inv())),
                _ => Err(
                    "division is only defined by a nonzero element of the coefficient field"
                        .to_string(),
                ),
            }
        }
        Ast::Pow(a, e) => Ok(go(a)?.pow(*e)),
        Ast::Neg(a) => Ok(-&go(a)?),
        Ast::Comm(a, b) => Ok(FreePoly::commutator(&go(a)?, &go(b)?)),
    }
}

/// Parse-and-lower conveniences; all CLI input funnels through these.
pub fn comm_poly(src: &str, ctx: &Arc<VarContext>) -> Result<CommPoly<Rational>, String> {
    lower_comm(&parse(src)?, ctx).map_err(|e| format!("{src:?}: {e}"))
}

pub fn comm_poly_qz(src: &str, ctx: &Arc<VarContext>) -> Result<CommPoly<RatFunc>, String> {
    lower_comm_qz(&parse(src)?, ctx).map_err(|e| format!("{src:?}: {e}"))
}

pub fn free_poly(src: &str, ctx: &Arc<VarContext>) -> Result<FreePoly, String> {
    lower_free(&parse(src)?, ctx).map_err(|e| format!("{src:?}: {e}"))
}

/// Parse a univariate `K[z]` polynomial (entries of free affine
/// generators).
pub fn z_polynomial(src: &str) -> Result<ZPoly, String> {
    let ctx = VarContext::new(["z"]);
    let p = comm_poly(src, &ctx)?;
    let mut coeffs = Vec::new();
    for (m, c) in p.terms() {
        let k = m.exp(0) as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Rational::from_i64(0));
        }
        coeffs[k] = c.clone();
    }
    Ok(ZPoly::from_coeffs(coeffs))
}

/// Parse a coefficient of `Q(z)` (scales and matrix entries of `K(z)`
/// generator words).
pub fn ratfunc(src: &str) -> Result<RatFunc, String> {
    let ctx = VarContext::new(["__u"]);
    let p = comm_poly_qz(src, &ctx)?;
    if !p.is_constant() {
        return Err(format!("{src:?} is not a coefficient of Q(z)"));
    }
    Ok(p.constant_term())
}

/// Parse a plain rational coefficient.
pub fn rational(src: &str) -> Result<Rational, String> {
    let ctx = VarContext::new(["__u"]);
    let p = comm_poly(src, &ctx)?;
    if !p.is_constant() {
        return Err(format!("{src:?} is not a rational constant"));
    }
    Ok(p.constant_term())
}
