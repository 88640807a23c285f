//! Text format for algebra elements and center polynomials.
//!
//! Grammar, loosest binding first: `+`/`-` (left), `*` (left, explicit and
//! order-preserving), unary `-`, `^` with an integer exponent. Atoms are
//! integers, `INT/INT` rationals, parenthesized expressions and the symbols
//! `t`, `q`, `x1..`, `d1..`, `f`, `f1..`, `r1..`, `s1..`. Floats and `i` are
//! accepted only over the floating complex numbers.

mod lexer;
mod parser;

use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

pub use parser::{parse_expr, Expr, Node, Symbol};

use crate::center::CenterPoly;
use crate::scalars::{ComplexField, CyclotomicField, JetRing, LaurentRing, Rational, RationalField, Ring};
use crate::weyl::{WeylAlgebra, WeylElement};

#[derive(Clone, Debug, PartialEq)]
pub enum ParseErrorKind {
    Lexical(String),
    Syntax(String),
    UnknownIdentifier(String),
    IndexOutOfRange { symbol: String, n: usize },
    NegativePower(String),
    NotAllowed(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Lexical(m) => write!(f, "lexical error: {m}"),
            Self::Syntax(m) => write!(f, "syntax error: {m}"),
            Self::UnknownIdentifier(s) => write!(f, "unknown identifier {s:?}"),
            Self::IndexOutOfRange { symbol, n } => write!(f, "{symbol} is out of range for n = {n}"),
            Self::NegativePower(m) => write!(f, "negative power of a non-unit: {m}"),
            Self::NotAllowed(m) => write!(f, "{m}"),
        }
    }
}

/// A parse or evaluation failure with its character offset.
#[derive(Clone, Debug, PartialEq, Error)]
#[error("{kind} (at column {})", .pos + 1)]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn at(pos: usize, kind: ParseErrorKind) -> Self {
        Self { pos, kind }
    }
}

/// Ring-specific literal support for the evaluator.
pub trait Literals: Ring {
    fn float_literal(&self, _x: f64) -> Option<Self::Elem> {
        None
    }
    fn imaginary_unit(&self) -> Option<Self::Elem> {
        None
    }
    /// The value of `t`/`q` in a center polynomial, if the ring has one.
    fn parameter(&self) -> Option<Self::Elem> {
        None
    }
    /// The level `l` when `r_i`, `s_i` may be read as `d_i^l`, `x_i^l`.
    fn center_level(&self) -> Option<u32> {
        None
    }
}

impl Literals for RationalField {}

impl<R: Ring> Literals for LaurentRing<R> {
    fn parameter(&self) -> Option<Self::Elem> {
        Some(self.t())
    }
}

impl<R: Ring> Literals for JetRing<R> {}

impl Literals for CyclotomicField {
    fn parameter(&self) -> Option<Self::Elem> {
        Some(self.zeta())
    }
    fn center_level(&self) -> Option<u32> {
        Some(self.level())
    }
}

impl Literals for ComplexField {
    fn float_literal(&self, x: f64) -> Option<Complex64> {
        Some(Complex64::new(x, 0.0))
    }
    fn imaginary_unit(&self) -> Option<Complex64> {
        Some(Complex64::i())
    }
}

/// Largest exponent accepted by the evaluator.
pub const MAX_EXPONENT: u64 = 1 << 16;

trait Target {
    type Value;
    type R: Literals;
    fn ring(&self) -> &Self::R;
    fn constant(&self, c: <Self::R as Ring>::Elem) -> Self::Value;
    fn symbol(&self, s: &Symbol, pos: usize) -> Result<Self::Value, ParseError>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn pow(&self, a: &Self::Value, k: u32) -> Self::Value;
    fn as_scalar(&self, a: &Self::Value) -> Option<<Self::R as Ring>::Elem>;
}

fn eval<T: Target>(target: &T, e: &Expr) -> Result<T::Value, ParseError> {
    let ring = target.ring();
    Ok(match &e.node {
        Node::Rational(r) => target.constant(ring.from_rational(r)),
        Node::Float(x) => match ring.float_literal(*x) {
            Some(c) => target.constant(c),
            None => {
                return Err(ParseError::at(e.pos, ParseErrorKind::NotAllowed("float literals need a numeric context".into())))
            }
        },
        Node::Symbol(s) => target.symbol(s, e.pos)?,
        Node::Neg(a) => target.neg(&eval(target, a)?),
        Node::Add(a, b) => target.add(&eval(target, a)?, &eval(target, b)?),
        Node::Sub(a, b) => target.sub(&eval(target, a)?, &eval(target, b)?),
        Node::Mul(a, b) => target.mul(&eval(target, a)?, &eval(target, b)?),
        Node::Pow(a, k) => {
            if k.unsigned_abs() > MAX_EXPONENT {
                return Err(ParseError::at(e.pos, ParseErrorKind::NotAllowed(format!("exponent {k} exceeds {MAX_EXPONENT}"))));
            }
            let base = eval(target, a)?;
            if *k >= 0 {
                target.pow(&base, *k as u32)
            } else {
                let inv = target
                    .as_scalar(&base)
                    .and_then(|c| ring.try_inv(&c))
                    .ok_or_else(|| ParseError::at(e.pos, ParseErrorKind::NegativePower(format!("exponent {k}"))))?;
                target.constant(ring.pow(&inv, k.unsigned_abs()))
            }
        }
    })
}

struct WeylTarget<'a, R: Literals> {
    alg: &'a WeylAlgebra<R>,
}

fn index_error(sym: &Symbol, pos: usize, n: usize) -> ParseError {
    let name = match sym {
        Symbol::X(i) => format!("x{i}"),
        Symbol::D(i) => format!("d{i}"),
        Symbol::F(Some(i)) => format!("f{i}"),
        Symbol::R(i) => format!("r{i}"),
        Symbol::S(i) => format!("s{i}"),
        _ => "symbol".into(),
    };
    ParseError::at(pos, ParseErrorKind::IndexOutOfRange { symbol: name, n })
}

impl<R: Literals> Target for WeylTarget<'_, R> {
    type Value = WeylElement<R>;
    type R = R;
    fn ring(&self) -> &R {
        self.alg.ring()
    }
    fn constant(&self, c: R::Elem) -> WeylElement<R> {
        self.alg.scalar(c)
    }
    fn symbol(&self, s: &Symbol, pos: usize) -> Result<WeylElement<R>, ParseError> {
        let n = self.alg.n();
        let check = |i: usize| if i >= 1 && i <= n { Ok(i) } else { Err(index_error(s, pos, n)) };
        Ok(match s {
            Symbol::Param => self.alg.scalar(self.alg.param().clone()),
            Symbol::Imaginary => match self.ring().imaginary_unit() {
                Some(c) => self.alg.scalar(c),
                None => return Err(ParseError::at(pos, ParseErrorKind::NotAllowed("'i' needs a numeric context".into()))),
            },
            Symbol::X(i) => self.alg.x(check(*i)?),
            Symbol::D(i) => self.alg.d(check(*i)?),
            Symbol::F(None) => self.alg.f_element(),
            Symbol::F(Some(i)) => self.alg.f_i(check(*i)?).expect("index checked"),
            Symbol::R(i) | Symbol::S(i) => {
                let i = check(*i)?;
                let l = self.ring().center_level().ok_or_else(|| {
                    ParseError::at(pos, ParseErrorKind::NotAllowed("r_i and s_i need a root-of-unity context".into()))
                })?;
                let g = if matches!(s, Symbol::R(_)) { self.alg.d(i) } else { self.alg.x(i) };
                g.pow(l)
            }
        })
    }
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        a + b
    }
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        a - b
    }
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        a * b
    }
    fn neg(&self, a: &Self::Value) -> Self::Value {
        -a
    }
    fn pow(&self, a: &Self::Value, k: u32) -> Self::Value {
        a.pow(k)
    }
    fn as_scalar(&self, a: &Self::Value) -> Option<R::Elem> {
        a.as_scalar()
    }
}

struct CenterTarget<R: Literals> {
    ring: R,
    n: usize,
}

impl<R: Literals> Target for CenterTarget<R> {
    type Value = CenterPoly<R>;
    type R = R;
    fn ring(&self) -> &R {
        &self.ring
    }
    fn constant(&self, c: R::Elem) -> CenterPoly<R> {
        CenterPoly::constant(self.ring.clone(), self.n, c)
    }
    fn symbol(&self, s: &Symbol, pos: usize) -> Result<CenterPoly<R>, ParseError> {
        let not_allowed = |what: &str| ParseError::at(pos, ParseErrorKind::NotAllowed(format!("{what} is not allowed in a center polynomial")));
        match s {
            Symbol::R(i) => CenterPoly::r(self.ring.clone(), self.n, *i).map_err(|_| index_error(s, pos, self.n)),
            Symbol::S(i) => CenterPoly::s(self.ring.clone(), self.n, *i).map_err(|_| index_error(s, pos, self.n)),
            Symbol::Param => self.ring.parameter().map(|c| self.constant(c)).ok_or_else(|| not_allowed("the parameter")),
            Symbol::Imaginary => self.ring.imaginary_unit().map(|c| self.constant(c)).ok_or_else(|| not_allowed("'i'")),
            Symbol::X(_) | Symbol::D(_) => Err(not_allowed("x_i or d_i")),
            Symbol::F(_) => Err(not_allowed("f")),
        }
    }
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        a + b
    }
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        a - b
    }
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        a * b
    }
    fn neg(&self, a: &Self::Value) -> Self::Value {
        -a
    }
    fn pow(&self, a: &Self::Value, k: u32) -> Self::Value {
        a.pow(k)
    }
    fn as_scalar(&self, a: &Self::Value) -> Option<R::Elem> {
        match a.num_terms() {
            0 => Some(self.ring.zero()),
            1 => a.terms().next().filter(|(m, _)| m.is_one()).map(|(_, c)| c.clone()),
            _ => None,
        }
    }
}

/// Parses and normalizes an element of `alg`.
pub fn parse_weyl<R: Literals>(src: &str, alg: &WeylAlgebra<R>) -> Result<WeylElement<R>, ParseError> {
    eval(&WeylTarget { alg }, &parse_expr(src)?)
}

/// Parses a polynomial in `r_1..r_n, s_1..s_n` with coefficients in `ring`.
pub fn parse_center_over<R: Literals>(src: &str, ring: R, n: usize) -> Result<CenterPoly<R>, ParseError> {
    eval(&CenterTarget { ring, n }, &parse_expr(src)?)
}

/// Parses a rational center polynomial.
pub fn parse_center(src: &str, n: usize) -> Result<CenterPoly<RationalField>, ParseError> {
    parse_center_over(src, RationalField, n)
}

/// Parses a single scalar of `ring`, such as `3/2` or `1 - q`.
pub fn parse_scalar<R: Literals>(src: &str, ring: R) -> Result<R::Elem, ParseError> {
    let p = parse_center_over(src, ring, 1)?;
    let ring = p.ring().clone();
    CenterTarget { ring, n: 1 }
        .as_scalar(&p)
        .ok_or_else(|| ParseError::at(0, ParseErrorKind::NotAllowed("expected a scalar".into())))
}

/// Canonical text of an element.
pub fn print_weyl<R: Ring>(a: &WeylElement<R>) -> String {
    a.to_text()
}

/// Canonical text of a center polynomial.
pub fn print_center<R: Ring>(p: &CenterPoly<R>) -> String {
    p.to_text()
}

/// Shorthand used by tests and the CLI.
pub fn rational(src: &str) -> Result<Rational, ParseError> {
    parse_scalar(src, RationalField)
}

#[cfg(test)]
mod tests;
