use num_traits::ToPrimitive;

use super::lexer::{tokenize, Tok, Token};
use super::{ParseError, ParseErrorKind};
use crate::scalars::Rational;

/// A named symbol of the expression language. Indices are 1-based and not
/// yet checked against any context.
#[derive(Clone, Debug, PartialEq)]
pub enum Symbol {
    /// `t` or `q`: the deformation parameter.
    Param,
    /// `i`, the imaginary unit (numeric contexts only).
    Imaginary,
    X(usize),
    D(usize),
    /// `f` (`None`) or `f_i`.
    F(Option<usize>),
    R(usize),
    S(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Rational(Rational),
    Float(f64),
    Symbol(Symbol),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    /// Ordered, noncommutative product.
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

/// Expression tree with the source position of each node.
#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub pos: usize,
    pub node: Node,
}

fn symbol(name: &str) -> Option<Symbol> {
    match name {
        "t" | "q" => return Some(Symbol::Param),
        "i" => return Some(Symbol::Imaginary),
        "f" => return Some(Symbol::F(None)),
        _ => {}
    }
    let (head, digits) = name.split_at(1);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return None;
    }
    let idx: usize = digits.parse().ok()?;
    match head {
        "x" => Some(Symbol::X(idx)),
        "d" => Some(Symbol::D(idx)),
        "f" => Some(Symbol::F(Some(idx))),
        "r" => Some(Symbol::R(idx)),
        "s" => Some(Symbol::S(idx)),
        _ => None,
    }
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

fn syntax(pos: usize, msg: impl Into<String>) -> ParseError {
    ParseError { pos, kind: ParseErrorKind::Syntax(msg.into()) }
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            let pos = self.peek().pos;
            let node = match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    Node::Add(Box::new(lhs), Box::new(self.product()?))
                }
                Tok::Minus => {
                    self.bump();
                    Node::Sub(Box::new(lhs), Box::new(self.product()?))
                }
                _ => return Ok(lhs),
            };
            lhs = Expr { pos, node };
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while self.peek().tok == Tok::Star {
            let pos = self.bump().pos;
            lhs = Expr { pos, node: Node::Mul(Box::new(lhs), Box::new(self.unary()?)) };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek().tok == Tok::Minus {
            let pos = self.bump().pos;
            return Ok(Expr { pos, node: Node::Neg(Box::new(self.unary()?)) });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let mut base = self.atom()?;
        while self.peek().tok == Tok::Caret {
            let pos = self.bump().pos;
            let e = self.exponent()?;
            base = Expr { pos, node: Node::Pow(Box::new(base), e) };
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let paren = self.peek().tok == Tok::LParen;
        if paren {
            self.bump();
        }
        let negative = self.peek().tok == Tok::Minus;
        if negative {
            self.bump();
        }
        let tok = self.bump();
        let value = match tok.tok {
            Tok::Int(v) => v.to_i64().filter(|v| *v <= u32::MAX as i64),
            _ => return Err(syntax(tok.pos, "expected an integer exponent")),
        }
        .ok_or_else(|| syntax(tok.pos, "exponent is too large"))?;
        if paren {
            let close = self.bump();
            if close.tok != Tok::RParen {
                return Err(syntax(close.pos, "expected ')'"));
            }
        }
        Ok(if negative { -value } else { value })
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let tok = self.bump();
        let node = match tok.tok {
            Tok::Int(v) => Node::Rational(Rational::from_integer(v)),
            Tok::Ratio(r) => Node::Rational(r),
            Tok::Float(f) => Node::Float(f),
            Tok::Ident(name) => match symbol(&name) {
                Some(s) => Node::Symbol(s),
                None => return Err(ParseError { pos: tok.pos, kind: ParseErrorKind::UnknownIdentifier(name) }),
            },
            Tok::LParen => {
                let inner = self.sum()?;
                let close = self.bump();
                if close.tok != Tok::RParen {
                    return Err(syntax(close.pos, "expected ')'"));
                }
                return Ok(inner);
            }
            Tok::Eof => return Err(syntax(tok.pos, "unexpected end of input")),
            other => return Err(syntax(tok.pos, format!("unexpected {}", describe(&other)))),
        };
        Ok(Expr { pos: tok.pos, node })
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Caret => "'^'",
        Tok::LParen => "'('",
        Tok::RParen => "')'",
        Tok::Eof => "end of input",
        _ => "token",
    }
}

/// Parses `src` into an expression tree.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: tokenize(src)?, at: 0 };
    let e = p.sum()?;
    let rest = p.peek();
    if rest.tok != Tok::Eof {
        let msg = match rest.tok {
            Tok::Ident(_) | Tok::Int(_) | Tok::Ratio(_) | Tok::Float(_) | Tok::LParen => {
                "expected an operator (products need an explicit '*')"
            }
            _ => "unexpected trailing input",
        };
        return Err(syntax(rest.pos, msg));
    }
    Ok(e)
}
