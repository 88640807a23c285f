use num_bigint::BigInt;

use super::{ParseError, ParseErrorKind};
use crate::scalars::Rational;

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Tok {
    Int(BigInt),
    /// `INT/INT`, read as one literal.
    Ratio(Rational),
    Float(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Eof,
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    /// Character offset in the source.
    pub pos: usize,
}

fn lexical(pos: usize, msg: impl Into<String>) -> ParseError {
    ParseError { pos, kind: ParseErrorKind::Lexical(msg.into()) }
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' | '\u{2212}' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token { tok, pos: start });
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(char::is_ascii_digit)) {
            let (tok, next) = number(&chars, i)?;
            out.push(Token { tok, pos: start });
            i = next;
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), pos: start });
            continue;
        }
        if c == '/' {
            return Err(lexical(start, "'/' is only allowed between two integers"));
        }
        return Err(lexical(start, format!("unexpected character {c:?}")));
    }
    out.push(Token { tok: Tok::Eof, pos: chars.len() });
    Ok(out)
}

fn digits(chars: &[char], mut i: usize) -> usize {
    while i < chars.len() && chars[i].is_ascii_digit() {
        i += 1;
    }
    i
}

fn number(chars: &[char], start: usize) -> Result<(Tok, usize), ParseError> {
    let mut i = digits(chars, start);
    let mut is_float = false;
    if i < chars.len() && chars[i] == '.' {
        is_float = true;
        i = digits(chars, i + 1);
    }
    if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
        let mut j = i + 1;
        if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
            j += 1;
        }
        if j < chars.len() && chars[j].is_ascii_digit() {
            is_float = true;
            i = digits(chars, j);
        }
    }
    let text: String = chars[start..i].iter().collect();
    if is_float {
        let v: f64 = text.parse().map_err(|_| lexical(start, format!("bad number {text:?}")))?;
        return Ok((Tok::Float(v), i));
    }
    let numer: BigInt = text.parse().map_err(|_| lexical(start, format!("bad integer {text:?}")))?;
    // INT/INT, whitespace allowed around the slash
    let mut j = i;
    while j < chars.len() && chars[j] == ' ' {
        j += 1;
    }
    if j < chars.len() && chars[j] == '/' {
        let mut k = j + 1;
        while k < chars.len() && chars[k] == ' ' {
            k += 1;
        }
        let end = digits(chars, k);
        if end == k {
            return Err(lexical(j, "'/' must be followed by an integer"));
        }
        let denom: BigInt = chars[k..end].iter().collect::<String>().parse().expect("digits");
        if denom == BigInt::from(0) {
            return Err(lexical(k, "division by zero"));
        }
        return Ok((Tok::Ratio(Rational::new(numer, denom)), end));
    }
    Ok((Tok::Int(numer), i))
}
