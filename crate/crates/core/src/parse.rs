//! Expression language for polynomials in `t`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | <adjacent '(' or 't'>) factor)*
//! factor := base ('^' uint)?
//! base   := int | int '/' int | 't' | 'sqrt' '(' ['-'] int ')' | '(' expr ')' | '-' factor
//! ```
//!
//! `^` binds tighter than unary minus, so `-t^2` is `-(t^2)`. The `sqrt`
//! form is accepted so that curves over a quadratic extension can be written
//! back in; [`parse_poly`] rejects anything that is not rational.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::Poly;
use crate::quad::QuadExt;
use crate::scalar::fmt_rational;
use crate::{QPoly, QuadPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownCharacter(char),
    Expected(String),
    BadExponent,
    ZeroDenominator,
    Irrational,
    MixedRadicals,
}

/// Parse failure with a 1-based line/column position.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    T,
    Sqrt,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "integer {n}"),
            Tok::T => write!(f, "`t`"),
            Tok::Sqrt => write!(f, "`sqrt`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn error(kind: ParseErrorKind, pos: Pos, message: impl Into<String>) -> ParseError {
    ParseError { kind, line: pos.line, column: pos.column, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut pos = Pos { line: 1, column: 1 };
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let here = pos;
        let mut advance = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().expect("peeked");
            if c == '\n' {
                pos.line += 1;
                pos.column = 1;
            } else {
                pos.column += 1;
            }
        };
        let tok = match c {
            c if c.is_whitespace() => {
                advance(&mut chars);
                continue;
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    digits.push(d);
                    advance(&mut chars);
                }
                out.push((Tok::Int(digits.parse().expect("ascii digits")), here));
                continue;
            }
            's' => {
                for expected in "sqrt".chars() {
                    if chars.peek() != Some(&expected) {
                        let found = chars.peek().copied().unwrap_or(' ');
                        return Err(error(
                            ParseErrorKind::UnknownCharacter(found),
                            pos,
                            format!("unknown character `{found}` (expected `sqrt`)"),
                        ));
                    }
                    advance(&mut chars);
                }
                out.push((Tok::Sqrt, here));
                continue;
            }
            't' => Tok::T,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(error(
                    ParseErrorKind::UnknownCharacter(other),
                    here,
                    format!("unknown character `{other}`"),
                ))
            }
        };
        advance(&mut chars);
        out.push((tok, here));
    }
    out.push((Tok::End, pos));
    Ok(out)
}

/// Syntax tree of a polynomial expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyExprAst {
    Int(BigInt),
    Rational(BigInt, BigInt),
    Var,
    Sqrt(BigInt),
    Neg(Box<PolyExprAst>),
    Sum(Box<PolyExprAst>, Box<PolyExprAst>),
    Difference(Box<PolyExprAst>, Box<PolyExprAst>),
    Product(Box<PolyExprAst>, Box<PolyExprAst>),
    Power(Box<PolyExprAst>, u32),
    Group(Box<PolyExprAst>),
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(error(
                ParseErrorKind::Expected(what.to_string()),
                self.pos(),
                format!("expected {what}, found {}", self.peek()),
            ))
        }
    }

    fn expr(&mut self) -> Result<PolyExprAst, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = PolyExprAst::Sum(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = PolyExprAst::Difference(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<PolyExprAst, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                }
                // implicit multiplication: 4(t-1), 3t, t(t+1), (t+1)(t-1)
                Tok::LParen | Tok::T | Tok::Sqrt => {}
                _ => return Ok(lhs),
            }
            lhs = PolyExprAst::Product(Box::new(lhs), Box::new(self.factor()?));
        }
    }

    fn factor(&mut self) -> Result<PolyExprAst, ParseError> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump().0 {
            Tok::Int(n) => {
                let e = u32::try_from(&n).map_err(|_| {
                    error(ParseErrorKind::BadExponent, pos, format!("exponent {n} is too large"))
                })?;
                Ok(PolyExprAst::Power(Box::new(base), e))
            }
            _ => Err(error(
                ParseErrorKind::BadExponent,
                pos,
                "exponent must be a nonnegative integer",
            )),
        }
    }

    fn base(&mut self) -> Result<PolyExprAst, ParseError> {
        let pos = self.pos();
        match self.bump().0 {
            Tok::Int(n) => {
                if *self.peek() != Tok::Slash {
                    return Ok(PolyExprAst::Int(n));
                }
                self.bump();
                let dpos = self.pos();
                match self.bump().0 {
                    Tok::Int(d) if d.is_zero() => {
                        Err(error(ParseErrorKind::ZeroDenominator, dpos, "zero denominator"))
                    }
                    Tok::Int(d) => Ok(PolyExprAst::Rational(n, d)),
                    other => Err(error(
                        ParseErrorKind::Expected("integer denominator".into()),
                        dpos,
                        format!("expected integer denominator, found {other}"),
                    )),
                }
            }
            Tok::T => Ok(PolyExprAst::Var),
            Tok::Sqrt => {
                self.expect(Tok::LParen, "`(` after sqrt")?;
                let negative = if *self.peek() == Tok::Minus {
                    self.bump();
                    true
                } else {
                    false
                };
                let ipos = self.pos();
                let n = match self.bump().0 {
                    Tok::Int(n) => n,
                    other => {
                        return Err(error(
                            ParseErrorKind::Expected("integer radicand".into()),
                            ipos,
                            format!("expected integer radicand, found {other}"),
                        ))
                    }
                };
                self.expect(Tok::RParen, "`)`")?;
                Ok(PolyExprAst::Sqrt(if negative { -n } else { n }))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(PolyExprAst::Group(Box::new(inner)))
            }
            Tok::Minus => Ok(PolyExprAst::Neg(Box::new(self.factor()?))),
            other => Err(error(
                ParseErrorKind::Expected("a number, `t` or `(`".into()),
                pos,
                format!("expected a number, `t` or `(`, found {other}"),
            )),
        }
    }
}

/// Parses text into a syntax tree.
pub fn parse_ast(text: &str) -> Result<PolyExprAst, ParseError> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let ast = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(error(
            ParseErrorKind::Expected("operator or end of input".into()),
            p.pos(),
            format!("unexpected {}", p.peek()),
        ));
    }
    Ok(ast)
}

fn eval(ast: &PolyExprAst) -> Result<QuadPoly, String> {
    use PolyExprAst::*;
    let checked = |a: &QuadPoly, b: &QuadPoly| -> Result<(), String> {
        QuadExt::common_radicand(a.coeffs().iter().chain(b.coeffs()))
            .map(|_| ())
            .map_err(|e| e.to_string())
    };
    Ok(match ast {
        Int(n) => Poly::constant(QuadExt::rational(BigRational::from_integer(n.clone()))),
        Rational(n, d) => Poly::constant(QuadExt::rational(BigRational::new(n.clone(), d.clone()))),
        Var => Poly::t(),
        Sqrt(n) => Poly::constant(
            QuadExt::new(BigRational::zero(), BigRational::one(), n.clone()).map_err(|e| e.to_string())?,
        ),
        Neg(x) => -eval(x)?,
        Group(x) => eval(x)?,
        Sum(a, b) | Difference(a, b) | Product(a, b) => {
            let (a2, b2) = (eval(a)?, eval(b)?);
            checked(&a2, &b2)?;
            match ast {
                Sum(..) => &a2 + &b2,
                Difference(..) => &a2 - &b2,
                _ => &a2 * &b2,
            }
        }
        Power(x, e) => {
            let x = eval(x)?;
            x.pow(*e)
        }
    })
}

/// Parses an expression whose coefficients may involve one `sqrt(D)`.
pub fn parse_poly_ext(text: &str) -> Result<QuadPoly, ParseError> {
    let ast = parse_ast(text)?;
    eval(&ast).map_err(|m| error(ParseErrorKind::MixedRadicals, Pos { line: 1, column: 1 }, m))
}

/// Parses an expression in `t` into an exact rational polynomial.
pub fn parse_poly(text: &str) -> Result<QPoly, ParseError> {
    parse_poly_ext(text)?.to_rational().ok_or_else(|| {
        error(
            ParseErrorKind::Irrational,
            Pos { line: 1, column: 1 },
            "expected a polynomial with rational coefficients",
        )
    })
}

fn power(k: usize) -> String {
    match k {
        0 => String::new(),
        1 => "t".to_string(),
        k => format!("t^{k}"),
    }
}

/// Canonical descending-power rendering, e.g. `15*t^2 - 3`.
pub fn format_poly(p: &QPoly) -> String {
    let terms = p
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let negative = c.is_negative();
            let mag = c.abs();
            let body = match (k, mag.is_one()) {
                (0, _) => fmt_rational(&mag),
                (_, true) => power(k),
                _ => format!("{}*{}", fmt_rational(&mag), power(k)),
            };
            (negative, body)
        });
    join_terms(terms)
}

/// Like [`format_poly`] for coefficients in a quadratic extension.
pub fn format_poly_ext(p: &QuadPoly) -> String {
    if let Some(r) = p.to_rational() {
        return format_poly(&r);
    }
    let terms = p
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            if let Some(r) = c.to_rational() {
                let mag = r.abs();
                let body = match (k, mag.is_one()) {
                    (0, _) => fmt_rational(&mag),
                    (_, true) => power(k),
                    _ => format!("{}*{}", fmt_rational(&mag), power(k)),
                };
                return (r.is_negative(), body);
            }
            let rad = format!("sqrt({})", c.radicand());
            let b = c.irrational_part();
            if c.rational_part().is_zero() {
                let mag = b.abs();
                let scalar =
                    if mag.is_one() { rad } else { format!("{}*{}", fmt_rational(&mag), rad) };
                let body = if k == 0 { scalar } else { format!("{scalar}*{}", power(k)) };
                (b.is_negative(), body)
            } else {
                let body = if k == 0 { format!("({c})") } else { format!("({c})*{}", power(k)) };
                (false, body)
            }
        });
    join_terms(terms)
}

fn join_terms(terms: impl Iterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (negative, body) in terms {
        match (out.is_empty(), negative) {
            (true, false) => {}
            (true, true) => out.push('-'),
            (false, false) => out.push_str(" + "),
            (false, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Poly<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self))
    }
}

impl fmt::Display for Poly<QuadExt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly_ext(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn parses_the_quintic_product() {
        let a = parse_poly("4*(t-1)*t*(t+1)*(3*t-1)*(3*t+2)").unwrap();
        assert_eq!(a, p(&[0, 8, -12, -44, 12, 36]));
        // the implicit-multiplication spelling gives the same value
        assert_eq!(parse_poly("4(t-1)t(t+1)(3t-1)(3t+2)").unwrap(), a);
        assert_eq!(parse_poly("6*(4*t^2+t-1)").unwrap(), p(&[-6, 6, 24]));
    }

    #[test]
    fn precedence_and_literals() {
        assert_eq!(parse_poly("-t^2").unwrap(), p(&[0, 0, -1]));
        assert_eq!(parse_poly("(-t)^2").unwrap(), p(&[0, 0, 1]));
        assert_eq!(parse_poly("2/3*t^3 - 2/3*t").unwrap(), QPoly::new(vec![int(0), rat(-2, 3), int(0), rat(2, 3)]));
        assert_eq!(parse_poly("2 - -t").unwrap(), p(&[2, 1]));
        assert_eq!(parse_poly("t^0").unwrap(), p(&[1]));
        assert_eq!(parse_poly("(t+1)(t-1)").unwrap(), p(&[-1, 0, 1]));
    }

    #[test]
    fn rejects_bad_exponents() {
        let e = parse_poly("t^(-1)").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::BadExponent);
        assert_eq!((e.line, e.column), (1, 3));
        assert!(e.to_string().contains("nonnegative integer"));
        assert_eq!(parse_poly("t^-1").unwrap_err().kind, ParseErrorKind::BadExponent);
        assert_eq!(parse_poly("t^t").unwrap_err().kind, ParseErrorKind::BadExponent);
    }

    #[test]
    fn positioned_errors() {
        let e = parse_poly("t + x").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownCharacter('x'));
        assert_eq!((e.line, e.column), (1, 5));
        let e = parse_poly("t +\n (t").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Expected(_)));
        assert_eq!((e.line, e.column), (2, 4));
        assert_eq!(parse_poly("1/0").unwrap_err().kind, ParseErrorKind::ZeroDenominator);
        assert!(parse_poly("").is_err());
        assert!(parse_poly("t t2").is_err());
        assert!(parse_poly("t/3").is_err());
    }

    #[test]
    fn sqrt_literals() {
        let q = parse_poly_ext("sqrt(-1)*t").unwrap();
        assert_eq!(q.coeff(1), QuadExt::sqrt_of(-1).unwrap());
        assert_eq!(parse_poly("sqrt(-1)*t").unwrap_err().kind, ParseErrorKind::Irrational);
        assert_eq!(parse_poly("sqrt(4)*t").unwrap(), p(&[0, 2]));
        assert_eq!(parse_poly_ext("sqrt(2)+sqrt(3)").unwrap_err().kind, ParseErrorKind::MixedRadicals);
    }

    #[test]
    fn format_examples() {
        assert_eq!(format_poly(&QPoly::zero()), "0");
        assert_eq!(format_poly(&p(&[-3, 0, 15])), "15*t^2 - 3");
        assert_eq!(format_poly(&p(&[0, 1])), "t");
        assert_eq!(format_poly(&p(&[0, 0, -1])), "-t^2");
        assert_eq!(format_poly(&QPoly::new(vec![rat(-1, 2), int(0), rat(2, 3)])), "2/3*t^2 - 1/2");
    }

    #[test]
    fn format_ext_round_trips() {
        for text in ["sqrt(-1)*t", "-1/2*sqrt(2)*t^2 + 3", "(1 + sqrt(5))*t - sqrt(5)", "t^2 + 2"] {
            let q = parse_poly_ext(text).unwrap();
            assert_eq!(parse_poly_ext(&format_poly_ext(&q)).unwrap(), q, "{text}");
        }
        assert_eq!(format_poly_ext(&parse_poly_ext("1/2*sqrt(2)*t^2").unwrap()), "1/2*sqrt(2)*t^2");
    }

    fn arb_rational_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec((-50i64..=50, 1i64..=12), 0..=9)
            .prop_map(|c| QPoly::new(c.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn round_trip(q in arb_rational_poly()) {
            prop_assert_eq!(parse_poly(&format_poly(&q)).unwrap(), q);
        }
    }

    proptest! {
        #[test]
        fn garbage_never_panics(s in "[t0-9+*/^() -]{0,20}") {
            let _ = parse_poly(&s);
        }
    }
}
