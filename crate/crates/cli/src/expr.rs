//! A small infix grammar for ring elements.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*'? unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' '-'? integer)?
//! primary := integer | 'z' | 'λ' | 'l' | 'lambda' | 'h' | '(' expr ')'
//! ```
//!
//! Juxtaposition multiplies, so printed normal forms such as `2 - 2λ` or
//! `1 - 3z + 3z^2 - z^3` parse back. Negative exponents are accepted only on
//! units.

use std::fmt;

use monopole_core::{BigInt, LaurentPoly, PinRingElem};
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    Z,
    Lambda,
    H,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Node {
    Int(BigInt),
    Var(Var, usize),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Neg(Box<Node>),
    Pow(Box<Node>, i64, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().expect("ascii digits")), column));
        } else if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_alphabetic() {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), column));
        } else if "+-*^()".contains(c) {
            out.push((Tok::Sym(c), column));
            i += 1;
        } else if c == '−' {
            out.push((Tok::Sym('-'), column));
            i += 1;
        } else {
            return Err(ParseError {
                column,
                message: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_column: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_column, |(_, c)| *c)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            column: self.column(),
            message: message.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Node, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Node::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Node::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Node, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let juxtaposed = matches!(
                self.peek(),
                Some(Tok::Int(_) | Tok::Ident(_) | Tok::Sym('('))
            );
            if self.eat('*') || juxtaposed {
                lhs = Node::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Node, ParseError> {
        if self.eat('-') {
            return Ok(Node::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Node, ParseError> {
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let column = self.column();
        let negative = self.eat('-');
        let Some(Tok::Int(n)) = self.peek().cloned() else {
            return self.error("expected an integer exponent");
        };
        self.pos += 1;
        let n = if negative { -n } else { n };
        let Some(exp) = n.to_i64() else {
            return Err(ParseError {
                column,
                message: "exponent out of range".into(),
            });
        };
        Ok(Node::Pow(Box::new(base), exp, column))
    }

    fn primary(&mut self) -> Result<Node, ParseError> {
        let column = self.column();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Node::Int(n))
            }
            Some(Tok::Ident(name)) => {
                let var = match name.as_str() {
                    "z" => Var::Z,
                    "λ" | "l" | "lambda" => Var::Lambda,
                    "h" => Var::H,
                    _ => return self.error(format!("unknown symbol {name:?}")),
                };
                self.pos += 1;
                Ok(Node::Var(var, column))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.error("expected ')'");
                }
                Ok(inner)
            }
            Some(Tok::Sym(c)) => self.error(format!("unexpected {c:?}")),
            None => self.error("unexpected end of input"),
        }
    }
}

fn parse(input: &str) -> Result<Node, ParseError> {
    let toks = tokenize(input)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end_column: input.chars().count() + 1,
    };
    let node = p.expr()?;
    if p.pos < p.toks.len() {
        return p.error("unexpected trailing input");
    }
    Ok(node)
}

/// The operations the evaluator needs from a ring.
trait Ring: Sized + Clone {
    const NAME: &'static str;
    fn from_int(n: BigInt) -> Self;
    fn var(v: Var) -> Option<Self>;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn pow(&self, e: u32) -> Self;
    /// Inverse, if `self` is a unit.
    fn unit_inverse(&self) -> Option<Self>;
}

impl Ring for LaurentPoly {
    const NAME: &'static str = "R(T)";
    fn from_int(n: BigInt) -> Self {
        LaurentPoly::constant(n)
    }
    fn var(v: Var) -> Option<Self> {
        (v == Var::Z).then(LaurentPoly::z)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn pow(&self, e: u32) -> Self {
        LaurentPoly::pow(self, e)
    }
    fn unit_inverse(&self) -> Option<Self> {
        let mut terms = self.terms();
        let (exp, c) = terms.next()?;
        (terms.next().is_none() && c.abs().is_one()).then(|| LaurentPoly::monomial(c.clone(), -exp))
    }
}

impl Ring for PinRingElem {
    const NAME: &'static str = "R(Pin(2))";
    fn from_int(n: BigInt) -> Self {
        PinRingElem::constant(n)
    }
    fn var(v: Var) -> Option<Self> {
        match v {
            Var::Lambda => Some(PinRingElem::lambda()),
            Var::H => Some(PinRingElem::h()),
            Var::Z => None,
        }
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn pow(&self, e: u32) -> Self {
        PinRingElem::pow(self, e)
    }
    fn unit_inverse(&self) -> Option<Self> {
        // the units are ±1 and ±λ, each its own inverse
        let square = self * self;
        (square == PinRingElem::one()).then(|| self.clone())
    }
}

fn eval<R: Ring>(node: &Node) -> Result<R, ParseError> {
    Ok(match node {
        Node::Int(n) => R::from_int(n.clone()),
        Node::Var(v, column) => R::var(*v).ok_or_else(|| ParseError {
            column: *column,
            message: format!("{} is not a generator of {}", var_name(*v), R::NAME),
        })?,
        Node::Add(a, b) => eval::<R>(a)?.add(&eval::<R>(b)?),
        Node::Sub(a, b) => eval::<R>(a)?.sub(&eval::<R>(b)?),
        Node::Mul(a, b) => eval::<R>(a)?.mul(&eval::<R>(b)?),
        Node::Neg(a) => R::from_int(BigInt::zero()).sub(&eval::<R>(a)?),
        Node::Pow(base, exp, column) => {
            let base = eval::<R>(base)?;
            let base = if *exp < 0 {
                base.unit_inverse().ok_or_else(|| ParseError {
                    column: *column,
                    message: format!("negative power of a non-unit of {}", R::NAME),
                })?
            } else {
                base
            };
            let e = u32::try_from(exp.unsigned_abs()).map_err(|_| ParseError {
                column: *column,
                message: "exponent out of range".into(),
            })?;
            base.pow(e)
        }
    })
}

fn var_name(v: Var) -> &'static str {
    match v {
        Var::Z => "z",
        Var::Lambda => "λ",
        Var::H => "h",
    }
}

pub fn parse_t(input: &str) -> Result<LaurentPoly, ParseError> {
    eval(&parse(input)?)
}

pub fn parse_pin(input: &str) -> Result<PinRingElem, ParseError> {
    eval(&parse(input)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(parse_pin("(1-λ)^2").unwrap().to_string(), "2 - 2λ");
        assert_eq!(parse_pin("h*(1-λ)").unwrap().to_string(), "0");
        assert_eq!(
            parse_t("(1-z)^3").unwrap().to_string(),
            "1 - 3z + 3z^2 - z^3"
        );
        assert_eq!(parse_t("z^-1 + z").unwrap().to_string(), "z^-1 + z");
        assert_eq!(parse_pin("lambda^-3").unwrap(), PinRingElem::lambda());
        assert_eq!(parse_pin("-l h").unwrap().to_string(), "-h");
    }

    #[test]
    fn printed_forms_parse_back() {
        for s in ["2 - 2λ", "-λ + 3h - h^4", "4 - 4h + h^2"] {
            assert_eq!(parse_pin(s).unwrap().to_string(), s);
        }
        for s in ["1 - 3z + 3z^2 - z^3", "-z^-1 + 2 - z"] {
            assert_eq!(parse_t(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn errors_carry_columns() {
        let e = parse_pin("(1 - λ").unwrap_err();
        assert_eq!(e.column, 7);
        let e = parse_t("1 + h").unwrap_err();
        assert_eq!(e.column, 5);
        let e = parse_t("(1 - z)^-1").unwrap_err();
        assert_eq!(e.column, 9);
        assert_eq!(parse_t("2 $ 3").unwrap_err().column, 3);
        assert_eq!(parse_t("x").unwrap_err().column, 1);
        assert_eq!(parse_t("").unwrap_err().column, 1);
        assert_eq!(parse_t("z^").unwrap_err().column, 3);
        assert_eq!(parse_t("1 2)").unwrap_err().column, 4);
    }
}
