//! Text syntax for exponential polynomials.
//!
//! ```text
//! expr    = term { ("+" | "-") term } ;
//! term    = unary { ("*" | "/") unary } ;
//! unary   = ("-" | "+") unary | factor ;
//! factor  = primary [ "^" integer ] ;
//! primary = number [ "i" ] | "i" | variable | "exp" "(" expr ")" | "E" "(" expr ")"
//!         | "(" expr ")" ;
//! variable = "x" positive-integer ;
//! ```
//!
//! `exp` takes an affine form with Gaussian-rational coefficients;
//! `exp(a + ⟨λ,x⟩)` becomes `E(a)·exp(⟨λ,x⟩)`. `E` takes a Gaussian-rational
//! constant. Division is only by nonzero Gaussian-rational constants.
//!
//! Inputs are bounded: exponents up to [`MAX_EXPONENT`], variables up to
//! `x`[`MAX_VARIABLE`], nesting up to [`MAX_DEPTH`], and products of at
//! most [`MAX_PRODUCT`] atom pairs.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exppoly::{ExpPoly, ExpScalar, Frequency, MultiIndex};
use crate::linalg::{GaussRational, Rational};

pub const MAX_EXPONENT: u32 = 64;
pub const MAX_VARIABLE: usize = 64;
pub const MAX_DEPTH: usize = 128;
pub const MAX_PRODUCT: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    I,
    Exp,
    BigE,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

fn err(pos: Pos, message: impl Into<String>) -> Error {
    Error::Parse {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, Pos)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut k = 0;
    while k < chars.len() {
        let pos = Pos { line, column: col };
        let c = chars[k];
        if c == '\n' {
            line += 1;
            col = 1;
            k += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            k += 1;
            continue;
        }
        let start = k;
        let tok = if c.is_ascii_digit() {
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().collect();
            let n = Tok::Num(s.parse().expect("digits"));
            // `2i` is read as `2*i`
            if k < chars.len() && chars[k] == 'i' && !chars.get(k + 1).is_some_and(|c| c.is_ascii_alphanumeric()) {
                k += 1;
                out.push((n, pos));
                out.push((Tok::Star, pos));
                Tok::I
            } else {
                n
            }
        } else if c.is_ascii_alphabetic() {
            while k < chars.len() && chars[k].is_ascii_alphanumeric() {
                k += 1;
            }
            let word: String = chars[start..k].iter().collect();
            match word.as_str() {
                "i" => Tok::I,
                "exp" => Tok::Exp,
                "E" => Tok::BigE,
                w if w.starts_with('x') && w.len() > 1 && w[1..].bytes().all(|b| b.is_ascii_digit()) => {
                    let j: usize = w[1..].parse().map_err(|_| err(pos, "variable index too large"))?;
                    if j == 0 {
                        return Err(err(pos, "variables are numbered from x1"));
                    }
                    if j > MAX_VARIABLE {
                        return Err(err(pos, format!("variable index above {MAX_VARIABLE}")));
                    }
                    Tok::Var(j)
                }
                w => return Err(err(pos, format!("unknown identifier `{w}`"))),
            }
        } else {
            k += 1;
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => return Err(err(pos, format!("unexpected character `{c}`"))),
            }
        };
        col += k - start;
        out.push((tok, pos));
    }
    out.push((Tok::End, Pos { line, column: col }));
    Ok(out)
}

#[derive(Clone, Debug)]
enum Node {
    Num(BigInt),
    Var(usize),
    I,
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>, Pos),
    Div(Box<Node>, Box<Node>, Pos),
    Pow(Box<Node>, u32, Pos),
    Exp(Box<Node>, Pos),
    BigE(Box<Node>, Pos),
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            Err(err(self.pos(), format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<Node> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Node::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Node::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Node> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    let pos = self.pos();
                    self.bump();
                    lhs = Node::Mul(Box::new(lhs), Box::new(self.unary()?), pos);
                }
                Tok::Slash => {
                    let pos = self.pos();
                    self.bump();
                    lhs = Node::Div(Box::new(lhs), Box::new(self.unary()?), pos);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Node> {
        if self.depth >= MAX_DEPTH {
            return Err(err(self.pos(), format!("nesting deeper than {MAX_DEPTH}")));
        }
        self.depth += 1;
        let node = self.unary_inner();
        self.depth -= 1;
        node
    }

    fn unary_inner(&mut self) -> Result<Node> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(Node::Neg(Box::new(self.unary()?)))
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.factor(),
        }
    }

    fn factor(&mut self) -> Result<Node> {
        let base = self.primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let caret = self.pos();
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Tok::Num(n) => {
                let k = u32::try_from(n)
                    .ok()
                    .filter(|&k| k <= MAX_EXPONENT)
                    .ok_or_else(|| err(pos, format!("exponent above {MAX_EXPONENT}")))?;
                Ok(Node::Pow(Box::new(base), k, caret))
            }
            _ => Err(err(pos, "expected a nonnegative integer exponent")),
        }
    }

    fn primary(&mut self) -> Result<Node> {
        let pos = self.pos();
        match self.bump() {
            Tok::Num(n) => Ok(Node::Num(n)),
            Tok::Var(j) => Ok(Node::Var(j)),
            Tok::I => Ok(Node::I),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            t @ (Tok::Exp | Tok::BigE) => {
                self.expect(Tok::LParen, "`(`")?;
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(if t == Tok::Exp {
                    Node::Exp(Box::new(e), pos)
                } else {
                    Node::BigE(Box::new(e), pos)
                })
            }
            Tok::End => Err(err(pos, "unexpected end of input")),
            _ => Err(err(pos, "expected a number, variable, `exp`, `E` or `(`")),
        }
    }
}

fn max_var(n: &Node) -> usize {
    match n {
        Node::Num(_) | Node::I => 0,
        Node::Var(j) => *j,
        Node::Neg(a) | Node::Pow(a, _, _) | Node::Exp(a, _) | Node::BigE(a, _) => max_var(a),
        Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b, _) | Node::Div(a, b, _) => max_var(a).max(max_var(b)),
    }
}

fn as_constant(p: &ExpPoly) -> Option<GaussRational> {
    match p.num_atoms() {
        0 => Some(GaussRational::zero()),
        1 => {
            let (l, a, c) = p.atoms().next()?;
            if l.is_zero() && a.is_zero() {
                c.as_gauss()
            } else {
                None
            }
        }
        _ => None,
    }
}

fn bounded_mul(a: &ExpPoly, b: &ExpPoly, pos: Pos) -> Result<ExpPoly> {
    if a.num_atoms().saturating_mul(b.num_atoms()) > MAX_PRODUCT {
        return Err(err(pos, "expression too large"));
    }
    Ok(a * b)
}

fn eval(n: &Node, d: usize) -> Result<ExpPoly> {
    Ok(match n {
        Node::Num(v) => ExpPoly::constant(d, ExpScalar::from_rational(Rational::from_integer(v.clone()))),
        Node::I => ExpPoly::constant(d, ExpScalar::from_gauss(GaussRational::i())),
        Node::Var(j) => {
            if *j > d {
                return Err(Error::DimensionExceeded { index: *j, dim: d });
            }
            ExpPoly::var(d, j - 1)
        }
        Node::Neg(a) => -&eval(a, d)?,
        Node::Add(a, b) => &eval(a, d)? + &eval(b, d)?,
        Node::Sub(a, b) => &eval(a, d)? - &eval(b, d)?,
        Node::Mul(a, b, pos) => bounded_mul(&eval(a, d)?, &eval(b, d)?, *pos)?,
        Node::Div(a, b, pos) => {
            let den = eval(b, d)?;
            match as_constant(&den) {
                Some(c) if !c.is_zero() => eval(a, d)?.scale_gauss(&c.inv()),
                Some(_) => return Err(err(*pos, "division by zero")),
                None => return Err(err(*pos, "can only divide by a Gaussian-rational constant")),
            }
        }
        Node::Pow(a, k, pos) => {
            let base = eval(a, d)?;
            let mut acc = ExpPoly::one(d);
            for _ in 0..*k {
                acc = bounded_mul(&acc, &base, *pos)?;
            }
            acc
        }
        Node::BigE(a, pos) => {
            let w = as_constant(&eval(a, d)?).ok_or_else(|| err(*pos, "E(...) needs a Gaussian-rational constant"))?;
            ExpPoly::constant(d, ExpScalar::exp(w))
        }
        Node::Exp(a, pos) => {
            let arg = eval(a, d)?;
            let bad = || err(*pos, "exp(...) needs an affine form with Gaussian-rational coefficients");
            let mut w = GaussRational::zero();
            let mut lambda = vec![GaussRational::zero(); d];
            for (l, alpha, c) in arg.atoms() {
                let c = c.as_gauss().ok_or_else(bad)?;
                if !l.is_zero() {
                    return Err(bad());
                }
                match alpha.degree() {
                    0 => w = c,
                    1 => {
                        let j = alpha.exponents().iter().position(|&e| e == 1).expect("degree one");
                        lambda[j] = c;
                    }
                    _ => return Err(bad()),
                }
            }
            ExpPoly::term(d, ExpScalar::exp(w), MultiIndex::zero(d), Frequency(lambda))
        }
    })
}

/// Parses with the dimension inferred from the highest variable index
/// (at least 1), or pinned to `dim`.
pub fn parse_exppoly(text: &str, dim: Option<usize>) -> Result<ExpPoly> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
        depth: 0,
    };
    let node = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(err(p.pos(), "unexpected input after expression"));
    }
    let d = match dim {
        Some(0) => return Err(Error::InvalidInput("dimension must be positive".into())),
        Some(d) => d,
        None => max_var(&node).max(1),
    };
    eval(&node, d)
}

/// Parses `"p/q + r/s*i"`-style constants.
pub fn parse_gauss(text: &str) -> Result<GaussRational> {
    let p = parse_exppoly(text, Some(1))?;
    as_constant(&p).ok_or_else(|| Error::InvalidInput(format!("not a Gaussian-rational constant: {text:?}")))
}
