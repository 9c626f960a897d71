//! Text syntax for Laurent polynomials.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ['^' exp]
//! atom   := int ['/' int] | 'q' | var | schur | '(' expr ')'
//! var    := 'z' int                  (single-block shapes)
//!         | 'z[' int '][' int ']'
//! schur  := 's(' ints ')' | 's[' int '](' ints ')'
//! exp    := ['-'] int | '{' ['-'] int ['/' int] '}' | '(' ['-'] int ['/' int] ')'
//! ```
//!
//! Half-integer exponents are accepted on `q` only. Negative exponents are
//! accepted on single-term bases.

use affcell_core::symfunc::schur_in;
use affcell_core::{BlockId, BlockShape, GLWeight, LaurentPoly, Monomial, Rational, Var};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::SyntaxError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, SyntaxError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().expect("ascii digits")), col));
        } else if c.is_ascii_alphabetic() {
            // identifiers are single letters; `z12` is `z` followed by `12`
            out.push((Tok::Ident(c.to_string()), col));
            i += 1;
        } else if "+-*^/()[]{},".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(SyntaxError::new(col, format!("unexpected character '{}'", c)));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    shape: &'a BlockShape,
}

impl<'a> Parser<'a> {
    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, SyntaxError> {
        Err(SyntaxError::new(self.col(), msg))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SyntaxError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c))
        }
    }

    fn int(&mut self) -> Result<BigInt, SyntaxError> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn signed_int(&mut self) -> Result<BigInt, SyntaxError> {
        let neg = self.eat('-');
        let n = self.int()?;
        Ok(if neg { -n } else { n })
    }

    fn small(&mut self, n: BigInt) -> Result<i32, SyntaxError> {
        i32::try_from(n).or_else(|_| self.err("integer out of range"))
    }

    fn expr(&mut self) -> Result<LaurentPoly, SyntaxError> {
        let mut acc = if self.eat('-') {
            -&self.term()?
        } else {
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, SyntaxError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentPoly, SyntaxError> {
        if self.eat('-') {
            return Ok(-&self.factor()?);
        }
        let start = self.col();
        let (base, is_q) = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let exp = self.exponent()?;
        if is_q {
            let twice = &exp * Rational::from_integer(2.into());
            if !twice.is_integer() {
                return Err(SyntaxError::new(start, "q exponents must be multiples of 1/2"));
            }
            let k = self.small(twice.to_integer())?;
            return Ok(LaurentPoly::q_power(self.shape, k));
        }
        if !exp.is_integer() {
            return Err(SyntaxError::new(start, "fractional exponents are allowed on q only"));
        }
        let e = self.small(exp.to_integer())?;
        power(&base, e).ok_or_else(|| SyntaxError::new(start, "negative power of a polynomial with several terms"))
    }

    fn exponent(&mut self) -> Result<Rational, SyntaxError> {
        let close = if self.eat('{') {
            Some('}')
        } else if self.eat('(') {
            Some(')')
        } else {
            None
        };
        let num = self.signed_int()?;
        let Some(close) = close else {
            return Ok(Rational::from_integer(num));
        };
        let den = if self.eat('/') { self.int()? } else { BigInt::one() };
        if den.is_zero() {
            return self.err("zero denominator");
        }
        self.expect(close)?;
        Ok(Rational::new(num, den))
    }

    /// Returns the parsed atom and whether it was a bare `q`.
    fn atom(&mut self) -> Result<(LaurentPoly, bool), SyntaxError> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let value = if self.eat('/') {
                    let d = self.int()?;
                    if d.is_zero() {
                        return Err(SyntaxError::new(col, "zero denominator"));
                    }
                    Rational::new(n, d)
                } else {
                    Rational::from_integer(n)
                };
                Ok((LaurentPoly::constant(self.shape, value), false))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok((e, false))
            }
            Some(Tok::Ident(id)) => {
                self.pos += 1;
                match id.as_str() {
                    "q" => Ok((LaurentPoly::q_power(self.shape, 2), true)),
                    "z" => {
                        let v = self.var(col)?;
                        Ok((LaurentPoly::from_monomial(self.shape, Monomial::var(v, 1), Rational::one())
                            .map_err(|e| SyntaxError::new(col, e.to_string()))?, false))
                    }
                    "s" => Ok((self.schur(col)?, false)),
                    _ => Err(SyntaxError::new(col, format!("unknown symbol '{}'", id))),
                }
            }
            Some(Tok::Sym(c)) => self.err(format!("unexpected '{}'", c)),
            None => self.err("unexpected end of input"),
        }
    }

    fn block_index(&mut self) -> Result<Option<BlockId>, SyntaxError> {
        if !self.eat('[') {
            return Ok(None);
        }
        let n = self.int()?;
        let b = BlockId::try_from(n).or_else(|_| self.err("block id out of range"))?;
        self.expect(']')?;
        Ok(Some(b))
    }

    fn default_block(&self, col: usize) -> Result<BlockId, SyntaxError> {
        match self.shape.blocks() {
            [(b, _)] => Ok(*b),
            _ => Err(SyntaxError::new(col, "block index required when the shape has several blocks")),
        }
    }

    fn var(&mut self, col: usize) -> Result<Var, SyntaxError> {
        let v = match self.block_index()? {
            Some(b) => {
                self.expect('[')?;
                let i = self.int()?;
                self.expect(']')?;
                let i = u32::try_from(i).or_else(|_| self.err("index out of range"))?;
                Var::new(b, i)
            }
            None => {
                let b = self.default_block(col)?;
                let i = self.int()?;
                Var::new(b, u32::try_from(i).or_else(|_| self.err("index out of range"))?)
            }
        };
        if !self.shape.contains(v) {
            return Err(SyntaxError::new(col, format!("variable z[{}][{}] is outside the shape", v.block, v.index)));
        }
        Ok(v)
    }

    fn schur(&mut self, col: usize) -> Result<LaurentPoly, SyntaxError> {
        let b = match self.block_index()? {
            Some(b) => b,
            None => self.default_block(col)?,
        };
        self.expect('(')?;
        let mut parts = Vec::new();
        if !self.eat(')') {
            loop {
                let n = self.signed_int()?;
                parts.push(self.small(n)?);
                if self.eat(')') {
                    break;
                }
                self.expect(',')?;
            }
        }
        let w = GLWeight::new(parts).map_err(|e| SyntaxError::new(col, e.to_string()))?;
        schur_in(self.shape, b, &w).map_err(|e| SyntaxError::new(col, e.to_string()))
    }
}

fn power(base: &LaurentPoly, e: i32) -> Option<LaurentPoly> {
    if e >= 0 {
        return Some(base.pow(e as u32));
    }
    if base.num_terms() != 1 {
        return None;
    }
    let (m, c) = base.terms().next()?;
    let inv = Monomial::new(m.z_part().iter().map(|&(v, e)| (v, -e)), -m.q_half());
    let p = LaurentPoly::from_monomial(base.shape(), inv, c.recip()).ok()?;
    Some(p.pow(e.unsigned_abs()))
}

/// Parses a Laurent polynomial in the variables of `shape`.
pub fn parse_poly(src: &str, shape: &BlockShape) -> Result<LaurentPoly, SyntaxError> {
    let toks = lex(src)?;
    let end = src.chars().count() + 1;
    let mut p = Parser { toks, pos: 0, end, shape };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}
