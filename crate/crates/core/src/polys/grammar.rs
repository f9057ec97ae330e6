//! Text form of polynomials and rational functions.
//!
//! Grammar (whitespace ignored, juxtaposition multiplies):
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := unary (('*'|'/')? unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | variable | 'g' | '(' expr ')'
//! ```
//!
//! Integers are reduced modulo the characteristic and `g` is the field
//! generator. Printing lists terms in descending term order, so the printed
//! form is canonical and parses back to the same polynomial.

use std::fmt;

use super::{MPoly, Monomial, PolyError, RatFun, Var};
use crate::fields::{Field, FieldCtx, FieldElem};

/// Prints a field element: an integer for prime-subfield elements, otherwise
/// a polynomial in `g`, parenthesized unless it is a bare power of `g`.
pub fn format_elem(ctx: &FieldCtx, x: FieldElem) -> String {
    if ctx.is_prime_subfield(x) {
        return x.index().to_string();
    }
    let digits = ctx.coeffs(x);
    let parts: Vec<String> = digits
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &d)| d != 0)
        .map(|(i, &d)| {
            let power = match i {
                0 => String::new(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            };
            match (d, i) {
                (_, 0) => d.to_string(),
                (1, _) => power,
                _ => format!("{d}*{power}"),
            }
        })
        .collect();
    if parts.len() == 1 && digits.iter().filter(|&&d| d != 0).all(|&d| d == 1) {
        parts[0].clone()
    } else {
        format!("({})", parts.join("+"))
    }
}

fn format_monomial(m: &Monomial) -> String {
    Var::ALL
        .into_iter()
        .filter(|&v| m.exp(v) > 0)
        .map(|v| match m.exp(v) {
            1 => v.name().to_string(),
            e => format!("{}^{e}", v.name()),
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let ctx = self.ctx();
        let mut first = true;
        for (m, c) in self.terms().iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if m.is_one() {
                f.write_str(&format_elem(ctx, *c))?;
            } else if *c == ctx.one() {
                f.write_str(&format_monomial(m))?;
            } else {
                write!(f, "{}*{}", format_elem(ctx, *c), format_monomial(m))?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Tok {
    Int(u64),
    Var(Var),
    Gen,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    const MULTI: [(&str, Var); 4] = [
        ("xi", Var::Xi),
        ("u0", Var::U0),
        ("u1", Var::U1),
        ("v0", Var::V0),
    ];
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let mut n: u64 = 0;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add((bytes[i] - b'0') as u64))
                        .ok_or(PolyError::Parse {
                            pos: start,
                            msg: "integer too large".into(),
                        })?;
                    i += 1;
                }
                out.push((start, Tok::Int(n)));
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                if let Some((name, v)) = MULTI.iter().find(|(n, _)| src[i..].starts_with(n)) {
                    i += name.len();
                    out.push((start, Tok::Var(*v)));
                    continue;
                }
                match c {
                    b'g' => Tok::Gen,
                    b'T' => Tok::Var(Var::T),
                    b's' => Tok::Var(Var::S),
                    b't' => Tok::Var(Var::LowerT),
                    b'u' => Tok::Var(Var::U),
                    b'x' => Tok::Var(Var::LowerX),
                    b'X' => Tok::Var(Var::X),
                    b'Y' => Tok::Var(Var::Y),
                    b'Z' => Tok::Var(Var::Z),
                    _ => {
                        return Err(PolyError::Parse {
                            pos: start,
                            msg: format!("unexpected character {:?}", c as char),
                        })
                    }
                }
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ctx: &'a Field,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).map(|t| t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<RatFun, PolyError> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.checked_add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFun, PolyError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.checked_mul(&self.unary()?)?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.here();
                    let d = self.unary()?;
                    acc = acc.checked_div(&d).map_err(|e| match e {
                        PolyError::DivisionByZero => PolyError::Parse {
                            pos: at,
                            msg: "division by zero".into(),
                        },
                        e => e,
                    })?;
                }
                Some(Tok::Int(_) | Tok::Var(_) | Tok::Gen | Tok::LParen) => {
                    acc = acc.checked_mul(&self.unary()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatFun, PolyError> {
        if self.peek() == Some(Tok::Minus) {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFun, PolyError> {
        let base = self.atom()?;
        if self.peek() != Some(Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek() {
            Some(Tok::Int(e)) => {
                self.pos += 1;
                let e = u32::try_from(e).or_else(|_| self.err("exponent too large"))?;
                Ok(base.pow(e))
            }
            _ => self.err("expected a non-negative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<RatFun, PolyError> {
        let ctx = self.ctx;
        let value = match self.peek() {
            Some(Tok::Int(n)) => MPoly::constant(ctx, ctx.from_int((n % ctx.p()) as i64)).into(),
            Some(Tok::Var(v)) => MPoly::var(ctx, v).into(),
            Some(Tok::Gen) => MPoly::constant(ctx, ctx.generator()).into(),
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                return Ok(inner);
            }
            Some(t) => return self.err(format!("unexpected token {t:?}")),
            None => return self.err("unexpected end of input"),
        };
        self.pos += 1;
        Ok(value)
    }
}

impl RatFun {
    pub fn parse(ctx: &Field, src: &str) -> Result<RatFun, PolyError> {
        let toks = tokenize(src)?;
        let mut p = Parser {
            ctx,
            toks,
            pos: 0,
            end: src.len(),
        };
        let value = p.expr()?;
        if p.pos != p.toks.len() {
            return p.err("trailing input");
        }
        Ok(value)
    }
}

impl MPoly {
    /// Parses a polynomial; divisions are allowed only when they are exact.
    pub fn parse(ctx: &Field, src: &str) -> Result<MPoly, PolyError> {
        let r = RatFun::parse(ctx, src)?;
        if let Some(p) = r.as_poly() {
            return Ok(p);
        }
        match r.num().exact_divide(r.den())? {
            Some(q) => Ok(q),
            None => Err(PolyError::Parse {
                pos: 0,
                msg: "not a polynomial".into(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::DensePoly;
    use crate::fields::FieldCtx;

    #[test]
    fn prints_canonical_order() {
        let f3 = FieldCtx::prime(3).unwrap();
        let f = MPoly::parse(&f3, "1 + X*Y^3 - T^2*X").unwrap();
        assert_eq!(f.to_string(), "X*Y^3 + 2*T^2*X + 1");
        assert_eq!(MPoly::parse(&f3, &f.to_string()).unwrap(), f);
    }

    #[test]
    fn generator_coefficients() {
        let f2 = FieldCtx::prime(2).unwrap();
        let one = f2.one();
        let f4 = FieldCtx::extend(&f2, &DensePoly::new(vec![one, one, one])).unwrap();
        let f = MPoly::parse(&f4, "(g+1)*T^2 + g").unwrap();
        assert_eq!(f.to_string(), "(g+1)*T^2 + g");
        assert_eq!(MPoly::parse(&f4, "g^2 + g + 1").unwrap(), MPoly::zero(&f4));
    }

    #[test]
    fn implicit_multiplication_and_unary_minus() {
        let f5 = FieldCtx::prime(5).unwrap();
        let a = MPoly::parse(&f5, "-X^2 (Y + 1) 3").unwrap();
        let b = MPoly::parse(&f5, "2*X^2*Y + 2*X^2").unwrap();
        assert_eq!(a, b);
        assert_eq!(
            MPoly::parse(&f5, "xi*u0*u1*v0 - x").unwrap().vars(),
            vec![Var::U0, Var::U1, Var::V0, Var::LowerX, Var::Xi]
        );
    }

    #[test]
    fn rejects_garbage() {
        let f2 = FieldCtx::prime(2).unwrap();
        assert!(matches!(
            MPoly::parse(&f2, "X + * Y"),
            Err(PolyError::Parse { .. })
        ));
        assert!(matches!(
            MPoly::parse(&f2, "X + q"),
            Err(PolyError::Parse { .. })
        ));
        assert!(matches!(
            MPoly::parse(&f2, "1/X"),
            Err(PolyError::Parse { .. })
        ));
        assert!(matches!(
            RatFun::parse(&f2, "1/(X+X)"),
            Err(PolyError::Parse { .. })
        ));
    }
}
