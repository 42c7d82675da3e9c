//! Text grammar for polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' INT)?
//! atom   := INT ('/' INT)? | 'x' INT | '(' expr ')'
//! ```
//!
//! Whitespace is ignored. `Polynomial`'s `Display` output parses back to the
//! same polynomial.

use num_bigint::BigInt;
use num_traits::Zero;

use super::monomial::MAX_VARS;
use super::polynomial::Polynomial;
use super::rational::Rational;
use crate::error::AlgebraError;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, AlgebraError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '^' => out.push((start, Tok::Caret)),
            '/' => out.push((start, Tok::Slash)),
            '(' => out.push((start, Tok::LParen)),
            ')' => out.push((start, Tok::RParen)),
            'x' => {
                i += 1;
                let j = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if j == i {
                    return Err(AlgebraError::Parse {
                        pos: start,
                        msg: "expected variable index after 'x'".into(),
                    });
                }
                let idx: usize = s[j..i].parse().map_err(|_| AlgebraError::Parse {
                    pos: start,
                    msg: "variable index too large".into(),
                })?;
                out.push((start, Tok::Var(idx)));
                continue;
            }
            d if d.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(s[start..i].parse().expect("digits"))));
                continue;
            }
            other => {
                return Err(AlgebraError::Parse {
                    pos: start,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

/// Parses a polynomial. With `nvars = None` the ring is sized to the largest
/// variable index that appears (at least one variable).
pub fn parse_polynomial(s: &str, nvars: Option<usize>) -> Result<Polynomial, AlgebraError> {
    let toks = lex(s)?;
    let max_idx = toks
        .iter()
        .filter_map(|(_, t)| match t {
            Tok::Var(i) => Some(*i),
            _ => None,
        })
        .max();
    let n = match (nvars, max_idx) {
        (Some(n), Some(m)) if m >= n => {
            return Err(AlgebraError::Parse {
                pos: 0,
                msg: format!("x{m} used in a ring with {n} variables"),
            })
        }
        (Some(n), _) => n,
        (None, Some(m)) => m + 1,
        (None, None) => 1,
    };
    if n > MAX_VARS {
        return Err(AlgebraError::TooManyVariables(n));
    }
    let mut p = Parser { toks, pos: 0, nvars: n, src_len: s.len() };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(AlgebraError::Parse {
            pos: p.toks[p.pos].0,
            msg: "trailing input".into(),
        });
    }
    Ok(out)
}

/// Parses a comma-separated list of polynomials in a common ring.
pub fn parse_polynomial_list(s: &str, nvars: Option<usize>) -> Result<Vec<Polynomial>, AlgebraError> {
    let pieces: Vec<&str> = s.split(',').map(str::trim).filter(|t| !t.is_empty()).collect();
    let n = match nvars {
        Some(n) => n,
        None => pieces
            .iter()
            .map(|t| parse_polynomial(t, None).map(|p| p.nvars()))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .max()
            .unwrap_or(1),
    };
    pieces.iter().map(|t| parse_polynomial(t, Some(n))).collect()
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    nvars: usize,
    src_len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse {
            pos: self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.src_len),
            msg: msg.to_string(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, AlgebraError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, AlgebraError> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, AlgebraError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, AlgebraError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Int(e)) => {
                    self.pos += 1;
                    let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
                    if e > 255 {
                        return Err(AlgebraError::ExponentOverflow(e));
                    }
                    Ok(base.pow(e))
                }
                _ => Err(self.err("expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, AlgebraError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let mut q = Rational::from_integer(n);
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) => {
                            self.pos += 1;
                            if d.is_zero() {
                                return Err(AlgebraError::DivisionByZero);
                            }
                            q /= Rational::from_integer(d);
                        }
                        _ => return Err(self.err("expected integer denominator")),
                    }
                }
                Ok(Polynomial::constant(self.nvars, q))
            }
            Some(Tok::Var(i)) => {
                self.pos += 1;
                Ok(Polynomial::var(self.nvars, i))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use crate::algebra::Monomial;
    use proptest::prelude::*;

    #[test]
    fn parses_grammar_example() {
        let p = parse_polynomial("x0*x1*(x0^4+x1^4+x2^2*x3^2) + x4*x2^5", None).unwrap();
        assert_eq!(p.nvars(), 5);
        assert_eq!(p.len(), 4);
        assert_eq!(p.homogeneous_degree(), Some(6));
    }

    #[test]
    fn rational_coefficients_and_signs() {
        let p = parse_polynomial("-3/4*x0 + 2 - (x1 - x1)", Some(2)).unwrap();
        assert_eq!(p.coeff(&Monomial::var(2, 0)), rat(-3, 4));
        assert_eq!(p.to_string(), "-3/4*x0 + 2");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_polynomial("x0 +", None).is_err());
        assert!(parse_polynomial("x0 ^ x1", None).is_err());
        assert!(parse_polynomial("x5", Some(3)).is_err());
        assert!(parse_polynomial("1/0", None).is_err());
        assert!(parse_polynomial("y0", None).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u32..4, 4), -20i64..20, 1i64..6), 0..8).prop_map(|ts| {
            Polynomial::from_terms(4, ts.into_iter().map(|(e, n, d)| (Monomial::from_slice(&e), rat(n, d))))
        })
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(p in arb_poly()) {
            let s = p.to_string();
            let q = parse_polynomial(&s, Some(4)).unwrap();
            prop_assert_eq!(q, p);
        }
    }
}
