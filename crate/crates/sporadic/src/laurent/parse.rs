//! Text grammar for Laurent polynomials.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := '-' unary | primary
//! primary := atom ('^' int)?
//! atom    := uint | var | '(' expr ')'
//! var     := 'x' | 'y' | 'z' | 'w' | 'x1' | 'x2' | 'x3' | 'x4'
//! ```
//!
//! Whitespace is insignificant. Exponents may be negative, in which case the
//! base must be a unit monomial (single term, coefficient ±1): Laurent
//! polynomials only have monomial units over the integers.

use num_bigint::BigInt;
use num_traits::One;

use super::{ExponentVector, LaurentPoly};
use crate::error::{Error, Result};

/// Largest exponent literal accepted by the parser.
pub const MAX_PARSE_EXPONENT: i64 = 4096;

/// Parse `text` as a Laurent polynomial in `dim` variables.
pub fn parse(text: &str, dim: usize) -> Result<LaurentPoly> {
    if !(1..=super::MAX_DIM).contains(&dim) {
        return Err(Error::BadDimension(dim));
    }
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        dim,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    dim: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.bump();
                    acc = acc.add(&self.term()?)?;
                }
                b'-' => {
                    self.bump();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.unary()?;
        while let Some(b'*') = self.peek() {
            self.bump();
            acc = acc.mul(&self.unary()?)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<LaurentPoly> {
        if let Some(b'-') = self.peek() {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<LaurentPoly> {
        let base = self.atom()?;
        if let Some(b'^') = self.peek() {
            self.bump();
            let exp = self.int_literal()?;
            if exp.unsigned_abs() as i64 > MAX_PARSE_EXPONENT {
                return Err(Error::ExponentOverflow {
                    value: exp,
                    bound: MAX_PARSE_EXPONENT,
                });
            }
            if exp >= 0 {
                return base.pow(exp as u64);
            }
            return invert_monomial(&base, (-exp) as u64);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                match self.peek() {
                    Some(b')') => {
                        self.bump();
                        Ok(inner)
                    }
                    _ => Err(self.err("expected `)`")),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint_literal()?;
                Ok(LaurentPoly::constant(self.dim, n))
            }
            Some(c) if matches!(c, b'x' | b'y' | b'z' | b'w') => {
                self.bump();
                let mut index = match c {
                    b'x' => 0,
                    b'y' => 1,
                    b'z' => 2,
                    _ => 3,
                };
                // x1..x4 aliases
                if c == b'x' {
                    if let Some(d @ b'1'..=b'4') = self.bytes.get(self.pos).copied() {
                        self.pos += 1;
                        index = (d - b'1') as usize;
                    }
                }
                if index >= self.dim {
                    return Err(self.err(&format!(
                        "variable index {} not available in dimension {}",
                        index + 1,
                        self.dim
                    )));
                }
                LaurentPoly::variable(self.dim, index)
            }
            Some(_) => Err(self.err("expected a number, variable or `(`")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn uint_literal(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        s.parse::<BigInt>()
            .map_err(|_| self.err("invalid integer literal"))
    }

    fn int_literal(&mut self) -> Result<i64> {
        self.skip_ws();
        let negative = if let Some(b'-') = self.bytes.get(self.pos).copied() {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer exponent"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        let v: i64 = s
            .parse()
            .map_err(|_| self.err("exponent literal out of range"))?;
        Ok(if negative { -v } else { v })
    }
}

/// `(c x^e)^{-k}` for a unit monomial base.
fn invert_monomial(base: &LaurentPoly, k: u64) -> Result<LaurentPoly> {
    if base.num_terms() != 1 {
        return Err(Error::NotInvertible);
    }
    let (e, c): (ExponentVector, &BigInt) = base.sorted_terms()[0];
    if c.magnitude() != BigInt::one().magnitude() {
        return Err(Error::NotInvertible);
    }
    // (±1)^{-k} = (±1)^k
    let sign = if c.is_one() || k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let exps: Vec<i64> = e
        .as_slice()
        .iter()
        .map(|&v| -(v as i64) * k as i64)
        .collect();
    LaurentPoly::monomial(base.dim(), &exps, sign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn parses_franel_generator() {
        let a = parse("(x+1)*(y+1)*(x+y) * x^-1 * y^-1", 2).unwrap();
        assert_eq!(a.num_terms(), 7);
        assert_eq!(a.constant_term(), BigInt::from(2));
    }

    #[test]
    fn parses_constant_one_in_three_vars() {
        let one = parse("1", 3).unwrap();
        assert!(one.is_one());
        assert_eq!(one.dim(), 3);
    }

    #[test]
    fn parses_two_term_difference() {
        let f = parse("x^2*y - y^2*x", 2).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.coeff(&[2, 1]), BigInt::from(1));
        assert_eq!(f.coeff(&[1, 2]), BigInt::from(-1));
    }

    #[test]
    fn aliases_x1_to_x4() {
        let f = parse("x1*x2*x3*x4", 4).unwrap();
        let g = parse("x*y*z*w", 4).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn negative_power_of_signed_monomial() {
        let f = parse("(-x*y)^-1", 2).unwrap();
        assert_eq!(f.coeff(&[-1, -1]), BigInt::from(-1));
        let g = parse("(-x*y)^-2", 2).unwrap();
        assert_eq!(g.coeff(&[-2, -2]), BigInt::from(1));
    }

    #[test]
    fn rejects_inverse_of_polynomial() {
        assert!(matches!(
            parse("(x+y)^-1", 2),
            Err(Error::NotInvertible)
        ));
    }

    #[test]
    fn rejects_out_of_dimension_variable() {
        let err = parse("x*z", 2).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn reports_error_position() {
        match parse("x + @", 2) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_huge_exponent() {
        assert!(matches!(
            parse("x^99999", 1),
            Err(Error::ExponentOverflow { .. })
        ));
    }

    #[test]
    fn cancellation_drops_zero_terms() {
        let f = parse("(x+y) - x - y", 2).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.constant_term(), BigInt::zero());
    }
}
