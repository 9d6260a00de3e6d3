//! Canonical text rendering.
//!
//! Terms are printed in descending lexicographic exponent order, so printing
//! is deterministic and `parse(print(p)) == p`.

use std::fmt;

use num_traits::Signed;

use super::LaurentPoly;

const VAR_NAMES: [&str; super::MAX_DIM] = ["x", "y", "z", "w"];

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let mut monomial = String::new();
            for (v, &exp) in e.as_slice().iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if !monomial.is_empty() {
                    monomial.push('*');
                }
                monomial.push_str(VAR_NAMES[v]);
                if exp != 1 {
                    monomial.push('^');
                    monomial.push_str(&exp.to_string());
                }
            }
            if monomial.is_empty() {
                write!(f, "{abs}")?;
            } else if abs == 1u8.into() {
                write!(f, "{monomial}")?;
            } else {
                write!(f, "{abs}*{monomial}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use crate::laurent::parse::parse;

    #[test]
    fn canonical_print_order() {
        let f = parse("1 + x^-2 + x^2", 1).unwrap();
        assert_eq!(f.to_string(), "x^2 + 1 + x^-2");
    }

    #[test]
    fn print_parse_round_trip() {
        for expr in [
            "(x+1)*(y+1)*(x+y)*(x*y)^-1",
            "(x+y+1)*(x^2+y^2-x*y-x-y+1)*(-x*y)^-1",
            "-3*x*y^-2 + 2*x - 7",
            "0",
        ] {
            let p = parse(expr, 2).unwrap();
            let printed = p.to_string();
            let q = parse(&printed, 2).unwrap();
            assert_eq!(p, q, "round trip failed for {expr} -> {printed}");
            assert_eq!(printed, q.to_string());
        }
    }
}
