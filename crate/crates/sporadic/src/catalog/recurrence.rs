//! Three-term recurrence evaluators.
//!
//! All three families are normalized with `u_{-1} = 0`, `u_0 = 1` and solve
//! for `u_{n+1}` by an exact division by `(n+1)^2` or `(n+1)^3`. The division
//! failing is how non-integral parameter choices are detected.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Parameters of one of the three sporadic recurrence families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecurrenceSpec {
    /// `(n+1)^2 u_{n+1} - (A n^2 + A n + lambda) u_n + B n^2 u_{n-1} = 0`
    Zagier2 { a: i64, b: i64, lambda: i64 },
    /// `(n+1)^3 u_{n+1} - (2n+1)(a n^2 + a n + b) u_n + c n^3 u_{n-1} = 0`
    AlmkvistZudilin3 { a: i64, b: i64, c: i64 },
    /// `(n+1)^3 u_{n+1} - (2n+1)(a n^2 + a n + b) u_n + n (c n^2 + d) u_{n-1} = 0`
    Cooper3 { a: i64, b: i64, c: i64, d: i64 },
}

/// Family tag, used in exports and reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecurrenceFamily {
    Zagier2,
    AlmkvistZudilin3,
    Cooper3,
}

impl RecurrenceSpec {
    pub fn family(&self) -> RecurrenceFamily {
        match self {
            RecurrenceSpec::Zagier2 { .. } => RecurrenceFamily::Zagier2,
            RecurrenceSpec::AlmkvistZudilin3 { .. } => RecurrenceFamily::AlmkvistZudilin3,
            RecurrenceSpec::Cooper3 { .. } => RecurrenceFamily::Cooper3,
        }
    }

    pub fn params(&self) -> Vec<i64> {
        match *self {
            RecurrenceSpec::Zagier2 { a, b, lambda } => vec![a, b, lambda],
            RecurrenceSpec::AlmkvistZudilin3 { a, b, c } => vec![a, b, c],
            RecurrenceSpec::Cooper3 { a, b, c, d } => vec![a, b, c, d],
        }
    }

    /// Exact terms `u_0 ..= u_N`.
    pub fn terms(&self, n_max: usize) -> Result<Vec<BigInt>> {
        let mut out = Vec::with_capacity(n_max + 1);
        out.push(BigInt::one());
        let mut prev = BigInt::zero(); // u_{-1}
        let mut curr = BigInt::one(); // u_0
        for n in 0..n_max as i64 {
            let nn = BigInt::from(n);
            let (numerator, divisor) = match *self {
                RecurrenceSpec::Zagier2 { a, b, lambda } => {
                    let f = BigInt::from(a) * (&nn * &nn + &nn) + lambda;
                    let g = BigInt::from(b) * &nn * &nn;
                    (f * &curr - g * &prev, BigInt::from(n + 1).pow(2))
                }
                RecurrenceSpec::AlmkvistZudilin3 { a, b, c } => {
                    let f = BigInt::from(2 * n + 1) * (BigInt::from(a) * (&nn * &nn + &nn) + b);
                    let g = BigInt::from(c) * nn.pow(3);
                    (f * &curr - g * &prev, BigInt::from(n + 1).pow(3))
                }
                RecurrenceSpec::Cooper3 { a, b, c, d } => {
                    let f = BigInt::from(2 * n + 1) * (BigInt::from(a) * (&nn * &nn + &nn) + b);
                    let g = &nn * (BigInt::from(c) * &nn * &nn + d);
                    (f * &curr - g * &prev, BigInt::from(n + 1).pow(3))
                }
            };
            let (q, r) = numerator.div_rem(&divisor);
            if !r.is_zero() {
                return Err(Error::NonIntegral {
                    n: n as u64,
                    numerator: numerator.to_string(),
                    divisor: divisor.to_string(),
                });
            }
            prev = std::mem::replace(&mut curr, q);
            out.push(curr.clone());
        }
        Ok(out)
    }
}
