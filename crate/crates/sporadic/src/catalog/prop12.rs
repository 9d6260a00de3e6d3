//! Power-free multinomial representations for B, F and (δ).
//!
//! These come from expanding products of cyclotomic-style factors of the
//! constant-term generators, so the sums run over tuples of compositions
//! with coordinate-wise column constraints. Enumeration fixes the free
//! compositions and derives the remaining coordinates, instead of looping
//! over the full 9- to 15-dimensional grid.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::binom::multinomial;
use crate::error::{Error, Result};

/// Sequences with a registered power-free representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prop12Sequence {
    B,
    F,
    Delta,
}

impl Prop12Sequence {
    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "B" => Some(Prop12Sequence::B),
            "F" => Some(Prop12Sequence::F),
            "delta" => Some(Prop12Sequence::Delta),
            _ => None,
        }
    }
}

/// `u_0 ..= u_N` via the power-free representation.
pub fn prop12_terms(seq: Prop12Sequence, n_max: usize) -> Result<Vec<BigInt>> {
    (0..=n_max as i64)
        .map(|n| match seq {
            Prop12Sequence::B => b_term(n),
            Prop12Sequence::F => f_term(n),
            Prop12Sequence::Delta => delta_term(n),
        })
        .collect()
}

/// All compositions of `n` into three non-negative parts, lexicographic.
fn compositions3(n: i64) -> Vec<[i64; 3]> {
    let mut out = Vec::with_capacity(((n + 1) * (n + 2) / 2) as usize);
    for i in 0..=n {
        for j in 0..=(n - i) {
            out.push([i, j, n - i - j]);
        }
    }
    out
}

fn multis(n: i64, comps: &[[i64; 3]]) -> Vec<BigInt> {
    comps
        .iter()
        .map(|c| multinomial(n, c).expect("composition of n"))
        .collect()
}

/// `B_n = (-1)^n (3 S - C(3n; n,n,n)) / 2` where `S` sums
/// `C(n,a) C(n,b) C(n,c)` over compositions with `a_i + b_i + c_i = n`
/// and `3 | b_2 + 2 b_3 + 2 c_2 + c_3`. The division by 2 must be exact.
fn b_term(n: i64) -> Result<BigInt> {
    let comps = compositions3(n);
    let m = multis(n, &comps);
    let mut sum = BigInt::zero();
    for (ai, a) in comps.iter().enumerate() {
        for (bi, b) in comps.iter().enumerate() {
            let c = [n - a[0] - b[0], n - a[1] - b[1], n - a[2] - b[2]];
            if c.iter().any(|&v| v < 0) {
                continue;
            }
            if (b[1] + 2 * b[2] + 2 * c[1] + c[2]) % 3 != 0 {
                continue;
            }
            sum += &m[ai] * &m[bi] * multinomial(n, &c)?;
        }
    }
    let tilde = BigInt::from(3) * sum - multinomial(3 * n, &[n, n, n])?;
    let signed = if n % 2 == 0 { tilde } else { -tilde };
    let (q, r) = signed.div_rem(&BigInt::from(2));
    if !r.is_zero() {
        return Err(Error::InexactDivision {
            context: format!("power-free form of B at n={n}"),
            numerator: signed.to_string(),
            divisor: "2".into(),
        });
    }
    Ok(q)
}

/// `F_n` sums `(-1)^{a_1+b_2+c_3} C(n,a) C(n,b) C(n,c) C(n,d) C(n,e)` over
/// five compositions of `n` with `a_i + b_i + c_i + d_i + 2 e_i = 2n`.
fn f_term(n: i64) -> Result<BigInt> {
    let comps = compositions3(n);
    let m = multis(n, &comps);
    let mut acc = BigInt::zero();
    for (ei, e) in comps.iter().enumerate() {
        for (ai, a) in comps.iter().enumerate() {
            if (0..3).any(|i| a[i] + 2 * e[i] > 2 * n) {
                continue;
            }
            let me_a = &m[ei] * &m[ai];
            for (bi, b) in comps.iter().enumerate() {
                if (0..3).any(|i| a[i] + b[i] + 2 * e[i] > 2 * n) {
                    continue;
                }
                let me_ab = &me_a * &m[bi];
                for (ci, c) in comps.iter().enumerate() {
                    let mut d = [0i64; 3];
                    let mut ok = true;
                    for i in 0..3 {
                        d[i] = 2 * n - a[i] - b[i] - c[i] - 2 * e[i];
                        if d[i] < 0 {
                            ok = false;
                            break;
                        }
                    }
                    if !ok || d.iter().sum::<i64>() != n {
                        continue;
                    }
                    let term = &me_ab * &m[ci] * multinomial(n, &d)?;
                    if (a[0] + b[1] + c[2]) % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
            }
        }
    }
    Ok(acc)
}

/// `(δ)_n` sums `(-1)^{a_2+b_1+d_3} C(n,a) C(n,b) C(n,c) C(n,d)` over four
/// compositions of `n` with `b_1+c_1+d_1 = n`, `a_1+b_2+d_2 = n`,
/// `a_2+b_3+c_2 = n`.
fn delta_term(n: i64) -> Result<BigInt> {
    let comps = compositions3(n);
    let m = multis(n, &comps);
    let mut acc = BigInt::zero();
    for (ai, a) in comps.iter().enumerate() {
        for (bi, b) in comps.iter().enumerate() {
            let d2 = n - a[0] - b[1];
            let c2 = n - a[1] - b[2];
            if d2 < 0 || c2 < 0 {
                continue;
            }
            let mab = &m[ai] * &m[bi];
            for d1 in 0..=(n - b[0]) {
                let c1 = n - b[0] - d1;
                let c3 = n - c1 - c2;
                let d3 = n - d1 - d2;
                if c3 < 0 || d3 < 0 {
                    continue;
                }
                let term = &mab * multinomial(n, &[c1, c2, c3])? * multinomial(n, &[d1, d2, d3])?;
                if (a[1] + b[0] + d3) % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::recurrence::RecurrenceSpec;

    #[test]
    fn b_empty_sum_case() {
        // S(0) is the single zero tuple: 2 B_0 = 3 - 1
        assert_eq!(b_term(0).unwrap(), BigInt::from(1));
    }

    #[test]
    fn b_matches_recurrence() {
        let rec = RecurrenceSpec::Zagier2 { a: 9, b: 27, lambda: 3 }
            .terms(4)
            .unwrap();
        assert_eq!(prop12_terms(Prop12Sequence::B, 4).unwrap(), rec);
    }

    #[test]
    fn delta_matches_recurrence() {
        let rec = RecurrenceSpec::AlmkvistZudilin3 { a: 7, b: 3, c: 81 }
            .terms(4)
            .unwrap();
        assert_eq!(prop12_terms(Prop12Sequence::Delta, 4).unwrap(), rec);
    }

    #[test]
    fn f_matches_recurrence_small() {
        let rec = RecurrenceSpec::Zagier2 { a: 17, b: 72, lambda: 6 }
            .terms(3)
            .unwrap();
        assert_eq!(prop12_terms(Prop12Sequence::F, 3).unwrap(), rec);
    }
}
