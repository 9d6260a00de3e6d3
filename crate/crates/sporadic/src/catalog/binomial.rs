//! Binomial-sum evaluators for the catalog sequences.
//!
//! Every formula is evaluated exactly with the zero convention
//! `C(a, b) = 0` for `a < b` or `b < 0` (see [`crate::binom`]); no
//! generalized binomial coefficients enter. Boundary terms such as
//! `C(4n - 5k - 1, 3n)` at small `n` rely on this convention.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::binom::binomial;
use crate::error::{Error, Result};

/// Identifier of a registered binomial-sum formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Formula {
    /// `sum_k C(n,k)^3` (Franel numbers)
    A,
    /// `sum_k (-1)^k 3^{n-3k} C(n,3k) C(3k,2k) C(2k,k)`
    B,
    /// `sum_k C(n,k)^2 C(2k,k)`
    C,
    /// `sum_k C(n,k)^2 C(n+k,k)` (Apéry numbers, second order)
    D,
    /// `sum_k 4^{n-2k} C(n,2k) C(2k,k)^2`
    E,
    /// `sum_k C(n,k) C(2k,k) C(2n-2k,n-k)`, the power-free form of `E`
    ENew,
    /// `sum_k (-1)^k 8^{n-k} C(n,k) sum_j C(k,j)^3`
    F,
    /// `sum_k (-1)^k 3^{n-3k} C(n,3k) C(n+k,n) C(3k,2k) C(2k,k)` (Almkvist–Zudilin numbers)
    Delta,
    /// `sum_k (-1)^k C(n,k)^3 (C(4n-5k-1,3n) + C(4n-5k,3n))`
    Eta,
    /// `sum_k C(n,k)^2 C(2k,k) C(2n-2k,n-k)` (Domb numbers)
    Alpha,
    /// `sum_{k=ceil(n/2)}^n C(n,k)^2 C(2k,n)^2`
    Epsilon,
    /// `sum_{k,l} C(n,k)^2 C(n,l) C(k,l) C(k+l,n)`
    Zeta,
    /// `sum_k C(n,k)^2 C(n+k,k)^2` (Apéry numbers, third order)
    Gamma,
    /// `sum_{k=ceil(n/2)}^n C(n,k)^2 C(n+k,k) C(2k,n)`
    S7,
    /// `sum_k C(n,k)^4` (Yang–Zudilin numbers)
    S10,
    /// `sum_k (-1)^k C(n,k) C(2k,k) C(2n-2k,n-k) (C(2n-3k-1,n) + C(2n-3k,n))`
    S18,
    /// `sum_k C(2n-2k,n-k)^2 C(2k,k)^2` (third-order Legendrian sequence)
    L3,
}

impl Formula {
    pub fn description(&self) -> &'static str {
        match self {
            Formula::A => "sum_k C(n,k)^3",
            Formula::B => "sum_k (-1)^k 3^(n-3k) C(n,3k) C(3k,2k) C(2k,k)",
            Formula::C => "sum_k C(n,k)^2 C(2k,k)",
            Formula::D => "sum_k C(n,k)^2 C(n+k,k)",
            Formula::E => "sum_k 4^(n-2k) C(n,2k) C(2k,k)^2",
            Formula::ENew => "sum_k C(n,k) C(2k,k) C(2n-2k,n-k)",
            Formula::F => "sum_k (-1)^k 8^(n-k) C(n,k) sum_j C(k,j)^3",
            Formula::Delta => "sum_k (-1)^k 3^(n-3k) C(n,3k) C(n+k,n) C(3k,2k) C(2k,k)",
            Formula::Eta => "sum_k (-1)^k C(n,k)^3 (C(4n-5k-1,3n) + C(4n-5k,3n))",
            Formula::Alpha => "sum_k C(n,k)^2 C(2k,k) C(2n-2k,n-k)",
            Formula::Epsilon => "sum_{k=ceil(n/2)}^n C(n,k)^2 C(2k,n)^2",
            Formula::Zeta => "sum_{k,l} C(n,k)^2 C(n,l) C(k,l) C(k+l,n)",
            Formula::Gamma => "sum_k C(n,k)^2 C(n+k,k)^2",
            Formula::S7 => "sum_{k=ceil(n/2)}^n C(n,k)^2 C(n+k,k) C(2k,n)",
            Formula::S10 => "sum_k C(n,k)^4",
            Formula::S18 => "sum_k (-1)^k C(n,k) C(2k,k) C(2n-2k,n-k) (C(2n-3k-1,n) + C(2n-3k,n))",
            Formula::L3 => "sum_k C(2n-2k,n-k)^2 C(2k,k)^2",
        }
    }

    /// `u_n` for this formula.
    pub fn term(&self, n: u64) -> BigInt {
        let n = n as i64;
        match self {
            Formula::A => (0..=n).map(|k| binomial(n, k).pow(3)).sum(),
            Formula::B => (0..=n / 3)
                .map(|k| {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    BigInt::from(sign)
                        * BigInt::from(3).pow((n - 3 * k) as u32)
                        * binomial(n, 3 * k)
                        * binomial(3 * k, 2 * k)
                        * binomial(2 * k, k)
                })
                .sum(),
            Formula::C => (0..=n)
                .map(|k| binomial(n, k).pow(2) * binomial(2 * k, k))
                .sum(),
            Formula::D => (0..=n)
                .map(|k| binomial(n, k).pow(2) * binomial(n + k, k))
                .sum(),
            Formula::E => (0..=n / 2)
                .map(|k| {
                    BigInt::from(4).pow((n - 2 * k) as u32)
                        * binomial(n, 2 * k)
                        * binomial(2 * k, k).pow(2)
                })
                .sum(),
            Formula::ENew => (0..=n)
                .map(|k| binomial(n, k) * binomial(2 * k, k) * binomial(2 * n - 2 * k, n - k))
                .sum(),
            Formula::F => (0..=n)
                .map(|k| {
                    let inner: BigInt = (0..=k).map(|j| binomial(k, j).pow(3)).sum();
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    BigInt::from(sign) * BigInt::from(8).pow((n - k) as u32) * binomial(n, k) * inner
                })
                .sum(),
            Formula::Delta => (0..=n / 3)
                .map(|k| {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    BigInt::from(sign)
                        * BigInt::from(3).pow((n - 3 * k) as u32)
                        * binomial(n, 3 * k)
                        * binomial(n + k, n)
                        * binomial(3 * k, 2 * k)
                        * binomial(2 * k, k)
                })
                .sum(),
            Formula::Eta => (0..=n / 5)
                .map(|k| {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    BigInt::from(sign)
                        * binomial(n, k).pow(3)
                        * (binomial(4 * n - 5 * k - 1, 3 * n) + binomial(4 * n - 5 * k, 3 * n))
                })
                .sum(),
            Formula::Alpha => (0..=n)
                .map(|k| {
                    binomial(n, k).pow(2) * binomial(2 * k, k) * binomial(2 * n - 2 * k, n - k)
                })
                .sum(),
            Formula::Epsilon => ((n + 1) / 2..=n)
                .map(|k| binomial(n, k).pow(2) * binomial(2 * k, n).pow(2))
                .sum(),
            Formula::Zeta => {
                let mut acc = BigInt::zero();
                for k in 0..=n {
                    for l in 0..=n {
                        acc += binomial(n, k).pow(2)
                            * binomial(n, l)
                            * binomial(k, l)
                            * binomial(k + l, n);
                    }
                }
                acc
            }
            Formula::Gamma => (0..=n)
                .map(|k| binomial(n, k).pow(2) * binomial(n + k, k).pow(2))
                .sum(),
            Formula::S7 => ((n + 1) / 2..=n)
                .map(|k| binomial(n, k).pow(2) * binomial(n + k, k) * binomial(2 * k, n))
                .sum(),
            Formula::S10 => (0..=n).map(|k| binomial(n, k).pow(4)).sum(),
            Formula::S18 => (0..=n / 3)
                .map(|k| {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    BigInt::from(sign)
                        * binomial(n, k)
                        * binomial(2 * k, k)
                        * binomial(2 * n - 2 * k, n - k)
                        * (binomial(2 * n - 3 * k - 1, n) + binomial(2 * n - 3 * k, n))
                })
                .sum(),
            Formula::L3 => (0..=n)
                .map(|k| binomial(2 * n - 2 * k, n - k).pow(2) * binomial(2 * k, k).pow(2))
                .sum(),
        }
    }

    /// `u_0 ..= u_N`.
    ///
    /// For [`Formula::E`] the power-free form [`Formula::ENew`] is evaluated
    /// alongside and the two must agree term by term.
    pub fn terms(&self, n_max: usize) -> Result<Vec<BigInt>> {
        let mut out = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max as u64 {
            let v = self.term(n);
            if *self == Formula::E {
                let w = Formula::ENew.term(n);
                if v != w {
                    return Err(Error::Disagreement {
                        context: "formulas registered for E".into(),
                        n,
                        left: v.to_string(),
                        right: w.to_string(),
                    });
                }
            }
            out.push(v);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn franel_prefix() {
        assert_eq!(Formula::A.terms(3).unwrap(), ints(&[1, 2, 10, 56]));
    }

    #[test]
    fn zagier_b_prefix() {
        assert_eq!(Formula::B.terms(2).unwrap(), ints(&[1, 3, 9]));
    }

    #[test]
    fn e_forms_agree() {
        let via_powers = Formula::E.terms(3).unwrap();
        let via_central: Vec<BigInt> = (0..=3).map(|n| Formula::ENew.term(n)).collect();
        assert_eq!(via_powers, via_central);
        assert_eq!(via_powers, ints(&[1, 4, 20, 112]));
    }

    #[test]
    fn eta_boundary_convention() {
        // the k = 0 term at n = 0 is C(-1,0) + C(0,0) = 0 + 1
        assert_eq!(Formula::Eta.term(0), BigInt::from(1));
        assert_eq!(Formula::Eta.terms(2).unwrap(), ints(&[1, 5, 35]));
    }

    #[test]
    fn cooper_prefixes() {
        assert_eq!(Formula::S7.terms(2).unwrap(), ints(&[1, 4, 48]));
        assert_eq!(Formula::S10.terms(2).unwrap(), ints(&[1, 2, 18]));
        assert_eq!(Formula::S18.terms(2).unwrap(), ints(&[1, 6, 54]));
    }

    #[test]
    fn legendrian_prefix() {
        assert_eq!(Formula::L3.terms(3).unwrap(), ints(&[1, 8, 88, 1088]));
    }
}
