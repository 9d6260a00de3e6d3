//! Exact binomial and multinomial coefficients over big integers.
//!
//! The convention throughout the crate is combinatorial: `C(n, k) = 0`
//! whenever `k < 0` or `n < k` (in particular for negative `n`). Generalized
//! binomial coefficients are never used; boundary terms such as `C(-1, 0)`
//! evaluate to 0 under the same rule.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(n, k)` with the zero convention described in the module docs.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    // Exploit symmetry; each intermediate division is exact.
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// `n! / (parts_1! parts_2! ... parts_m!)`, the multinomial coefficient.
///
/// Errors if a part is negative or the parts do not sum to `n`.
pub fn multinomial(n: i64, parts: &[i64]) -> Result<BigInt> {
    if let Some(&bad) = parts.iter().find(|&&p| p < 0) {
        return Err(Error::Precondition(format!(
            "multinomial part {bad} is negative"
        )));
    }
    let total: i64 = parts.iter().sum();
    if total != n {
        return Err(Error::Precondition(format!(
            "multinomial parts sum to {total}, expected {n}"
        )));
    }
    let mut acc = BigInt::one();
    let mut remaining = n;
    for &p in parts {
        acc *= binomial(remaining, p);
        remaining -= p;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(10, 5), BigInt::from(252));
        assert_eq!(binomial(0, 0), BigInt::from(1));
    }

    #[test]
    fn binomial_zero_convention() {
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(-1, 3), BigInt::zero());
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(3, &[1, 1, 1]).unwrap(), BigInt::from(6));
        assert_eq!(multinomial(6, &[2, 2, 2]).unwrap(), BigInt::from(90));
        assert_eq!(multinomial(0, &[0, 0, 0]).unwrap(), BigInt::from(1));
    }

    #[test]
    fn multinomial_rejects_bad_parts() {
        assert!(multinomial(3, &[1, 1]).is_err());
        assert!(multinomial(3, &[4, -1]).is_err());
    }
}
