//! Diagonals of rational functions `1/(1 - Q)` by truncated series expansion.
//!
//! This is the independent oracle against which constant-term claims are
//! cross-checked: the diagonal of `1/(1 - Q)` is accumulated directly from
//! the truncated powers `Q^k`, never through `ct_sequence`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{term_cap, ExponentVector, LaurentPoly};
use crate::error::{Error, Result};

/// First `n + 1` diagonal coefficients of `1/(1 - q)`.
///
/// `q` must be a true polynomial (no negative exponents) with zero constant
/// term; rational functions given as `1/(polynomial with constant term 1)`
/// are normalized by the caller into this shape. The expansion truncates
/// every variable at degree `n`, which is exact for the diagonal prefix.
pub fn diagonal_prefix(q: &LaurentPoly, n: usize) -> Result<Vec<BigInt>> {
    let dim = q.dim();
    for v in 0..dim {
        let lo = q.min_exponent(v);
        if lo < 0 {
            return Err(Error::NegativeExponent { var: v, exp: lo });
        }
    }
    let ct = q.constant_term();
    if !ct.is_zero() {
        return Err(Error::NonzeroConstantTerm(ct.to_string()));
    }

    let mut diag = vec![BigInt::zero(); n + 1];
    diag[0] = BigInt::one();
    if n == 0 {
        return Ok(diag);
    }

    // Each term of q has total degree >= 1, so powers beyond dim * n leave
    // the truncation box entirely.
    let mut power = LaurentPoly::one(dim);
    for _ in 1..=(dim * n) {
        power = mul_truncated(&power, q, n as i64)?;
        if power.is_zero() {
            break;
        }
        for i in 1..=n {
            let idx = vec![i as i64; dim];
            let c = power.coeff(&idx);
            if !c.is_zero() {
                diag[i] += c;
            }
        }
    }
    Ok(diag)
}

/// Product with every variable truncated at degree `deg`.
fn mul_truncated(a: &LaurentPoly, b: &LaurentPoly, deg: i64) -> Result<LaurentPoly> {
    let cap = term_cap();
    let mut out = LaurentPoly::zero(a.dim());
    let b_terms = b.sorted_terms();
    for (ea, ca) in a.sorted_terms() {
        'pairs: for (eb, cb) in &b_terms {
            let mut e = [0i64; super::MAX_DIM];
            for (k, (x, y)) in ea.as_slice().iter().zip(eb.as_slice()).enumerate() {
                let s = *x as i64 + *y as i64;
                if s > deg {
                    continue 'pairs;
                }
                e[k] = s;
            }
            out.accumulate(ExponentVector::new(&e[..a.dim()])?, ca * *cb);
        }
        if out.num_terms() > cap {
            return Err(Error::TermCapExceeded {
                cap,
                needed: out.num_terms(),
            });
        }
    }
    Ok(out)
}

/// The Laurent polynomial `prod_i (sum_j M_{i,j} x_j) / (x_1 ... x_d)`.
///
/// By the MacMahon master theorem its constant term series equals the
/// diagonal of `1/det(I - M Diag(x))`.
pub fn matrix_to_ct_poly(m: &[Vec<i64>]) -> Result<LaurentPoly> {
    let d = m.len();
    if !(1..=super::MAX_DIM).contains(&d) || m.iter().any(|row| row.len() != d) {
        return Err(Error::BadDimension(d));
    }
    let mut acc = LaurentPoly::one(d);
    for row in m {
        let mut linear = LaurentPoly::zero(d);
        for (j, &c) in row.iter().enumerate() {
            let mut e = vec![0i64; d];
            e[j] = 1;
            linear = linear.add(&LaurentPoly::monomial(d, &e, BigInt::from(c))?)?;
        }
        acc = acc.mul(&linear)?;
    }
    acc.shift(&vec![-1i64; d])
}

/// `det(I - M Diag(x_1, ..., x_d))` expanded as a polynomial.
pub fn det_identity_minus_diag(m: &[Vec<i64>]) -> Result<LaurentPoly> {
    let d = m.len();
    if !(1..=super::MAX_DIM).contains(&d) || m.iter().any(|row| row.len() != d) {
        return Err(Error::BadDimension(d));
    }
    // Entry (i, j) of I - M Diag(x) is delta_ij - M_ij * x_j.
    let entry = |i: usize, j: usize| -> Result<LaurentPoly> {
        let mut e = vec![0i64; d];
        e[j] = 1;
        let mut p = LaurentPoly::monomial(d, &e, BigInt::from(-m[i][j]))?;
        if i == j {
            p = p.add(&LaurentPoly::one(d))?;
        }
        Ok(p)
    };
    det_poly(&entry, (0..d).collect::<Vec<_>>().as_slice(), d)
}

fn det_poly(
    entry: &dyn Fn(usize, usize) -> Result<LaurentPoly>,
    cols: &[usize],
    d: usize,
) -> Result<LaurentPoly> {
    let row = d - cols.len();
    if cols.len() == 1 {
        return entry(row, cols[0]);
    }
    let mut acc = LaurentPoly::zero(d);
    for (k, &j) in cols.iter().enumerate() {
        let e = entry(row, j)?;
        if e.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&c| c != j)
            .collect();
        let minor = det_poly(entry, &rest, d)?;
        let signed = if k % 2 == 0 { e } else { e.neg() };
        acc = acc.add(&signed.mul(&minor)?)?;
    }
    Ok(acc)
}

/// `Q` with `det(I - M Diag(x)) = 1 - Q`, ready for [`diagonal_prefix`].
///
/// Errors if the determinant's constant term is not 1 (it always is for
/// `I - M Diag(x)`, whose value at the origin is `det(I) = 1`).
pub fn diagonal_kernel(m: &[Vec<i64>]) -> Result<LaurentPoly> {
    let det = det_identity_minus_diag(m)?;
    let q = LaurentPoly::one(m.len()).sub(&det)?;
    let ct = q.constant_term();
    if !ct.is_zero() {
        return Err(Error::NonzeroConstantTerm(ct.to_string()));
    }
    Ok(q)
}
