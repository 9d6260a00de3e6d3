//! Sparse multivariate Laurent polynomials over arbitrary-precision integers.
//!
//! Polynomials live in up to four variables. Terms are stored in a hash map
//! keyed by packed exponent vectors; a canonical (descending lexicographic)
//! term order is applied only at output and comparison boundaries, so
//! arithmetic stays hash-fast while every observable result is deterministic.
//!
//! The module also provides the quantities this crate is really after:
//! constant terms of powers (`constant_term`, `ct_sequence`, `ct_shifted`),
//! monomial substitutions by integer matrices, and the truncated-series
//! diagonal oracle in [`diagonal`].

pub mod diagonal;
mod fmt;
pub mod json;
pub mod parse;

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Maximum number of variables supported anywhere in the crate.
pub const MAX_DIM: usize = 4;

/// Entries of exponent vectors must stay strictly below this bound in
/// magnitude. With factor degrees and power exponents capped by the term
/// budget this can never be hit organically; it is checked anyway.
pub const EXPONENT_BOUND: i64 = 1 << 15;

const DEFAULT_TERM_CAP: usize = 10_000_000;

static TERM_CAP: AtomicUsize = AtomicUsize::new(0);

/// Current term-count cap for polynomial arithmetic.
///
/// Defaults to 10^7 terms; the environment variable `SPORADIC_TERM_CAP`
/// overrides the default, and [`set_term_cap`] overrides both.
pub fn term_cap() -> usize {
    let v = TERM_CAP.load(Ordering::Relaxed);
    if v != 0 {
        return v;
    }
    let fromenv = std::env::var("SPORADIC_TERM_CAP")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or(DEFAULT_TERM_CAP);
    TERM_CAP.store(fromenv, Ordering::Relaxed);
    fromenv
}

/// Override the term-count cap for the current process.
pub fn set_term_cap(cap: usize) {
    TERM_CAP.store(cap.max(1), Ordering::Relaxed);
}

/// Packed exponent vector of a single monomial.
///
/// Stores up to [`MAX_DIM`] small signed entries together with the active
/// length, so it is `Copy` and cheap to hash.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ExponentVector {
    e: [i16; MAX_DIM],
    len: u8,
}

impl ExponentVector {
    /// The all-zeros vector in `dim` variables.
    pub fn zero(dim: usize) -> Self {
        debug_assert!((1..=MAX_DIM).contains(&dim));
        ExponentVector {
            e: [0; MAX_DIM],
            len: dim as u8,
        }
    }

    /// Build from a slice, checking length and magnitude bounds.
    pub fn new(entries: &[i64]) -> Result<Self> {
        if entries.is_empty() || entries.len() > MAX_DIM {
            return Err(Error::BadDimension(entries.len()));
        }
        let mut e = [0i16; MAX_DIM];
        for (i, &v) in entries.iter().enumerate() {
            if v.abs() >= EXPONENT_BOUND {
                return Err(Error::ExponentOverflow {
                    value: v,
                    bound: EXPONENT_BOUND,
                });
            }
            e[i] = v as i16;
        }
        Ok(ExponentVector {
            e,
            len: entries.len() as u8,
        })
    }

    pub fn dim(&self) -> usize {
        self.len as usize
    }

    pub fn as_slice(&self) -> &[i16] {
        &self.e[..self.len as usize]
    }

    pub fn to_vec(&self) -> Vec<i64> {
        self.as_slice().iter().map(|&v| v as i64).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.as_slice().iter().all(|&v| v == 0)
    }

    fn checked_add(&self, other: &Self) -> Result<Self> {
        debug_assert_eq!(self.len, other.len);
        let mut e = [0i16; MAX_DIM];
        for i in 0..self.len as usize {
            let s = self.e[i] as i64 + other.e[i] as i64;
            if s.abs() >= EXPONENT_BOUND {
                return Err(Error::ExponentOverflow {
                    value: s,
                    bound: EXPONENT_BOUND,
                });
            }
            e[i] = s as i16;
        }
        Ok(ExponentVector { e, len: self.len })
    }
}

/// Canonical term order: descending lexicographic on exponent vectors.
pub(crate) fn canonical_cmp(a: &ExponentVector, b: &ExponentVector) -> std::cmp::Ordering {
    b.as_slice().cmp(a.as_slice())
}

/// An integer exponent map `e -> U e`, used for monomial substitutions
/// `x_i -> prod_j x_j^{U_{ji}}`.
///
/// The constructor rejects singular matrices. A map records whether it is
/// unimodular (`|det| = 1`, so constant terms of all powers are preserved) or
/// merely injective on the exponent lattice; for the latter, preservation of
/// constant terms must be verified per use (see [`verify_ct_preservation`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentMap {
    dim: usize,
    rows: [[i64; MAX_DIM]; MAX_DIM],
    det: i64,
}

/// How an [`ExponentMap`] acts on constant terms of powers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    /// `|det| = 1`: constant terms of all powers are preserved.
    Unimodular,
    /// `det != 0` but `|det| > 1`: injective on the lattice only.
    InjectiveOnly,
}

impl ExponentMap {
    pub fn new(dim: usize, rows: &[Vec<i64>]) -> Result<Self> {
        if !(1..=MAX_DIM).contains(&dim) || rows.len() != dim {
            return Err(Error::BadDimension(rows.len()));
        }
        let mut m = [[0i64; MAX_DIM]; MAX_DIM];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::BadDimension(row.len()));
            }
            m[i][..dim].copy_from_slice(row);
        }
        let det = det_i64(&m, dim);
        if det == 0 {
            return Err(Error::SingularMap);
        }
        Ok(ExponentMap { dim, rows: m, det })
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = [[0i64; MAX_DIM]; MAX_DIM];
        for (i, row) in m.iter_mut().enumerate().take(dim) {
            row[i] = 1;
        }
        ExponentMap { dim, rows: m, det: 1 }
    }

    /// The scaling map `e -> k e` (determinant `k^dim`).
    pub fn scaling(dim: usize, k: i64) -> Result<Self> {
        let rows: Vec<Vec<i64>> = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { k } else { 0 }).collect())
            .collect();
        ExponentMap::new(dim, &rows)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn det(&self) -> i64 {
        self.det
    }

    pub fn kind(&self) -> MapKind {
        if self.det.abs() == 1 {
            MapKind::Unimodular
        } else {
            MapKind::InjectiveOnly
        }
    }

    pub fn is_unimodular(&self) -> bool {
        self.kind() == MapKind::Unimodular
    }

    fn apply(&self, e: &ExponentVector) -> Result<ExponentVector> {
        let mut out = [0i64; MAX_DIM];
        for (i, slot) in out.iter_mut().enumerate().take(self.dim) {
            let mut acc = 0i64;
            for (j, &ej) in e.as_slice().iter().enumerate() {
                acc += self.rows[i][j] * ej as i64;
            }
            *slot = acc;
        }
        ExponentVector::new(&out[..self.dim])
    }
}

/// An exponent map with determinant ±1, checked at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularMap(ExponentMap);

impl UnimodularMap {
    pub fn new(dim: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let m = ExponentMap::new(dim, rows)?;
        if !m.is_unimodular() {
            return Err(Error::NotUnimodular { det: m.det() });
        }
        Ok(UnimodularMap(m))
    }

    pub fn identity(dim: usize) -> Self {
        UnimodularMap(ExponentMap::identity(dim))
    }

    pub fn as_map(&self) -> &ExponentMap {
        &self.0
    }
}

fn det_i64(m: &[[i64; MAX_DIM]; MAX_DIM], dim: usize) -> i64 {
    match dim {
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => {
            // Laplace expansion along the first row; dims are at most 4.
            let mut det = 0i64;
            for j in 0..dim {
                if m[0][j] == 0 {
                    continue;
                }
                let mut minor = [[0i64; MAX_DIM]; MAX_DIM];
                for r in 1..dim {
                    let mut c2 = 0;
                    for c in 0..dim {
                        if c == j {
                            continue;
                        }
                        minor[r - 1][c2] = m[r][c];
                        c2 += 1;
                    }
                }
                let sign = if j % 2 == 0 { 1 } else { -1 };
                det += sign * m[0][j] * det_i64(&minor, dim - 1);
            }
            det
        }
    }
}

/// Pruning mode for [`LaurentPoly::ct_sequence_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prune {
    /// Keep every term of every intermediate power.
    Off,
    /// Drop terms whose exponent vector cannot return to the origin within
    /// the remaining multiplications, given the per-coordinate exponent range
    /// of the base polynomial. Results are identical to [`Prune::Off`].
    Reachability,
}

/// A sparse Laurent polynomial with `BigInt` coefficients.
///
/// Invariants: no stored zero coefficients; all exponent vectors have length
/// `dim`. Arithmetic is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    dim: usize,
    terms: HashMap<ExponentVector, BigInt>,
}

impl LaurentPoly {
    pub fn zero(dim: usize) -> Self {
        assert!((1..=MAX_DIM).contains(&dim), "dimension out of range");
        LaurentPoly {
            dim,
            terms: HashMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, BigInt::one())
    }

    pub fn constant(dim: usize, c: BigInt) -> Self {
        let mut p = Self::zero(dim);
        if !c.is_zero() {
            p.terms.insert(ExponentVector::zero(dim), c);
        }
        p
    }

    /// The monomial `c * x^e`.
    pub fn monomial(dim: usize, exponents: &[i64], c: BigInt) -> Result<Self> {
        if exponents.len() != dim {
            return Err(Error::DimMismatch {
                left: dim,
                right: exponents.len(),
            });
        }
        let mut p = Self::zero(dim);
        if !c.is_zero() {
            p.terms.insert(ExponentVector::new(exponents)?, c);
        }
        Ok(p)
    }

    /// The single variable `x_{index}` (0-based).
    pub fn variable(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::Precondition(format!(
                "variable index {index} out of range for dimension {dim}"
            )));
        }
        let mut e = vec![0i64; dim];
        e[index] = 1;
        Self::monomial(dim, &e, BigInt::one())
    }

    /// Build from explicit terms, accumulating duplicates.
    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i64>, BigInt)>,
    {
        let mut p = Self::zero(dim);
        for (e, c) in terms {
            if e.len() != dim {
                return Err(Error::DimMismatch {
                    left: dim,
                    right: e.len(),
                });
            }
            p.accumulate(ExponentVector::new(&e)?, c);
        }
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    /// Coefficient of the monomial with the given exponents (0 if absent).
    pub fn coeff(&self, exponents: &[i64]) -> BigInt {
        match ExponentVector::new(exponents) {
            Ok(e) if e.dim() == self.dim => {
                self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
            }
            _ => BigInt::zero(),
        }
    }

    /// Coefficient of the all-zeros exponent vector.
    pub fn constant_term(&self) -> BigInt {
        self.terms
            .get(&ExponentVector::zero(self.dim))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub(crate) fn accumulate(&mut self, e: ExponentVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(e) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// Terms sorted in the canonical (descending lexicographic) order.
    pub fn sorted_terms(&self) -> Vec<(ExponentVector, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c)).collect();
        v.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
        v
    }

    /// Support of the polynomial in canonical order.
    pub fn support(&self) -> Vec<ExponentVector> {
        let mut v: Vec<_> = self.terms.keys().copied().collect();
        v.sort_by(canonical_cmp);
        v
    }

    /// Smallest exponent of variable `var` across the support (0 for zero poly).
    pub fn min_exponent(&self, var: usize) -> i64 {
        self.terms
            .keys()
            .map(|e| e.as_slice()[var] as i64)
            .min()
            .unwrap_or(0)
    }

    /// Largest exponent of variable `var` across the support (0 for zero poly).
    pub fn max_exponent(&self, var: usize) -> i64 {
        self.terms
            .keys()
            .map(|e| e.as_slice()[var] as i64)
            .max()
            .unwrap_or(0)
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (*e, -c)).collect();
        LaurentPoly {
            dim: self.dim,
            terms,
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.dim);
        }
        let terms = self.terms.iter().map(|(e, c)| (*e, c * k)).collect();
        LaurentPoly {
            dim: self.dim,
            terms,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let (mut big, small) = if self.terms.len() >= other.terms.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (e, c) in &small.terms {
            big.accumulate(*e, c.clone());
        }
        Ok(big)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Exact product. Errors on dimension mismatch or when the result would
    /// exceed the term cap.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.mul_with_cap(other, term_cap())
    }

    /// As [`mul`](Self::mul) with an explicit term-count cap.
    pub fn mul_with_cap(&self, other: &Self, cap: usize) -> Result<Self> {
        self.check_dim(other)?;
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = LaurentPoly {
            dim: self.dim,
            terms: HashMap::with_capacity(large.terms.len()),
        };
        for (ea, ca) in &small.terms {
            for (eb, cb) in &large.terms {
                let e = ea.checked_add(eb)?;
                out.accumulate(e, ca * cb);
            }
            if out.terms.len() > cap {
                return Err(Error::TermCapExceeded {
                    cap,
                    needed: out.terms.len(),
                });
            }
        }
        Ok(out)
    }

    /// `self^n` by binary exponentiation; `n = 0` yields the constant 1.
    pub fn pow(&self, n: u64) -> Result<Self> {
        let mut result = Self::one(self.dim);
        if n == 0 {
            return Ok(result);
        }
        let mut base = self.clone();
        let mut e = n;
        loop {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base)?;
        }
        Ok(result)
    }

    /// `self^n` by repeated multiplication. Exists so the equivalence with
    /// binary exponentiation can be asserted term-for-term.
    pub fn pow_iterative(&self, n: u64) -> Result<Self> {
        let mut acc = Self::one(self.dim);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Constant terms of `self^0 .. self^n`, one multiplication per step.
    pub fn ct_sequence(&self, n: usize) -> Result<Vec<BigInt>> {
        self.ct_sequence_with(n, Prune::Off)
    }

    /// As [`ct_sequence`](Self::ct_sequence), with an explicit pruning mode.
    pub fn ct_sequence_with(&self, n: usize, prune: Prune) -> Result<Vec<BigInt>> {
        let mut out = Vec::with_capacity(n + 1);
        out.push(BigInt::one());
        if n == 0 {
            return Ok(out);
        }
        let ranges: Vec<(i64, i64)> = (0..self.dim)
            .map(|v| (self.min_exponent(v), self.max_exponent(v)))
            .collect();
        let mut acc = Self::one(self.dim);
        for i in 1..=n {
            acc = acc.mul(self)?;
            out.push(acc.constant_term());
            if prune == Prune::Reachability && i < n {
                let remaining = (n - i) as i64;
                acc.retain_reachable(&ranges, remaining);
            }
        }
        Ok(out)
    }

    /// Keep only terms whose exponent can be cancelled by some product of at
    /// most `remaining` further factors with per-coordinate ranges `ranges`.
    fn retain_reachable(&mut self, ranges: &[(i64, i64)], remaining: i64) {
        self.terms.retain(|e, _| {
            'js: for j in 1..=remaining {
                for (k, &(lo, hi)) in ranges.iter().enumerate() {
                    let need = -(e.as_slice()[k] as i64);
                    if need < j * lo || need > j * hi {
                        continue 'js;
                    }
                }
                return true;
            }
            false
        });
    }

    /// Constant term of `self^n * x^shifts`, i.e. the coefficient of
    /// `x^{-shifts}` in `self^n`.
    pub fn ct_shifted(&self, n: u64, shifts: &[i64]) -> Result<BigInt> {
        if shifts.len() != self.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: shifts.len(),
            });
        }
        let p = self.pow(n)?;
        let target: Vec<i64> = shifts.iter().map(|&s| -s).collect();
        Ok(p.coeff(&target))
    }

    /// Apply an exponent map: each exponent vector `e` becomes `U e`;
    /// coefficients are unchanged.
    pub fn substitute(&self, map: &ExponentMap) -> Result<Self> {
        if map.dim() != self.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: map.dim(),
            });
        }
        let mut out = Self::zero(self.dim);
        for (e, c) in &self.terms {
            out.accumulate(map.apply(e)?, c.clone());
        }
        Ok(out)
    }

    /// Evaluate variable `var` at 1, producing a polynomial in one fewer
    /// variable. Requires `dim >= 2`.
    pub fn substitute_one(&self, var: usize) -> Result<Self> {
        if self.dim < 2 || var >= self.dim {
            return Err(Error::Precondition(format!(
                "cannot eliminate variable {var} from a {}-variable polynomial",
                self.dim
            )));
        }
        let mut out = Self::zero(self.dim - 1);
        for (e, c) in &self.terms {
            let mut reduced: Vec<i64> = Vec::with_capacity(self.dim - 1);
            for (i, &v) in e.as_slice().iter().enumerate() {
                if i != var {
                    reduced.push(v as i64);
                }
            }
            out.accumulate(ExponentVector::new(&reduced)?, c.clone());
        }
        Ok(out)
    }

    /// Multiply by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i64]) -> Result<Self> {
        let m = Self::monomial(self.dim, shift, BigInt::one())?;
        self.mul(&m)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }
}

/// Empirically check that `map` preserves constant terms of powers of `a`
/// up to exponent `n_max`. Unimodular maps always do; for injective-only
/// maps (such as `e -> 2e`) this is the per-use verification.
pub fn verify_ct_preservation(a: &LaurentPoly, map: &ExponentMap, n_max: usize) -> Result<bool> {
    let b = a.substitute(map)?;
    Ok(a.ct_sequence(n_max)? == b.ct_sequence(n_max)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse::parse;

    fn p2(s: &str) -> LaurentPoly {
        parse(s, 2).unwrap()
    }

    #[test]
    fn mul_binomial_square() {
        let f = parse("x + x^-1", 1).unwrap();
        let sq = f.mul(&f).unwrap();
        assert_eq!(sq, parse("x^2 + 2 + x^-2", 1).unwrap());
    }

    #[test]
    fn mul_identity() {
        let f = p2("3*x^2*y - y^-1 + 7");
        assert_eq!(f.mul(&LaurentPoly::one(2)).unwrap(), f);
    }

    #[test]
    fn mul_difference_of_squares() {
        let a = p2("x - y");
        let b = p2("x + y");
        assert_eq!(a.mul(&b).unwrap(), p2("x^2 - y^2"));
    }

    #[test]
    fn mul_dim_mismatch() {
        let a = parse("x", 1).unwrap();
        let b = p2("x");
        assert!(matches!(a.mul(&b), Err(Error::DimMismatch { .. })));
    }

    #[test]
    fn pow_zeroth_power_is_one() {
        let a = p2("(x+1)*(y+1)*(x+y)*(x*y)^-1");
        assert!(a.pow(0).unwrap().is_one());
    }

    #[test]
    fn pow_square_matches_franel_second_term() {
        // CT of the square of the Franel polynomial equals sum_k C(2,k)^3,
        // computed here independently.
        let a = p2("(x+1)*(y+1)*(x+y)*(x*y)^-1");
        let oracle: BigInt = (0..=2).map(|k| crate::binom::binomial(2, k).pow(3)).sum();
        assert_eq!(oracle, BigInt::from(10));
        assert_eq!(a.pow(2).unwrap().constant_term(), oracle);
    }

    #[test]
    fn constant_terms_of_catalog_generators() {
        assert_eq!(LaurentPoly::one(3).constant_term(), BigInt::from(1));
        let a = p2("(x+1)*(y+1)*(x+y)*(x*y)^-1");
        assert_eq!(a.constant_term(), BigInt::from(2));
        let d = p2("(x+1)*(y+1)*(x+y+1)*(x*y)^-1");
        assert_eq!(d.constant_term(), BigInt::from(3));
    }

    #[test]
    fn ct_sequence_constant_poly() {
        let one = LaurentPoly::one(3);
        let cts = one.ct_sequence(3).unwrap();
        assert_eq!(cts, vec![1, 1, 1, 1].into_iter().map(BigInt::from).collect::<Vec<_>>());
    }

    #[test]
    fn ct_sequence_apery_b_prefix() {
        let d = p2("(x+1)*(y+1)*(x+y+1)*(x*y)^-1");
        let cts = d.ct_sequence(3).unwrap();
        let expect: Vec<BigInt> = [1, 3, 19, 147].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(cts, expect);
    }

    #[test]
    fn ct_sequence_zagier_b_prefix() {
        let b = p2("(x+y+1)*(x^2+y^2-x*y-x-y+1)*(-x*y)^-1");
        let cts = b.ct_sequence(2).unwrap();
        let expect: Vec<BigInt> = [1, 3, 9].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(cts, expect);
    }

    #[test]
    fn ct_sequence_pruned_matches_unpruned() {
        for expr in [
            "(x+1)*(y+1)*(x+y)*(x*y)^-1",
            "(x+y+1)*(x^2+y^2-x*y-x-y+1)*(-x*y)^-1",
            "x^2*y - y + 3",
        ] {
            let f = p2(expr);
            assert_eq!(
                f.ct_sequence_with(8, Prune::Off).unwrap(),
                f.ct_sequence_with(8, Prune::Reachability).unwrap(),
                "pruning changed the result for {expr}"
            );
        }
    }

    #[test]
    fn pow_iterative_matches_binary() {
        let f = p2("(x+1)*(y+1)*(x+y+1)*(x*y)^-1");
        for n in 0..=5 {
            assert_eq!(f.pow(n).unwrap(), f.pow_iterative(n).unwrap());
        }
    }

    #[test]
    fn substitute_identity_and_inversion() {
        let f = parse("x + x^-1", 1).unwrap();
        let id = ExponentMap::identity(1);
        assert_eq!(f.substitute(&id).unwrap(), f);
        let inv = ExponentMap::new(1, &[vec![-1]]).unwrap();
        assert_eq!(f.substitute(&inv).unwrap(), f);
        assert_eq!(inv.kind(), MapKind::Unimodular);
    }

    #[test]
    fn substitute_doubling_reaches_f_polynomial() {
        // Q(x^2, y^2) equals the degree-doubled generator for sequence F, and
        // constant terms of powers agree even though e -> 2e is not unimodular.
        let q = p2("(x+y+1)*(x^2+y^2-2*x*y-2*x-2*y+1)*(-x*y)^-1");
        let p = p2("(-x+y+1)*(x-y+1)*(x+y-1)*(x+y+1)*(x^2+y^2+1)*(x*y)^-2");
        let doubling = ExponentMap::scaling(2, 2).unwrap();
        assert_eq!(doubling.kind(), MapKind::InjectiveOnly);
        assert_eq!(q.substitute(&doubling).unwrap(), p);
        assert!(verify_ct_preservation(&q, &doubling, 8).unwrap());
    }

    #[test]
    fn substitute_rejects_singular() {
        let m = ExponentMap::new(2, &[vec![1, 1], vec![1, 1]]);
        assert!(matches!(m, Err(Error::SingularMap)));
    }

    #[test]
    fn unimodular_map_rejects_det_two() {
        let m = UnimodularMap::new(2, &[vec![2, 0], vec![0, 1]]);
        assert!(matches!(m, Err(Error::NotUnimodular { det: 2 })));
    }

    #[test]
    fn ct_shifted_cases() {
        let d = p2("(x+1)*(y+1)*(x+y+1)*(x*y)^-1");
        assert_eq!(d.ct_shifted(1, &[0, 0]).unwrap(), BigInt::from(3));
        assert_eq!(d.ct_shifted(0, &[1, 0]).unwrap(), BigInt::from(0));
        assert_eq!(d.ct_shifted(0, &[0, 0]).unwrap(), BigInt::from(1));
    }

    #[test]
    fn substitute_one_reduces_dimension() {
        let f = parse("(x+y+z)*(x+y)", 3).unwrap();
        let g = f.substitute_one(2).unwrap();
        assert_eq!(g, p2("(x+y+1)*(x+y)"));
    }

    #[test]
    fn term_cap_is_enforced() {
        let a = parse("(x+1)*(x^2+1)", 1).unwrap();
        let b = parse("(x^4+1)*(x^8+1)", 1).unwrap();
        let err = a.mul_with_cap(&b, 10).unwrap_err();
        assert!(matches!(err, Error::TermCapExceeded { cap: 10, .. }));
        assert_eq!(a.mul_with_cap(&b, 16).unwrap().num_terms(), 16);
    }
}
