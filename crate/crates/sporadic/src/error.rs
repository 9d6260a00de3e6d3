//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("variable count {0} out of range (1..=4)")]
    BadDimension(usize),

    #[error("exponent {value} out of range (|e| must stay below {bound})")]
    ExponentOverflow { value: i64, bound: i64 },

    #[error("term count {needed} exceeds cap {cap} (set SPORADIC_TERM_CAP to raise)")]
    TermCapExceeded { cap: usize, needed: usize },

    #[error("exponent map is singular")]
    SingularMap,

    #[error("matrix has determinant {det}, expected ±1")]
    NotUnimodular { det: i64 },

    #[error("cannot raise to a negative power: base is not a unit monomial")]
    NotInvertible,

    #[error("recurrence step n={n}: {numerator} is not divisible by {divisor}")]
    NonIntegral {
        n: u64,
        numerator: String,
        divisor: String,
    },

    #[error("inexact division in {context}: {numerator} not divisible by {divisor}")]
    InexactDivision {
        context: String,
        numerator: String,
        divisor: String,
    },

    #[error("{context}: values disagree at n={n}: {left} vs {right}")]
    Disagreement {
        context: String,
        n: u64,
        left: String,
        right: String,
    },

    #[error("unknown sequence `{0}`")]
    UnknownSequence(String),

    #[error("empty polynomial has no Newton polytope")]
    EmptyPolynomial,

    #[error("series denominator must have constant term 1; offending constant term of Q is {0}")]
    NonzeroConstantTerm(String),

    #[error("series argument must be a true polynomial; found exponent {exp} for variable {var}")]
    NegativeExponent { var: usize, exp: i64 },

    #[error("p-adic valuation of zero is undefined")]
    ValuationOfZero,

    #[error("zero term u_{0} encountered; valuation bound undefined")]
    ZeroTerm(u64),

    #[error("prime {p} rejected: Gauss congruences of order {r} are stated for primes p >= r+1 = {}", r + 1)]
    PrimeTooSmall { p: u64, r: u32 },

    #[error("p = 2 is excluded from the Jacobsthal congruence")]
    EvenPrime,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search space of about {estimate} candidates exceeds cap {cap}")]
    SearchSpaceTooLarge { estimate: u128, cap: u128 },

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
