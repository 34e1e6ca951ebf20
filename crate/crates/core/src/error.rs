use thiserror::Error;

use crate::field::FieldTag;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("field size {base}^{exp} exceeds the size budget of 2^{budget_bits}")]
    SizeBudget {
        base: u64,
        exp: u32,
        budget_bits: u32,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldTag, right: FieldTag },
    #[error("symbol {symbol} is not an element of GF({q})")]
    SymbolOutOfRange { symbol: u64, q: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("reciprocal requires a nonzero constant term")]
    ZeroConstantTerm,
    #[error("gcd(n, q) = gcd({n}, {q}) must be 1")]
    NotCoprime { n: u64, q: u64 },
    #[error("{n} does not divide q^m - 1 = {order}")]
    LengthDoesNotDivide { n: u64, order: u64 },
    #[error("coefficient {0} is not in the base field")]
    NotInSubfield(u64),
    #[error("{0} is not a coset leader")]
    NotLeader(u64),
    #[error("residue {value} is outside Z_{n}")]
    ResidueOutOfRange { value: u64, n: u64 },
    #[error("enumeration of {needed} codewords exceeds the budget of {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("invalid weight distribution: {0}")]
    InvalidDistribution(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("unknown claim: {0}")]
    UnknownClaim(String),
    #[error("parse error: {0}")]
    Parse(String),
}
