use alloc::string::String;

use crate::ring::RElement;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("alpha = {0} does not satisfy theta(alpha) + alpha = 0")]
    InvalidDerivation(RElement),
    #[error("polynomials carry different derivations")]
    DerivationMismatch,
    #[error("divisor has a non-unit leading coefficient")]
    NonUnitLeading,
    #[error("divisor is the zero polynomial")]
    ZeroDivisor,
    #[error("polynomial has coefficients outside Z4")]
    NotZ4,
    #[error("gamma = {0} is not a unit")]
    GammaNotUnit(RElement),
    #[error("generator is not monic")]
    NotMonic,
    #[error("generator degree {degree} is outside 1..{n}")]
    DegreeOutOfRange { degree: usize, n: usize },
    #[error("generator does not right-divide x^n - gamma (remainder {remainder})")]
    NotRightDivisor { remainder: String },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    RaggedMatrix {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("search space of 16^{degree} candidates exceeds the budget of {budget}")]
    SearchSpaceTooLarge { degree: usize, budget: u64 },
    #[error("code has 2^{log2_size} codewords, over the budget of {budget} (distance upper bound {upper_bound:?})")]
    BudgetExceeded {
        log2_size: u32,
        budget: u64,
        upper_bound: Option<u32>,
    },
    #[error("DNA semantics are only defined for the (a, a+b) Gray map")]
    DnaNeedsStandardGray,
    #[error("Gray image is not an R-code (closed under reversal)")]
    NotReversible,
}
