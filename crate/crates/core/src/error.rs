use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the primitive {l}-th root of unity")]
    DenominatorVanishesAtRoot { l: u32 },
    #[error("root of unity order must be odd and at least 3, got {0}")]
    InvalidRootOrder(u32),
    #[error("division by a non-monomial weight expression: {0}")]
    UnsupportedDivision(String),
    #[error("invalid signature gl({m}|{n}): both ranks must be positive")]
    InvalidSignature { m: usize, n: usize },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("bad root indices ({i},{j}): {reason}")]
    BadRootIndices { i: usize, j: usize, reason: String },
    #[error("braid automorphism T_{0} is undefined at the odd simple root")]
    BraidAtOddRoot(usize),
    #[error("no commutation rule could be derived: {0}")]
    UnknownCommutationRule(String),
    #[error("weight is not dominant for the even part: {0}")]
    NonDominantWeight(String),
    #[error("character is incompatible with the central character: {0}")]
    IncompatibleCharacter(String),
    #[error("expected a scalar, got an algebra element with non-trivial part")]
    NotAScalar,
    #[error("weight indeterminates cannot appear in algebra coefficients")]
    WeightIndeterminateInAlgebra,
    #[error("invalid exponent {0}")]
    InvalidExponent(i64),
    #[error("module dimension limit exceeded ({0} basis vectors)")]
    ModuleTooLarge(usize),
    #[error("serialization failed: {0}")]
    Serialization(String),
    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
