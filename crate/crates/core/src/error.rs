use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Broad classification used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Bad input: malformed text, parameters outside an operation's domain.
    Usage,
    /// An arithmetic invariant failed to hold, or precision ran out.
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unexpected variable symbol '{0}'")]
    WrongVariable(char),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field size {0} exceeds 2^16")]
    FieldTooLarge(u64),
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("{0} is not irreducible")]
    Reducible(String),
    #[error("{0} is not monic")]
    NotMonic(String),
    #[error("{0} is not coprime to pi")]
    NotCoprime(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("incompatible operands: {0}")]
    Incompatible(String),
    #[error("lowest coefficient is not invertible")]
    NonInvertibleLeading,
    #[error("inner series must have order >= 1, found {0}")]
    InnerOrder(i64),
    #[error("precision exhausted: needed {needed}, certified {available}")]
    PrecisionExhausted { needed: i64, available: i64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible modulo the defining polynomial")]
    NotInvertible,
    #[error("not in the image of composition with Phi_pi: {0}")]
    NotInImage(String),
    #[error("theta tail does not vanish: coefficient of u^{index} is nonzero (u-degree bound {udeg})")]
    TailNotVanishing { udeg: usize, index: usize },
    #[error("inconsistent character: {0}")]
    InconsistentCharacter(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Syntax { .. }
            | Error::WrongVariable(_)
            | Error::NotPrimePower(_)
            | Error::FieldTooLarge(_)
            | Error::ZeroPolynomial
            | Error::Reducible(_)
            | Error::NotMonic(_)
            | Error::NotCoprime(_)
            | Error::InvalidArgument(_)
            | Error::Incompatible(_)
            | Error::InconsistentCharacter(_) => ErrorKind::Usage,
            _ => ErrorKind::Internal,
        }
    }

    /// Short machine-readable tag.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::WrongVariable(_) => "wrong_variable",
            Error::NotPrimePower(_) => "not_prime_power",
            Error::FieldTooLarge(_) => "field_too_large",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::Reducible(_) => "reducible",
            Error::NotMonic(_) => "not_monic",
            Error::NotCoprime(_) => "not_coprime",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::Incompatible(_) => "incompatible",
            Error::NonInvertibleLeading => "non_invertible_leading",
            Error::InnerOrder(_) => "inner_order",
            Error::PrecisionExhausted { .. } => "precision_exhausted",
            Error::DivisionByZero => "division_by_zero",
            Error::NotInvertible => "not_invertible",
            Error::NotInImage(_) => "not_in_image",
            Error::TailNotVanishing { .. } => "tail_not_vanishing",
            Error::InconsistentCharacter(_) => "inconsistent_character",
            Error::Overflow(_) => "overflow",
            Error::Internal(_) => "internal",
        }
    }
}
