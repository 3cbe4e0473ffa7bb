use thiserror::Error;

/// Errors produced anywhere in the toolkit.
///
/// The variants fall into three groups that the command-line front end maps
/// onto distinct exit codes: malformed input, violated preconditions and
/// exhausted resource guards.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("exponent at byte {pos} exceeds 2^31-1")]
    ExponentOverflow { pos: usize },

    #[error("invalid ring declaration: {0}")]
    InvalidRing(String),

    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("basis precondition violated: {0}")]
    BasisFlags(&'static str),

    #[error("short reduced basis is not monic")]
    NotMonic,

    #[error("quotient is not a finitely generated Z-module")]
    NotFinitelyGenerated,

    #[error("quotient is not a free Z-module: leading coefficient {coefficient} at monomial {monomial}; no ideal of a non-free quotient is an integer lattice")]
    NotFree {
        monomial: String,
        coefficient: String,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("lattice is not full rank (rank {rank} in dimension {dim})")]
    NotFullRank { rank: usize, dim: usize },

    #[error("axis {axis} out of range for a tensor of order {order}")]
    AxisOutOfRange { axis: usize, order: usize },

    #[error("exponent {exponent} of variable {var} is outside the tensor range 0..{radix}")]
    ExponentOutOfRange {
        var: usize,
        exponent: u32,
        radix: usize,
    },

    #[error("invalid tensor shape: {0}")]
    InvalidShape(String),

    #[error("resource guard hit after {steps} steps")]
    ResourceLimit { steps: usize },

    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors caused by malformed textual input.
    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::UnknownVariable { .. }
                | Error::ExponentOverflow { .. }
                | Error::InvalidRing(_)
                | Error::InvalidShape(_)
        )
    }
}
