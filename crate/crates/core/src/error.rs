use thiserror::Error;

use crate::exact::ParseRationalError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("Jacobi identity fails on {} triple(s), first at ({}, {}, {})", .0.len(), .0[0].0, .0[0].1, .0[0].2)]
    Jacobi(Vec<(usize, usize, usize)>),
    #[error("not a representation: commutator identity fails on {} pair(s), first at ({}, {})", .0.len(), .0[0].0, .0[0].1)]
    NotRepresentation(Vec<(usize, usize)>),
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error("subspace is not a subalgebra")]
    NotSubalgebra,
    #[error("subspace is not invariant under the action")]
    NotInvariant,
    #[error("action matrix for basis element {0} is not a derivation")]
    NotDerivation(usize),
    #[error("representations live over different algebras")]
    AlgebraMismatch,
    #[error("resource cap exceeded in degree {degree}: {entries} matrix entries > cap {cap}")]
    CapExceeded { degree: usize, entries: u128, cap: u128 },
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),
    #[error("invalid parameters for `{name}`: {reason}")]
    InvalidParams { name: String, reason: String },
    #[error("unknown hunt family `{0}`")]
    UnknownFamily(String),
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error(transparent)]
    Rational(#[from] ParseRationalError),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
