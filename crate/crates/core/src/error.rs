use thiserror::Error;

use crate::io::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: expected {expected} variables, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("polynomial is not exactly divisible")]
    NotDivisible,

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid form set: {0}")]
    InvalidFormSet(String),

    #[error("identity violated: {0}")]
    IdentityViolation(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("maps are not mutually inverse")]
    NotInverse,

    #[error("no monomial inverse found up to degree {cap}")]
    NotBirational { cap: u32 },

    #[error("{0} has degree greater than one in the last variable")]
    NotMonoid(&'static str),

    #[error("q and f are not relatively prime")]
    NotCoprime,

    #[error("neither q nor f has positive degree in the last variable")]
    NoPositiveXnDegree,

    #[error("degree mismatch: deg q + deg support = {expected}, deg f = {found}")]
    JonquieresDegree { expected: u32, found: u32 },

    #[error("support map is not monomial")]
    NonMonomialSupport,

    #[error("support map is not a Cremona map")]
    NotCremonaSupport,

    #[error("variable x{0} divides the polynomial")]
    XVariableDivides(usize),

    #[error("form set does not satisfy the canonical restrictions")]
    RestrictionsNotSatisfied,

    #[error("polynomial is not a member of the ideal")]
    NotInIdeal,

    #[error("Groebner computation exceeded its deadline")]
    DeadlineExceeded,

    #[error(transparent)]
    Parse(#[from] ParseError),
}
