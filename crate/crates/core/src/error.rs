use alloc::string::String;

/// Errors raised by the computations in this crate.
///
/// One enum serves all modules; [`Error::kind`] gives a stable, machine-readable
/// name for each variant.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two objects that must share dimensions (k, n, vertex count, ...) do not.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// A filling violates row weak-increase or column strict-increase.
    #[error("not semistandard: {0}")]
    NotSemistandard(String),
    /// The divisor of a tableau quotient is not contained in the dividend.
    #[error("not a factor: {0}")]
    NotAFactor(String),
    /// A parameter or entry lies outside its admissible range.
    #[error("out of range: {0}")]
    OutOfRange(String),
    /// A tableau admits no decomposition into fundamental columns.
    #[error("no decomposition into fundamental columns: {0}")]
    NoDecomposition(String),
    /// Mutation was requested at a frozen vertex.
    #[error("vertex {0} is frozen")]
    FrozenVertex(usize),
    /// Constructor parameters are invalid.
    #[error("bad parameters: {0}")]
    BadParameters(String),
    /// The two neighbour unions of an exchange are not dominance comparable.
    #[error("incomparable exchange at vertex {0}")]
    IncomparableExchange(usize),
    /// An exploration hit its seed budget.
    #[error("budget exceeded after {0} seeds")]
    BudgetExceeded(usize),
    /// An integer linear system has no integral solution.
    #[error("no integer solution")]
    NoIntegerSolution,
    /// An integer linear system has more than one solution.
    #[error("solution is not unique")]
    NonUniqueSolution,
    /// A k-subset is not a union of exactly two cyclic intervals.
    #[error("subset is not a union of two cyclic intervals")]
    NotTwoIntervals,
    /// The Jacobian algebra did not vanish below the degree cap.
    #[error("algebra still nonzero in degree {0}")]
    NotFiniteDimensional(usize),
    /// Two complexes live over different algebras.
    #[error("complexes are defined over different algebras")]
    AlgebraMismatch,
    /// A determinant used as a denominator vanished.
    #[error("degenerate denominator at window position {0}")]
    DegenerateDenominator(usize),
    /// A vector tuple is not consecutively generic.
    #[error("vector tuple is not consecutively generic")]
    NotGeneric,
}

impl Error {
    /// Stable variant name, used for structured error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NotSemistandard(_) => "NotSemistandard",
            Error::NotAFactor(_) => "NotAFactor",
            Error::OutOfRange(_) => "OutOfRange",
            Error::NoDecomposition(_) => "NoDecomposition",
            Error::FrozenVertex(_) => "FrozenVertex",
            Error::BadParameters(_) => "BadParameters",
            Error::IncomparableExchange(_) => "IncomparableExchange",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::NoIntegerSolution => "NoIntegerSolution",
            Error::NonUniqueSolution => "NonUniqueSolution",
            Error::NotTwoIntervals => "NotTwoIntervals",
            Error::NotFiniteDimensional(_) => "NotFiniteDimensional",
            Error::AlgebraMismatch => "AlgebraMismatch",
            Error::DegenerateDenominator(_) => "DegenerateDenominator",
            Error::NotGeneric => "NotGeneric",
        }
    }
}

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
