use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Failure modes shared by every module of the crate.
///
/// [`Error::name`] returns the bare variant name; front ends print it
/// verbatim so scripts can match on it.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// `στ = 0`: the closed-form eigenvectors (or `α`, `β`) are undefined.
    DegenerateCase,
    /// The degenerate-eigenvector path was asked for a matrix with `στ ≠ 0`.
    NotDegenerate,
    /// A power of the ratio root `√(σ/τ)` leaves the `f64` range.
    ScaleOverflow { log10_magnitude: f64 },
    /// An iterative kernel hit its iteration cap.
    NonConvergence { routine: &'static str, iterations: usize },
    /// `A − μI` has numerical rank below `n − 1`.
    RankDeficient { rank: usize, order: usize },
    NotNormal,
    NotHermitian,
    NotSymmetric,
    NotTraceless,
    /// The matrix does not belong to the requested structure subspace.
    SubspaceMismatch,
    /// The projection of the Wilkinson perturbation vanishes.
    ZeroProjection,
    /// Continuation matching found an overlap below `1/√2`.
    AmbiguousMatch { index: usize, overlap: f64 },
    LengthMismatch { left: usize, right: usize },
    DimensionMismatch { expected: (usize, usize), found: (usize, usize) },
    /// An eigenvalue index outside `1..=n`.
    InvalidIndex { index: usize, order: usize },
    /// The operation needs a larger matrix order.
    InvalidOrder { order: usize, minimum: usize },
    /// A parameter is NaN or infinite.
    NonFinite,
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::DegenerateCase => "DegenerateCase",
            Error::NotDegenerate => "NotDegenerate",
            Error::ScaleOverflow { .. } => "ScaleOverflow",
            Error::NonConvergence { .. } => "NonConvergence",
            Error::RankDeficient { .. } => "RankDeficient",
            Error::NotNormal => "NotNormal",
            Error::NotHermitian => "NotHermitian",
            Error::NotSymmetric => "NotSymmetric",
            Error::NotTraceless => "NotTraceless",
            Error::SubspaceMismatch => "SubspaceMismatch",
            Error::ZeroProjection => "ZeroProjection",
            Error::AmbiguousMatch { .. } => "AmbiguousMatch",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::InvalidIndex { .. } => "InvalidIndex",
            Error::InvalidOrder { .. } => "InvalidOrder",
            Error::NonFinite => "NonFinite",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.name();
        match self {
            Error::DegenerateCase => write!(f, "{name}: sigma*tau = 0"),
            Error::ScaleOverflow { log10_magnitude } => {
                write!(f, "{name}: eigenvector scaling reaches 1e{log10_magnitude:.1}")
            }
            Error::NonConvergence { routine, iterations } => {
                write!(f, "{name}: {routine} did not converge in {iterations} iterations")
            }
            Error::RankDeficient { rank, order } => {
                write!(f, "{name}: numerical rank {rank} of an order-{order} shifted matrix")
            }
            Error::AmbiguousMatch { index, overlap } => {
                write!(f, "{name}: eigenvector {index} best overlap {overlap:.3e} < 1/sqrt(2)")
            }
            Error::LengthMismatch { left, right } => write!(f, "{name}: lengths {left} and {right}"),
            Error::DimensionMismatch { expected, found } => write!(
                f,
                "{name}: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Error::InvalidIndex { index, order } => {
                write!(f, "{name}: index {index} outside 1..={order}")
            }
            Error::InvalidOrder { order, minimum } => {
                write!(f, "{name}: order {order} below the minimum {minimum}")
            }
            _ => f.write_str(name),
        }
    }
}

impl core::error::Error for Error {}
