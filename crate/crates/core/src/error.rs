use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input vectors are linearly dependent within the rank tolerance.
    #[error("rank deficient: numerical rank {rank} < {expected} vectors")]
    RankDeficient { rank: usize, expected: usize },

    /// Operands live in different ambient dimensions.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A cylinder claimed to enclose a polytope leaves a vertex outside.
    #[error("cylinder does not enclose vertex {index}: excess distance {excess:.3e}")]
    NotEnclosing { index: usize, excess: f64 },

    /// The vertex set is not an affinely independent simplex.
    #[error("not a simplex: {0}")]
    NotASimplex(String),

    /// The selected vertices do not span a hyperplane of the polytope.
    #[error("not a hyperplane: {0}")]
    NotAHyperplane(String),

    /// Radius index j outside 1..=dim.
    #[error("invalid j = {j} for dimension {dim}")]
    InvalidJ { j: usize, dim: usize },

    /// A Vandermonde factor vanishes; the multiplicity system is singular.
    #[error("degenerate values: {0}")]
    DegenerateValues(String),

    /// Denominator of the middle-value elimination vanishes.
    #[error("singular denominator in s2 elimination")]
    SingularDenominator,

    /// Squared radius came out negative.
    #[error("negative radicand: {0:.3e}")]
    NegativeRadicand(f64),

    /// A solution record is internally inconsistent.
    #[error("malformed solution: {0}")]
    MalformedSolution(String),
}
