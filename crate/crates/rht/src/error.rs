//! One error enum for the whole crate.
//!
//! The CLI maps these onto exit codes: input/validation problems exit 2, broken
//! internal invariants exit 3. Everything carries enough context to be printable
//! without a backtrace.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A product or differential left the truncation range of a free CDGA.
    #[error("degree {degree} exceeds truncation degree {truncation}")]
    TruncationOverflow { degree: usize, truncation: usize },

    /// Structure constants fail the Jacobi identity; the triple is a basis index triple.
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiViolation(usize, usize, usize),

    /// d^2 != 0 somewhere; the string names the offending generator or basis element.
    #[error("d^2 != 0 on {0}")]
    DSquared(String),

    /// H^0 is not the ground field, so no 1-minimal tower exists.
    #[error("H^0 has dimension {0}, expected 1 (connected target required)")]
    NonConnected(usize),

    /// Massey triple product asked for classes whose pairwise products don't vanish.
    #[error("Massey triple undefined: {0}")]
    MasseyUndefined(String),

    /// Quadratic presentation requested for a target that is not 1-formal.
    #[error("target is not 1-formal; no quadratic presentation")]
    NotOneFormal,

    /// Lower central series does not terminate.
    #[error("Lie algebra is not nilpotent (lower central series stabilizes at dim {0})")]
    NotNilpotent(usize),

    /// The W/F pair fails to reconstruct from its Deligne splitting.
    #[error("not a mixed Hodge structure: {0}")]
    NotMhs(String),

    /// The conjugation hypothesis of a bigrading fails at the named component.
    #[error("conjugation hypothesis fails at component ({0}, {1})")]
    HypothesisViolation(i64, i64),

    /// Weight filtration not stable under the differential.
    #[error("filtration is not d-stable at weight {weight}, degree {degree}")]
    FiltrationNotDStable { weight: i64, degree: usize },

    /// Kernel of the obstruction map does not split into bidegree components.
    #[error("kernel at tower stage {stage} does not split into bidegree components ({found} of {expected} dims)")]
    NotBigradeable {
        stage: usize,
        found: usize,
        expected: usize,
    },

    /// A basic ring or finite DGA failed its well-formedness validation.
    #[error("validation failed: {0}")]
    Validation(String),

    /// Input exceeded the ambient-dimension cap (RHT_MAX_DIM).
    #[error("ambient dimension {dim} exceeds cap {cap} (set RHT_MAX_DIM to raise)")]
    DimensionCap { dim: usize, cap: usize },

    /// DSL parse or semantic diagnostics, already rendered with line/column info.
    #[error("{0}")]
    Parse(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    /// An internal invariant the library itself guarantees was observed broken.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Exit code the CLI should use for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Internal(_) => 3,
            _ => 2,
        }
    }
}
