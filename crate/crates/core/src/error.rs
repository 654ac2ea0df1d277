use thiserror::Error;

use crate::domain::DomainKind;

pub type Result<T, E = MagmaError> = std::result::Result<T, E>;

/// Every failure the engine can report. Module-specific variants are kept in
/// one enum so the evaluator and the C layer can map them uniformly.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MagmaError {
    #[error("domain mismatch: {0} vs {1}")]
    DomainMismatch(DomainKind, DomainKind),
    #[error("a magma needs at least one generator")]
    EmptyGenerators,
    #[error("kind mismatch: the union of an atom-ideal and a magma-ideal is not a magma")]
    KindMismatch,
    #[error("level overflow: towers above omega*2^31 are not supported")]
    LevelOverflow,

    #[error("domain {0} has no incomparable seed atoms; pairs are unavailable")]
    SeedsUnavailable(DomainKind),
    #[error("seed atoms {0} and {1} are comparable")]
    ComparableSeeds(String, String),
    #[error("pairs built over different seeds cannot be compared")]
    SeedMismatch,
    #[error("not a magmatic pair: {0}")]
    NotAPair(String),
    #[error("tuples need at least two components, got {0}")]
    ArityTooSmall(usize),

    #[error("products need magma-ideal factors: {0}")]
    KindError(String),
    #[error("a relation needs at least one intended pair")]
    EmptyPresentation,
    #[error("relation presentation has {0} pairs; the function check is capped at {1}")]
    PresentationTooLarge(usize, usize),
    #[error("not in the domain: {0}")]
    NotInDomain(String),
    #[error("no greatest image at {0}")]
    NoGreatestImage(String),

    #[error("natural {0} exceeds the depth cap {1}")]
    DepthCap(u64, u64),
    #[error("ordinal comparison needs primary naturals of the same variant")]
    VariantMismatch,
    #[error("ordinal not representable below omega^2")]
    NotRepresentable,

    #[error("no two incomparable submagmas below any generator of {0}")]
    NoIncomparableSubmagmas(String),

    #[error("oracle bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("magma out of the oracle universe range: {0}")]
    OutOfRange(String),
}
