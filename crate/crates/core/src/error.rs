use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("vector does not belong to the model: {0}")]
    InvalidVector(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    // exact-linalg
    #[error("empty generating set")]
    EmptyGenerators,
    #[error("vector lies outside the span of the lattice")]
    NotInSpan,
    #[error("the form is degenerate on the span of the lattice")]
    DegenerateForm,
    #[error("not a sublattice: {0}")]
    NotSublattice(String),
    #[error("singular matrix")]
    Singular,

    // root-systems
    #[error("unsupported rank {rank} for family {family}")]
    UnsupportedRank { family: char, rank: usize },
    #[error("unknown type {0:?}")]
    UnknownType(String),
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("orbit exceeds the cap of {cap} elements")]
    OrbitCapExceeded { cap: usize },
    #[error("inconsistent root system data: {0}")]
    Inconsistent(String),

    // cochar-lattices
    #[error("not a cocharacter (outside the cocharacter lattice): {0}")]
    NotACocharacter(String),
    #[error("not a weight (outside the weight lattice): {0}")]
    NotAWeight(String),
    #[error("no semifree representative found for coset {coset}")]
    TransversalIncomplete { coset: usize },
    #[error("listed representatives are not a transversal: {0}")]
    NotATransversal(String),

    // reversor-engine
    #[error("pairing with the highest root is {0}, which exceeds 2")]
    PairingTooLarge(String),
    #[error("the zero cocharacter has no reversor question")]
    ZeroCocharacter,
    #[error("no orthogonal decomposition found for {0}")]
    DecompositionNotFound(String),
    #[error("inapplicable: {0}")]
    Inapplicable(String),
    #[error("no Weyl element sends lambda to -lambda: dominant(lambda) = {dominant}, dominant(-lambda) = {dominant_negated}")]
    NoReversor {
        dominant: String,
        dominant_negated: String,
    },
    #[error("empty representation")]
    EmptyRepresentation,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("root subset is not proper")]
    NotProper,
    #[error("not in the coroot lattice: {0}")]
    NotInCorootLattice(String),
    #[error("not dominant: {0}")]
    NotDominant(String),

    // harness-cli
    #[error("usage error: {0}")]
    Usage(String),
}
