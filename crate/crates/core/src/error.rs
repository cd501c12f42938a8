use thiserror::Error;

/// Errors raised by the computational modules.
///
/// Mathematical findings (an axiom failing with a witness, a complex that is
/// not exact) are never errors; they are reported as values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is outside the supported range 2..=2^31")]
    ModulusOutOfRange(u64),
    #[error("order {order} does not divide the modulus {modulus}")]
    OrderDoesNotDivide { order: u64, modulus: u64 },
    #[error("invalid cyclic order {0}")]
    InvalidOrder(u64),
    #[error("coordinate length {found} does not match ambient rank {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("subgroups live in different ambient groups")]
    AmbientMismatch,
    #[error("map is not well defined: {0}")]
    WellDefinedness(String),
    #[error("morphisms are not composable: {0}")]
    Composability(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("ideal side mismatch: {0}")]
    SideMismatch(String),
    #[error("ideals belong to different categories")]
    CategoryMismatch,
    #[error("sub-ideal is not contained in the ambient ideal")]
    ContainmentViolation,
    #[error("annihilator of an empty class")]
    EmptyClass,
    #[error("enumeration cap exceeded: group of order {order} > cap {cap}")]
    EnumerationCapExceeded { order: u128, cap: u128 },
    #[error("composition table is not closed: {0}")]
    TableNotClosed(String),
    #[error("path basis does not close: {0}")]
    BasisTooLarge(String),
    #[error("category failed validation: {0}")]
    InvalidCategory(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("invalid chain map: {0}")]
    InvalidChainMap(String),
    #[error("degree {0} is outside the complex")]
    DegreeOutOfRange(i64),
    #[error("object `{0}` is not projective")]
    NotProjective(String),
    #[error("sequence is not exact: {0}")]
    NotExact(String),
    #[error("missing direct-sum object: {0}")]
    MissingDirectSum(String),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
