use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("generators have gcd {0}, the complement would be infinite")]
    GcdNotOne(u64),
    #[error("gap list is not a valid gap set: {0}")]
    InvalidGapSet(String),
    #[error("gap set is not the complement of a semigroup: {0}")]
    NotASemigroup(String),
    #[error("symmetry is undefined for the full monoid of nonnegative integers")]
    GenusZero,
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("generator {0} is degenerate (must be at least 2)")]
    DegenerateGenerator(u64),
    #[error("{0} is not a member of the semigroup")]
    NotMember(u64),
    #[error("invalid Artin-Schreier cover: {0}")]
    InvalidCover(String),
    #[error("invalid cyclic cover: {0}")]
    InvalidSpec(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("invalid conductors: {0}")]
    InvalidConductors(String),
    #[error("no pole number above 1 coprime to {0} was found")]
    NoCoprimeMember(u64),
    #[error("pole numbers must start at 0 and be strictly increasing: {0}")]
    NotIncreasing(String),
    #[error("place index {index} out of range ({places} places)")]
    PlaceOutOfRange { index: usize, places: usize },
    #[error("operation requires exactly one ramified place, spec has {0}")]
    MultiplePlaces(usize),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("size guard exceeded: {what} = {value} > {limit}")]
    SizeGuard {
        what: &'static str,
        value: u64,
        limit: u64,
    },
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
}

impl Error {
    /// Stable variant name, used by the command line diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyGenerators => "EmptyGenerators",
            Error::ZeroGenerator => "ZeroGenerator",
            Error::GcdNotOne(_) => "GcdNotOne",
            Error::InvalidGapSet(_) => "InvalidGapSet",
            Error::NotASemigroup(_) => "NotASemigroup",
            Error::GenusZero => "GenusZero",
            Error::NotCoprime(..) => "NotCoprime",
            Error::DegenerateGenerator(_) => "DegenerateGenerator",
            Error::NotMember(_) => "NotMember",
            Error::InvalidCover(_) => "InvalidCover",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::InternalInconsistency(_) => "InternalInconsistency",
            Error::InvalidConductors(_) => "InvalidConductors",
            Error::NoCoprimeMember(_) => "NoCoprimeMember",
            Error::NotIncreasing(_) => "NotIncreasing",
            Error::PlaceOutOfRange { .. } => "PlaceOutOfRange",
            Error::MultiplePlaces(_) => "MultiplePlaces",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::SizeGuard { .. } => "SizeGuard",
            Error::Overflow(_) => "Overflow",
        }
    }
}
