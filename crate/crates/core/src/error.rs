use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic must be 0 or a prime, got {0}")]
    InvalidCharacteristic(u64),

    #[error("degree must be positive")]
    ZeroDegree,

    #[error("cycle entry {entry} is out of range 1..={n}")]
    EntryOutOfRange { entry: String, n: usize },

    #[error("cycle entry {0} appears more than once")]
    RepeatedEntry(usize),

    #[error("malformed cycle notation at byte {offset}: {reason}")]
    Malformed { offset: usize, reason: &'static str },

    #[error("permutation images are not a bijection of 1..={0}")]
    NotABijection(usize),

    #[error("generators have mixed degrees ({expected} and {found})")]
    MixedDegrees { expected: usize, found: usize },

    #[error("group closure exceeded {limit} elements")]
    GroupTooLarge { limit: usize },

    #[error("unknown group preset {0:?}")]
    UnknownPreset(String),

    #[error("group preset {name} needs degree at least {min}, got {n}")]
    PresetDegree { name: String, min: usize, n: usize },

    #[error("the identity is not a valid input here")]
    IdentityRejected,

    #[error("invalid stratum shape: {0}")]
    InvalidShape(&'static str),

    #[error("partition must have a part larger than 1")]
    TrivialPartition,

    #[error("discriminant exponent must be positive")]
    NonPositiveDiscriminant,

    #[error("boundary is empty; discrepancy reduction does not apply")]
    EmptyBoundary,

    #[error("Cartier index must be 1 or 2, got {0}")]
    CartierIndex(u32),

    #[error("oracle parameter out of range: {0}")]
    OracleParameter(String),

    #[error("{p} divides the ramification jump {jump}")]
    JumpDivisibleByP { p: u32, jump: u32 },

    #[error("unsupported growth check for p={p}, n={n}")]
    UnsupportedGrowth { p: u32, n: u32 },

    #[error("cannot parse {0:?} as a half-integer")]
    ParseHalf(String),
}
