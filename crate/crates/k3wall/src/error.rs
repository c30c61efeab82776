use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("genus must be at least 2, got {0}")]
    InvalidGenus(u32),

    #[error("vectors live in different lattices: genus {0} vs genus {1}")]
    LatticeMismatch(u32, u32),

    #[error("vector {0} is not primitive")]
    NotPrimitive(String),

    #[error("alpha^2 must be positive, got {0}")]
    NonPositiveAlphaSq(String),

    #[error("central charge of {0} vanishes at this point (hole)")]
    ChargeVanishes(String),

    #[error("object lies outside the heart: Im Z = 0 with Re Z >= 0")]
    OutsideHeart,

    #[error("vectors {0} and {1} are proportional; no wall between them")]
    ProportionalVectors(String, String),

    #[error("operation needs a semicircular wall, got a {0} wall")]
    NotSemicircular(&'static str),

    #[error("nesting comparison needs two walls of the same first vector")]
    WallPairMismatch,

    #[error("rank bound must be at least 1")]
    RankBoundTooSmall,

    #[error("class {0} has nonnegative square; no common charge-vanishing point")]
    NotNegativeSquare(String),

    #[error("wall of {pair} misses the common point ({beta}, {alpha_sq}); arithmetic bug")]
    CommonPointViolation {
        pair: String,
        beta: String,
        alpha_sq: String,
    },

    #[error("monomial ideal is not cofinite: needs a pure power of x and of y")]
    NotCofinite,

    #[error("cycle degree f = {f} must be at least the scheme length m = {m}")]
    CycleDegreeTooSmall { m: u32, f: u32 },

    #[error("scheme length m must be at least 1")]
    SchemeLengthZero,

    #[error("generator bound must be at least 1")]
    GeneratorBoundZero,

    #[error("search horizon {horizon} too small: need at least {needed} for this ideal")]
    HorizonTooSmall { horizon: u32, needed: u32 },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("projection datum invariant violated: {0}")]
    InvalidDatum(String),

    #[error("c2 = {c2} is below the minimal value {min} for this surface")]
    C2BelowMinimal { c2: u32, min: u32 },

    #[error("section count r + s = {0} is negative; vanishing assumption inconsistent")]
    NegativeSectionCount(String),

    #[error("moduli polarization genus is only defined for odd genus, got {0}")]
    EvenGenus(u32),

    #[error("degree must be at least 1")]
    DegreeZero,

    #[error("no shipped scenario for genus {0}; the corpus covers 7..=14")]
    UnknownScenario(u32),

    #[error("scenario config: {0}")]
    Config(String),

    #[error("plot spec: {0}")]
    Plot(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("toml: {0}")]
    Toml(#[from] toml::de::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
