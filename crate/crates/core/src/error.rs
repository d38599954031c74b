use thiserror::Error;

/// Everything that can go wrong inside the library.
///
/// Variants are grouped by the exit code the command-line front end maps
/// them to: configuration problems, truncation problems and violated
/// internal invariants.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Cartan datum: {0}")]
    InvalidCartan(String),

    #[error("unsupported root system `{0}`")]
    UnknownType(String),

    #[error("level l = {level} must exceed the Coxeter number h = {coxeter}")]
    LevelTooSmall { level: i64, coxeter: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("weight {0} does not lie in the closed fundamental alcove")]
    NotInAlcove(String),

    #[error("element {0} is not a minimal coset representative")]
    NotMinimal(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("inconclusive truncation at L = {length}: {detail}")]
    InconclusiveTruncation { length: usize, detail: String },

    #[error("the quotient by this ideal is infinite: cell {cell} survives and reaches the truncation boundary")]
    InfiniteQuotient { cell: String },

    #[error("singular-character inconsistency at {weight}: {detail}")]
    SingularCharacter { weight: String, detail: String },

    #[error("not a tilting character: {0}")]
    NotTilting(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("cache error: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable machine-readable tag used in error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidCartan(_) => "invalid-cartan",
            Error::UnknownType(_) => "unknown-type",
            Error::LevelTooSmall { .. } => "level-too-small",
            Error::NotDominant(_) => "not-dominant",
            Error::NotInAlcove(_) => "not-in-alcove",
            Error::NotMinimal(_) => "not-minimal",
            Error::InvalidArgument(_) => "invalid-argument",
            Error::InconclusiveTruncation { .. } => "inconclusive-truncation",
            Error::InfiniteQuotient { .. } => "infinite-quotient",
            Error::SingularCharacter { .. } => "singular-character-inconsistency",
            Error::NotTilting(_) => "not-tilting",
            Error::Invariant(_) => "invariant-violation",
            Error::Cache(_) => "cache",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }

    /// Process exit status for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InconclusiveTruncation { .. } => 3,
            Error::SingularCharacter { .. } | Error::NotTilting(_) | Error::Invariant(_) => 4,
            Error::Io(_) | Error::Json(_) | Error::Cache(_) => 4,
            _ => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
