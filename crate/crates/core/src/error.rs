use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate generator label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown generator `{0}`")]
    UnknownSymbol(String),
    #[error("element mentions a generator outside this lattice")]
    ForeignGenerator,
    #[error("{count} generators exceed the limit of {limit}")]
    TooManyGenerators { count: usize, limit: usize },
    #[error("lattice has more than {0} distinct elements")]
    CeilingExceeded(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not principal: {0}")]
    NotPrincipal(String),
    #[error("no complement: {0}")]
    NoComplement(String),
    #[error("incompatible inputs at pair ({0}, {1})")]
    Incompatible(usize, usize),
    #[error("gluing diagram rejected: {0}")]
    Gluing(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("ring error: {0}")]
    Ring(String),
    #[error("undecided within budget: {0}")]
    Unknown(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
