use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown group name `{0}`")]
    UnknownGroup(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("row and column 0 of the table must be the identity")]
    IdentityNotZero,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("subset is not closed under the group law")]
    NotClosed,
    #[error("subset is not abelian")]
    NotAbelian,
    #[error("n = {n} is too small (need n >= {min})")]
    NTooSmall { n: usize, min: usize },
    #[error("t = {t} out of range 1..={max}")]
    TOutOfRange { t: usize, max: usize },
    #[error("size cap exceeded: {size} > {cap}")]
    SizeCapExceeded { size: u128, cap: u128 },
    #[error("malformed word: {0}")]
    MalformedWord(String),
    #[error("coset table is incomplete")]
    IncompleteTable,
    #[error("coset enumeration exceeded {0} cosets")]
    CapacityExceeded(usize),
    #[error("unsupported generator kind for this operation: {0}")]
    UnsupportedSymbol(String),
    #[error("not a divisibility chain: {0:?}")]
    MalformedChain(Vec<u64>),
    #[error("method `{0}` does not apply: {1}")]
    MethodInapplicable(String, String),
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),
}

pub type Result<T> = std::result::Result<T, Error>;
