use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid composition token {token:?}: {reason}")]
    Parse { token: String, reason: &'static str },

    #[error("top composition exceeds rank: total {total} > n = {rank}")]
    TopExceedsRank { total: usize, rank: usize },

    #[error("bottom composition exceeds rank: total {total} > n = {rank}")]
    BottomExceedsRank { total: usize, rank: usize },

    #[error("type-A compositions must have equal totals (top {top}, bottom {bottom})")]
    TotalsDiffer { top: usize, bottom: usize },

    #[error("type-A seaweed must have positive size")]
    EmptyTypeA,

    #[error("seaweed {0} is parabolic; no reduction step applies")]
    Terminal(String),

    #[error("closed-form step needs a1 < b1 (got a1 = {a1}, b1 = {b1}); {hint}")]
    ClosedFormPrecondition {
        a1: usize,
        b1: usize,
        hint: &'static str,
    },

    #[error("matrix oracle refuses rank n = {rank} above bound {bound}")]
    OracleBound { rank: usize, bound: usize },

    #[error("basis is not closed under the bracket at [x{left}, x{right}]")]
    NotClosed { left: usize, right: usize },

    #[error("samples must be positive")]
    ZeroSamples,

    #[error("seaweed {0} is not Frobenius")]
    NotFrobenius(String),

    #[error("seaweed {seaweed} is not in F(n,{expected}) (it has {found} central arcs)")]
    WrongCentralArcs {
        seaweed: String,
        expected: String,
        found: usize,
    },

    #[error("unsupported: no type-A correspondence for k = {0} central arcs (only k = 1, 2)")]
    Unsupported(usize),

    #[error("invalid meander graph: {0}")]
    InvalidGraph(String),

    #[error("drawing needs {needed} {what}, limit is {limit}; use DOT output instead")]
    DrawingTooLarge {
        what: &'static str,
        needed: usize,
        limit: usize,
    },

    #[error("malformed graph document: {0}")]
    Document(String),
    #[error("{flag} = {value} exceeds the limit {limit} (set MEANDRE_MAX_N to raise it)")]
    Limit {
        flag: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("output failed: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
