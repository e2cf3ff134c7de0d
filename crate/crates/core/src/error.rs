use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("argument must be positive, got 0")]
    Zero,

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("set {0:?} is not an arithmetic progression")]
    NotAProgression(Vec<u32>),

    #[error("set contains 0; progressions live in the positive integers")]
    NonPositiveElement,

    #[error("n = {n} exceeds the construction bound {bound}")]
    OutOfBounds { n: u32, bound: u32 },

    #[error("progression {0} is not an element of L_{1}")]
    NotInLattice(String, u32),

    #[error("element id {0} is out of range")]
    BadId(usize),

    #[error("invalid interval: element {lo} is not below element {hi}")]
    NotAnInterval { lo: usize, hi: usize },

    #[error("{0}")]
    Domain(String),

    #[error("labeling error: {0}")]
    Labeling(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
