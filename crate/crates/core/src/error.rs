use thiserror::Error;

use crate::ideal::Sidedness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// The tables do not form a unital ring. `witness` names the offending elements.
    #[error("ring axiom `{axiom}` fails at {witness:?}")]
    AxiomViolation {
        axiom: &'static str,
        witness: Vec<usize>,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what} is {actual}, above the cap of {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("ideal is not {expected}")]
    Sidedness { expected: Sidedness },

    #[error("ideals live in different rings")]
    MixedRing,

    #[error("cannot combine a {0} ideal with a {1} ideal")]
    MixedSidedness(Sidedness, Sidedness),

    #[error("operation requires a commutative ring")]
    NotCommutative,

    #[error("the element criterion only covers nonzero ideals")]
    ZeroIdealNotCovered,

    #[error("ideal is not contained in the ambient ideal")]
    NotContained,

    #[error("module map is not injective")]
    NotMono,

    #[error("multiplicative closure contains zero: {}", chain.join(" -> "))]
    ZeroInClosure { chain: Vec<String> },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("corpus parse error: {0}")]
    CorpusParse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
