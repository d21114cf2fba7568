use thiserror::Error;

use crate::face::Face;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid face: {0}")]
    InvalidFace(String),
    #[error("rank {rank} out of range for {k}-subsets of [1, {n}]")]
    RankOutOfRange { rank: usize, k: usize, n: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid tournament: {0}")]
    InvalidTournament(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("face {0:?} is not free")]
    NotFree(Face),
    #[error("instance too large: {what} has size {size}, cap is {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("degenerate point configuration: face {0:?} has zero determinant")]
    Degenerate(Face),
    #[error("point lies on the hyperplane of face {0:?}")]
    OnHyperplane(Face),
    #[error("link {index} is not acyclic")]
    CyclicLink { index: usize },
    #[error("tournament is not complete")]
    Incomplete,
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("missing input: {0}")]
    Missing(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
