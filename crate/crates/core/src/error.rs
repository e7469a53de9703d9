use thiserror::Error;

/// Errors produced by the exact engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("permutation acts on {size} points; an even domain is required")]
    OddDomain { size: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("{what} = {requested} exceeds the cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("incompatible twists for ⋆ convolution: {left} ⋆ {right}")]
    TwistIncompatible { left: &'static str, right: &'static str },

    #[error("invalid ensemble parameters: {0}")]
    InvalidParameters(String),

    #[error("query shape invalid for class {class}: {message}")]
    ShapeError { class: &'static str, message: String },

    #[error("contraction budget exceeded: {terms} terms > {budget}")]
    BudgetExceeded { terms: u128, budget: u128 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
