//! Coloured mutation classes up to isomorphism.

mod canonical;
mod classify;
mod enumerate;
mod persist;

use thiserror::Error;

use crate::quiver::QuiverError;

pub use canonical::{canonical_key, canonical_key_bounded, plain_key, CanonicalKey, DEFAULT_MAX_VERTICES};
pub use classify::{classify_graph, is_finite_class, DynkinType, Family, GraphClass};
pub use enumerate::{enumerate_class, enumerate_class_with, gabriel_images, EnumerateOptions, MutationClass};
pub use persist::{read_class, write_class};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("{n} vertices exceed the canonicalization bound of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("quiver is not connected")]
    Disconnected,
    #[error("mutation class is incomplete")]
    Incomplete,
    #[error("expansion limit must be at least 1")]
    ZeroLimit,
    #[error("malformed canonical key: {0}")]
    BadKey(String),
    #[error("unknown seed `{0}`")]
    UnknownSeed(String),
    #[error("malformed class file: {0}")]
    BadFile(String),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}
