//! Serialization and export formats.

pub mod dot;
pub mod json;
pub mod svg;

use thiserror::Error;

use crate::polygon::PolygonError;
use crate::quiver::QuiverError;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad multiplicity `{0}`")]
    BadMultiplicity(String),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Polygon(#[from] PolygonError),
}
