//! Combinatorics of `m`-cluster categories: coloured quivers and their
//! mutation, mutation classes up to isomorphism, and the `(m+2)`-angulation
//! model of type `A`.
//!
//! ```
//! use tilt_core::fixtures;
//!
//! let q = fixtures::a4_qt();
//! let x = q.index_of("X").unwrap();
//! let back = q.mutate_procedural(x).unwrap()
//!     .mutate_procedural(x).unwrap()
//!     .mutate_procedural(x).unwrap();
//! assert_eq!(back, q);
//! ```

pub mod class;
pub mod fixtures;
pub mod io;
pub mod polygon;
pub mod quiver;

pub use class::{
    canonical_key, enumerate_class, is_finite_class, read_class, write_class, CanonicalKey, ClassError, DynkinType,
    MutationClass,
};
pub use io::FormatError;
pub use polygon::{Angulation, MDiagonal, Polygon, PolygonError, TranslationQuiver};
pub use quiver::{ColouredQuiver, Multiplicity, PlainQuiver, QuiverError, ValidityReport};
