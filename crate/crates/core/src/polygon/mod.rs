//! The polygon model of the `m`-cluster category of type `A_{n-1}`.
//!
//! Indecomposables are `m`-diagonals of a regular `(mn+2)`-gon with vertices
//! labelled `1..=N` clockwise, tilting objects are `(m+2)`-angulations, and
//! exchange is the flip of a single diagonal inside the `(2m+2)`-gon formed
//! by deleting it.

mod angulation;
mod enumerate;
mod gamma;
mod tilting;

use std::fmt;

use thiserror::Error;

use crate::quiver::QuiverError;

pub use angulation::Angulation;
pub use enumerate::{angulations, count_angulations, facet_checks, fuss_catalan, FacetReport, MAX_BRUTE_FORCE_VERTICES};
pub use gamma::TranslationQuiver;
pub use tilting::{
    coloured_quiver_of_angulation, fan_angulation, fan_quiver, flip_path, quiver_of_angulation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("polygon needs m >= 1 and n >= 2, got m = {m}, n = {n}")]
    InvalidPolygon { m: u32, n: u32 },
    #[error("{0} is not an m-diagonal of this polygon")]
    NotMDiagonal(MDiagonal),
    #[error("diagonals {0} and {1} cross")]
    Crossing(MDiagonal, MDiagonal),
    #[error("expected {expected} diagonals, got {got}")]
    WrongSize { expected: usize, got: usize },
    #[error("{0} is not a diagonal of the angulation")]
    NotInAngulation(MDiagonal),
    #[error("{0} is not a flip of the chosen diagonal")]
    NotAFlip(MDiagonal),
    #[error("angulations belong to different polygons")]
    PolygonMismatch,
    #[error("brute force is limited to {max} polygon vertices, got {got}")]
    SizeBound { got: u32, max: u32 },
    #[error("flip path does not lead to the target angulation")]
    PathMismatch,
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

/// An undirected diagonal, stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MDiagonal {
    lo: u32,
    hi: u32,
}

impl MDiagonal {
    pub fn new(i: u32, j: u32) -> Self {
        MDiagonal { lo: i.min(j), hi: i.max(j) }
    }

    pub fn endpoints(self) -> (u32, u32) {
        (self.lo, self.hi)
    }

    pub fn has_endpoint(self, v: u32) -> bool {
        self.lo == v || self.hi == v
    }

    /// Strict interior of the clockwise arc `lo -> hi`.
    fn separates(self, v: u32) -> bool {
        self.lo < v && v < self.hi
    }
}

impl fmt::Display for MDiagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

impl std::str::FromStr for MDiagonal {
    type Err = String;

    /// Parses `(i,j)`, `i,j` or `i-j`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = body.split([',', '-']).map(str::trim);
        let parse = |p: Option<&str>| {
            p.ok_or_else(|| format!("bad diagonal `{s}`"))?
                .parse::<u32>()
                .map_err(|e| format!("bad diagonal `{s}`: {e}"))
        };
        let (i, j) = (parse(parts.next())?, parse(parts.next())?);
        if parts.next().is_some() {
            return Err(format!("bad diagonal `{s}`"));
        }
        Ok(MDiagonal::new(i, j))
    }
}

/// The `(mn+2)`-gon; its `m`-cluster category has type `A_{n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Polygon {
    m: u32,
    n: u32,
}

impl Polygon {
    pub fn new(m: u32, n: u32) -> Result<Self, PolygonError> {
        if m < 1 || n < 2 {
            return Err(PolygonError::InvalidPolygon { m, n });
        }
        Ok(Polygon { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of polygon vertices `N = mn + 2`.
    pub fn vertices(&self) -> u32 {
        self.m * self.n + 2
    }

    /// Rank `n - 1` of the associated Dynkin type, i.e. the size of every
    /// angulation.
    pub fn rank(&self) -> usize {
        self.n as usize - 1
    }

    /// Maps any integer onto the label range `1..=N`.
    pub fn wrap(&self, v: i64) -> u32 {
        let big_n = self.vertices() as i64;
        ((v - 1).rem_euclid(big_n) + 1) as u32
    }

    /// `(i, j)` is an `m`-diagonal iff it cuts the polygon into an
    /// `(mt+2)`-gon and an `(m(n-t)+2)`-gon with `1 <= t <= n-1`.
    pub fn is_m_diagonal(&self, i: u32, j: u32) -> bool {
        let big_n = self.vertices();
        if i == 0 || j == 0 || i > big_n || j > big_n || i == j {
            return false;
        }
        // clockwise gap from i to j; that side has gap + 1 vertices
        let gap = (j + big_n - i) % big_n;
        gap > 1 && gap < big_n - 1 && (gap - 1).is_multiple_of(self.m)
    }

    pub fn check(&self, d: MDiagonal) -> Result<(), PolygonError> {
        if self.is_m_diagonal(d.lo, d.hi) {
            Ok(())
        } else {
            Err(PolygonError::NotMDiagonal(d))
        }
    }

    /// Every `m`-diagonal, sorted.
    pub fn all_m_diagonals(&self) -> Vec<MDiagonal> {
        let big_n = self.vertices();
        let mut out = Vec::new();
        for i in 1..=big_n {
            for j in i + 1..=big_n {
                if self.is_m_diagonal(i, j) {
                    out.push(MDiagonal::new(i, j));
                }
            }
        }
        out
    }

    /// Two `m`-diagonals cross iff their interiors meet; sharing an endpoint
    /// does not count.
    pub fn crosses(&self, d1: MDiagonal, d2: MDiagonal) -> Result<bool, PolygonError> {
        self.check(d1)?;
        self.check(d2)?;
        Ok(crossing(d1, d2))
    }

    fn ensure_noncrossing(&self, set: &[MDiagonal]) -> Result<(), PolygonError> {
        for (k, &d) in set.iter().enumerate() {
            self.check(d)?;
            for &e in &set[..k] {
                if crossing(d, e) {
                    return Err(PolygonError::Crossing(e, d));
                }
            }
        }
        Ok(())
    }

    /// All `m`-diagonals completing an almost complete set of `n - 2`
    /// noncrossing diagonals to an angulation. There are always `m + 1`.
    pub fn completions(&self, partial: &[MDiagonal]) -> Result<Vec<MDiagonal>, PolygonError> {
        if partial.len() + 2 != self.n as usize {
            return Err(PolygonError::WrongSize { expected: self.rank() - 1, got: partial.len() });
        }
        self.ensure_noncrossing(partial)?;
        Ok(self
            .all_m_diagonals()
            .into_iter()
            .filter(|d| !partial.contains(d) && partial.iter().all(|&e| !crossing(*d, e)))
            .collect())
    }

    /// Vertices, in clockwise order, of the region cut out by `walls` that
    /// contains the chord `d`. `d` must cross no wall. When `d` is itself a
    /// wall, the region on its `lo..=hi` side is returned, or the one on the
    /// other side if `outer` is set.
    pub(crate) fn face_around(&self, walls: &[MDiagonal], d: MDiagonal, outer: bool) -> Vec<u32> {
        let mut inside: Vec<bool> = vec![true; self.vertices() as usize + 1];
        inside[0] = false;
        for &w in walls {
            // keep the closed side of w holding both ends of d
            let d_on_inner = if w == d {
                !outer
            } else {
                (d.lo >= w.lo && d.lo <= w.hi) && (d.hi >= w.lo && d.hi <= w.hi)
            };
            for (v, keep) in inside.iter_mut().enumerate().skip(1) {
                let v = v as u32;
                let on_inner = v >= w.lo && v <= w.hi;
                let on_outer = v <= w.lo || v >= w.hi;
                if (d_on_inner && !on_inner) || (!d_on_inner && !on_outer) {
                    *keep = false;
                }
            }
        }
        (1..=self.vertices()).filter(|&v| inside[v as usize]).collect()
    }
}

pub(crate) fn crossing(d1: MDiagonal, d2: MDiagonal) -> bool {
    if d1.has_endpoint(d2.lo) || d1.has_endpoint(d2.hi) {
        return false;
    }
    d1.separates(d2.lo) != d1.separates(d2.hi)
}
