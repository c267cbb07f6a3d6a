//! Coloured multi-quivers and plain (uncoloured) quivers.
//!
//! A [`ColouredQuiver`] with colour parameter `m` carries arrows `i -(c)-> j`
//! with `c` in `0..=m`. Multiplicities are arbitrary precision: mutation
//! classes of wild quivers grow without bound and overflow any fixed width
//! after a dozen mutations.

mod mutation;
mod plain;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

pub use plain::PlainQuiver;

/// Number of arrows between an ordered pair of vertices in a given colour.
pub type Multiplicity = BigUint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("a quiver needs at least one vertex")]
    Empty,
    #[error("loop at vertex `{0}`")]
    Loop(String),
    #[error("colour {colour} out of range for m = {m}")]
    ColourOutOfRange { colour: u32, m: u32 },
    #[error("oriented 2-cycle between `{0}` and `{1}`")]
    TwoCycle(String, String),
    #[error("quiver is not acyclic")]
    Cyclic,
    #[error("colour parameter must be at least 1, got {0}")]
    InvalidM(u32),
    #[error("quiver is not the coloured quiver of a tilting object: {0}")]
    Invalid(String),
}

/// A single arrow bundle `from -(colour)-> to` with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arrow<'a> {
    pub from: usize,
    pub to: usize,
    pub colour: u32,
    pub mult: &'a Multiplicity,
}

/// A violated tilting-quiver property, reported by label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Offence {
    Loop { vertex: String, colour: u32 },
    MixedColours { from: String, to: String, colours: Vec<u32> },
    Asymmetric { from: String, to: String, colour: u32 },
}

impl fmt::Display for Offence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Offence::Loop { vertex, colour } => write!(f, "loop ({colour}) at {vertex}"),
            Offence::MixedColours { from, to, colours } => {
                write!(f, "{from} -> {to} carries colours {colours:?}")
            }
            Offence::Asymmetric { from, to, colour } => {
                write!(f, "{from} -({colour})-> {to} has no matching reverse arrow")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidityReport {
    pub monochromatic: bool,
    pub symmetric: bool,
    pub loopless: bool,
    pub offending: Vec<Offence>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.monochromatic && self.symmetric && self.loopless
    }
}

/// An `m`-coloured multi-quiver on labelled vertices.
///
/// Vertex order is presentation only: equality compares labelled arrows and
/// ignores the order in which vertices are listed.
#[derive(Debug, Clone)]
pub struct ColouredQuiver {
    m: u32,
    labels: Vec<String>,
    // indexed by (from * n + to) * (m + 1) + colour
    counts: Vec<Multiplicity>,
}

impl ColouredQuiver {
    /// An arrowless quiver on the given labels.
    pub fn new<I, S>(m: u32, labels: I) -> Result<Self, QuiverError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        check_labels(&labels)?;
        let n = labels.len();
        Ok(ColouredQuiver {
            m,
            labels,
            counts: vec![BigUint::zero(); n * n * (m as usize + 1)],
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Number of colours, `m + 1`.
    pub fn colours(&self) -> u32 {
        self.m + 1
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Result<usize, QuiverError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| QuiverError::UnknownVertex(label.to_string()))
    }

    #[inline]
    fn slot(&self, from: usize, to: usize, colour: u32) -> usize {
        (from * self.n() + to) * (self.m as usize + 1) + colour as usize
    }

    /// `q_ij^(c)`.
    pub fn count(&self, from: usize, to: usize, colour: u32) -> &Multiplicity {
        &self.counts[self.slot(from, to, colour)]
    }

    /// Adds `mult` arrows `from -(colour)-> to`.
    pub fn add_arrows(
        &mut self,
        from: usize,
        to: usize,
        colour: u32,
        mult: impl Into<Multiplicity>,
    ) -> Result<(), QuiverError> {
        let n = self.n();
        if from >= n {
            return Err(QuiverError::UnknownVertex(from.to_string()));
        }
        if to >= n {
            return Err(QuiverError::UnknownVertex(to.to_string()));
        }
        if from == to {
            return Err(QuiverError::Loop(self.labels[from].clone()));
        }
        if colour > self.m {
            return Err(QuiverError::ColourOutOfRange { colour, m: self.m });
        }
        let slot = self.slot(from, to, colour);
        self.counts[slot] += mult.into();
        Ok(())
    }

    /// Label-based variant of [`ColouredQuiver::add_arrows`].
    pub fn add_labelled(
        &mut self,
        from: &str,
        to: &str,
        colour: u32,
        mult: impl Into<Multiplicity>,
    ) -> Result<(), QuiverError> {
        let (i, j) = (self.index_of(from)?, self.index_of(to)?);
        self.add_arrows(i, j, colour, mult)
    }

    /// All arrow bundles with nonzero multiplicity, ordered by
    /// (from index, to index, colour).
    pub fn arrows(&self) -> impl Iterator<Item = Arrow<'_>> + '_ {
        let n = self.n();
        let k = self.m as usize + 1;
        self.counts.iter().enumerate().filter(|(_, q)| !q.is_zero()).map(move |(s, mult)| Arrow {
            from: s / (n * k),
            to: (s / k) % n,
            colour: (s % k) as u32,
            mult,
        })
    }

    /// Total number of arrows counted with multiplicity.
    pub fn arrow_count(&self) -> Multiplicity {
        self.counts.iter().sum()
    }

    /// Checks the three properties every coloured quiver of a tilting
    /// object has: no loops, local monochromaticity and
    /// `q_ij^(c) = q_ji^(m-c)`.
    pub fn validate(&self) -> ValidityReport {
        let n = self.n();
        let mut offending = Vec::new();
        let (mut loopless, mut monochromatic, mut symmetric) = (true, true, true);
        for i in 0..n {
            for c in 0..=self.m {
                if !self.count(i, i, c).is_zero() {
                    loopless = false;
                    offending.push(Offence::Loop { vertex: self.labels[i].clone(), colour: c });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let present: Vec<u32> =
                    (0..=self.m).filter(|&c| !self.count(i, j, c).is_zero()).collect();
                if present.len() > 1 {
                    monochromatic = false;
                    offending.push(Offence::MixedColours {
                        from: self.labels[i].clone(),
                        to: self.labels[j].clone(),
                        colours: present,
                    });
                }
                for c in 0..=self.m {
                    if self.count(i, j, c) != self.count(j, i, self.m - c) {
                        symmetric = false;
                        offending.push(Offence::Asymmetric {
                            from: self.labels[i].clone(),
                            to: self.labels[j].clone(),
                            colour: c,
                        });
                    }
                }
            }
        }
        ValidityReport { monochromatic, symmetric, loopless, offending }
    }

    pub(crate) fn ensure_valid(&self) -> Result<(), QuiverError> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            let first = report.offending.first().map(ToString::to_string).unwrap_or_default();
            Err(QuiverError::Invalid(first))
        }
    }

    /// Coloured seed of an acyclic quiver: every arrow `i -> j` becomes
    /// `i -(0)-> j` together with `j -(m)-> i`.
    pub fn seed_from_acyclic(q: &PlainQuiver, m: u32) -> Result<Self, QuiverError> {
        if m < 1 {
            return Err(QuiverError::InvalidM(m));
        }
        if !q.is_acyclic() {
            return Err(QuiverError::Cyclic);
        }
        let mut seed = ColouredQuiver::new(m, q.labels().iter().cloned())?;
        for (i, j, mult) in q.arrows() {
            seed.add_arrows(i, j, 0, mult.clone())?;
            seed.add_arrows(j, i, m, mult.clone())?;
        }
        Ok(seed)
    }

    /// The colour-0 subquiver, i.e. the Gabriel quiver of the tilting object.
    pub fn gabriel_quiver(&self) -> PlainQuiver {
        let mut q = PlainQuiver::new(self.labels.iter().cloned())
            .expect("labels were checked on construction");
        for a in self.arrows().filter(|a| a.colour == 0) {
            q.set_count(a.from, a.to, a.mult.clone());
        }
        q
    }

    /// Renames vertex `v`.
    pub fn relabel(&mut self, v: usize, label: impl Into<String>) -> Result<(), QuiverError> {
        let label = label.into();
        if v >= self.n() {
            return Err(QuiverError::UnknownVertex(v.to_string()));
        }
        if self.labels.iter().enumerate().any(|(i, l)| i != v && *l == label) {
            return Err(QuiverError::DuplicateVertex(label));
        }
        self.labels[v] = label;
        Ok(())
    }

    /// Reorders vertices: vertex `order[k]` of `self` becomes vertex `k`.
    pub fn reordered(&self, order: &[usize]) -> Self {
        let n = self.n();
        assert_eq!(order.len(), n, "reordering must cover all vertices");
        let mut out = ColouredQuiver {
            m: self.m,
            labels: order.iter().map(|&v| self.labels[v].clone()).collect(),
            counts: vec![BigUint::zero(); self.counts.len()],
        };
        for (new_i, &old_i) in order.iter().enumerate() {
            for (new_j, &old_j) in order.iter().enumerate() {
                for c in 0..=self.m {
                    let s = out.slot(new_i, new_j, c);
                    out.counts[s] = self.count(old_i, old_j, c).clone();
                }
            }
        }
        out
    }

    pub(crate) fn from_parts(m: u32, labels: Vec<String>, counts: Vec<Multiplicity>) -> Self {
        debug_assert_eq!(counts.len(), labels.len() * labels.len() * (m as usize + 1));
        ColouredQuiver { m, labels, counts }
    }

    pub(crate) fn counts_mut(&mut self) -> &mut [Multiplicity] {
        &mut self.counts
    }
}

impl PartialEq for ColouredQuiver {
    fn eq(&self, other: &Self) -> bool {
        if self.m != other.m || self.n() != other.n() {
            return false;
        }
        let mut map = Vec::with_capacity(self.n());
        for l in &self.labels {
            match other.labels.iter().position(|o| o == l) {
                Some(p) => map.push(p),
                None => return false,
            }
        }
        (0..self.n()).all(|i| {
            (0..self.n()).all(|j| {
                (0..=self.m).all(|c| self.count(i, j, c) == other.count(map[i], map[j], c))
            })
        })
    }
}

impl Eq for ColouredQuiver {}

impl fmt::Display for ColouredQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, a) in self.arrows().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}->{}({})", self.labels[a.from], self.labels[a.to], a.colour)?;
            if *a.mult != BigUint::from(1u32) {
                write!(f, "x{}", a.mult)?;
            }
        }
        write!(f, "}}")
    }
}

pub(crate) fn check_labels(labels: &[String]) -> Result<(), QuiverError> {
    if labels.is_empty() {
        return Err(QuiverError::Empty);
    }
    let mut seen = HashMap::with_capacity(labels.len());
    for l in labels {
        if seen.insert(l.as_str(), ()).is_some() {
            return Err(QuiverError::DuplicateVertex(l.clone()));
        }
    }
    Ok(())
}
