//! The `mutate`, `enumerate` and `polygon` subcommands as plain functions
//! from inputs to output text.

use std::fmt::Write;

use thiserror::Error;
use tilt_core::class::{enumerate_class, write_class, ClassError, MutationClass};
use tilt_core::io::json::{any_quiver_from_json, angulation_from_json, quiver_to_json, QuiverDocument};
use tilt_core::io::{dot, svg, FormatError};
use tilt_core::polygon::{count_angulations, facet_checks, fan_angulation, PolygonError};
use tilt_core::quiver::QuiverError;
use tilt_core::{ColouredQuiver, DynkinType, MDiagonal, Polygon, TranslationQuiver};

/// Failures, grouped by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::UnknownVertex(_) => 3,
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        match e {
            // structurally readable, but not a coloured quiver
            FormatError::Quiver(
                q @ (QuiverError::Loop(_)
                | QuiverError::ColourOutOfRange { .. }
                | QuiverError::TwoCycle(..)
                | QuiverError::Cyclic
                | QuiverError::InvalidM(_)),
            ) => CliError::Invalid(q.to_string()),
            FormatError::Polygon(p) => CliError::Invalid(p.to_string()),
            other => CliError::Parse(other.to_string()),
        }
    }
}

impl From<PolygonError> for CliError {
    fn from(e: PolygonError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<ClassError> for CliError {
    fn from(e: ClassError) -> Self {
        match e {
            ClassError::UnknownSeed(_) => CliError::Parse(e.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum QuiverFormat {
    Json,
    Dot,
}

/// Reads a coloured quiver document and checks that it is valid.
pub fn read_quiver(text: &str) -> Result<ColouredQuiver, CliError> {
    let q = match any_quiver_from_json(text)? {
        QuiverDocument::Coloured(q) => q,
        QuiverDocument::Plain(_) => return Err(CliError::Parse("expected a coloured quiver (missing `m`)".into())),
    };
    let report = q.validate();
    if !report.is_valid() {
        return Err(CliError::Invalid(format!("not a valid coloured quiver: {:?}", report.offending)));
    }
    Ok(q)
}

/// Mutates `count` times at the vertex labelled `vertex`.
pub fn mutate(input: &str, vertex: &str, count: u64, format: QuiverFormat) -> Result<String, CliError> {
    let mut q = read_quiver(input)?;
    let v = q.index_of(vertex).map_err(|_| CliError::UnknownVertex(vertex.to_string()))?;
    // the mutation has period m + 1
    for _ in 0..count % (u64::from(q.m()) + 1) {
        q = q.mutate_procedural(v).map_err(|e| CliError::Invalid(e.to_string()))?;
    }
    Ok(match format {
        QuiverFormat::Json => quiver_to_json(&q),
        QuiverFormat::Dot => dot::quiver_to_dot(&q),
    })
}

/// A seed given by Dynkin name (`A4`, `D5`, `E6`) or as the text of a
/// quiver file. Plain acyclic quivers are turned into coloured seeds with
/// `m` colours; coloured quivers carry their own `m`.
pub fn resolve_seed(name: &str, file_text: Option<&str>, m: Option<u32>) -> Result<ColouredQuiver, CliError> {
    match file_text {
        None => {
            let t: DynkinType = name.parse()?;
            Ok(t.seed(m.unwrap_or(1)).map_err(|e| CliError::Invalid(e.to_string()))?)
        }
        Some(text) => match any_quiver_from_json(text)? {
            QuiverDocument::Coloured(q) => {
                if m.is_some_and(|m| m != q.m()) {
                    return Err(CliError::Invalid(format!("--m disagrees with the quiver's m = {}", q.m())));
                }
                let report = q.validate();
                if !report.is_valid() {
                    return Err(CliError::Invalid(format!("not a valid coloured quiver: {:?}", report.offending)));
                }
                Ok(q)
            }
            QuiverDocument::Plain(p) => ColouredQuiver::seed_from_acyclic(&p, m.unwrap_or(1))
                .map_err(|e| CliError::Invalid(e.to_string())),
        },
    }
}

pub fn enumerate(seed: &ColouredQuiver, limit: u64) -> Result<MutationClass, CliError> {
    Ok(enumerate_class(seed, limit)?)
}

pub fn class_file(class: &MutationClass) -> Result<Vec<u8>, CliError> {
    let mut buf = Vec::new();
    write_class(class, &mut buf)?;
    Ok(buf)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum PolygonAction {
    /// All m-diagonals, one per line
    Diagonals,
    /// Number of (m+2)-angulations
    Count,
    /// Facet sizes and ridge links of the complex of noncrossing diagonals
    Facets,
    /// SVG drawing of an angulation
    Svg,
    /// The translation quiver in DOT
    Gamma,
}

pub fn polygon(
    m: u32,
    n: u32,
    action: PolygonAction,
    angulation_text: Option<&str>,
    highlight: Option<&str>,
) -> Result<String, CliError> {
    let p = Polygon::new(m, n)?;
    Ok(match action {
        PolygonAction::Diagonals => p.all_m_diagonals().iter().fold(String::new(), |mut out, d| {
            writeln!(out, "{d}").unwrap();
            out
        }),
        PolygonAction::Count => format!("{}\n", count_angulations(p)?),
        PolygonAction::Facets => {
            let r = facet_checks(p)?;
            let join = |s: &std::collections::BTreeSet<usize>| {
                s.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
            };
            format!("facets={} size={} link={}\n", r.facets, join(&r.facet_sizes), join(&r.link_counts))
        }
        PolygonAction::Svg => {
            let a = match angulation_text {
                Some(text) => angulation_from_json(text)?,
                None => fan_angulation(p),
            };
            if a.polygon() != p {
                return Err(CliError::Invalid("angulation belongs to a different polygon".into()));
            }
            let highlight = highlight
                .map(|h| h.parse::<MDiagonal>().map_err(|e| CliError::Parse(e.to_string())))
                .transpose()?;
            svg::angulation_to_svg(&a, highlight)?
        }
        PolygonAction::Gamma => dot::gamma_to_dot(&TranslationQuiver::new(p)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use tilt_core::fixtures;

    #[test]
    fn exit_codes() {
        assert_eq!(mutate("{", "X", 1, QuiverFormat::Json).unwrap_err().exit_code(), 1);
        let text = quiver_to_json(&fixtures::a4_qt());
        assert_eq!(mutate(&text, "Z", 1, QuiverFormat::Json).unwrap_err().exit_code(), 3);
        let looped = r#"{"m": 1, "vertices": ["a"], "arrows": [{"from": "a", "to": "a", "colour": 0}]}"#;
        assert_eq!(mutate(looped, "a", 1, QuiverFormat::Json).unwrap_err().exit_code(), 2);
        let asymmetric = r#"{"m": 1, "vertices": ["a", "b"], "arrows": [{"from": "a", "to": "b", "colour": 0}]}"#;
        assert_eq!(mutate(asymmetric, "a", 1, QuiverFormat::Json).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn polygon_outputs() {
        assert_eq!(polygon(2, 5, PolygonAction::Diagonals, None, None).unwrap().lines().count(), 24);
        assert_eq!(polygon(2, 3, PolygonAction::Count, None, None).unwrap(), "12\n");
        assert_eq!(polygon(1, 3, PolygonAction::Facets, None, None).unwrap(), "facets=5 size=2 link=2\n");
        assert!(polygon(1, 30, PolygonAction::Count, None, None).is_err());
    }
}
