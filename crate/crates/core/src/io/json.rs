//! JSON documents for quivers and angulations.
//!
//! Coloured quiver:
//! `{"m": 2, "vertices": ["X", ...], "arrows": [{"from": "X", "to": "I4", "colour": 0, "mult": 1}, ...]}`
//! with arrows sorted by `(from, to, colour)`. Multiplicities beyond `u64`
//! are written as decimal strings.
//!
//! Plain quiver: the same without `m` and `colour`.
//!
//! Angulation: `{"m": 2, "n": 5, "diagonals": [[3, 8], ...]}` with sorted pairs.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::FormatError;
use crate::polygon::{Angulation, MDiagonal, Polygon};
use crate::quiver::{ColouredQuiver, PlainQuiver};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum Label {
    Text(String),
    Number(i64),
}

impl Label {
    fn into_string(self) -> String {
        match self {
            Label::Text(s) => s,
            Label::Number(n) => n.to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum Mult {
    Number(u64),
    Text(String),
}

impl Mult {
    fn from_big(b: &BigUint) -> Self {
        match b.to_u64() {
            Some(v) => Mult::Number(v),
            None => Mult::Text(b.to_string()),
        }
    }

    fn to_big(&self) -> Result<BigUint, FormatError> {
        match self {
            Mult::Number(v) => Ok(BigUint::from(*v)),
            Mult::Text(s) => s.parse().map_err(|_| FormatError::BadMultiplicity(s.clone())),
        }
    }
}

fn default_mult() -> Mult {
    Mult::Number(1)
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ColouredArrowDoc {
    from: Label,
    to: Label,
    colour: u32,
    #[serde(default = "default_mult")]
    mult: Mult,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ColouredQuiverDoc {
    m: u32,
    vertices: Vec<Label>,
    arrows: Vec<ColouredArrowDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PlainArrowDoc {
    from: Label,
    to: Label,
    #[serde(default = "default_mult")]
    mult: Mult,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PlainQuiverDoc {
    vertices: Vec<Label>,
    arrows: Vec<PlainArrowDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AngulationDoc {
    m: u32,
    n: u32,
    diagonals: Vec<[u32; 2]>,
}

pub fn quiver_to_value(q: &ColouredQuiver) -> Value {
    let mut arrows: Vec<_> = q.arrows().collect();
    arrows.sort_by(|a, b| {
        (q.label(a.from), q.label(a.to), a.colour).cmp(&(q.label(b.from), q.label(b.to), b.colour))
    });
    let doc = ColouredQuiverDoc {
        m: q.m(),
        vertices: q.labels().iter().cloned().map(Label::Text).collect(),
        arrows: arrows
            .into_iter()
            .map(|a| ColouredArrowDoc {
                from: Label::Text(q.label(a.from).to_string()),
                to: Label::Text(q.label(a.to).to_string()),
                colour: a.colour,
                mult: Mult::from_big(a.mult),
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("plain data serializes")
}

/// Pretty-printed, newline-terminated.
pub fn quiver_to_json(q: &ColouredQuiver) -> String {
    pretty(&quiver_to_value(q))
}

pub fn quiver_from_value(v: Value) -> Result<ColouredQuiver, FormatError> {
    let doc: ColouredQuiverDoc = serde_json::from_value(v)?;
    let mut q = ColouredQuiver::new(doc.m, doc.vertices.into_iter().map(Label::into_string))?;
    for a in doc.arrows {
        let from = q.index_of(&a.from.into_string())?;
        let to = q.index_of(&a.to.into_string())?;
        q.add_arrows(from, to, a.colour, a.mult.to_big()?)?;
    }
    Ok(q)
}

pub fn quiver_from_json(s: &str) -> Result<ColouredQuiver, FormatError> {
    quiver_from_value(serde_json::from_str(s)?)
}

pub fn plain_quiver_to_json(q: &PlainQuiver) -> String {
    let mut arrows: Vec<_> = q.arrows().collect();
    arrows.sort_by(|a, b| (&q.labels()[a.0], &q.labels()[a.1]).cmp(&(&q.labels()[b.0], &q.labels()[b.1])));
    let doc = PlainQuiverDoc {
        vertices: q.labels().iter().cloned().map(Label::Text).collect(),
        arrows: arrows
            .into_iter()
            .map(|(i, j, mult)| PlainArrowDoc {
                from: Label::Text(q.labels()[i].clone()),
                to: Label::Text(q.labels()[j].clone()),
                mult: Mult::from_big(mult),
            })
            .collect(),
    };
    pretty(&serde_json::to_value(doc).expect("plain data serializes"))
}

pub fn plain_quiver_from_json(s: &str) -> Result<PlainQuiver, FormatError> {
    let doc: PlainQuiverDoc = serde_json::from_str(s)?;
    let mut q = PlainQuiver::new(doc.vertices.into_iter().map(Label::into_string))?;
    for a in doc.arrows {
        let from = q.index_of(&a.from.into_string())?;
        let to = q.index_of(&a.to.into_string())?;
        q.add_arrows(from, to, a.mult.to_big()?)?;
    }
    Ok(q)
}

/// Either kind of quiver document.
#[derive(Debug, Clone)]
pub enum QuiverDocument {
    Coloured(ColouredQuiver),
    Plain(PlainQuiver),
}

/// Reads a coloured quiver if the document has an `m` field, a plain one
/// otherwise.
pub fn any_quiver_from_json(s: &str) -> Result<QuiverDocument, FormatError> {
    let v: Value = serde_json::from_str(s)?;
    if v.get("m").is_some() {
        Ok(QuiverDocument::Coloured(quiver_from_value(v)?))
    } else {
        Ok(QuiverDocument::Plain(plain_quiver_from_json(s)?))
    }
}

pub fn angulation_to_value(a: &Angulation) -> Value {
    let doc = AngulationDoc {
        m: a.polygon().m(),
        n: a.polygon().n(),
        diagonals: a
            .diagonals()
            .iter()
            .map(|d| {
                let (i, j) = d.endpoints();
                [i, j]
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("plain data serializes")
}

pub fn angulation_to_json(a: &Angulation) -> String {
    pretty(&angulation_to_value(a))
}

pub fn angulation_from_value(v: Value) -> Result<Angulation, FormatError> {
    let doc: AngulationDoc = serde_json::from_value(v)?;
    let p = Polygon::new(doc.m, doc.n)?;
    Ok(Angulation::new(p, doc.diagonals.into_iter().map(|[i, j]| MDiagonal::new(i, j)))?)
}

pub fn angulation_from_json(s: &str) -> Result<Angulation, FormatError> {
    angulation_from_value(serde_json::from_str(s)?)
}

pub(crate) fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}
