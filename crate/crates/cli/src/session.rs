//! Exploration sessions: a seed, the moves applied to it, and the state
//! they lead to. The current state is always the replay of the history, so
//! undo and import are exact.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;
use tilt_core::io::json::{angulation_from_value, angulation_to_value, quiver_from_value, quiver_to_value};
use tilt_core::polygon::quiver_of_angulation;
use tilt_core::{Angulation, ColouredQuiver, DynkinType, MDiagonal};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SessionError {
    #[error("unknown session `{0}`")]
    NotFound(String),
    #[error("{0}")]
    Illegal(String),
    #[error("session is busy with another request")]
    Busy,
    #[error("{0}")]
    BadRequest(String),
}

/// A move as recorded in the history.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum Move {
    Mutate { vertex: String },
    Flip { diagonal: String, choice: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Seed {
    pub quiver: ColouredQuiver,
    pub angulation: Option<Angulation>,
}

impl Seed {
    /// Parses a creation request: `{"seed": "A4" | <quiver>, "m": 2}` or
    /// `{"angulation": <angulation>}`. A session created from an angulation
    /// has its quiver computed from the fan and stays linked to it.
    pub fn from_request(body: &Value) -> Result<Seed, SessionError> {
        let bad = |e: &dyn std::fmt::Display| SessionError::BadRequest(e.to_string());
        let obj = body.as_object().ok_or_else(|| SessionError::BadRequest("expected a JSON object".into()))?;
        if let Some(unknown) = obj.keys().find(|k| !["seed", "m", "angulation"].contains(&k.as_str())) {
            return Err(SessionError::BadRequest(format!("unknown field `{unknown}`")));
        }
        match (obj.get("seed"), obj.get("angulation")) {
            (Some(_), Some(_)) => Err(SessionError::BadRequest("give either `seed` or `angulation`".into())),
            (None, None) => Err(SessionError::BadRequest("missing `seed` or `angulation`".into())),
            (None, Some(a)) => {
                let angulation = angulation_from_value(a.clone()).map_err(|e| bad(&e))?;
                let quiver = quiver_of_angulation(&angulation).map_err(|e| bad(&e))?;
                Ok(Seed { quiver, angulation: Some(angulation) })
            }
            (Some(Value::String(name)), None) => {
                let m = match obj.get("m") {
                    Some(v) => v
                        .as_u64()
                        .and_then(|m| u32::try_from(m).ok())
                        .ok_or_else(|| SessionError::BadRequest("`m` must be a positive integer".into()))?,
                    None => return Err(SessionError::BadRequest("a named seed needs `m`".into())),
                };
                let t: DynkinType = name.parse().map_err(|e| bad(&e))?;
                let quiver = t.seed(m).map_err(|e| bad(&e))?;
                Ok(Seed { quiver, angulation: None })
            }
            (Some(q), None) => {
                let quiver = quiver_from_value(q.clone()).map_err(|e| bad(&e))?;
                if let Some(m) = obj.get("m") {
                    if m.as_u64() != Some(u64::from(quiver.m())) {
                        return Err(SessionError::BadRequest("`m` disagrees with the quiver".into()));
                    }
                }
                let report = quiver.validate();
                if !report.is_valid() {
                    return Err(SessionError::BadRequest(format!("invalid coloured quiver: {:?}", report.offending)));
                }
                Ok(Seed { quiver, angulation: None })
            }
        }
    }

    fn to_value(&self) -> Value {
        json!({
            "quiver": quiver_to_value(&self.quiver),
            "angulation": self.angulation.as_ref().map(angulation_to_value),
        })
    }
}

#[derive(Debug, Clone)]
pub struct Session {
    seed: Seed,
    history: Vec<Move>,
    quiver: ColouredQuiver,
    angulation: Option<Angulation>,
}

fn parse_diagonal(s: &str) -> Result<MDiagonal, SessionError> {
    s.parse().map_err(|_| SessionError::BadRequest(format!("`{s}` is not a diagonal")))
}

impl Session {
    pub fn new(seed: Seed) -> Self {
        Session { quiver: seed.quiver.clone(), angulation: seed.angulation.clone(), seed, history: Vec::new() }
    }

    pub fn quiver(&self) -> &ColouredQuiver {
        &self.quiver
    }

    pub fn angulation(&self) -> Option<&Angulation> {
        self.angulation.as_ref()
    }

    pub fn history(&self) -> &[Move] {
        &self.history
    }

    /// Applies `mv`, leaving the session untouched if it is illegal.
    pub fn apply(&mut self, mv: Move) -> Result<(), SessionError> {
        let (quiver, angulation) = step(&self.quiver, self.angulation.as_ref(), &mv)?;
        self.quiver = quiver;
        self.angulation = angulation;
        self.history.push(mv);
        Ok(())
    }

    /// Drops the last move and replays the rest from the seed.
    pub fn undo(&mut self) -> Result<(), SessionError> {
        if self.history.is_empty() {
            return Err(SessionError::Illegal("nothing to undo".into()));
        }
        let mut history = std::mem::take(&mut self.history);
        history.pop();
        *self = replay(self.seed.clone(), history)?;
        Ok(())
    }

    /// Quiver, angulation, legal moves and history.
    pub fn state(&self) -> Value {
        let flips: Vec<Value> = match &self.angulation {
            Some(a) => a
                .diagonals()
                .iter()
                .map(|&d| {
                    let order = a.exchange_sequence(d).expect("diagonal of the angulation");
                    json!({
                        "diagonal": d.to_string(),
                        "candidates": order.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    })
                })
                .collect(),
            None => Vec::new(),
        };
        json!({
            "m": self.quiver.m(),
            "n": self.quiver.n(),
            "quiver": quiver_to_value(&self.quiver),
            "angulation": self.angulation.as_ref().map(angulation_to_value),
            "moves": {
                "vertices": self.quiver.labels(),
                "flips": flips,
            },
            "history": self.history,
        })
    }

    pub fn export(&self) -> Value {
        json!({ "seed": self.seed.to_value(), "history": self.history })
    }

    /// Inverse of [`Session::export`]; the history is replayed and must be
    /// legal.
    pub fn import(doc: &Value) -> Result<Session, SessionError> {
        let bad = |e: &dyn std::fmt::Display| SessionError::BadRequest(e.to_string());
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct SeedDoc {
            quiver: Value,
            angulation: Option<Value>,
        }
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Doc {
            seed: SeedDoc,
            history: Vec<Move>,
        }
        let doc: Doc = serde_json::from_value(doc.clone()).map_err(|e| bad(&e))?;
        let quiver = quiver_from_value(doc.seed.quiver).map_err(|e| bad(&e))?;
        if !quiver.validate().is_valid() {
            return Err(SessionError::BadRequest("seed quiver is not valid".into()));
        }
        let angulation = doc.seed.angulation.map(angulation_from_value).transpose().map_err(|e| bad(&e))?;
        if let Some(a) = &angulation {
            let labels_match = a.diagonals().len() == quiver.n()
                && a.diagonals().iter().all(|d| quiver.index_of(&d.to_string()).is_ok());
            if !labels_match || a.polygon().m() != quiver.m() {
                return Err(SessionError::BadRequest("seed quiver is not labelled by the angulation".into()));
            }
        }
        replay(Seed { quiver, angulation }, doc.history)
            .map_err(|e| SessionError::BadRequest(format!("history does not replay: {e}")))
    }
}

fn replay(seed: Seed, history: Vec<Move>) -> Result<Session, SessionError> {
    let mut s = Session::new(seed);
    for mv in history {
        s.apply(mv)?;
    }
    Ok(s)
}

/// One exchange step at vertex `v`: mutate, and when linked, replace the
/// diagonal by its next complement and relabel the vertex accordingly.
fn exchange(
    quiver: &ColouredQuiver,
    angulation: Option<&Angulation>,
    v: usize,
) -> Result<(ColouredQuiver, Option<Angulation>), SessionError> {
    let illegal = |e: &dyn std::fmt::Display| SessionError::Illegal(e.to_string());
    let mut q = quiver.mutate_procedural(v).map_err(|e| illegal(&e))?;
    let Some(a) = angulation else {
        return Ok((q, None));
    };
    let d = parse_diagonal(q.label(v))?;
    let next = a.next_complement(d).map_err(|e| illegal(&e))?;
    q.relabel(v, next.to_string()).map_err(|e| illegal(&e))?;
    Ok((q, Some(a.replace(d, next).map_err(|e| illegal(&e))?)))
}

fn step(
    quiver: &ColouredQuiver,
    angulation: Option<&Angulation>,
    mv: &Move,
) -> Result<(ColouredQuiver, Option<Angulation>), SessionError> {
    match mv {
        Move::Mutate { vertex } => {
            let v = quiver.index_of(vertex).map_err(|_| SessionError::Illegal(format!("unknown vertex `{vertex}`")))?;
            exchange(quiver, angulation, v)
        }
        Move::Flip { diagonal, choice } => {
            let a = angulation.ok_or_else(|| SessionError::Illegal("session has no angulation".into()))?;
            let (d, c) = (parse_diagonal(diagonal)?, parse_diagonal(choice)?);
            if !a.contains(d) {
                return Err(SessionError::Illegal(format!("{d} is not in the angulation")));
            }
            let order = a.exchange_sequence(d).map_err(|e| SessionError::Illegal(e.to_string()))?;
            let k = order
                .iter()
                .position(|&e| e == c)
                .ok_or_else(|| SessionError::Illegal(format!("{c} is not a flip of {d}")))?
                + 1;
            let v = quiver.index_of(&d.to_string()).map_err(|e| SessionError::Illegal(e.to_string()))?;
            let (mut q, mut a) = (quiver.clone(), Some(a.clone()));
            for _ in 0..k {
                (q, a) = exchange(&q, a.as_ref(), v)?;
            }
            Ok((q, a))
        }
    }
}
