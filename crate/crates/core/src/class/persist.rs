//! Class files: a one-line JSON header followed by sorted hex keys, one per
//! line.

use std::collections::BTreeSet;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{CanonicalKey, ClassError, MutationClass};
use crate::io::json::{quiver_from_value, quiver_to_value};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Header {
    seed: Value,
    m: u32,
    complete: bool,
    explored: u64,
    limit: u64,
    size: usize,
}

fn io_error(e: std::io::Error) -> ClassError {
    ClassError::BadFile(e.to_string())
}

pub fn write_class<W: Write>(class: &MutationClass, mut out: W) -> Result<(), ClassError> {
    let header = Header {
        seed: quiver_to_value(&class.seed),
        m: class.m(),
        complete: class.complete,
        explored: class.explored,
        limit: class.limit,
        size: class.keys.len(),
    };
    let line = serde_json::to_string(&header).expect("header serializes");
    writeln!(out, "{line}").map_err(io_error)?;
    for key in &class.keys {
        writeln!(out, "{}", key.to_hex()).map_err(io_error)?;
    }
    out.flush().map_err(io_error)
}

pub fn read_class<R: BufRead>(input: R) -> Result<MutationClass, ClassError> {
    let mut lines = input.lines();
    let first = lines.next().ok_or_else(|| ClassError::BadFile("empty file".into()))?.map_err(io_error)?;
    let header: Header = serde_json::from_str(&first).map_err(|e| ClassError::BadFile(e.to_string()))?;
    let seed = quiver_from_value(header.seed).map_err(|e| ClassError::BadFile(e.to_string()))?;
    if seed.m() != header.m {
        return Err(ClassError::BadFile("seed colour count disagrees with header".into()));
    }
    let mut keys = BTreeSet::new();
    for line in lines {
        let line = line.map_err(io_error)?;
        if line.trim().is_empty() {
            continue;
        }
        let key = CanonicalKey::from_hex(&line)?;
        if key.decode()?.m() != header.m {
            return Err(ClassError::BadKey(format!("key {line} has the wrong colour count")));
        }
        keys.insert(key);
    }
    if keys.len() != header.size {
        return Err(ClassError::BadFile(format!("header says {} keys, found {}", header.size, keys.len())));
    }
    Ok(MutationClass { seed, keys, complete: header.complete, explored: header.explored, limit: header.limit })
}
