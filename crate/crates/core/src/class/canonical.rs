//! Canonical keys of coloured quivers up to vertex relabelling.
//!
//! The key is the smallest arrow serialization over all vertex orders that
//! are compatible with a sorted per-vertex invariant. Because the invariant
//! is itself isomorphism-invariant, restricting the search this way keeps
//! the key canonical.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use super::ClassError;
use crate::quiver::{ColouredQuiver, PlainQuiver};

/// Default vertex bound for canonicalization.
pub const DEFAULT_MAX_VERTICES: usize = 10;

/// Isomorphism-invariant fingerprint of a coloured quiver. Colours are never
/// permuted, only vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self, ClassError> {
        let bytes = hex::decode(s.trim()).map_err(|e| ClassError::BadKey(e.to_string()))?;
        let key = CanonicalKey(bytes);
        key.decode()?;
        Ok(key)
    }

    /// The canonical representative, with vertices labelled `0..n`.
    pub fn decode(&self) -> Result<ColouredQuiver, ClassError> {
        let bad = || ClassError::BadKey("truncated key".into());
        let mut r = Reader { bytes: &self.0, at: 0 };
        let n = r.varint().ok_or_else(bad)? as usize;
        let m = r.varint().ok_or_else(bad)? as u32;
        if n == 0 || n > 64 {
            return Err(ClassError::BadKey(format!("vertex count {n}")));
        }
        let mut q = ColouredQuiver::new(m, (0..n).map(|i| i.to_string()))
            .map_err(|e| ClassError::BadKey(e.to_string()))?;
        while r.at < self.0.len() {
            let i = r.varint().ok_or_else(bad)? as usize;
            let j = r.varint().ok_or_else(bad)? as usize;
            let c = r.varint().ok_or_else(bad)? as u32;
            let len = r.varint().ok_or_else(bad)? as usize;
            let digits = r.take(len).ok_or_else(bad)?;
            q.add_arrows(i, j, c, BigUint::from_bytes_be(digits))
                .map_err(|e| ClassError::BadKey(e.to_string()))?;
        }
        Ok(q)
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

struct Reader<'a> {
    bytes: &'a [u8],
    at: usize,
}

impl Reader<'_> {
    fn varint(&mut self) -> Option<u64> {
        let mut value = 0u64;
        for shift in (0..64).step_by(7) {
            let b = *self.bytes.get(self.at)?;
            self.at += 1;
            value |= u64::from(b & 0x7f) << shift;
            if b & 0x80 == 0 {
                return Some(value);
            }
        }
        None
    }

    fn take(&mut self, len: usize) -> Option<&[u8]> {
        let out = self.bytes.get(self.at..self.at + len)?;
        self.at += len;
        Some(out)
    }
}

fn push_varint(out: &mut Vec<u8>, mut v: u64) {
    loop {
        let b = (v & 0x7f) as u8;
        v >>= 7;
        if v == 0 {
            out.push(b);
            return;
        }
        out.push(b | 0x80);
    }
}

/// Serializes `q` with vertex `order[k]` renamed to `k`.
fn encode(q: &ColouredQuiver, order: &[usize], out: &mut Vec<u8>) {
    out.clear();
    push_varint(out, order.len() as u64);
    push_varint(out, q.m() as u64);
    for (i, &oi) in order.iter().enumerate() {
        for (j, &oj) in order.iter().enumerate() {
            if i == j {
                continue;
            }
            for c in 0..=q.m() {
                let mult = q.count(oi, oj, c);
                if mult.is_zero() {
                    continue;
                }
                push_varint(out, i as u64);
                push_varint(out, j as u64);
                push_varint(out, c as u64);
                let digits = mult.to_bytes_be();
                push_varint(out, digits.len() as u64);
                out.extend_from_slice(&digits);
            }
        }
    }
}

/// Sorted outgoing and incoming `(colour, mult)` lists of a vertex.
type Signature = (Vec<(u32, BigUint)>, Vec<(u32, BigUint)>);

/// Per-vertex isomorphism invariant.
fn signature(q: &ColouredQuiver, v: usize) -> Signature {
    let mut out = Vec::new();
    let mut inc = Vec::new();
    for w in (0..q.n()).filter(|&w| w != v) {
        for c in 0..=q.m() {
            if !q.count(v, w, c).is_zero() {
                out.push((c, q.count(v, w, c).clone()));
            }
            if !q.count(w, v, c).is_zero() {
                inc.push((c, q.count(w, v, c).clone()));
            }
        }
    }
    out.sort();
    inc.sort();
    (out, inc)
}

/// Rank of each item in the sorted, deduplicated list of keys.
fn ranks<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut sorted = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).expect("present")).collect()
}

/// Colour refinement: starting from the signatures, repeatedly split vertex
/// cells by the cells of their neighbours until the partition is stable.
/// Every step is isomorphism-invariant, so the final cell numbers are too.
fn refine(q: &ColouredQuiver, sigs: &[Signature]) -> Vec<usize> {
    let n = q.n();
    let mut cells = ranks(sigs);
    loop {
        let count = cells.iter().max().map_or(0, |&c| c + 1);
        let keys: Vec<_> = (0..n)
            .map(|v| {
                let mut around = Vec::new();
                for w in (0..n).filter(|&w| w != v) {
                    for c in 0..=q.m() {
                        if !q.count(v, w, c).is_zero() {
                            around.push((false, cells[w], c, q.count(v, w, c).clone()));
                        }
                        if !q.count(w, v, c).is_zero() {
                            around.push((true, cells[w], c, q.count(w, v, c).clone()));
                        }
                    }
                }
                around.sort();
                (cells[v], around)
            })
            .collect();
        let next = ranks(&keys);
        let next_count = next.iter().max().map_or(0, |&c| c + 1);
        cells = next;
        if next_count == count {
            return cells;
        }
    }
}

/// Lexicographic next permutation; returns false after the last one.
fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let Some(i) = (0..xs.len() - 1).rev().find(|&i| xs[i] < xs[i + 1]) else {
        xs.sort_unstable();
        return false;
    };
    let j = (i + 1..xs.len()).rev().find(|&j| xs[j] > xs[i]).expect("pivot exists");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

pub fn canonical_key(q: &ColouredQuiver) -> Result<CanonicalKey, ClassError> {
    canonical_key_bounded(q, DEFAULT_MAX_VERTICES)
}

pub fn canonical_key_bounded(q: &ColouredQuiver, max_vertices: usize) -> Result<CanonicalKey, ClassError> {
    let n = q.n();
    if n > max_vertices {
        return Err(ClassError::TooManyVertices { n, max: max_vertices });
    }
    let sigs: Vec<_> = (0..n).map(|v| signature(q, v)).collect();
    let cells = refine(q, &sigs);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (cells[v], v));
    // blocks of equal cell, as ranges into `order`; vertices without arrows
    // are interchangeable, so their blocks need no search
    let mut blocks = Vec::new();
    let mut start = 0;
    for k in 1..=n {
        if k == n || cells[order[k]] != cells[order[start]] {
            let isolated = sigs[order[start]].0.is_empty() && sigs[order[start]].1.is_empty();
            if k - start > 1 && !isolated {
                blocks.push(start..k);
            }
            start = k;
        }
    }

    let mut best = Vec::new();
    encode(q, &order, &mut best);
    let mut scratch = Vec::with_capacity(best.len());
    'outer: loop {
        // odometer over the per-block permutations
        let mut advanced = false;
        for b in &blocks {
            if next_permutation(&mut order[b.clone()]) {
                advanced = true;
                break;
            }
        }
        if !advanced {
            break 'outer;
        }
        encode(q, &order, &mut scratch);
        if scratch < best {
            std::mem::swap(&mut best, &mut scratch);
        }
    }
    Ok(CanonicalKey(best))
}

/// Key of an uncoloured quiver, treating it as colour-0 with `m = 0`.
pub fn plain_key(q: &PlainQuiver) -> Result<CanonicalKey, ClassError> {
    canonical_key(&q.as_colour_zero())
}
