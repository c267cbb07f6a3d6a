//! Coloured quivers attached to angulations by following flips.

use std::collections::{HashMap, VecDeque};

use crate::quiver::ColouredQuiver;

use super::{Angulation, MDiagonal, Polygon, PolygonError};

/// The fan `{(1, tm+2) : 1 <= t <= n-1}` at vertex 1.
pub fn fan_angulation(p: Polygon) -> Angulation {
    let m = p.m();
    Angulation::new(p, (1..p.n()).map(|t| MDiagonal::new(1, t * m + 2))).expect("the fan is an angulation")
}

/// Coloured quiver of the fan: `d_t -(0)-> d_{t+1}` and `d_{t+1} -(m)-> d_t`,
/// vertices labelled by their diagonals. This is the coloured seed of the
/// linearly oriented `A_{n-1}`.
pub fn fan_quiver(p: Polygon) -> ColouredQuiver {
    let fan = fan_angulation(p);
    let labels: Vec<String> = fan.diagonals().iter().map(ToString::to_string).collect();
    let mut q = ColouredQuiver::new(p.m(), labels).expect("distinct diagonals");
    for t in 1..fan.diagonals().len() {
        q.add_arrows(t - 1, t, 0, 1u32).expect("in range");
        q.add_arrows(t, t - 1, p.m(), 1u32).expect("in range");
    }
    q
}

/// Folds coloured mutation along a flip path. Each entry of `path` names a
/// diagonal of the current angulation; it is replaced by its next
/// complement and the quiver is mutated at the matching vertex, which is
/// then relabelled by the new diagonal.
pub fn coloured_quiver_of_angulation(
    target: &Angulation,
    base: &Angulation,
    base_quiver: &ColouredQuiver,
    path: &[MDiagonal],
) -> Result<ColouredQuiver, PolygonError> {
    if target.polygon() != base.polygon() {
        return Err(PolygonError::PolygonMismatch);
    }
    let labels_match = base_quiver.n() == base.diagonals().len()
        && base.diagonals().iter().all(|d| base_quiver.index_of(&d.to_string()).is_ok());
    if !labels_match || base_quiver.m() != base.polygon().m() {
        return Err(PolygonError::PolygonMismatch);
    }
    let mut angulation = base.clone();
    let mut quiver = base_quiver.clone();
    for &d in path {
        let v = quiver.index_of(&d.to_string()).map_err(|_| PolygonError::NotInAngulation(d))?;
        let next = angulation.next_complement(d)?;
        angulation = angulation.replace(d, next)?;
        quiver = quiver.mutate_procedural(v)?;
        quiver.relabel(v, next.to_string())?;
    }
    if angulation != *target {
        return Err(PolygonError::PathMismatch);
    }
    Ok(quiver)
}

/// A shortest sequence of exchange steps from `from` to `to`, found by
/// breadth-first search in the flip graph. Diagonals are tried in sorted
/// order, so the path is deterministic.
pub fn flip_path(from: &Angulation, to: &Angulation) -> Result<Vec<MDiagonal>, PolygonError> {
    if from.polygon() != to.polygon() {
        return Err(PolygonError::PolygonMismatch);
    }
    let mut parent: HashMap<Angulation, (Angulation, MDiagonal)> = HashMap::new();
    let mut queue = VecDeque::from([from.clone()]);
    let mut found = from == to;
    while let (false, Some(a)) = (found, queue.pop_front()) {
        for &d in a.diagonals() {
            let next = a.next_complement(d)?;
            let b = a.replace(d, next)?;
            if b == *from || parent.contains_key(&b) {
                continue;
            }
            parent.insert(b.clone(), (a.clone(), d));
            if b == *to {
                found = true;
                break;
            }
            queue.push_back(b);
        }
    }
    if !found {
        return Err(PolygonError::PathMismatch);
    }
    let mut path = Vec::new();
    let mut at = to.clone();
    while at != *from {
        let (prev, d) = parent.remove(&at).expect("visited");
        path.push(d);
        at = prev;
    }
    path.reverse();
    Ok(path)
}

/// Coloured quiver of `a`, obtained from the fan by a shortest flip path.
pub fn quiver_of_angulation(a: &Angulation) -> Result<ColouredQuiver, PolygonError> {
    let p = a.polygon();
    let fan = fan_angulation(p);
    let path = flip_path(&fan, a)?;
    coloured_quiver_of_angulation(a, &fan, &fan_quiver(p), &path)
}
