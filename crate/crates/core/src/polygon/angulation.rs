use std::fmt;

use super::{crossing, MDiagonal, Polygon, PolygonError};

/// A maximal set of pairwise noncrossing `m`-diagonals (always `n - 1` of
/// them), kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Angulation {
    polygon: Polygon,
    diagonals: Vec<MDiagonal>,
}

impl Angulation {
    pub fn new(
        polygon: Polygon,
        diagonals: impl IntoIterator<Item = MDiagonal>,
    ) -> Result<Self, PolygonError> {
        let mut diagonals: Vec<MDiagonal> = diagonals.into_iter().collect();
        diagonals.sort();
        diagonals.dedup();
        if diagonals.len() != polygon.rank() {
            return Err(PolygonError::WrongSize { expected: polygon.rank(), got: diagonals.len() });
        }
        polygon.ensure_noncrossing(&diagonals)?;
        Ok(Angulation { polygon, diagonals })
    }

    pub(crate) fn from_sorted_unchecked(polygon: Polygon, diagonals: Vec<MDiagonal>) -> Self {
        debug_assert!(diagonals.windows(2).all(|w| w[0] < w[1]));
        Angulation { polygon, diagonals }
    }

    pub fn polygon(&self) -> Polygon {
        self.polygon
    }

    pub fn diagonals(&self) -> &[MDiagonal] {
        &self.diagonals
    }

    pub fn contains(&self, d: MDiagonal) -> bool {
        self.diagonals.binary_search(&d).is_ok()
    }

    fn without(&self, d: MDiagonal) -> Result<Vec<MDiagonal>, PolygonError> {
        if !self.contains(d) {
            return Err(PolygonError::NotInAngulation(d));
        }
        Ok(self.diagonals.iter().copied().filter(|&e| e != d).collect())
    }

    /// The `m` diagonals that can replace `d`, sorted.
    pub fn flips(&self, d: MDiagonal) -> Result<Vec<MDiagonal>, PolygonError> {
        let rest = self.without(d)?;
        // deleting d leaves a (2m+2)-gon; its complements join opposite corners
        let face = self.polygon.face_around(&rest, d, false);
        let half = face.len() / 2;
        let mut out: Vec<MDiagonal> =
            (0..half).map(|k| MDiagonal::new(face[k], face[k + half])).filter(|&e| e != d).collect();
        out.sort();
        Ok(out)
    }

    /// Successor of `d` in its exchange cycle: both endpoints move to their
    /// counterclockwise neighbours on the boundary of the `(2m+2)`-gon left
    /// after deleting `d`.
    pub fn next_complement(&self, d: MDiagonal) -> Result<MDiagonal, PolygonError> {
        let rest = self.without(d)?;
        let face = self.polygon.face_around(&rest, d, false);
        let before = |v: u32| {
            let k = face.iter().position(|&w| w == v).expect("endpoint lies on its face");
            face[(k + face.len() - 1) % face.len()]
        };
        Ok(MDiagonal::new(before(d.lo), before(d.hi)))
    }

    /// The complements of `A \ {d}` other than `d`, in exchange order
    /// `d^(1), ..., d^(m)`.
    pub fn exchange_sequence(&self, d: MDiagonal) -> Result<Vec<MDiagonal>, PolygonError> {
        let mut out = Vec::with_capacity(self.polygon.m() as usize);
        let mut current = self.clone();
        let mut e = d;
        for _ in 0..self.polygon.m() {
            let next = current.next_complement(e)?;
            current = current.replace(e, next)?;
            out.push(next);
            e = next;
        }
        Ok(out)
    }

    /// Angulation with `old` swapped for `new`.
    pub fn replace(&self, old: MDiagonal, new: MDiagonal) -> Result<Angulation, PolygonError> {
        let mut rest = self.without(old)?;
        self.polygon.check(new)?;
        if let Some(&e) = rest.iter().find(|&&e| e == new || crossing(e, new)) {
            return Err(if e == new {
                PolygonError::WrongSize { expected: self.polygon.rank(), got: rest.len() }
            } else {
                PolygonError::Crossing(e, new)
            });
        }
        let at = rest.partition_point(|&e| e < new);
        rest.insert(at, new);
        Ok(Angulation::from_sorted_unchecked(self.polygon, rest))
    }

    /// Replaces `d` by its `k`-th successor in the exchange cycle.
    pub fn step(&self, d: MDiagonal, k: usize) -> Result<(Angulation, MDiagonal), PolygonError> {
        let mut current = self.clone();
        let mut e = d;
        for _ in 0..k {
            let next = current.next_complement(e)?;
            current = current.replace(e, next)?;
            e = next;
        }
        Ok((current, e))
    }

    /// Flip `d` to `choice`, returning the new angulation and the number of
    /// exchange steps the flip takes.
    pub fn flip_to(&self, d: MDiagonal, choice: MDiagonal) -> Result<(Angulation, usize), PolygonError> {
        let sequence = self.exchange_sequence(d)?;
        let k = sequence.iter().position(|&e| e == choice).ok_or(PolygonError::NotAFlip(choice))? + 1;
        Ok((self.replace(d, choice)?, k))
    }

    /// Cells of the angulation: the `n` sub-polygons, each an `(m+2)`-gon,
    /// as clockwise vertex lists.
    pub fn cells(&self) -> Vec<Vec<u32>> {
        // every cell has at least one diagonal among its sides
        let mut cells: Vec<Vec<u32>> = Vec::new();
        for &d in &self.diagonals {
            for outer in [false, true] {
                let face = self.polygon.face_around(&self.diagonals, d, outer);
                if !cells.contains(&face) {
                    cells.push(face);
                }
            }
        }
        cells.sort();
        cells
    }

    pub fn noncrossing_with(&self, d: MDiagonal) -> bool {
        self.diagonals.iter().all(|&e| e == d || !crossing(e, d))
    }
}

impl fmt::Display for Angulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, d) in self.diagonals.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}
