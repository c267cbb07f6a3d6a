use num_bigint::BigUint;
use num_traits::Zero;

use super::{check_labels, Multiplicity, QuiverError};

/// A quiver without loops or oriented 2-cycles, stored as an arrow-count
/// matrix `q_ij`.
#[derive(Debug, Clone)]
pub struct PlainQuiver {
    labels: Vec<String>,
    counts: Vec<Multiplicity>,
}

impl PlainQuiver {
    pub fn new<I, S>(labels: I) -> Result<Self, QuiverError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        check_labels(&labels)?;
        let n = labels.len();
        Ok(PlainQuiver { labels, counts: vec![BigUint::zero(); n * n] })
    }

    /// Linearly oriented path `1 -> 2 -> ... -> n`.
    pub fn path(n: usize) -> Self {
        let mut q = PlainQuiver::new((1..=n).map(|i| i.to_string())).expect("n >= 1");
        for i in 1..n {
            q.set_count(i - 1, i, BigUint::from(1u32));
        }
        q
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize, QuiverError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| QuiverError::UnknownVertex(label.to_string()))
    }

    pub fn count(&self, from: usize, to: usize) -> &Multiplicity {
        &self.counts[from * self.n() + to]
    }

    pub(crate) fn set_count(&mut self, from: usize, to: usize, mult: Multiplicity) {
        let n = self.n();
        self.counts[from * n + to] = mult;
    }

    /// Adds `mult` arrows `from -> to`, refusing loops and 2-cycles.
    pub fn add_arrows(
        &mut self,
        from: usize,
        to: usize,
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
        let mult = mult.into();
        if mult.is_zero() {
            return Ok(());
        }
        if !self.count(to, from).is_zero() {
            return Err(QuiverError::TwoCycle(self.labels[from].clone(), self.labels[to].clone()));
        }
        self.counts[from * n + to] += mult;
        Ok(())
    }

    /// Nonzero entries `(i, j, q_ij)` in row-major order.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize, &Multiplicity)> + '_ {
        let n = self.n();
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
            .map(move |(s, q)| (s / n, s % n, q))
    }

    /// Kahn's algorithm on the arrow-count matrix.
    pub fn is_acyclic(&self) -> bool {
        let n = self.n();
        let mut indegree: Vec<usize> =
            (0..n).map(|j| (0..n).filter(|&i| !self.count(i, j).is_zero()).count()).collect();
        let mut ready: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = ready.pop() {
            seen += 1;
            for (j, deg) in indegree.iter_mut().enumerate() {
                if !self.count(v, j).is_zero() {
                    *deg -= 1;
                    if *deg == 0 {
                        ready.push(j);
                    }
                }
            }
        }
        seen == n
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for (w, seen_w) in seen.iter_mut().enumerate() {
                if !*seen_w && (!self.count(v, w).is_zero() || !self.count(w, v).is_zero()) {
                    *seen_w = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Fomin–Zelevinsky mutation at `v`:
    /// `q'_ij = q_ji` if `v` is `i` or `j`, otherwise
    /// `max(0, q_ij - q_ji + q_iv q_vj - q_jv q_vi)`.
    pub fn fz_mutate(&self, v: usize) -> Result<Self, QuiverError> {
        let n = self.n();
        if v >= n {
            return Err(QuiverError::UnknownVertex(v.to_string()));
        }
        let mut out = PlainQuiver { labels: self.labels.clone(), counts: vec![BigUint::zero(); n * n] };
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let q = if i == v || j == v {
                    self.count(j, i).clone()
                } else {
                    let gain = self.count(i, j) + self.count(i, v) * self.count(v, j);
                    let loss = self.count(j, i) + self.count(j, v) * self.count(v, i);
                    if gain > loss {
                        gain - loss
                    } else {
                        BigUint::zero()
                    }
                };
                out.counts[i * n + j] = q;
            }
        }
        Ok(out)
    }

    /// Same quiver with every arrow count viewed as a colour-0 coloured
    /// quiver with `m = 0`; used for canonical keys.
    pub(crate) fn as_colour_zero(&self) -> super::ColouredQuiver {
        super::ColouredQuiver::from_parts(0, self.labels.clone(), self.counts.clone())
    }
}

impl PartialEq for PlainQuiver {
    fn eq(&self, other: &Self) -> bool {
        if self.n() != other.n() {
            return false;
        }
        let mut map = Vec::with_capacity(self.n());
        for l in &self.labels {
            match other.labels.iter().position(|o| o == l) {
                Some(p) => map.push(p),
                None => return false,
            }
        }
        (0..self.n()).all(|i| (0..self.n()).all(|j| self.count(i, j) == other.count(map[i], map[j])))
    }
}

impl Eq for PlainQuiver {}
