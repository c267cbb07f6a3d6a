//! Coloured quiver mutation, in its procedural and closed-form versions.

use num_bigint::BigUint;
use num_traits::Zero;

use super::{ColouredQuiver, QuiverError};

impl ColouredQuiver {
    fn check_vertex(&self, v: usize) -> Result<(), QuiverError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(QuiverError::UnknownVertex(v.to_string()))
        }
    }

    /// Coloured mutation at `v`, following the three-step rule:
    ///
    /// 1. for every pair `i -(c)-> v -(0)-> j` with `i != j` add
    ///    `i -(c)-> j` and `j -(m-c)-> i`;
    /// 2. while an ordered pair carries arrows of several colours, remove one
    ///    arrow of each colour present;
    /// 3. arrows ending in `v` gain one colour, arrows starting in `v` lose
    ///    one, modulo `m + 1`.
    ///
    /// The input must be a valid tilting quiver (see [`ColouredQuiver::validate`]).
    /// The mutated vertex keeps its label.
    pub fn mutate_procedural(&self, v: usize) -> Result<Self, QuiverError> {
        self.check_vertex(v)?;
        self.ensure_valid()?;
        let n = self.n();
        let m = self.m();
        let k = m as usize + 1;
        let slot = |i: usize, j: usize, c: u32| (i * n + j) * k + c as usize;

        let mut counts = self.counts.clone();
        for i in (0..n).filter(|&i| i != v) {
            for c in 0..=m {
                let into_v = self.count(i, v, c);
                if into_v.is_zero() {
                    continue;
                }
                for j in (0..n).filter(|&j| j != v && j != i) {
                    let out_of_v = self.count(v, j, 0);
                    if out_of_v.is_zero() {
                        continue;
                    }
                    let added = into_v * out_of_v;
                    counts[slot(i, j, c)] += &added;
                    counts[slot(j, i, m - c)] += added;
                }
            }
        }

        for i in 0..n {
            for j in (0..n).filter(|&j| j != i) {
                cancel_colours(&mut counts[slot(i, j, 0)..slot(i, j, 0) + k]);
            }
        }

        let mut out = ColouredQuiver::from_parts(m, self.labels.clone(), vec![BigUint::zero(); counts.len()]);
        let shifted = out.counts_mut();
        for i in 0..n {
            for j in 0..n {
                for c in 0..=m {
                    let q = std::mem::take(&mut counts[slot(i, j, c)]);
                    if q.is_zero() {
                        continue;
                    }
                    let c2 = if j == v {
                        (c + 1) % (m + 1)
                    } else if i == v {
                        (c + m) % (m + 1)
                    } else {
                        c
                    };
                    shifted[slot(i, j, c2)] = q;
                }
            }
        }
        Ok(out)
    }

    /// Coloured mutation at `v` evaluated through the closed formula
    ///
    /// ```text
    /// q'_ij(c) = q_ij(c+1)                                   if v = i
    ///          = q_ij(c-1)                                   if v = j
    ///          = max(0, q_ij(c) - sum_{t != c} q_ij(t)
    ///                   + (q_iv(c) - q_iv(c-1)) q_vj(0)
    ///                   + q_iv(m) (q_vj(c) - q_vj(c+1)))     otherwise
    /// ```
    ///
    /// with colour indices taken modulo `m + 1`.
    pub fn mutate_formula(&self, v: usize) -> Result<Self, QuiverError> {
        self.check_vertex(v)?;
        self.ensure_valid()?;
        let n = self.n();
        let m = self.m();
        let up = |c: u32| (c + 1) % (m + 1);
        let down = |c: u32| (c + m) % (m + 1);

        let mut out = ColouredQuiver::from_parts(
            m,
            self.labels.clone(),
            vec![BigUint::zero(); n * n * (m as usize + 1)],
        );
        let k = m as usize + 1;
        let counts = out.counts_mut();
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i) {
                for c in 0..=m {
                    let q = if i == v {
                        self.count(i, j, up(c)).clone()
                    } else if j == v {
                        self.count(i, j, down(c)).clone()
                    } else {
                        let others: BigUint =
                            (0..=m).filter(|&t| t != c).map(|t| self.count(i, j, t)).sum();
                        let gain = self.count(i, j, c)
                            + self.count(i, v, c) * self.count(v, j, 0)
                            + self.count(i, v, m) * self.count(v, j, c);
                        let loss = others
                            + self.count(i, v, down(c)) * self.count(v, j, 0)
                            + self.count(i, v, m) * self.count(v, j, up(c));
                        if gain > loss {
                            gain - loss
                        } else {
                            BigUint::zero()
                        }
                    };
                    counts[(i * n + j) * k + c as usize] = q;
                }
            }
        }
        Ok(out)
    }
}

/// Repeatedly strips one arrow of every colour present until at most one
/// colour is left. Batched: while the set of present colours is unchanged,
/// `min` rounds remove `min` arrows of each.
fn cancel_colours(bundle: &mut [BigUint]) {
    loop {
        let present: Vec<usize> = (0..bundle.len()).filter(|&c| !bundle[c].is_zero()).collect();
        if present.len() < 2 {
            return;
        }
        let least = present.iter().map(|&c| bundle[c].clone()).min().expect("nonempty");
        for c in present {
            bundle[c] -= &least;
        }
    }
}
