//! Brute-force enumeration of angulations and of the complex of
//! noncrossing `m`-diagonal sets.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use rayon::prelude::*;

use super::{crossing, Angulation, MDiagonal, Polygon, PolygonError};

/// Largest polygon the brute-force enumerators accept.
pub const MAX_BRUTE_FORCE_VERTICES: u32 = 20;

fn check_bound(p: Polygon) -> Result<(), PolygonError> {
    if p.vertices() > MAX_BRUTE_FORCE_VERTICES {
        Err(PolygonError::SizeBound { got: p.vertices(), max: MAX_BRUTE_FORCE_VERTICES })
    } else {
        Ok(())
    }
}

/// `binom((m+1) n, n-1) / n`.
pub fn fuss_catalan(n: u32, m: u32) -> BigUint {
    let top = (m as u64 + 1) * n as u64;
    let k = n as u64 - 1;
    let mut binom = BigUint::from(1u32);
    for i in 0..k {
        binom *= top - i;
        binom /= i + 1;
    }
    binom / n
}

/// Generates every angulation exactly once by choosing, for the arc
/// `lo..=hi` whose root chord is `(lo, hi)`, the cell on that chord and then
/// recursing into the arcs cut off by the cell.
struct Generator<'a, F: FnMut(&[MDiagonal])> {
    m: u32,
    chosen: Vec<MDiagonal>,
    pending: Vec<(u32, u32)>,
    visit: &'a mut F,
}

impl<F: FnMut(&[MDiagonal])> Generator<'_, F> {
    fn run(&mut self) {
        let Some((lo, hi)) = self.pending.pop() else {
            (self.visit)(&self.chosen);
            return;
        };
        if hi - lo == self.m + 1 {
            self.run();
        } else {
            let mut corners = Vec::with_capacity(self.m as usize);
            self.pick(lo, hi, lo, &mut corners);
        }
        self.pending.push((lo, hi));
    }

    /// Picks the `m` cell corners strictly between `lo` and `hi`; every
    /// consecutive pair of corners must be `1 mod m` apart.
    fn pick(&mut self, lo: u32, hi: u32, prev: u32, corners: &mut Vec<u32>) {
        let left = self.m - corners.len() as u32;
        if left == 0 {
            if (hi - prev) % self.m != 1 % self.m {
                return;
            }
            let (chosen_len, pending_len) = (self.chosen.len(), self.pending.len());
            let mut last = lo;
            for &c in corners.iter().chain(std::iter::once(&hi)) {
                if c - last > 1 {
                    self.chosen.push(MDiagonal::new(last, c));
                    self.pending.push((last, c));
                }
                last = c;
            }
            self.run();
            self.chosen.truncate(chosen_len);
            self.pending.truncate(pending_len);
            return;
        }
        let mut next = prev + 1;
        // leave room for the remaining corners
        while next + left <= hi {
            corners.push(next);
            self.pick(lo, hi, next, corners);
            corners.pop();
            next += self.m;
        }
    }
}

fn for_each_angulation(p: Polygon, mut visit: impl FnMut(&[MDiagonal])) {
    let mut gen = Generator {
        m: p.m(),
        chosen: Vec::with_capacity(p.rank()),
        pending: vec![(1, p.vertices())],
        visit: &mut visit,
    };
    gen.run();
}

/// Every angulation of `p`, sorted.
pub fn angulations(p: Polygon) -> Result<Vec<Angulation>, PolygonError> {
    check_bound(p)?;
    let mut out = Vec::new();
    for_each_angulation(p, |ds| {
        let mut ds = ds.to_vec();
        ds.sort();
        out.push(Angulation::from_sorted_unchecked(p, ds));
    });
    out.sort_by(|a, b| a.diagonals().cmp(b.diagonals()));
    Ok(out)
}

/// Number of angulations, by visiting each one.
pub fn count_angulations(p: Polygon) -> Result<u64, PolygonError> {
    check_bound(p)?;
    let mut count = 0u64;
    for_each_angulation(p, |_| count += 1);
    Ok(count)
}

/// Fixed-width bitset over the diagonals of a polygon with at most
/// [`MAX_BRUTE_FORCE_VERTICES`] vertices (at most 170 diagonals).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
struct Mask([u64; 3]);

impl Mask {
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn without(mut self, i: usize) -> Self {
        self.0[i / 64] &= !(1 << (i % 64));
        self
    }
    fn and(self, o: Mask) -> Mask {
        Mask([self.0[0] & o.0[0], self.0[1] & o.0[1], self.0[2] & o.0[2]])
    }
    fn is_empty(self) -> bool {
        self.0 == [0; 3]
    }
    fn ones(self) -> impl Iterator<Item = usize> {
        (0..3).flat_map(move |w| {
            let mut bits = self.0[w];
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + b)
            })
        })
    }
    fn above(self, i: usize) -> Mask {
        let mut out = self;
        for w in 0..3 {
            let lo = w * 64;
            if i + 1 >= lo + 64 {
                out.0[w] = 0;
            } else if i + 1 > lo {
                out.0[w] &= !0u64 << (i + 1 - lo);
            }
        }
        out
    }
}

/// Outcome of the brute-force facet checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetReport {
    /// Number of inclusion-maximal noncrossing sets.
    pub facets: usize,
    /// Distinct facet cardinalities observed.
    pub facet_sizes: BTreeSet<usize>,
    /// Number of noncrossing sets of size `n - 2`.
    pub ridges: usize,
    /// Distinct numbers of facets containing a ridge.
    pub link_counts: BTreeSet<usize>,
    pub expected_size: usize,
    pub expected_link: usize,
}

impl FacetReport {
    /// Every facet has `n - 1` elements and every `(n-2)`-set lies in exactly
    /// `m + 1` facets.
    pub fn holds(&self) -> bool {
        self.facet_sizes.iter().eq([self.expected_size].iter())
            && self.link_counts.iter().eq([self.expected_link].iter())
    }
}

/// Walks the whole complex of noncrossing sets of `m`-diagonals, which is
/// independent of the angulation generator, and checks facet sizes and
/// ridge links.
pub fn facet_checks(p: Polygon) -> Result<FacetReport, PolygonError> {
    check_bound(p)?;
    let diagonals = p.all_m_diagonals();
    let d = diagonals.len();
    let compatible: Vec<Mask> = (0..d)
        .map(|i| {
            let mut mask = Mask::default();
            for j in 0..d {
                if i != j && !crossing(diagonals[i], diagonals[j]) {
                    mask.set(j);
                }
            }
            mask
        })
        .collect();
    let mut everything = Mask::default();
    (0..d).for_each(|i| everything.set(i));
    let ridge_size = p.rank().saturating_sub(1);

    struct Walk<'a> {
        compatible: &'a [Mask],
        ridge_size: usize,
        facets: Vec<Mask>,
        sizes: BTreeSet<usize>,
        ridges: usize,
    }
    impl Walk<'_> {
        fn go(&mut self, chosen: Mask, size: usize, open: Mask, last: Option<usize>) {
            if size == self.ridge_size {
                self.ridges += 1;
            }
            if open.is_empty() {
                self.facets.push(chosen);
                self.sizes.insert(size);
                return;
            }
            let ahead = match last {
                Some(i) => open.above(i),
                None => open,
            };
            for i in ahead.ones() {
                let mut next = chosen;
                next.set(i);
                self.go(next, size + 1, open.and(self.compatible[i]), Some(i));
            }
        }
    }

    // split the walk by smallest chosen diagonal
    let roots: Vec<Option<usize>> = std::iter::once(None).chain((0..d).map(Some)).collect();
    let walks: Vec<(Vec<Mask>, BTreeSet<usize>, usize)> = roots
        .into_par_iter()
        .map(|root| {
            let mut walk = Walk {
                compatible: &compatible,
                ridge_size,
                facets: Vec::new(),
                sizes: BTreeSet::new(),
                ridges: 0,
            };
            match root {
                None => {
                    // only the empty set itself
                    if ridge_size == 0 {
                        walk.ridges += 1;
                    }
                    if everything.is_empty() {
                        walk.facets.push(Mask::default());
                        walk.sizes.insert(0);
                    }
                }
                Some(i) => {
                    let mut chosen = Mask::default();
                    chosen.set(i);
                    walk.go(chosen, 1, everything.and(compatible[i]), Some(i));
                }
            }
            (walk.facets, walk.sizes, walk.ridges)
        })
        .collect();

    let mut facets = Vec::new();
    let mut facet_sizes = BTreeSet::new();
    let mut ridges = 0;
    for (f, s, r) in walks {
        facets.extend(f);
        facet_sizes.extend(s);
        ridges += r;
    }

    let mut link: HashMap<Mask, usize> = HashMap::new();
    for &f in &facets {
        for i in f.ones() {
            *link.entry(f.without(i)).or_default() += 1;
        }
    }
    let mut link_counts: BTreeSet<usize> = link.values().copied().collect();
    if link.len() < ridges {
        // a ridge contained in no facet
        link_counts.insert(0);
    }

    Ok(FacetReport {
        facets: facets.len(),
        facet_sizes,
        ridges,
        link_counts,
        expected_size: p.rank(),
        expected_link: p.m() as usize + 1,
    })
}
