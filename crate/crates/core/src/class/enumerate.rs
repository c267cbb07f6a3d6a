use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use super::canonical::{canonical_key_bounded, plain_key, CanonicalKey, DEFAULT_MAX_VERTICES};
use super::ClassError;
use crate::quiver::ColouredQuiver;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Budget of single-vertex mutations.
    pub limit: u64,
    pub max_vertices: usize,
    /// Try vertices last-to-first when expanding a quiver.
    pub reverse_vertex_order: bool,
    /// Expand each breadth-first level on the rayon pool.
    pub parallel: bool,
}

impl EnumerateOptions {
    pub fn new(limit: u64) -> Self {
        EnumerateOptions { limit, max_vertices: DEFAULT_MAX_VERTICES, reverse_vertex_order: false, parallel: true }
    }
}

/// Isomorphism classes reached from a seed by coloured mutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutationClass {
    pub(crate) seed: ColouredQuiver,
    pub(crate) keys: BTreeSet<CanonicalKey>,
    pub(crate) complete: bool,
    pub(crate) explored: u64,
    pub(crate) limit: u64,
}

impl MutationClass {
    pub fn seed(&self) -> &ColouredQuiver {
        &self.seed
    }

    pub fn m(&self) -> u32 {
        self.seed.m()
    }

    pub fn keys(&self) -> &BTreeSet<CanonicalKey> {
        &self.keys
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// True when the key set is closed under mutation at every vertex.
    pub fn complete(&self) -> bool {
        self.complete
    }

    /// Mutations performed.
    pub fn explored(&self) -> u64 {
        self.explored
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// One representative quiver per class member.
    pub fn representatives(&self) -> Result<Vec<ColouredQuiver>, ClassError> {
        self.keys.iter().map(CanonicalKey::decode).collect()
    }

    /// `size=<k> complete=<bool>`
    pub fn summary(&self) -> String {
        format!("size={} complete={}", self.len(), self.complete)
    }
}

pub fn enumerate_class(seed: &ColouredQuiver, limit: u64) -> Result<MutationClass, ClassError> {
    enumerate_class_with(seed, &EnumerateOptions::new(limit))
}

/// Level-synchronous breadth-first search over single-vertex mutations,
/// deduplicating by canonical key. Each level's mutations are computed
/// (possibly in parallel) and then merged in a fixed order, so the result
/// does not depend on scheduling. The budget is counted in mutations.
pub fn enumerate_class_with(seed: &ColouredQuiver, opts: &EnumerateOptions) -> Result<MutationClass, ClassError> {
    if opts.limit == 0 {
        return Err(ClassError::ZeroLimit);
    }
    seed.ensure_valid()?;
    let n = seed.n();
    let vertices: Vec<usize> = if opts.reverse_vertex_order { (0..n).rev().collect() } else { (0..n).collect() };

    let seed_key = canonical_key_bounded(seed, opts.max_vertices)?;
    let mut seen: HashSet<CanonicalKey> = HashSet::from([seed_key]);
    let mut frontier = vec![seed.clone()];
    let mut explored = 0u64;
    let mut complete = true;

    while !frontier.is_empty() {
        let mut tasks: Vec<(usize, usize)> =
            frontier.iter().enumerate().flat_map(|(k, _)| vertices.iter().map(move |&v| (k, v))).collect();
        let budget = (opts.limit - explored) as usize;
        if tasks.len() > budget {
            tasks.truncate(budget);
            complete = false;
        }
        let expand = |&(k, v): &(usize, usize)| -> Result<(CanonicalKey, ColouredQuiver), ClassError> {
            let q: &ColouredQuiver = &frontier[k];
            let mutated = q.mutate_procedural(v)?;
            Ok((canonical_key_bounded(&mutated, opts.max_vertices)?, mutated))
        };
        let results: Vec<_> = if opts.parallel {
            tasks.par_iter().map(expand).collect::<Result<_, _>>()?
        } else {
            tasks.iter().map(expand).collect::<Result<_, _>>()?
        };
        explored += tasks.len() as u64;

        let mut next = Vec::new();
        for (key, q) in results {
            if seen.insert(key) {
                next.push(q);
            }
        }
        frontier = next;
        if !complete {
            break;
        }
    }

    Ok(MutationClass {
        seed: seed.clone(),
        keys: seen.into_iter().collect(),
        complete,
        explored,
        limit: opts.limit,
    })
}

/// Canonical keys of the colour-0 (Gabriel) quivers over a complete class.
pub fn gabriel_images(class: &MutationClass) -> Result<BTreeSet<CanonicalKey>, ClassError> {
    if !class.complete {
        return Err(ClassError::Incomplete);
    }
    class.keys.iter().map(|k| plain_key(&k.decode()?.gabriel_quiver())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::DynkinType;
    use crate::quiver::PlainQuiver;

    fn seed(name: &str, m: u32) -> ColouredQuiver {
        name.parse::<DynkinType>().unwrap().seed(m).unwrap()
    }

    #[test]
    fn a2_with_m1_is_a_single_class() {
        let c = enumerate_class(&seed("A2", 1), 100).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c.complete());
        assert_eq!(c.explored(), 2);
        assert_eq!(c.summary(), "size=1 complete=true");
    }

    #[test]
    fn a2_with_m3_has_two_classes() {
        // (0)/(3) and (1)/(2) up to swapping the vertices
        let c = enumerate_class(&seed("A2", 3), 100).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.complete());
    }

    #[test]
    fn wild_seed_does_not_close() {
        let mut q = PlainQuiver::new(["1", "2", "3"]).unwrap();
        q.add_arrows(0, 1, 2u32).unwrap();
        q.add_arrows(1, 2, 2u32).unwrap();
        let s = ColouredQuiver::seed_from_acyclic(&q, 1).unwrap();
        let c = enumerate_class(&s, 50).unwrap();
        assert!(!c.complete());
        assert_eq!(c.explored(), 50);
    }

    #[test]
    fn traversal_order_and_parallelism_do_not_change_the_set() {
        let s = seed("A4", 2);
        let base = enumerate_class(&s, 100_000).unwrap();
        let mut opts = EnumerateOptions::new(100_000);
        opts.reverse_vertex_order = true;
        opts.parallel = false;
        let other = enumerate_class_with(&s, &opts).unwrap();
        assert_eq!(base.keys(), other.keys());
        assert!(base.complete() && other.complete());
    }

    #[test]
    fn gabriel_images_of_small_classes() {
        let a2 = PlainQuiver::path(2);
        let arrowless = PlainQuiver::new(["1", "2"]).unwrap();
        let c3 = enumerate_class(&seed("A2", 3), 100).unwrap();
        let images = gabriel_images(&c3).unwrap();
        assert_eq!(images, BTreeSet::from([plain_key(&a2).unwrap(), plain_key(&arrowless).unwrap()]));

        let c1 = enumerate_class(&seed("A2", 1), 100).unwrap();
        assert_eq!(gabriel_images(&c1).unwrap(), BTreeSet::from([plain_key(&a2).unwrap()]));

        let point = ColouredQuiver::new(2, ["v"]).unwrap();
        let c0 = enumerate_class(&point, 10).unwrap();
        let single = PlainQuiver::new(["v"]).unwrap();
        assert_eq!(gabriel_images(&c0).unwrap(), BTreeSet::from([plain_key(&single).unwrap()]));
    }

    #[test]
    fn incomplete_classes_have_no_gabriel_images() {
        let c = enumerate_class(&seed("A4", 2), 3).unwrap();
        assert!(!c.complete());
        assert_eq!(gabriel_images(&c), Err(ClassError::Incomplete));
    }

    #[test]
    fn zero_limit_and_invalid_seed() {
        assert_eq!(enumerate_class(&seed("A2", 1), 0), Err(ClassError::ZeroLimit));
        let mut bad = ColouredQuiver::new(1, ["a", "b"]).unwrap();
        bad.add_arrows(0, 1, 0, 1u32).unwrap();
        assert!(matches!(enumerate_class(&bad, 10), Err(ClassError::Quiver(_))));
    }
}
