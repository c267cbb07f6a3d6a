//! Dynkin / extended Dynkin recognition of underlying graphs, and the
//! standard seeds used by the command line.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::ClassError;
use crate::quiver::{ColouredQuiver, PlainQuiver};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    D,
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Dynkin(Family, usize),
    ExtendedDynkin(Family, usize),
    /// Two vertices joined by three or more edges.
    Small,
    Other,
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::Dynkin(fam, r) => write!(f, "{fam:?}{r}"),
            GraphClass::ExtendedDynkin(fam, r) => write!(f, "~{fam:?}{r}"),
            GraphClass::Small => write!(f, "small"),
            GraphClass::Other => write!(f, "other"),
        }
    }
}

/// Classifies the underlying undirected multigraph of a connected quiver.
pub fn classify_graph(q: &PlainQuiver) -> Result<GraphClass, ClassError> {
    if !q.is_connected() {
        return Err(ClassError::Disconnected);
    }
    let n = q.n();
    let edges = |i: usize, j: usize| -> u64 {
        (q.count(i, j) + q.count(j, i)).to_u64().unwrap_or(u64::MAX)
    };
    if n == 1 {
        return Ok(GraphClass::Dynkin(Family::A, 1));
    }
    if n == 2 {
        return Ok(match edges(0, 1) {
            1 => GraphClass::Dynkin(Family::A, 2),
            2 => GraphClass::ExtendedDynkin(Family::A, 1),
            _ => GraphClass::Small,
        });
    }
    let mut adjacency = vec![Vec::new(); n];
    let mut edge_count = 0;
    for i in 0..n {
        for j in i + 1..n {
            match edges(i, j) {
                0 => {}
                1 => {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                    edge_count += 1;
                }
                _ => return Ok(GraphClass::Other),
            }
        }
    }
    let degree = |v: usize| adjacency[v].len();
    if edge_count == n {
        return Ok(if (0..n).all(|v| degree(v) == 2) {
            GraphClass::ExtendedDynkin(Family::A, n - 1)
        } else {
            GraphClass::Other
        });
    }
    if edge_count != n - 1 {
        return Ok(GraphClass::Other);
    }

    // trees
    let branch: Vec<usize> = (0..n).filter(|&v| degree(v) >= 3).collect();
    let arm = |from: usize, first: usize| -> usize {
        let (mut prev, mut at, mut len) = (from, first, 1);
        while degree(at) == 2 {
            let next = adjacency[at].iter().copied().find(|&w| w != prev).expect("degree two");
            prev = at;
            at = next;
            len += 1;
        }
        if degree(at) == 1 {
            len
        } else {
            usize::MAX
        }
    };
    Ok(match branch.as_slice() {
        [] => GraphClass::Dynkin(Family::A, n),
        [c] if degree(*c) == 4 => {
            if n == 5 {
                GraphClass::ExtendedDynkin(Family::D, 4)
            } else {
                GraphClass::Other
            }
        }
        [c] if degree(*c) == 3 => {
            let mut arms: Vec<usize> = adjacency[*c].iter().map(|&w| arm(*c, w)).collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, r] => GraphClass::Dynkin(Family::D, r + 3),
                [1, 2, 2] => GraphClass::Dynkin(Family::E, 6),
                [1, 2, 3] => GraphClass::Dynkin(Family::E, 7),
                [1, 2, 4] => GraphClass::Dynkin(Family::E, 8),
                [2, 2, 2] => GraphClass::ExtendedDynkin(Family::E, 6),
                [1, 3, 3] => GraphClass::ExtendedDynkin(Family::E, 7),
                [1, 2, 5] => GraphClass::ExtendedDynkin(Family::E, 8),
                _ => GraphClass::Other,
            }
        }
        [a, b] if degree(*a) == 3 && degree(*b) == 3 => {
            let leaves = |v: usize| adjacency[v].iter().filter(|&&w| degree(w) == 1).count();
            if leaves(*a) == 2 && leaves(*b) == 2 {
                GraphClass::ExtendedDynkin(Family::D, n - 1)
            } else {
                GraphClass::Other
            }
        }
        _ => GraphClass::Other,
    })
}

/// Whether the coloured mutation class of the acyclic quiver `q` is finite:
/// exactly when its graph is Dynkin, extended Dynkin, or has at most two
/// vertices.
pub fn is_finite_class(q: &PlainQuiver, m: u32) -> Result<bool, ClassError> {
    if m < 1 {
        return Err(ClassError::Quiver(crate::quiver::QuiverError::InvalidM(m)));
    }
    if !q.is_acyclic() {
        return Err(ClassError::Quiver(crate::quiver::QuiverError::Cyclic));
    }
    Ok(!matches!(classify_graph(q)?, GraphClass::Other))
}

/// A Dynkin type name such as `A4`, `D5` or `E6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
}

impl FromStr for DynkinType {
    type Err = ClassError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ClassError::UnknownSeed(s.to_string());
        let s = s.trim();
        let family = match s.chars().next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(bad()),
        };
        let rank: usize = s[1..].trim_start_matches('_').parse().map_err(|_| bad())?;
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if ok && rank <= 64 {
            Ok(DynkinType { family, rank })
        } else {
            Err(bad())
        }
    }
}

impl DynkinType {
    /// Standard orientation, every arrow from the smaller to the larger
    /// label. `D_n`: path `1..n-1` plus `n-2 -> n`. `E_n`: path `1..n-1`
    /// plus `3 -> n`.
    pub fn quiver(&self) -> PlainQuiver {
        let n = self.rank;
        let mut q = PlainQuiver::new((1..=n).map(|i| i.to_string())).expect("rank >= 1");
        let one = || BigUint::from(1u32);
        let path_end = match self.family {
            Family::A => n,
            Family::D | Family::E => n - 1,
        };
        for i in 1..path_end {
            q.add_arrows(i - 1, i, one()).expect("path");
        }
        match self.family {
            Family::A => {}
            Family::D => q.add_arrows(n - 3, n - 1, one()).expect("fork"),
            Family::E => q.add_arrows(2, n - 1, one()).expect("fork"),
        }
        q
    }

    pub fn seed(&self, m: u32) -> Result<ColouredQuiver, ClassError> {
        Ok(ColouredQuiver::seed_from_acyclic(&self.quiver(), m)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize, u32)]) -> PlainQuiver {
        let mut q = PlainQuiver::new((1..=n).map(|i| i.to_string())).unwrap();
        for &(i, j, k) in edges {
            q.add_arrows(i, j, k).unwrap();
        }
        q
    }

    #[test]
    fn named_examples() {
        assert_eq!(classify_graph(&PlainQuiver::path(4)).unwrap(), GraphClass::Dynkin(Family::A, 4));
        let square = graph(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]);
        assert_eq!(classify_graph(&square).unwrap(), GraphClass::ExtendedDynkin(Family::A, 3));
        let star = graph(5, &[(0, 1, 1), (0, 2, 1), (0, 3, 1), (0, 4, 1)]);
        assert_eq!(classify_graph(&star).unwrap(), GraphClass::ExtendedDynkin(Family::D, 4));
    }

    #[test]
    fn d_and_e_families() {
        for (name, class) in [
            ("D4", GraphClass::Dynkin(Family::D, 4)),
            ("D7", GraphClass::Dynkin(Family::D, 7)),
            ("E6", GraphClass::Dynkin(Family::E, 6)),
            ("E7", GraphClass::Dynkin(Family::E, 7)),
            ("E8", GraphClass::Dynkin(Family::E, 8)),
            ("A1", GraphClass::Dynkin(Family::A, 1)),
        ] {
            let t: DynkinType = name.parse().unwrap();
            assert_eq!(t.quiver().n(), t.rank);
            assert_eq!(classify_graph(&t.quiver()).unwrap(), class, "{name}");
        }
    }

    #[test]
    fn extended_trees() {
        // ~E6: arms 2,2,2
        let e6 = graph(7, &[(0, 1, 1), (1, 2, 1), (0, 3, 1), (3, 4, 1), (0, 5, 1), (5, 6, 1)]);
        assert_eq!(classify_graph(&e6).unwrap(), GraphClass::ExtendedDynkin(Family::E, 6));
        // ~D5: two adjacent forks
        let d5 = graph(6, &[(0, 1, 1), (0, 2, 1), (0, 3, 1), (3, 4, 1), (3, 5, 1)]);
        assert_eq!(classify_graph(&d5).unwrap(), GraphClass::ExtendedDynkin(Family::D, 5));
        // ~E8: arms 1,2,5
        let e8 = graph(
            9,
            &[(0, 1, 1), (0, 2, 1), (2, 3, 1), (0, 4, 1), (4, 5, 1), (5, 6, 1), (6, 7, 1), (7, 8, 1)],
        );
        assert_eq!(classify_graph(&e8).unwrap(), GraphClass::ExtendedDynkin(Family::E, 8));
    }

    #[test]
    fn wild_and_small() {
        let wild = graph(3, &[(0, 1, 2), (1, 2, 2)]);
        assert_eq!(classify_graph(&wild).unwrap(), GraphClass::Other);
        assert!(!is_finite_class(&wild, 1).unwrap());
        let kronecker = graph(2, &[(0, 1, 2)]);
        assert_eq!(classify_graph(&kronecker).unwrap(), GraphClass::ExtendedDynkin(Family::A, 1));
        assert!(is_finite_class(&kronecker, 3).unwrap());
        let triple = graph(2, &[(0, 1, 3)]);
        assert_eq!(classify_graph(&triple).unwrap(), GraphClass::Small);
        assert!(is_finite_class(&triple, 2).unwrap());
        assert!(is_finite_class(&PlainQuiver::path(4), 2).unwrap());
        // tree with a degree-3 vertex and long arms: (2,2,3) is wild
        let t = graph(8, &[(0, 1, 1), (1, 2, 1), (0, 3, 1), (3, 4, 1), (0, 5, 1), (5, 6, 1), (6, 7, 1)]);
        assert_eq!(classify_graph(&t).unwrap(), GraphClass::Other);
    }

    #[test]
    fn errors() {
        let disconnected = graph(3, &[(0, 1, 1)]);
        assert_eq!(classify_graph(&disconnected), Err(ClassError::Disconnected));
        let cyclic = graph(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)]);
        assert!(is_finite_class(&cyclic, 1).is_err());
        assert!("B3".parse::<DynkinType>().is_err());
        assert!("E9".parse::<DynkinType>().is_err());
        assert!("D3".parse::<DynkinType>().is_err());
    }
}
