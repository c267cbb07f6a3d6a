//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls the library's canonicalizer, crossing test, cell
//! computation or angulation generator; the oracles are deliberately
//! written from the definitions.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rand::seq::IndexedRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tilt_core::{Angulation, ColouredQuiver, MDiagonal, PlainQuiver};

// ---------------------------------------------------------------------------
// quivers

/// Canonical form by brute force over all `n!` vertex orders: the smallest
/// sorted list of `(i, j, colour, decimal multiplicity)`.
pub type OracleKey = (usize, u32, Vec<(usize, usize, u32, String)>);

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, xs: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(xs.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, xs, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            xs.swap(j, k - 1);
        }
    }
    let mut out = Vec::new();
    heap(n, &mut (0..n).collect(), &mut out);
    out
}

pub fn oracle_key(q: &ColouredQuiver) -> OracleKey {
    let n = q.n();
    let arrows: Vec<(usize, usize, u32, String)> =
        q.arrows().map(|a| (a.from, a.to, a.colour, a.mult.to_string())).collect();
    let best = permutations(n)
        .into_iter()
        .map(|perm| {
            // perm[old] = new
            let mut list: Vec<_> = arrows.iter().map(|(i, j, c, k)| (perm[*i], perm[*j], *c, k.clone())).collect();
            list.sort();
            list
        })
        .min()
        .unwrap_or_default();
    (n, q.m(), best)
}

/// Breadth-first closure under `mutate_formula`, deduplicated with
/// [`oracle_key`]. `None` when more than `max` classes are found.
pub fn oracle_class(seed: &ColouredQuiver, max: usize) -> Option<Vec<ColouredQuiver>> {
    let mut seen = HashSet::from([oracle_key(seed)]);
    let mut reps = vec![seed.clone()];
    let mut queue = VecDeque::from([seed.clone()]);
    while let Some(q) = queue.pop_front() {
        for v in 0..q.n() {
            let next = q.mutate_formula(v).expect("valid");
            if seen.insert(oracle_key(&next)) {
                if seen.len() > max {
                    return None;
                }
                reps.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Some(reps)
}

/// Number of isomorphism classes reachable from `seed` by mutation of
/// exchange matrices.
pub fn oracle_fz_class_size(seed: &PlainQuiver, max: usize) -> Option<usize> {
    let key = |b: &Vec<Vec<i128>>| -> Vec<Vec<i128>> {
        let n = b.len();
        permutations(n)
            .into_iter()
            .map(|p| {
                let mut out = vec![vec![0; n]; n];
                for i in 0..n {
                    for j in 0..n {
                        out[p[i]][p[j]] = b[i][j];
                    }
                }
                out
            })
            .min()
            .unwrap()
    };
    let start = exchange_matrix(seed);
    let mut seen = HashSet::from([key(&start)]);
    let mut queue = VecDeque::from([start]);
    while let Some(b) = queue.pop_front() {
        for k in 0..b.len() {
            let next = matrix_mutate(&b, k);
            if seen.insert(key(&next)) {
                if seen.len() > max {
                    return None;
                }
                queue.push_back(next);
            }
        }
    }
    Some(seen.len())
}

/// `b_ij = q_ij - q_ji`.
pub fn exchange_matrix(q: &PlainQuiver) -> Vec<Vec<i128>> {
    let n = q.n();
    let c = |i: usize, j: usize| q.count(i, j).to_i128().expect("small multiplicity");
    (0..n).map(|i| (0..n).map(|j| c(i, j) - c(j, i)).collect()).collect()
}

/// Matrix mutation of a skew-symmetric exchange matrix.
pub fn matrix_mutate(b: &[Vec<i128>], k: usize) -> Vec<Vec<i128>> {
    let n = b.len();
    let mut out = b.to_vec();
    for i in 0..n {
        for j in 0..n {
            out[i][j] = if i == k || j == k {
                -b[i][j]
            } else {
                b[i][j] + (b[i][k].abs() * b[k][j] + b[i][k] * b[k][j].abs()) / 2
            };
        }
    }
    out
}

/// The coloured quiver with `m = 1` lifted from a 2-cycle free quiver:
/// colour 0 is `q`, colour 1 its opposite.
pub fn lift_m1(q: &PlainQuiver) -> ColouredQuiver {
    let mut c = ColouredQuiver::new(1, q.labels().iter().cloned()).unwrap();
    for (i, j, k) in q.arrows() {
        c.add_arrows(i, j, 0, k.clone()).unwrap();
        c.add_arrows(j, i, 1, k.clone()).unwrap();
    }
    c
}

pub fn colour_zero(q: &ColouredQuiver) -> PlainQuiver {
    let mut p = PlainQuiver::new(q.labels().iter().cloned()).unwrap();
    for a in q.arrows().filter(|a| a.colour == 0) {
        p.add_arrows(a.from, a.to, a.mult.clone()).unwrap();
    }
    p
}

/// Definition check: loopless, locally monochromatic, colour-symmetric.
pub fn oracle_valid(q: &ColouredQuiver) -> bool {
    let m = q.m();
    for i in 0..q.n() {
        for c in 0..=m {
            if !q.count(i, i, c).is_zero() {
                return false;
            }
        }
        for j in 0..q.n() {
            if i == j {
                continue;
            }
            let used = (0..=m).filter(|&c| !q.count(i, j, c).is_zero()).count();
            if used > 1 {
                return false;
            }
            if (0..=m).any(|c| q.count(i, j, c) != q.count(j, i, m - c)) {
                return false;
            }
        }
    }
    true
}

/// A random connected acyclic quiver on `n` vertices: a random spanning
/// tree plus a few extra forward edges, multiplicities 1 or 2.
pub fn random_acyclic(rng: &mut ChaCha8Rng, n: usize, max_mult: u32) -> PlainQuiver {
    let mut q = PlainQuiver::new((1..=n).map(|i| i.to_string())).unwrap();
    let order: Vec<usize> = {
        let mut o: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            o.swap(i, rng.random_range(0..=i));
        }
        o
    };
    let edge = |q: &mut PlainQuiver, a: usize, b: usize, rng: &mut ChaCha8Rng| {
        let (i, j) = if rng.random_bool(0.5) { (a, b) } else { (b, a) };
        // orient by position in `order` so the result stays acyclic
        let pos = |v: usize| order.iter().position(|&w| w == v).unwrap();
        let (from, to) = if pos(i) < pos(j) { (i, j) } else { (j, i) };
        if q.count(from, to).is_zero() {
            q.add_arrows(from, to, rng.random_range(1..=max_mult)).unwrap();
        }
    };
    for v in 1..n {
        let w = rng.random_range(0..v);
        edge(&mut q, v, w, rng);
    }
    if n >= 3 && rng.random_bool(0.3) {
        let a = rng.random_range(0..n);
        let b = (a + 1 + rng.random_range(0..n - 1)) % n;
        edge(&mut q, a, b, rng);
    }
    q
}

/// A random quiver reachable by coloured mutation from a random acyclic
/// seed, with `n <= max_n`, `m <= max_m`.
pub fn random_reachable(rng: &mut ChaCha8Rng, max_n: usize, max_m: u32, max_walk: usize) -> ColouredQuiver {
    let n = rng.random_range(1..=max_n);
    let m = rng.random_range(1..=max_m);
    let seed = random_acyclic(rng, n, 2);
    let mut q = ColouredQuiver::seed_from_acyclic(&seed, m).unwrap();
    for _ in 0..rng.random_range(0..=max_walk) {
        let v = rng.random_range(0..n);
        q = q.mutate_procedural(v).unwrap();
    }
    q
}

// ---------------------------------------------------------------------------
// polygons

/// Crossing by interleaving of endpoints on the circle.
pub fn oracle_crosses(a: (u32, u32), b: (u32, u32)) -> bool {
    let (a1, a2) = (a.0.min(a.1), a.0.max(a.1));
    let inside = |x: u32| a1 < x && x < a2;
    let shared = [a1, a2].contains(&b.0) || [a1, a2].contains(&b.1);
    !shared && (inside(b.0) != inside(b.1))
}

/// `m`-diagonals from the definition: they cut the polygon into two parts
/// each of which can be `(m+2)`-angulated, i.e. each side has `km + 2`
/// vertices for some `k >= 1`.
pub fn oracle_diagonals(m: u32, n: u32) -> Vec<(u32, u32)> {
    let big_n = m * n + 2;
    let mut out = Vec::new();
    for i in 1..=big_n {
        for j in i + 1..=big_n {
            let side = j - i + 1;
            let other = big_n - (j - i) + 1;
            let ok = |s: u32| s >= m + 2 && (s - 2).is_multiple_of(m);
            if ok(side) && ok(other) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Number of `(m+2)`-angulations of a `(km+2)`-gon by the root-cell
/// recurrence `A(k) = sum over k_1 + ... + k_{m+1} = k - 1 of prod A(k_i)`.
pub fn oracle_fuss_catalan(k: u32, m: u32) -> BigUint {
    let k = k as usize;
    let mut a = vec![BigUint::from(1u32)];
    for size in 1..=k {
        // ways[j][s]: ordered tuples of j parts summing to s
        let mut ways = vec![BigUint::from(1u32)];
        for _ in 0..=m {
            let mut next = vec![BigUint::zero(); size];
            for (s, w) in ways.iter().enumerate() {
                for (t, at) in a.iter().enumerate() {
                    if s + t < size {
                        next[s + t] += w * at;
                    }
                }
            }
            ways = next;
        }
        a.push(ways[size - 1].clone());
    }
    a[k].clone()
}

/// Cells of a set of noncrossing diagonals, obtained by cutting the polygon
/// one diagonal at a time. Each cell is a clockwise vertex list.
pub fn oracle_cells(big_n: u32, diagonals: &[(u32, u32)]) -> Vec<Vec<u32>> {
    let mut cells = vec![(1..=big_n).collect::<Vec<u32>>()];
    for &(a, b) in diagonals {
        let k = cells
            .iter()
            .position(|c| {
                let (pa, pb) = (c.iter().position(|&v| v == a), c.iter().position(|&v| v == b));
                matches!((pa, pb), (Some(x), Some(y)) if x.abs_diff(y) > 1 && x.abs_diff(y) < c.len() - 1)
            })
            .expect("diagonal lies in one cell");
        let cell = cells.swap_remove(k);
        let pa = cell.iter().position(|&v| v == a).unwrap();
        let pb = cell.iter().position(|&v| v == b).unwrap();
        let (x, y) = (pa.min(pb), pa.max(pb));
        let left: Vec<u32> = cell[x..=y].to_vec();
        let right: Vec<u32> = cell[y..].iter().chain(cell[..=x].iter()).copied().collect();
        cells.push(left);
        cells.push(right);
    }
    cells
}

/// Coloured quiver of an angulation from the local rule: for diagonals `d`,
/// `e` on a common cell, an arrow `d -> e` whose colour is the number of
/// counterclockwise edge steps from `d` to `e` around the cell, minus one.
pub fn oracle_angulation_quiver(a: &Angulation) -> ColouredQuiver {
    let p = a.polygon();
    let ds: Vec<(u32, u32)> = a.diagonals().iter().map(|d| d.endpoints()).collect();
    let labels: Vec<String> = a.diagonals().iter().map(ToString::to_string).collect();
    let mut q = ColouredQuiver::new(p.m(), labels).unwrap();
    for cell in oracle_cells(p.vertices(), &ds) {
        let k = cell.len();
        let edges: Vec<MDiagonal> = (0..k).map(|t| MDiagonal::new(cell[t], cell[(t + 1) % k])).collect();
        for s in 0..k {
            for t in 0..k {
                if s == t {
                    continue;
                }
                let (Some(i), Some(j)) = (
                    a.diagonals().iter().position(|&d| d == edges[s]),
                    a.diagonals().iter().position(|&d| d == edges[t]),
                ) else {
                    continue;
                };
                let steps = (s + k - t) % k;
                q.add_arrows(i, j, steps as u32 - 1, 1u32).unwrap();
            }
        }
    }
    q
}

/// All angulations of a polygon by backtracking over pairwise noncrossing
/// sets of `n - 1` diagonals from [`oracle_diagonals`]. Small polygons only.
pub fn oracle_angulations(m: u32, n: u32) -> Vec<Vec<(u32, u32)>> {
    let ds = oracle_diagonals(m, n);
    let want = (n - 1) as usize;
    let mut out = Vec::new();
    fn go(ds: &[(u32, u32)], from: usize, chosen: &mut Vec<(u32, u32)>, want: usize, out: &mut Vec<Vec<(u32, u32)>>) {
        if chosen.len() == want {
            out.push(chosen.clone());
            return;
        }
        for i in from..ds.len() {
            if chosen.iter().all(|&c| !oracle_crosses(c, ds[i])) {
                chosen.push(ds[i]);
                go(ds, i + 1, chosen, want, out);
                chosen.pop();
            }
        }
    }
    go(&ds, 0, &mut Vec::new(), want, &mut out);
    out
}

pub fn pick<'a, T>(rng: &mut ChaCha8Rng, xs: &'a [T]) -> &'a T {
    xs.choose(rng).expect("nonempty")
}

/// `(m, n)` pairs with `2 <= n` and `N = mn + 2 <= max_vertices`.
pub fn polygons_up_to(max_vertices: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for m in 1..=max_vertices {
        for n in 2..=max_vertices {
            if m * n + 2 <= max_vertices {
                out.push((m, n));
            }
        }
    }
    out
}
