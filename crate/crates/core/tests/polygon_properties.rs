mod common;

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tilt_core::fixtures;
use tilt_core::io::json;
use tilt_core::polygon::{
    angulations, coloured_quiver_of_angulation, count_angulations, facet_checks, fan_angulation, fan_quiver,
    flip_path, fuss_catalan, quiver_of_angulation,
};
use tilt_core::{Angulation, MDiagonal, Polygon, TranslationQuiver};

fn d(i: u32, j: u32) -> MDiagonal {
    MDiagonal::new(i, j)
}

fn pairs(a: &Angulation) -> Vec<(u32, u32)> {
    a.diagonals().iter().map(|d| d.endpoints()).collect()
}

#[test]
fn diagonals_match_the_definition() {
    for (m, n) in polygons_up_to(16) {
        let p = Polygon::new(m, n).unwrap();
        let lib: Vec<(u32, u32)> = p.all_m_diagonals().iter().map(|d| d.endpoints()).collect();
        assert_eq!(lib, oracle_diagonals(m, n), "m={m} n={n}");
        assert_eq!(lib.len() as u32, p.vertices() * (n - 1) / 2);
    }
    assert_eq!(Polygon::new(2, 5).unwrap().all_m_diagonals().len(), 24);
    assert_eq!(Polygon::new(3, 3).unwrap().all_m_diagonals().len(), 11);
}

#[test]
fn counts_match_the_recurrence() {
    for (m, n) in polygons_up_to(16) {
        let p = Polygon::new(m, n).unwrap();
        let expected = oracle_fuss_catalan(n, m);
        assert_eq!(fuss_catalan(n, m), expected, "m={m} n={n}");
        assert_eq!(count_angulations(p).unwrap(), u64::try_from(&expected).unwrap(), "m={m} n={n}");
    }
}

#[test]
fn generated_angulations_match_backtracking() {
    for (m, n) in polygons_up_to(12) {
        let p = Polygon::new(m, n).unwrap();
        let lib: BTreeSet<Vec<(u32, u32)>> = angulations(p).unwrap().iter().map(pairs).collect();
        let ora: BTreeSet<Vec<(u32, u32)>> = oracle_angulations(m, n).into_iter().collect();
        assert_eq!(lib, ora, "m={m} n={n}");
    }
}

#[test]
fn completions_and_exchange_cycles_exhaustively() {
    for (m, n) in polygons_up_to(14) {
        let p = Polygon::new(m, n).unwrap();
        let all = oracle_diagonals(m, n);
        let mut seen = HashSet::new();
        for a in angulations(p).unwrap() {
            for &x in a.diagonals() {
                let rest: Vec<MDiagonal> = a.diagonals().iter().copied().filter(|&e| e != x).collect();
                if seen.insert(rest.clone()) {
                    let got: BTreeSet<(u32, u32)> =
                        p.completions(&rest).unwrap().iter().map(|d| d.endpoints()).collect();
                    let want: BTreeSet<(u32, u32)> = all
                        .iter()
                        .copied()
                        .filter(|&c| rest.iter().all(|r| r.endpoints() != c && !oracle_crosses(r.endpoints(), c)))
                        .collect();
                    assert_eq!(got, want);
                    assert_eq!(got.len() as u32, m + 1);
                }
                assert_eq!(a.flips(x).unwrap().len() as u32, m);
                // the exchange cycle visits every complement once
                let mut b = a.clone();
                let mut e = x;
                let mut visited = BTreeSet::new();
                for _ in 0..=m {
                    visited.insert(e);
                    let next = b.next_complement(e).unwrap();
                    b = b.replace(e, next).unwrap();
                    e = next;
                }
                assert_eq!((b, e), (a.clone(), x));
                assert_eq!(visited.len() as u32, m + 1);
            }
        }
    }
}

#[test]
fn flip_graph_is_connected() {
    for (m, n) in polygons_up_to(14) {
        let p = Polygon::new(m, n).unwrap();
        let total = count_angulations(p).unwrap() as usize;
        let start = fan_angulation(p);
        let mut seen = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(a) = queue.pop_front() {
            for &x in a.diagonals() {
                for y in a.flips(x).unwrap() {
                    let b = a.replace(x, y).unwrap();
                    if seen.insert(b.clone()) {
                        queue.push_back(b);
                    }
                }
            }
        }
        assert_eq!(seen.len(), total, "m={m} n={n}");
    }
}

#[test]
fn cells_match_recursive_cutting() {
    for (m, n) in polygons_up_to(12) {
        let p = Polygon::new(m, n).unwrap();
        for a in angulations(p).unwrap() {
            let mut ora: Vec<Vec<u32>> = oracle_cells(p.vertices(), &pairs(&a))
                .into_iter()
                .map(|mut c| {
                    let k = c.iter().position(|&v| v == *c.iter().min().unwrap()).unwrap();
                    c.rotate_left(k);
                    c
                })
                .collect();
            ora.sort();
            let mut lib = a.cells();
            for c in lib.iter_mut() {
                let k = c.iter().position(|&v| v == *c.iter().min().unwrap()).unwrap();
                c.rotate_left(k);
            }
            lib.sort();
            assert_eq!(lib, ora);
            assert!(lib.iter().all(|c| c.len() as u32 == m + 2));
        }
    }
}

/// The grid of the 2-cluster category of type `A_4`: entry `(row, col)`
/// has arrows to `(row ± 1, col + 1)`, columns taken mod 12.
fn gold_grid() -> HashMap<(u32, u32), MDiagonal> {
    let rows: [(u32, [(u32, u32); 6]); 4] = [
        (1, [(3, 6), (5, 8), (7, 10), (9, 12), (11, 2), (1, 4)]),
        (2, [(1, 6), (3, 8), (5, 10), (7, 12), (9, 2), (11, 4)]),
        (3, [(1, 8), (3, 10), (5, 12), (7, 2), (9, 4), (11, 6)]),
        (4, [(11, 8), (1, 10), (3, 12), (5, 2), (7, 4), (9, 6)]),
    ];
    let mut grid = HashMap::new();
    for (row, entries) in rows {
        let first_col = if row % 2 == 1 { 1 } else { 0 };
        for (k, (i, j)) in entries.into_iter().enumerate() {
            grid.insert((row, first_col + 2 * k as u32), d(i, j));
        }
    }
    grid
}

#[test]
fn translation_quiver_is_the_gold_grid() {
    let g = TranslationQuiver::new(fixtures::a4_polygon());
    let grid = gold_grid();
    assert_eq!(g.vertices().len(), 24);
    let lib_vertices: BTreeSet<MDiagonal> = g.vertices().iter().copied().collect();
    assert_eq!(lib_vertices, grid.values().copied().collect());

    let mut gold_arrows = BTreeSet::new();
    for (&(r, c), &x) in &grid {
        for r2 in [r.wrapping_sub(1), r + 1] {
            if let Some(&y) = grid.get(&(r2, (c + 1) % 12)) {
                gold_arrows.insert((x, y));
            }
        }
    }
    assert_eq!(gold_arrows.len(), 36);
    let lib_arrows: BTreeSet<(MDiagonal, MDiagonal)> =
        g.arrows().iter().map(|&(x, y)| (g.vertices()[x], g.vertices()[y])).collect();
    assert_eq!(lib_arrows, gold_arrows);

    // τ moves two columns to the left
    for (&(r, c), &x) in &grid {
        let tx = g.vertices()[g.tau(g.index_of(x).unwrap())];
        assert_eq!(grid[&(r, (c + 10) % 12)], tx);
    }
    let orbits = g.orbits();
    assert_eq!(orbits.len(), 4);
    assert!(orbits.iter().all(|o| o.len() == 6));
    assert!(g.mesh_property_holds());
}

#[test]
fn mesh_property_on_all_small_polygons() {
    for (m, n) in polygons_up_to(16) {
        let g = TranslationQuiver::new(Polygon::new(m, n).unwrap());
        assert!(g.mesh_property_holds(), "m={m} n={n}");
    }
}

#[test]
fn fan_quiver_follows_the_local_rule() {
    for (m, n) in polygons_up_to(16) {
        let p = Polygon::new(m, n).unwrap();
        assert_eq!(fan_quiver(p), oracle_angulation_quiver(&fan_angulation(p)), "m={m} n={n}");
    }
    assert_eq!(oracle_angulation_quiver(&fixtures::a4_angulation()), fixtures::a4_qt_on_diagonals());
}

#[test]
fn every_angulation_quiver_follows_the_local_rule() {
    let mut cases = polygons_up_to(10);
    cases.push((2, 5));
    for (m, n) in cases {
        let p = Polygon::new(m, n).unwrap();
        for a in angulations(p).unwrap() {
            assert_eq!(quiver_of_angulation(&a).unwrap(), oracle_angulation_quiver(&a), "{a}");
        }
    }
}

#[test]
fn random_flip_walks_stay_in_lockstep() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let base = fixtures::a4_angulation();
    let base_q = fixtures::a4_qt_on_diagonals();
    for _ in 0..300 {
        let mut a = base.clone();
        let mut q = base_q.clone();
        let mut path = Vec::new();
        for _ in 0..rng.random_range(0..=10) {
            let x = *pick(&mut rng, a.diagonals());
            let y = a.next_complement(x).unwrap();
            let v = q.index_of(&x.to_string()).unwrap();
            q = q.mutate_procedural(v).unwrap();
            q.relabel(v, y.to_string()).unwrap();
            a = a.replace(x, y).unwrap();
            path.push(x);
            assert_eq!(q, oracle_angulation_quiver(&a));
        }
        assert_eq!(coloured_quiver_of_angulation(&a, &base, &base_q, &path).unwrap(), q);
    }
}

#[test]
fn quivers_do_not_depend_on_the_flip_path() {
    // every pair of angulations of the octagon, joined through an arbitrary
    // intermediate angulation
    let p = Polygon::new(2, 3).unwrap();
    let all = angulations(p).unwrap();
    let fan = fan_angulation(p);
    let fq = fan_quiver(p);
    for target in &all {
        let direct = coloured_quiver_of_angulation(target, &fan, &fq, &flip_path(&fan, target).unwrap()).unwrap();
        for via in &all {
            let mut path = flip_path(&fan, via).unwrap();
            path.extend(flip_path(via, target).unwrap());
            assert_eq!(coloured_quiver_of_angulation(target, &fan, &fq, &path).unwrap(), direct);
        }
    }
}

#[test]
fn facets_match_enumeration() {
    for (m, n) in polygons_up_to(12) {
        let p = Polygon::new(m, n).unwrap();
        let report = facet_checks(p).unwrap();
        assert!(report.holds(), "m={m} n={n}: {report:?}");
        assert_eq!(report.facets as u64, count_angulations(p).unwrap());
        let mut links: HashMap<Vec<(u32, u32)>, usize> = HashMap::new();
        for a in oracle_angulations(m, n) {
            for k in 0..a.len() {
                let mut r = a.clone();
                r.remove(k);
                *links.entry(r).or_default() += 1;
            }
        }
        assert_eq!(report.ridges, links.len());
        assert!(links.values().all(|&c| c as u32 == m + 1));
    }
}

#[test]
fn angulation_json_round_trips() {
    for a in angulations(Polygon::new(2, 4).unwrap()).unwrap() {
        let text = json::angulation_to_json(&a);
        assert_eq!(json::angulation_from_json(&text).unwrap(), a);
    }
}
