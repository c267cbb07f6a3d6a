use super::{MDiagonal, Polygon};

/// The stable translation quiver Γ on the `m`-diagonals: arrows
/// `(i,j) -> (i,j+m)` and `(i,j) -> (i+m,j)` whenever the target is an
/// `m`-diagonal, with translation `τ(i,j) = (i-m, j-m)`.
#[derive(Debug, Clone)]
pub struct TranslationQuiver {
    polygon: Polygon,
    vertices: Vec<MDiagonal>,
    arrows: Vec<(usize, usize)>,
    tau: Vec<usize>,
}

impl TranslationQuiver {
    pub fn new(p: Polygon) -> Self {
        let vertices = p.all_m_diagonals();
        let index = |d: MDiagonal| vertices.binary_search(&d).expect("m-diagonal");
        let m = p.m() as i64;
        let mut arrows = Vec::new();
        let mut tau = Vec::with_capacity(vertices.len());
        for (k, &d) in vertices.iter().enumerate() {
            let (i, j) = (d.lo as i64, d.hi as i64);
            for (a, b) in [(i, j + m), (i + m, j)] {
                let (a, b) = (p.wrap(a), p.wrap(b));
                if p.is_m_diagonal(a, b) {
                    arrows.push((k, index(MDiagonal::new(a, b))));
                }
            }
            tau.push(index(MDiagonal::new(p.wrap(i - m), p.wrap(j - m))));
        }
        arrows.sort();
        TranslationQuiver { polygon: p, vertices, arrows, tau }
    }

    pub fn polygon(&self) -> Polygon {
        self.polygon
    }

    pub fn vertices(&self) -> &[MDiagonal] {
        &self.vertices
    }

    /// Arrows as index pairs into [`TranslationQuiver::vertices`], sorted.
    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn index_of(&self, d: MDiagonal) -> Option<usize> {
        self.vertices.binary_search(&d).ok()
    }

    pub fn tau(&self, v: usize) -> usize {
        self.tau[v]
    }

    pub fn arrow_count(&self, x: usize, y: usize) -> usize {
        self.arrows.iter().filter(|&&a| a == (x, y)).count()
    }

    /// `#(x -> y) = #(τy -> x)` for all vertex pairs, and τ is a bijection.
    pub fn mesh_property_holds(&self) -> bool {
        let n = self.vertices.len();
        let mut image = self.tau.clone();
        image.sort_unstable();
        image.dedup();
        if image.len() != n {
            return false;
        }
        let mut counts = vec![0usize; n * n];
        for &(x, y) in &self.arrows {
            counts[x * n + y] += 1;
        }
        (0..n).all(|x| (0..n).all(|y| counts[x * n + y] == counts[self.tau[y] * n + x]))
    }

    /// τ-orbits, each listed starting from its smallest vertex and following
    /// τ⁻¹ (left to right in the usual picture).
    pub fn orbits(&self) -> Vec<Vec<MDiagonal>> {
        let n = self.vertices.len();
        let mut inverse = vec![0; n];
        for (v, &t) in self.tau.iter().enumerate() {
            inverse[t] = v;
        }
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                orbit.push(self.vertices[v]);
                v = inverse[v];
            }
            out.push(orbit);
        }
        out
    }

    /// Order of τ as a permutation.
    pub fn tau_order(&self) -> usize {
        let mut current: Vec<usize> = (0..self.vertices.len()).collect();
        for k in 1.. {
            current = current.iter().map(|&v| self.tau[v]).collect();
            if current.iter().enumerate().all(|(i, &v)| i == v) {
                return k;
            }
        }
        unreachable!()
    }
}
