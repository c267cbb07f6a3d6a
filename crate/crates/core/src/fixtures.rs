//! Worked examples used as gold data by tests, benches and the CLI.
//!
//! The type `A_4` example with `m = 2`: tilting objects
//! `T = I1 + I4 + Y[1] + X`, `T' = ... + P2[1]` and `T'' = ... + I3[1]`, and
//! the corresponding angulations of the 12-gon.

use crate::polygon::{Angulation, MDiagonal, Polygon};
use crate::quiver::ColouredQuiver;

/// Vertex labels of the type `A_4` example, in display order.
pub const A4_LABELS: [&str; 4] = ["X", "I4", "I1", "Y[1]"];

fn build(m: u32, labels: &[&str], arrows: &[(&str, &str, u32)]) -> ColouredQuiver {
    let mut q = ColouredQuiver::new(m, labels.iter().copied()).expect("fixture labels");
    for &(from, to, colour) in arrows {
        q.add_labelled(from, to, colour, 1u32).expect("fixture arrow");
    }
    q
}

/// `Q_T` for `T = I1 + I4 + Y[1] + X`.
pub fn a4_qt() -> ColouredQuiver {
    build(
        2,
        &A4_LABELS,
        &[
            ("X", "I4", 0),
            ("I4", "X", 2),
            ("X", "I1", 0),
            ("I1", "X", 2),
            ("X", "Y[1]", 1),
            ("Y[1]", "X", 1),
            ("I1", "Y[1]", 0),
            ("Y[1]", "I1", 2),
        ],
    )
}

/// `Q_T'`, drawn with the exchanged vertex still labelled `X`.
pub fn a4_qt_prime() -> ColouredQuiver {
    build(
        2,
        &A4_LABELS,
        &[
            ("X", "I4", 2),
            ("I4", "X", 0),
            ("X", "I1", 2),
            ("I1", "X", 0),
            ("X", "Y[1]", 0),
            ("Y[1]", "X", 2),
            ("I4", "Y[1]", 1),
            ("Y[1]", "I4", 1),
        ],
    )
}

/// `Q_T''`, exchanged vertex labelled `X`.
pub fn a4_qt_double_prime() -> ColouredQuiver {
    build(
        2,
        &A4_LABELS,
        &[
            ("X", "I4", 1),
            ("I4", "X", 1),
            ("X", "I1", 1),
            ("I1", "X", 1),
            ("X", "Y[1]", 2),
            ("Y[1]", "X", 0),
            ("I1", "Y[1]", 0),
            ("Y[1]", "I1", 2),
        ],
    )
}

/// Two vertices `a`, `b` with `a -(ab)-> b` and `b -(ba)-> a`.
pub fn two_vertex(m: u32, ab: u32, ba: u32) -> ColouredQuiver {
    build(m, &["a", "b"], &[("a", "b", ab), ("b", "a", ba)])
}

/// The 12-gon with `m = 2`, modelling the 2-cluster category of type `A_4`.
pub fn a4_polygon() -> Polygon {
    Polygon::new(2, 5).expect("valid polygon")
}

/// Diagonal of each summand of `T` under the translation-quiver labelling:
/// `X = (3,8)`, `I4 = (5,8)`, `I1 = (3,12)`, `Y[1] = (9,12)`.
pub const A4_DIAGONALS: [(u32, u32); 4] = [(3, 8), (5, 8), (3, 12), (9, 12)];

/// The 4-angulation of the 12-gon corresponding to `T`.
pub fn a4_angulation() -> Angulation {
    let p = a4_polygon();
    Angulation::new(p, A4_DIAGONALS.iter().map(|&(i, j)| MDiagonal::new(i, j)))
        .expect("valid angulation")
}

/// `Q_T` with vertices renamed to their diagonals.
pub fn a4_qt_on_diagonals() -> ColouredQuiver {
    let mut q = a4_qt();
    for (v, &(i, j)) in A4_DIAGONALS.iter().enumerate() {
        q.relabel(v, MDiagonal::new(i, j).to_string()).expect("distinct labels");
    }
    q
}
