//! Graphviz output.

use std::fmt::Write;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::polygon::TranslationQuiver;
use crate::quiver::ColouredQuiver;

/// Above this multiplicity an arrow bundle is drawn as one labelled edge.
pub const MAX_DRAWN_PARALLEL: u64 = 16;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn drawn_copies(mult: &BigUint) -> Option<u64> {
    mult.to_u64().filter(|&k| k <= MAX_DRAWN_PARALLEL)
}

/// One edge per arrow, labelled with its colour.
pub fn quiver_to_dot(q: &ColouredQuiver) -> String {
    let mut out = String::from("digraph quiver {\n");
    for label in q.labels() {
        writeln!(out, "  {};", quote(label)).unwrap();
    }
    let mut arrows: Vec<_> = q.arrows().collect();
    arrows.sort_by_key(|a| (a.from, a.to, a.colour));
    for a in arrows {
        let (from, to) = (quote(q.label(a.from)), quote(q.label(a.to)));
        match drawn_copies(a.mult) {
            Some(k) => {
                for _ in 0..k {
                    writeln!(out, "  {from} -> {to} [label=\"({})\"];", a.colour).unwrap();
                }
            }
            None => {
                writeln!(out, "  {from} -> {to} [label=\"({}) x{}\"];", a.colour, a.mult).unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Arrows of the translation quiver as solid edges, the translation as
/// dotted edges `x -> tau x`.
pub fn gamma_to_dot(g: &TranslationQuiver) -> String {
    let mut out = String::from("digraph gamma {\n");
    for d in g.vertices() {
        writeln!(out, "  {};", quote(&d.to_string())).unwrap();
    }
    for &(x, y) in g.arrows() {
        writeln!(out, "  {} -> {};", quote(&g.vertices()[x].to_string()), quote(&g.vertices()[y].to_string()))
            .unwrap();
    }
    for (x, d) in g.vertices().iter().enumerate() {
        let t = g.vertices()[g.tau(x)];
        writeln!(out, "  {} -> {} [style=dotted];", quote(&d.to_string()), quote(&t.to_string())).unwrap();
    }
    out.push_str("}\n");
    out
}
