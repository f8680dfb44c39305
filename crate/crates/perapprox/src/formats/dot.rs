//! Graphviz output for de Bruijn graphs.

use std::collections::BTreeSet;

use perapprox_core::debruijn::{ClosedPath, DeBruijnGraph};
use perapprox_core::symbolic::Alphabet;

/// DOT text of `g`, vertices and edges in lexicographic order. Edges of
/// `highlight` are drawn in red.
pub fn write(g: &DeBruijnGraph, alphabet: &Alphabet, highlight: Option<&ClosedPath>) -> String {
    let render = |w: &[perapprox_core::symbolic::Letter]| alphabet.render(w);
    let marked: BTreeSet<usize> = highlight
        .map(|p| p.edges().iter().filter_map(|e| g.edge_index(e)).collect())
        .unwrap_or_default();
    let mut out = format!("digraph debruijn_{} {{\n", g.order());
    for v in g.vertices() {
        out += &format!("  \"{}\";\n", render(v.letters()));
    }
    for (i, e) in g.edges().iter().enumerate() {
        let (s, t) = g.endpoints(i);
        let style = if marked.contains(&i) { ", color=red, penwidth=2" } else { "" };
        out += &format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"{style}];\n",
            render(g.vertices()[s].letters()),
            render(g.vertices()[t].letters()),
            render(e.letters())
        );
    }
    out += "}\n";
    out
}
