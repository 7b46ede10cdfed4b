//! Graphviz export.

use std::fmt::Write;

use crate::graph::RoughGraph;
use crate::io::json::format_weight;
use crate::labeling::EdgeLabeling;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT in canonical vertex and edge order. Vertices are labeled
/// `id (weight)`; edges carry their induced label when `labels` is given.
pub fn to_dot(g: &RoughGraph, labels: Option<&EdgeLabeling>) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let label = format!("{} ({})", v.id, format_weight(v.weight));
        writeln!(out, "  {} [label={}];", quote(&v.id), quote(&label)).unwrap();
    }
    for &e in g.edges() {
        let (a, b) = g.edge_ids(e);
        write!(out, "  {} -- {}", quote(a), quote(b)).unwrap();
        if let Some(l) = labels.and_then(|l| l.label(e)) {
            write!(out, " [label=\"{l}\"]").unwrap();
        }
        out.push_str(";\n");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::{induce, VertexLabeling};

    #[test]
    fn plain_and_labeled() {
        let g = RoughGraph::unit(&["a", "b\"x"], &[("a", "b\"x")]).unwrap();
        assert_eq!(
            to_dot(&g, None),
            "graph G {\n  \"a\" [label=\"a (1/1)\"];\n  \"b\\\"x\" [label=\"b\\\"x (1/1)\"];\n  \"a\" -- \"b\\\"x\";\n}\n"
        );
        let f = VertexLabeling::for_graph(&g, &[2, 4]).unwrap();
        let el = induce(&g, &f).unwrap();
        assert!(to_dot(&g, Some(&el)).contains("-- \"b\\\"x\" [label=\"4\"];"));
    }
}
