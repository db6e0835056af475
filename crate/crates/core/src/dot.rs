//! Graphviz output.

use std::fmt::Write;

use crate::graph::Graph;
use crate::labeling::{Labeling, VerificationReport};

const PALETTE: [&str; 12] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
    "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f",
];

/// Renders an undirected graph. With a labeling and report, each node shows
/// `id`, label and weight, and nodes are filled by weight class (classes
/// numbered in increasing weight order, palette reused cyclically).
pub fn to_dot(g: &Graph, annotation: Option<(&Labeling, &VerificationReport)>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle fontname=Arial];\n");
    for v in g.vertices() {
        match annotation {
            None => writeln!(out, "  {v};").unwrap(),
            Some((f, report)) => {
                let w = report.weights[v];
                let class = report.weight_classes.range(..w).count();
                writeln!(
                    out,
                    "  {v} [label=\"{v}\\nf={}\\nw={w}\" style=filled fillcolor=\"{}\"];",
                    f.get(v),
                    PALETTE[class % PALETTE.len()]
                )
                .unwrap();
            }
        }
    }
    for &(u, v) in g.edges() {
        let bad = annotation.is_some_and(|(_, r)| r.weights[u] == r.weights[v]);
        if bad {
            writeln!(out, "  {u} -- {v} [color=red penwidth=2];").unwrap();
        } else {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
