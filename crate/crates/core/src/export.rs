//! DOT and CSV renderings.

use std::fmt::Write;

use crate::coloring::HamColoring;
use crate::graph::BlockGraph;

/// Graphviz rendering. With a coloring, each vertex is labelled with its
/// color and filled along a hue gradient scaled by `color / span`. With
/// `clusters`, every block is drawn as its own subgraph cluster.
pub fn to_dot(g: &BlockGraph, coloring: Option<&HamColoring>, clusters: bool) -> String {
    let mut out = String::from("graph G {\n");
    if let Some(c) = coloring {
        out.push_str("  node [style=filled];\n");
        let span = c.span().max(1) as f64;
        for (v, &color) in c.colors.iter().enumerate() {
            let hue = 0.7 * color as f64 / span;
            writeln!(out, "  {v} [label=\"{v}:{color}\", fillcolor=\"{hue:.3} 0.45 1.000\"];").unwrap();
        }
    } else {
        for v in 0..g.order() {
            writeln!(out, "  {v};").unwrap();
        }
    }
    for (id, block) in g.blocks().iter().enumerate() {
        let indent = if clusters {
            writeln!(out, "  subgraph cluster_{id} {{\n    label=\"B{id}\";").unwrap();
            "    "
        } else {
            "  "
        };
        for (i, &u) in block.iter().enumerate() {
            for &v in &block[i + 1..] {
                writeln!(out, "{indent}{u} -- {v};").unwrap();
            }
        }
        if clusters {
            out.push_str("  }\n");
        }
    }
    out.push_str("}\n");
    out
}

/// Edge list as CSV: `u,v,block`.
pub fn to_edge_csv(g: &BlockGraph) -> String {
    let mut out = String::from("u,v,block\n");
    for (id, block) in g.blocks().iter().enumerate() {
        for (i, &u) in block.iter().enumerate() {
            for &v in &block[i + 1..] {
                writeln!(out, "{u},{v},{id}").unwrap();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::gen_union;

    #[test]
    fn dot_output() {
        let g = gen_union(3, 2).unwrap();
        let plain = to_dot(&g, None, false);
        assert!(plain.starts_with("graph G {"));
        assert_eq!(plain.matches(" -- ").count(), 6);
        let c = HamColoring::new(vec![0, 2, 4, 2, 4]);
        let colored = to_dot(&g, Some(&c), true);
        assert!(colored.contains("subgraph cluster_1"));
        assert!(colored.contains("4 [label=\"4:4\", fillcolor=\"0.700 0.45 1.000\"]"));
    }

    #[test]
    fn edge_csv() {
        let g = gen_union(3, 2).unwrap();
        let csv = to_edge_csv(&g);
        assert_eq!(csv.lines().count(), 7);
        assert!(csv.contains("\n0,1,0\n"));
    }
}
