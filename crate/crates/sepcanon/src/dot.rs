//! DOT export: the dual graph with separator annotations, and the
//! separation tree. Sep edges are bold, polyseparator edges are colored by
//! class; output is deterministic.

use std::collections::BTreeMap;

use crate::separators::{Analysis, SeparationTree, StarSepKind};

const PALETTE: [&str; 8] = [
    "red", "blue", "green", "orange", "purple", "brown", "cyan", "magenta",
];

/// Dual graph with vertices labeled `id:g<genus>`, sep edges bold, and
/// polyseparator edges colored per maximal class.
pub fn curve_dot(analysis: &Analysis) -> String {
    let mut color_of: BTreeMap<&str, &str> = BTreeMap::new();
    for (i, p) in analysis.polyseps.iter().enumerate() {
        for e in &p.edges {
            color_of.insert(e, PALETTE[i % PALETTE.len()]);
        }
    }
    let sep_edges: Vec<&str> = analysis.seps.iter().map(|s| s.edges[0].as_str()).collect();

    let mut out = String::from("graph curve {\n");
    let mut vertices: Vec<_> = analysis.graph.vertices().iter().collect();
    vertices.sort_by(|a, b| a.id.cmp(&b.id));
    for v in vertices {
        out.push_str(&format!(
            "  \"{}\" [label=\"{}:g{}\"];\n",
            v.id, v.id, v.genus
        ));
    }
    let mut edges: Vec<_> = analysis.graph.edges().iter().collect();
    edges.sort_by(|a, b| a.id.cmp(&b.id));
    for e in edges {
        let mut attrs = vec![format!("label=\"{}\"", e.id)];
        if sep_edges.contains(&e.id.as_str()) {
            attrs.push("style=bold".into());
        }
        if let Some(color) = color_of.get(e.id.as_str()) {
            attrs.push(format!("color={color}"));
        }
        out.push_str(&format!(
            "  \"{}\" -- \"{}\" [{}];\n",
            e.ends[0],
            e.ends[1],
            attrs.join(", ")
        ));
    }
    out.push_str("}\n");
    out
}

/// The separation tree: components as nodes, seps solid, biseps dashed.
pub fn tree_dot(tree: &SeparationTree) -> String {
    let mut out = String::from("graph separation_tree {\n");
    for v in &tree.vertices {
        out.push_str(&format!("  \"{}\";\n", v.id));
    }
    for e in &tree.edges {
        let style = match e.sep.kind {
            StarSepKind::Sep => "solid",
            StarSepKind::Bisep => "dashed",
        };
        out.push_str(&format!(
            "  \"{}\" -- \"{}\" [label=\"{}\", style={style}];\n",
            e.endpoints[0],
            e.endpoints[1],
            e.sep.id()
        ));
    }
    out.push_str("}\n");
    out
}
