//! Deterministic DOT rendering for consequence graphs.

/// One rank of nodes (all nodes of one degree).
#[derive(Debug, Clone)]
pub struct DotCluster {
    /// Cluster caption, e.g. "n = 4".
    pub label: String,
    /// Node ids in emission order; ids double as display labels.
    pub nodes: Vec<String>,
}

/// A layered digraph ready for rendering.
#[derive(Debug, Clone)]
pub struct DotGraph {
    pub name: String,
    pub clusters: Vec<DotCluster>,
    /// Edges by node id, already in emission order.
    pub edges: Vec<(String, String)>,
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Renders the graph as DOT text. The output is byte-deterministic for
/// identical inputs: node and edge order are taken verbatim from the
/// structure, which the callers build in canonical order.
pub fn emit_dot(graph: &DotGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph \"{}\" {{\n", escape(&graph.name)));
    out.push_str("  rankdir=TB;\n");
    out.push_str("  node [shape=box, fontname=\"monospace\"];\n");
    for (i, cluster) in graph.clusters.iter().enumerate() {
        out.push_str(&format!("  subgraph cluster_{i} {{\n"));
        out.push_str(&format!("    label=\"{}\";\n", escape(&cluster.label)));
        out.push_str("    rank=same;\n");
        for node in &cluster.nodes {
            out.push_str(&format!("    \"{}\";\n", escape(node)));
        }
        out.push_str("  }\n");
    }
    for (src, dst) in &graph.edges {
        out.push_str(&format!("  \"{}\" -> \"{}\";\n", escape(src), escape(dst)));
    }
    out.push_str("}\n");
    out
}
