//! Implication graphs: nodes are the surviving irreducible-module
//! generators per degree, a directed edge records that the target is a
//! new consequence contributed by the source modulo the variety. Every
//! edge is decided by a span membership; asserted non-edges carry a
//! witness-algebra certificate where one exists.

use super::cases::ClaimCtx;
use super::catalog::{catalog, e_polynomial};
use super::report::Claim;
use super::{CaseId, ScenarioError};
use crate::exprio::{emit_dot, parse, print, DotCluster, DotGraph};
use crate::freealg::Polynomial;
use crate::models::Algebra;
use crate::tideal::{contains, DegreeCap, IdealPresentation};

#[derive(Debug, Clone)]
pub struct GraphNode {
    pub degree: u32,
    pub module_label: String,
    pub poly: Polynomial,
}

impl GraphNode {
    pub fn display(&self) -> String {
        format!("{}: {}", self.module_label, print(&self.poly))
    }
}

#[derive(Debug, Clone)]
pub struct ImplicationGraph {
    pub case: CaseId,
    pub n_max: u32,
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<(usize, usize)>,
}

impl ImplicationGraph {
    pub fn to_dot(&self) -> String {
        let mut degrees: Vec<u32> = self.nodes.iter().map(|n| n.degree).collect();
        degrees.sort_unstable();
        degrees.dedup();
        let clusters = degrees
            .iter()
            .map(|&degree| DotCluster {
                label: format!("n = {degree}"),
                nodes: self
                    .nodes
                    .iter()
                    .filter(|n| n.degree == degree)
                    .map(GraphNode::display)
                    .collect(),
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|&(src, dst)| (self.nodes[src].display(), self.nodes[dst].display()))
            .collect();
        emit_dot(&DotGraph {
            name: format!("case-{}", self.case),
            clusters,
            edges,
        })
    }
}

fn node(degree: u32, module_label: &str, expr: &str) -> GraphNode {
    GraphNode {
        degree,
        module_label: module_label.into(),
        poly: parse(expr).expect("static expression"),
    }
}

/// The surviving irreducible generators per degree, from each case's
/// module-structure statement. Parameterized families appear through
/// their distinguished members.
fn node_table(case: CaseId, n_max: u32) -> Vec<GraphNode> {
    let mut nodes: Vec<GraphNode> = Vec::new();
    match case {
        CaseId::C21 => {
            nodes.push(node(2, "M(2)", "x^2"));
            nodes.push(node(2, "M(1^2)", "[x,y]"));
            nodes.push(node(3, "M(3)", "x^3"));
            nodes.push(node(3, "M(2,1)", "[x,y]x"));
            nodes.push(node(3, "M(1^3)", "S3(x,y,z)"));
            for n in 4..=n_max {
                nodes.push(node(n, &format!("M({n})"), &format!("x^{n}")));
            }
        }
        CaseId::C22 => {
            nodes.push(node(2, "M(2)", "x^2"));
            nodes.push(node(2, "M(1^2)", "[x,y]"));
            nodes.push(node(3, "M(3)", "x^3"));
            nodes.push(node(3, "M(2,1)", "[x,y]x"));
            nodes.push(node(3, "M(1^3)", "S3(x,y,z)"));
            for n in 4..=n_max {
                nodes.push(node(n, &format!("M({n})"), &format!("x^{n}")));
                nodes.push(node(
                    n,
                    &format!("M({},1)", n - 1),
                    &format!("[x,y]x^{}", n - 2),
                ));
            }
        }
        CaseId::C23 => {
            nodes.push(node(2, "M(2)", "x^2"));
            nodes.push(node(2, "M(1^2)", "[x,y]"));
            nodes.push(node(3, "M(3)", "x^3"));
            nodes.push(node(3, "M(2,1)", "[x,y]x"));
            nodes.push(node(3, "M(1^3)", "S3(x,y,z)"));
            if n_max >= 4 {
                nodes.push(node(4, "M(4)", "x^4"));
                nodes.push(node(4, "M(2^2)", "x[x,y]y"));
            }
            for n in 5..=n_max {
                nodes.push(node(n, &format!("M({n})"), &format!("x^{n}")));
            }
        }
        CaseId::C24 => {
            for n in 2..=n_max {
                for k in 0..n.min(6) {
                    let label = match k {
                        0 => format!("M({n})"),
                        1 => format!("M({},1)", n - 1),
                        _ => format!("M({},1^{})", n - k, k),
                    };
                    let expr = match (k, n - k - 1) {
                        (0, power) => format!("x^{}", power + 1),
                        (k, 0) => format!("S{}({})", k + 1, fresh_args(k + 1)),
                        (k, power) => format!("S{}({})x^{power}", k + 1, fresh_args(k + 1)),
                    };
                    nodes.push(node(n, &label, &expr));
                }
            }
        }
        CaseId::C3 => {
            nodes.push(node(3, "M(3)", "x^3"));
            nodes.push(node(3, "M(2,1) left", "[x,y]x"));
            nodes.push(node(3, "M(2,1) right", "x[x,y]"));
            nodes.push(node(3, "M(2,1) mixed", "[x,y]x + x[x,y]"));
            for n in 4..=n_max {
                let tail = n - 2;
                nodes.push(node(n, &format!("M({n})"), &format!("x^{n}")));
                nodes.push(node(
                    n,
                    &format!("M({},1) left", n - 1),
                    &format!("[x,y]x^{tail}"),
                ));
                nodes.push(node(
                    n,
                    &format!("M({},1) right", n - 1),
                    &format!("x^{tail}[x,y]"),
                ));
                nodes.push(node(
                    n,
                    &format!("M({},1) mixed", n - 1),
                    &format!("[x,y]x^{tail} + x^{tail}[x,y]"),
                ));
                if n == 4 {
                    nodes.push(node(4, "M(2^2)", "[x,y]^2"));
                }
            }
        }
        CaseId::C4 => {
            nodes.push(node(3, "M(1^3)", "S3(x,y,z)"));
            nodes.push(node(3, "M(2,1) left", "[x,y]x"));
            nodes.push(node(3, "M(2,1) right", "x[x,y]"));
            nodes.push(node(3, "M(2,1) mixed", "[x,y]x + x[x,y]"));
            if n_max >= 4 {
                nodes.push(node(4, "M(1^4)", "S4(x,y,z,t)"));
                nodes.push(node(4, "M(2^2)", "xy^2x"));
                nodes.push(node(4, "M(3,1)", "x^2yx"));
                nodes.push(GraphNode {
                    degree: 4,
                    module_label: "M(2,1^2) g".into(),
                    poly: catalog("g").expect("catalog"),
                });
                nodes.push(GraphNode {
                    degree: 4,
                    module_label: "M(2,1^2) f".into(),
                    poly: catalog("f").expect("catalog"),
                });
                nodes.push(GraphNode {
                    degree: 4,
                    module_label: "M(2,1^2) mixed".into(),
                    poly: catalog("g")
                        .expect("catalog")
                        .add(&catalog("f").expect("catalog")),
                });
            }
            if n_max >= 5 {
                nodes.push(node(5, "M(3,2)", "x^2y^2x"));
                nodes.push(node(5, "M(3,1^2)", "x[y,z]x^2"));
                nodes.push(GraphNode {
                    degree: 5,
                    module_label: "M(2,1^3)".into(),
                    poly: e_polynomial(),
                });
            }
        }
    }
    nodes.retain(|n| n.degree <= n_max);
    nodes
}

fn fresh_args(k: u32) -> String {
    let names: Vec<String> = (1..=k).map(crate::exprio::var_name).collect();
    names.join(",")
}

/// Paper-asserted non-edges with their certifying witness algebra, when
/// one is named; non-edges without an algebra are certified by the span
/// non-membership that the edge computation itself performs.
fn certified_non_edges(case: CaseId) -> Vec<(&'static str, &'static str, Option<&'static str>)> {
    match case {
        CaseId::C21 => vec![
            ("[x,y]x", "x^4", Some("kx:5")),
            ("S3(x,y,z)", "x^4", Some("kx:5")),
        ],
        CaseId::C22 => vec![
            ("S3(x,y,z)", "x^4", Some("A1")),
            ("S3(x,y,z)", "[x,y]x^2", Some("A1")),
        ],
        CaseId::C23 => vec![("x[x,y]y", "x^5", Some("kx:6"))],
        CaseId::C24 => vec![],
        CaseId::C3 => vec![
            ("[x,y]x^2", "x^3[x,y]", Some("B2")),
            ("x^2[x,y]", "[x,y]x^3", Some("B1")),
            ("[x,y]^2", "x^5", Some("B1")),
            ("[x,y]^2", "[x,y]x^3", Some("B1")),
            ("[x,y]^2", "x^3[x,y]", Some("B2")),
        ],
        CaseId::C4 => vec![("S4(x,y,z,t)", "x^2y^2x", None)],
    }
}

/// Builds the graph and the claims that certify it: every node survives
/// modulo the variety, every edge holds by span membership, and every
/// asserted non-edge is certified.
pub fn implication_graph(
    case: CaseId,
    n_max: u32,
    cap: &DegreeCap,
) -> Result<(ImplicationGraph, Vec<Claim>), ScenarioError> {
    let spec = super::cases::variety(case, None)?;
    let base = IdealPresentation::new(&spec.generators, cap)?;
    let nodes = node_table(case, n_max);
    let mut ctx = ClaimCtx::new(cap, format!("graph-{case}"));

    let mut dead = Vec::new();
    for n in &nodes {
        if contains(&base, &n.poly, cap)? {
            dead.push(n.display());
        }
    }
    ctx.expect_eq(
        "nodes-survive",
        "module structure",
        "every listed generator is non-zero modulo the variety",
        "all",
        Ok(if dead.is_empty() {
            "all".into()
        } else {
            format!("dead: {}", dead.join("; "))
        }),
    );

    let mut edges = Vec::new();
    for (i, src) in nodes.iter().enumerate() {
        for (j, dst) in nodes.iter().enumerate() {
            if dst.degree != src.degree + 1 {
                continue;
            }
            let with_source = base.extended(std::slice::from_ref(&src.poly), cap)?;
            if contains(&with_source, &dst.poly, cap)? {
                edges.push((i, j));
            }
        }
    }

    for (src_expr, dst_expr, algebra_name) in certified_non_edges(case) {
        let src = parse(src_expr).expect("static expression");
        let dst = parse(dst_expr).expect("static expression");
        let src_idx = nodes.iter().position(|n| n.poly == src);
        let dst_idx = nodes.iter().position(|n| n.poly == dst);
        let present = match (src_idx, dst_idx) {
            (Some(i), Some(j)) => edges.contains(&(i, j)),
            _ => continue, // end node outside the requested degree range
        };
        ctx.expect_eq(
            &format!("non-edge-{src_expr}-{dst_expr}"),
            "consequence structure",
            format!("{dst_expr} is not a consequence of {src_expr}"),
            "absent",
            Ok(if present {
                "present".into()
            } else {
                "absent".into()
            }),
        );
        if let Some(name) = algebra_name {
            let algebra = Algebra::builtin(name).expect("builtin");
            let with_source = base.extended(std::slice::from_ref(&src), cap)?;
            ctx.bridge(
                &format!("non-edge-cert-{src_expr}-{dst_expr}"),
                "consequence structure",
                &algebra,
                &with_source,
                &dst,
            );
        }
    }

    Ok((
        ImplicationGraph {
            case,
            n_max,
            nodes,
            edges,
        },
        ctx.claims,
    ))
}
