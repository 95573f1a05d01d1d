//! Combinatorial model of the moduli space: stable strata, the strictly
//! semistable boundary, and the locus of pushed-forward rank-2 bundles,
//! joined by the specializations the elementary moves exhibit.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::Serialize;

use super::strata::{enumerate_strata, specialization_edges, specializations_of, Move, Stratum};
use crate::ribbon::RibbonInvariants;
use crate::stability::{GrClass, StabilityVerdict};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NodeKind {
    Stratum(Stratum),
    /// The single strictly semistable point over a rational ribbon.
    Boundary {
        gr: GrClass,
    },
    /// Image of the moduli of semistable rank-2 bundles on `X_red`; contains
    /// every strictly semistable Gr-class when `gbar >= 1`.
    VbLocus {
        dim: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Node {
    pub id: usize,
    pub label: String,
    pub kind: NodeKind,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeKind {
    Specialization {
        kind: Move,
    },
    /// The move lands on a strictly semistable stratum, which the coarse
    /// space identifies with its Gr-class.
    GrIdentified {
        kind: Move,
        via: Vec<i64>,
    },
    /// Stable sheaves of maximal stable index (line bundles on a blow-up
    /// with `g' = 2·gbar`) degenerating to a stable rank-2 bundle; only for
    /// odd `e` and `gbar >= 1`.
    Degeneration,
}

/// Edges point from the generic node to the special one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    pub kind: EdgeKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratGraph {
    pub ribbon: RibbonInvariants,
    pub d: i64,
    pub nodes: Vec<Node>,
    pub edges: Vec<GraphEdge>,
}

impl StratGraph {
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Connected as an undirected graph. An empty graph is not connected.
    pub fn is_connected(&self) -> bool {
        if self.nodes.is_empty() {
            return false;
        }
        let mut adjacency = vec![Vec::new(); self.nodes.len()];
        for e in &self.edges {
            adjacency[e.from].push(e.to);
            adjacency[e.to].push(e.from);
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn boundary_nodes(&self) -> impl Iterator<Item = &Node> {
        self.nodes
            .iter()
            .filter(|n| matches!(n.kind, NodeKind::Boundary { .. }))
    }

    pub fn vb_node(&self) -> Option<&Node> {
        self.nodes
            .iter()
            .find(|n| matches!(n.kind, NodeKind::VbLocus { .. }))
    }

    pub fn strata(&self) -> impl Iterator<Item = &Stratum> {
        self.nodes.iter().filter_map(|n| match &n.kind {
            NodeKind::Stratum(s) => Some(s),
            _ => None,
        })
    }

    /// Plain-text graph description, nodes labeled `partition | dim`.
    pub fn to_dot(&self) -> String {
        let name = format!(
            "strata_g{}_gbar{}_d{}",
            self.ribbon.g(),
            self.ribbon.gbar(),
            self.d
        )
        .replace('-', "m");
        let mut out = format!("digraph {name} {{\n");
        for node in &self.nodes {
            let shape = match node.kind {
                NodeKind::Stratum(_) => "ellipse",
                NodeKind::Boundary { .. } => "doublecircle",
                NodeKind::VbLocus { .. } => "box",
            };
            let _ = writeln!(
                out,
                "  n{} [label=\"{}\", shape={}];",
                node.id, node.label, shape
            );
        }
        for edge in &self.edges {
            let label = match &edge.kind {
                EdgeKind::Specialization { kind } => move_label(*kind),
                EdgeKind::GrIdentified { kind, via } => {
                    format!("{} via ({})", move_label(*kind), join(via))
                }
                EdgeKind::Degeneration => "degeneration".to_string(),
            };
            let _ = writeln!(
                out,
                "  n{} -> n{} [label=\"{}\"];",
                edge.from, edge.to, label
            );
        }
        out.push_str("}\n");
        out
    }
}

fn join(parts: &[i64]) -> String {
    parts
        .iter()
        .map(|b| b.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn move_label(kind: Move) -> String {
    match kind {
        Move::Raise { b0 } => format!("raise {b0}"),
        Move::Merge { b1 } => format!("merge 1+{b1}"),
    }
}

/// Dimension of the image of the semistable rank-2 bundles of degree `e`
/// on `X_red`, for `gbar >= 1`.
fn vb_locus_dim(gbar: i64, e: i64) -> i64 {
    match gbar {
        1 if e.rem_euclid(2) == 1 => 1,
        1 => 2,
        _ => 4 * gbar - 3,
    }
}

pub fn stratification_graph(ribbon: &RibbonInvariants, d: i64) -> StratGraph {
    let stable = enumerate_strata(ribbon, d, false);
    let e = ribbon.vb_degree(d);
    let e_even = e.rem_euclid(2) == 0;

    let mut nodes: Vec<Node> = stable
        .iter()
        .enumerate()
        .map(|(id, s)| Node {
            id,
            label: format!("{} | {}", s.label(), s.dim),
            kind: NodeKind::Stratum(s.clone()),
        })
        .collect();

    let mut edges: Vec<GraphEdge> = specialization_edges(&stable)
        .into_iter()
        .map(|se| GraphEdge {
            from: se.generic,
            to: se.special,
            kind: EdgeKind::Specialization { kind: se.kind },
        })
        .collect();

    // Where strictly semistable sheaves live in the coarse space.
    let boundary = if ribbon.gbar() == 0 {
        e_even.then(|| {
            let id = nodes.len();
            let gr = GrClass::SplitClass {
                deg_f1: e / 2,
                deg_ibar: e / 2,
            };
            nodes.push(Node {
                id,
                label: format!("Gr O({0})+O({0}) | 0", e / 2),
                kind: NodeKind::Boundary { gr },
            });
            id
        })
    } else {
        let id = nodes.len();
        let dim = vb_locus_dim(ribbon.gbar(), e);
        nodes.push(Node {
            id,
            label: format!("vb | {dim}"),
            kind: NodeKind::VbLocus { dim },
        });
        Some(id)
    };

    if let Some(target) = boundary {
        let semistable: HashSet<Vec<i64>> = enumerate_strata(ribbon, d, true)
            .into_iter()
            .filter(|s| s.stability == StabilityVerdict::StrictlySemistable)
            .map(|s| s.indices)
            .collect();
        for (from, s) in stable.iter().enumerate() {
            // One edge per stratum; specializations_of is sorted.
            let first_hit = specializations_of(&s.indices)
                .into_iter()
                .find(|(t, _)| semistable.contains(t));
            if let Some((via, kind)) = first_hit {
                edges.push(GraphEdge {
                    from,
                    to: target,
                    kind: EdgeKind::GrIdentified { kind, via },
                });
            }
        }

        if ribbon.gbar() >= 1 && !e_even {
            for (from, s) in stable.iter().enumerate() {
                if s.index() == ribbon.max_stable_index() {
                    edges.push(GraphEdge {
                        from,
                        to: target,
                        kind: EdgeKind::Degeneration,
                    });
                }
            }
        }
    }

    edges.sort();
    StratGraph {
        ribbon: *ribbon,
        d,
        nodes,
        edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(g: i64, gbar: i64, d: i64) -> StratGraph {
        stratification_graph(&RibbonInvariants::new(g, gbar).unwrap(), d)
    }

    #[test]
    fn rational_genus_three() {
        let gr = graph(3, 0, 0);
        assert_eq!(gr.strata().count(), 3);
        let boundary: Vec<_> = gr.boundary_nodes().collect();
        assert_eq!(boundary.len(), 1);
        assert_eq!(
            boundary[0].kind,
            NodeKind::Boundary {
                gr: GrClass::SplitClass {
                    deg_f1: -2,
                    deg_ibar: -2
                }
            }
        );
        assert!(gr.vb_node().is_none());
        assert!(gr.is_connected());

        // (2) reaches the boundary through the index-4 stratum (4).
        let two = gr
            .nodes
            .iter()
            .position(|n| matches!(&n.kind, NodeKind::Stratum(s) if s.indices == vec![2]))
            .unwrap();
        assert!(gr.edges.iter().any(|e| e.from == two
            && e.to == boundary[0].id
            && matches!(e.kind, EdgeKind::GrIdentified { .. })));
    }

    #[test]
    fn rational_even_genus_has_no_boundary() {
        let gr = graph(4, 0, 0);
        assert_eq!(gr.boundary_nodes().count(), 0);
        assert!(gr.is_connected());
    }

    #[test]
    fn elliptic_single_node() {
        let gr = graph(1, 1, 0);
        assert_eq!(gr.nodes.len(), 1);
        assert!(matches!(gr.nodes[0].kind, NodeKind::VbLocus { dim: 2 }));
        assert!(gr.is_connected());
    }

    #[test]
    fn odd_e_uses_degeneration() {
        // g=4, gbar=1, d=0: e = -3.
        let gr = graph(4, 1, 0);
        assert!(gr.edges.iter().any(|e| e.kind == EdgeKind::Degeneration));
        assert!(gr.is_connected());
    }

    #[test]
    fn empty_space_is_not_connected() {
        let gr = graph(-1, 0, 1);
        assert!(gr.is_empty());
        assert!(!gr.is_connected());
    }

    #[test]
    fn dot_output() {
        let dot = graph(3, 0, 0).to_dot();
        assert!(dot.starts_with("digraph strata_g3_gbar0_d0 {"));
        assert!(dot.contains("n0 [label=\"() | 3\", shape=ellipse];"));
        assert!(dot.contains("label=\"Gr O(-2)+O(-2) | 0\""));
        assert!(dot.trim_end().ends_with('}'));
    }
}
