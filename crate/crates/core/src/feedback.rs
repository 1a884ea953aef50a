//! Template feedback and generated subgraph examples.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::graph::{verdict, ColorAssignment, Conflict, Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FeedbackKind {
    Conflict,
    OverColor,
    Uncolored,
    Unparseable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeedbackItem {
    pub kind: FeedbackKind,
    pub message: String,
    pub conflicts: Vec<Conflict>,
}

impl FeedbackItem {
    fn text(kind: FeedbackKind, message: String) -> Self {
        Self { kind, message, conflicts: Vec::new() }
    }

    /// Feedback for an attempt that carried no usable coloring.
    pub fn no_assignment() -> Self {
        Self::text(
            FeedbackKind::Unparseable,
            "Error: No color assignment could be read. Provide one (Vertex Color) pair per line for every vertex."
                .into(),
        )
    }

    /// Feedback for a bare "NOT SOLVABLE" that the verifier cannot check.
    pub fn unverified_unsat() -> Self {
        Self::text(
            FeedbackKind::Unparseable,
            "Error: NOT SOLVABLE cannot be verified. Provide a color assignment in the (Vertex Color) format.".into(),
        )
    }
}

/// Template feedback for `assignment`: one item per conflicting edge in graph
/// edge order, then an over-color item when more than `k` colors are used,
/// then one item listing uncolored vertices.
pub fn format_feedback(graph: &Graph, assignment: &ColorAssignment, k: u32) -> Result<Vec<FeedbackItem>, GraphError> {
    let v = verdict(graph, assignment, k)?;
    let mut items: Vec<FeedbackItem> = v
        .conflicts
        .into_iter()
        .map(|c| FeedbackItem {
            kind: FeedbackKind::Conflict,
            message: format!("Error: Vertices {} and {} are adjacent but have the same color.", c.u, c.v),
            conflicts: alloc::vec![c],
        })
        .collect();
    if v.colors_used > k as usize {
        items.push(FeedbackItem::text(
            FeedbackKind::OverColor,
            format!("Error: Only {k} colors are allowed. {} colors were used.", v.colors_used),
        ));
    }
    if !v.unassigned.is_empty() {
        let names: Vec<&str> = v.unassigned.iter().map(|&u| graph.label(u)).collect();
        items.push(FeedbackItem::text(
            FeedbackKind::Uncolored,
            format!("Error: Vertices {} have no color assigned.", names.join(", ")),
        ));
    }
    Ok(items)
}

/// Escalation signature: the sorted feedback messages of one attempt. For
/// conflict-only feedback this is the sorted list of conflicting edges.
pub fn signature(items: &[FeedbackItem]) -> Vec<String> {
    let mut s: Vec<String> = items.iter().map(|i| i.message.clone()).collect();
    s.sort();
    s
}

/// A small colored subgraph shown to S1 as a worked example.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratedExample {
    pub subgraph: Graph,
    pub coloring: ColorAssignment,
}

/// Takes the `min(3, n)` highest-degree vertices (ties by vertex order),
/// induces the subgraph on them, and colors it greedily in vertex order.
pub fn generate_example(graph: &Graph) -> GeneratedExample {
    let mut by_degree: Vec<usize> = (0..graph.vertex_count()).collect();
    by_degree.sort_by_key(|&v| (core::cmp::Reverse(graph.degree(v)), v));
    by_degree.truncate(3);
    let subgraph = graph.induced_subgraph(&by_degree);
    let colors = greedy_coloring(&subgraph);
    let coloring = ColorAssignment::from_indexed(&subgraph, &colors);
    GeneratedExample { subgraph, coloring }
}

/// First-fit coloring in vertex order; colors start at 1.
pub fn greedy_coloring(graph: &Graph) -> Vec<u32> {
    let mut colors = alloc::vec![0u32; graph.vertex_count()];
    for v in 0..graph.vertex_count() {
        let taken: Vec<u32> = graph.neighbors(v).iter().map(|&u| colors[u]).filter(|&c| c != 0).collect();
        colors[v] = (1..).find(|c| !taken.contains(c)).expect("unbounded range");
    }
    colors
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::graph::parse_dimacs;

    fn messages(items: &[FeedbackItem]) -> Vec<&str> {
        items.iter().map(|i| i.message.as_str()).collect()
    }

    #[test]
    fn conflict_feedback_for_worked_example() {
        let g = fig2();
        let a = assign(&[("A", 1), ("B", 1), ("C", 2), ("D", 2), ("E", 1)]);
        let f = format_feedback(&g, &a, 2).unwrap();
        assert_eq!(
            messages(&f),
            [
                "Error: Vertices A and B are adjacent but have the same color.",
                "Error: Vertices C and D are adjacent but have the same color.",
            ]
        );
        assert!(f.iter().all(|i| i.kind == FeedbackKind::Conflict && i.conflicts.len() == 1));
    }

    #[test]
    fn over_color_feedback() {
        let k3 = complete(3);
        let f = format_feedback(&k3, &assign(&[("1", 1), ("2", 2), ("3", 3)]), 2).unwrap();
        assert_eq!(messages(&f), ["Error: Only 2 colors are allowed. 3 colors were used."]);
        assert_eq!(f[0].kind, FeedbackKind::OverColor);
    }

    #[test]
    fn proper_coloring_has_no_feedback() {
        let k3 = complete(3);
        assert!(format_feedback(&k3, &assign(&[("1", 1), ("2", 2), ("3", 3)]), 3).unwrap().is_empty());
    }

    #[test]
    fn uncolored_feedback_comes_last() {
        let g = fig2();
        let f = format_feedback(&g, &assign(&[("A", 1), ("B", 1)]), 2).unwrap();
        assert_eq!(
            messages(&f),
            [
                "Error: Vertices A and B are adjacent but have the same color.",
                "Error: Vertices C, D, E have no color assigned.",
            ]
        );
    }

    #[test]
    fn signature_is_order_free() {
        let g = fig2();
        let a = format_feedback(&g, &assign(&[("A", 1), ("B", 1), ("C", 2), ("D", 2), ("E", 1)]), 2).unwrap();
        let mut b = a.clone();
        b.reverse();
        assert_eq!(signature(&a), signature(&b));
    }

    #[test]
    fn example_from_worked_graph_is_the_triangle() {
        let ex = generate_example(&fig2());
        assert_eq!(ex.subgraph.labels(), ["A", "B", "C"]);
        assert_eq!(ex.subgraph.edge_count(), 3);
        assert_eq!(ex.coloring, assign(&[("A", 1), ("B", 2), ("C", 3)]));
    }

    #[test]
    fn example_edgeless_and_path() {
        let g = parse_dimacs("c vertices A B\np edge 2 0").unwrap();
        assert_eq!(generate_example(&g).coloring, assign(&[("A", 1), ("B", 1)]));

        let path = parse_dimacs("p edge 3 2\ne A B\ne B C").unwrap();
        let ex = generate_example(&path);
        assert_eq!(ex.subgraph, path);
        assert_eq!(ex.coloring, assign(&[("A", 1), ("B", 2), ("C", 1)]));
    }
}
