//! Undirected simple graphs, DIMACS text, and coloring verification.
//!
//! Vertex labels are opaque non-whitespace tokens kept in a stable order.
//! Internally every vertex is addressed by its position in that order.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("missing `p edge <nv> <ne>` problem line")]
    MissingProblemLine,
    #[error("line {line}: more than one problem line")]
    DuplicateProblemLine { line: usize },
    #[error("line {line}: malformed problem line")]
    BadProblemLine { line: usize },
    #[error("line {line}: edge line needs exactly two endpoints")]
    EdgeArity { line: usize },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: String },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: String, v: String },
    #[error("line {line}: unrecognized line")]
    UnknownLine { line: usize },
    #[error("line {line}: malformed `c {key}` comment")]
    BadComment { line: usize, key: &'static str },
    #[error("header declares {declared} vertices but {found} were found")]
    VertexCountMismatch { declared: usize, found: usize },
    #[error("header declares {declared} edges but {found} were found")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("duplicate vertex label {0}")]
    DuplicateVertex(String),
    #[error("invalid vertex label {0:?}")]
    InvalidLabel(String),
    #[error("vertex index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("color indices start at 1")]
    ZeroColor,
}

/// Immutable undirected simple graph.
#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from labels in their stable order and index-pair edges.
    pub fn new<I>(labels: Vec<String>, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut index = BTreeMap::new();
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() || label.chars().any(|c| c.is_whitespace() || c == '(' || c == ')') {
                return Err(GraphError::InvalidLabel(label.clone()));
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(label.clone()));
            }
        }
        let n = labels.len();
        let mut seen = BTreeSet::new();
        let mut edge_list = Vec::new();
        let mut adjacency = alloc::vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::IndexOutOfRange(u));
            }
            if v >= n {
                return Err(GraphError::IndexOutOfRange(v));
            }
            if u == v {
                return Err(GraphError::SelfLoop { line: 0, vertex: labels[u].clone() });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge { line: 0, u: labels[u].clone(), v: labels[v].clone() });
            }
            edge_list.push((u, v));
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Self { labels, index, edges: edge_list, adjacency })
    }

    /// Graph on vertices `1..=n` (standard DIMACS numbering) with 0-based index edges.
    pub fn numbered<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new((1..=n).map(|i| i.to_string()).collect(), edges)
    }

    /// Graph from labeled edges; vertices are taken in first-appearance order
    /// after the explicitly listed `vertices`.
    pub fn from_labeled_edges(vertices: &[&str], edges: &[(&str, &str)]) -> Result<Self, GraphError> {
        let mut labels: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        for (u, v) in edges {
            for l in [u, v] {
                if !labels.iter().any(|x| x == l) {
                    labels.push(l.to_string());
                }
            }
        }
        let pos = |l: &str| labels.iter().position(|x| x == l).unwrap();
        let idx: Vec<(usize, usize)> = edges.iter().map(|(u, v)| (pos(u), pos(v))).collect();
        Self::new(labels, idx)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Edges as vertex-index pairs, in source order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor indices of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edge density 2e / (n (n - 1)); zero for graphs with fewer than two vertices.
    pub fn density(&self) -> f64 {
        let n = self.vertex_count() as f64;
        if n < 2.0 {
            0.0
        } else {
            2.0 * self.edge_count() as f64 / (n * (n - 1.0))
        }
    }

    /// Subgraph induced by `vertices`, keeping this graph's vertex and edge order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let keep: BTreeSet<usize> = vertices.iter().copied().filter(|&v| v < self.vertex_count()).collect();
        let order: Vec<usize> = keep.iter().copied().collect();
        let remap: BTreeMap<usize, usize> = order.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let labels = order.iter().map(|&v| self.labels[v].clone()).collect();
        let edges = self.edges.iter().filter_map(|(u, v)| Some((*remap.get(u)?, *remap.get(v)?)));
        Graph::new(labels, edges).expect("induced subgraph of a valid graph is valid")
    }

    fn is_canonically_numbered(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, l)| l.parse::<usize>() == Ok(i + 1))
    }

    fn first_appearance_order(&self) -> Vec<usize> {
        let mut seen = alloc::vec![false; self.vertex_count()];
        let mut order = Vec::new();
        for &(u, v) in &self.edges {
            for w in [u, v] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
        order
    }
}

/// SAT/UNSAT tag carried in instance files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Label {
    Sat,
    Unsat,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::Sat => "SAT",
            Label::Unsat => "UNSAT",
        })
    }
}

impl core::str::FromStr for Label {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "SAT" => Ok(Label::Sat),
            "UNSAT" => Ok(Label::Unsat),
            _ => Err(()),
        }
    }
}

/// A parsed instance file: the graph plus the optional `c k` and `c label` annotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub k: Option<u32>,
    pub label: Option<Label>,
}

/// Parses DIMACS edge-format text into a graph.
pub fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    parse_instance(text).map(|i| i.graph)
}

/// Parses DIMACS text and the `c k <int>`, `c label <SAT|UNSAT>` and
/// `c vertices <labels…>` annotations.
///
/// Vertex order: the `c vertices` list when present; otherwise `1..=nv` when
/// every endpoint is an integer in that range; otherwise first appearance in
/// the edge lines.
pub fn parse_instance(text: &str) -> Result<Instance, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut k = None;
    let mut label = None;
    let mut declared_vertices: Option<Vec<String>> = None;
    let mut raw_edges: Vec<(usize, &str, &str)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let mut tokens = raw.split_whitespace();
        let Some(kind) = tokens.next() else { continue };
        match kind {
            "c" => match tokens.next() {
                Some("k") => {
                    let v = tokens.next().and_then(|t| t.parse::<u32>().ok());
                    match (v, tokens.next()) {
                        (Some(v), None) if v >= 1 => k = Some(v),
                        _ => return Err(GraphError::BadComment { line: line_no, key: "k" }),
                    }
                }
                Some("label") => match (tokens.next().map(str::parse::<Label>), tokens.next()) {
                    (Some(Ok(l)), None) => label = Some(l),
                    _ => return Err(GraphError::BadComment { line: line_no, key: "label" }),
                },
                Some("vertices") => declared_vertices = Some(tokens.map(String::from).collect()),
                _ => {}
            },
            "p" => {
                if header.is_some() {
                    return Err(GraphError::DuplicateProblemLine { line: line_no });
                }
                let fmt = tokens.next();
                let nv = tokens.next().and_then(|t| t.parse::<usize>().ok());
                let ne = tokens.next().and_then(|t| t.parse::<usize>().ok());
                match (fmt, nv, ne, tokens.next()) {
                    (Some("edge"), Some(nv), Some(ne), None) => header = Some((nv, ne)),
                    _ => return Err(GraphError::BadProblemLine { line: line_no }),
                }
            }
            "e" => match (tokens.next(), tokens.next(), tokens.next()) {
                (Some(u), Some(v), None) => raw_edges.push((line_no, u, v)),
                _ => return Err(GraphError::EdgeArity { line: line_no }),
            },
            _ => return Err(GraphError::UnknownLine { line: line_no }),
        }
    }

    let (nv, ne) = header.ok_or(GraphError::MissingProblemLine)?;
    if raw_edges.len() != ne {
        return Err(GraphError::EdgeCountMismatch { declared: ne, found: raw_edges.len() });
    }

    let labels: Vec<String> = if let Some(list) = declared_vertices {
        list
    } else if raw_edges
        .iter()
        .all(|(_, u, v)| [u, v].iter().all(|t| matches!(t.parse::<usize>(), Ok(x) if (1..=nv).contains(&x))))
    {
        (1..=nv).map(|i| i.to_string()).collect()
    } else {
        let mut order: Vec<String> = Vec::new();
        for (_, u, v) in &raw_edges {
            for t in [u, v] {
                if !order.iter().any(|x| x == t) {
                    order.push(t.to_string());
                }
            }
        }
        order
    };
    if labels.len() != nv {
        return Err(GraphError::VertexCountMismatch { declared: nv, found: labels.len() });
    }

    let mut index = BTreeMap::new();
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.as_str(), i).is_some() {
            return Err(GraphError::DuplicateVertex(l.clone()));
        }
    }
    let mut seen = BTreeSet::new();
    let mut edges = Vec::with_capacity(ne);
    for (line, u, v) in raw_edges {
        let ui = *index.get(u).ok_or_else(|| GraphError::UnknownVertex(u.to_string()))?;
        let vi = *index.get(v).ok_or_else(|| GraphError::UnknownVertex(v.to_string()))?;
        if ui == vi {
            return Err(GraphError::SelfLoop { line, vertex: u.to_string() });
        }
        if !seen.insert((ui.min(vi), ui.max(vi))) {
            return Err(GraphError::DuplicateEdge { line, u: u.to_string(), v: v.to_string() });
        }
        edges.push((ui, vi));
    }

    Ok(Instance { graph: Graph::new(labels, edges)?, k, label })
}

/// Writes `graph` as DIMACS text with `c k` and optional `c label` comments.
/// Lines are newline-separated without a trailing newline.
pub fn serialize_dimacs(graph: &Graph, k: u32, label: Option<Label>) -> String {
    let mut lines: Vec<String> = Vec::with_capacity(graph.edge_count() + 4);
    lines.push(format!("c k {k}"));
    if let Some(l) = label {
        lines.push(format!("c label {l}"));
    }
    lines.extend(dimacs_body(graph));
    lines.join("\n")
}

/// The `p`/`e` lines (plus a `c vertices` line when the order cannot be
/// recovered from the edges alone).
pub(crate) fn dimacs_body(graph: &Graph) -> Vec<String> {
    let mut lines = Vec::with_capacity(graph.edge_count() + 2);
    let recoverable =
        graph.is_canonically_numbered() || graph.first_appearance_order().iter().copied().eq(0..graph.vertex_count());
    if !recoverable {
        lines.push(format!("c vertices {}", graph.labels().join(" ")));
    }
    lines.push(format!("p edge {} {}", graph.vertex_count(), graph.edge_count()));
    for &(u, v) in graph.edges() {
        lines.push(format!("e {} {}", graph.label(u), graph.label(v)));
    }
    lines
}

/// Partial or total map from vertex label to color index (≥ 1).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorAssignment {
    colors: BTreeMap<String, u32>,
}

impl ColorAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, vertex: impl Into<String>, color: u32) -> Result<(), GraphError> {
        if color == 0 {
            return Err(GraphError::ZeroColor);
        }
        self.colors.insert(vertex.into(), color);
        Ok(())
    }

    pub fn get(&self, vertex: &str) -> Option<u32> {
        self.colors.get(vertex).copied()
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u32)> {
        self.colors.iter().map(|(k, v)| (k.as_str(), *v))
    }

    /// Total assignment from per-vertex colors in the graph's order (0 = unassigned).
    pub fn from_indexed(graph: &Graph, colors: &[u32]) -> Self {
        let colors =
            colors.iter().enumerate().filter(|(_, &c)| c > 0).map(|(v, &c)| (graph.label(v).to_string(), c)).collect();
        Self { colors }
    }

    /// Per-vertex colors in the graph's order, 0 for unassigned.
    pub fn to_indexed(&self, graph: &Graph) -> Result<Vec<u32>, GraphError> {
        let mut out = alloc::vec![0; graph.vertex_count()];
        for (label, &color) in &self.colors {
            let v = graph.index_of(label).ok_or_else(|| GraphError::UnknownVertex(label.clone()))?;
            out[v] = color;
        }
        Ok(out)
    }

    /// Number of distinct colors in use.
    pub fn colors_used(&self) -> usize {
        self.colors.values().collect::<BTreeSet<_>>().len()
    }
}

impl<S: Into<String>> FromIterator<(S, u32)> for ColorAssignment {
    /// Pairs with color 0 are dropped.
    fn from_iter<T: IntoIterator<Item = (S, u32)>>(iter: T) -> Self {
        let colors = iter.into_iter().filter(|(_, c)| *c > 0).map(|(v, c)| (v.into(), c)).collect();
        Self { colors }
    }
}

/// An edge whose two endpoints carry the same color.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Conflict {
    pub u: String,
    pub v: String,
    pub color: u32,
}

/// Exact fraction of satisfied edges. An edgeless graph scores 1.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Score {
    pub satisfied: usize,
    pub total: usize,
}

impl Score {
    pub const ONE: Score = Score { satisfied: 0, total: 0 };

    pub fn new(satisfied: usize, total: usize) -> Self {
        assert!(satisfied <= total, "score numerator exceeds denominator");
        Self { satisfied, total }
    }

    pub fn is_one(&self) -> bool {
        self.satisfied == self.total
    }

    pub fn value(&self) -> f64 {
        if self.total == 0 {
            1.0
        } else {
            self.satisfied as f64 / self.total as f64
        }
    }

    fn fraction(&self) -> (u128, u128) {
        if self.total == 0 {
            (1, 1)
        } else {
            (self.satisfied as u128, self.total as u128)
        }
    }
}

impl PartialEq for Score {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Score {}

impl PartialOrd for Score {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Score {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = self.fraction();
        let (c, d) = other.fraction();
        (a * d).cmp(&(c * b))
    }
}

impl fmt::Display for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.4}", self.value())
    }
}

/// Result of checking an assignment against a graph and color budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub score: Score,
    pub conflicts: Vec<Conflict>,
    pub colors_used: usize,
    pub complete: bool,
    pub valid: bool,
    /// Unassigned vertex indices, in graph order.
    pub unassigned: Vec<usize>,
}

/// Edges whose endpoints are both assigned the same color, in graph edge order.
pub fn detect_conflicts(graph: &Graph, assignment: &ColorAssignment) -> Result<Vec<Conflict>, GraphError> {
    let colors = assignment.to_indexed(graph)?;
    Ok(conflicts_indexed(graph, &colors))
}

fn conflicts_indexed(graph: &Graph, colors: &[u32]) -> Vec<Conflict> {
    graph
        .edges()
        .iter()
        .filter(|&&(u, v)| colors[u] != 0 && colors[u] == colors[v])
        .map(|&(u, v)| Conflict { u: graph.label(u).to_string(), v: graph.label(v).to_string(), color: colors[u] })
        .collect()
}

/// Scores `assignment` on `graph` under a budget of `k` colors.
///
/// Edges with an unassigned endpoint count as violated, so a score of 1
/// implies a proper coloring of every edge.
pub fn verdict(graph: &Graph, assignment: &ColorAssignment, k: u32) -> Result<Verdict, GraphError> {
    let colors = assignment.to_indexed(graph)?;
    let conflicts = conflicts_indexed(graph, &colors);
    let satisfied =
        graph.edges().iter().filter(|&&(u, v)| colors[u] != 0 && colors[v] != 0 && colors[u] != colors[v]).count();
    let score = Score::new(satisfied, graph.edge_count());
    let unassigned: Vec<usize> = (0..graph.vertex_count()).filter(|&v| colors[v] == 0).collect();
    let complete = unassigned.is_empty();
    let colors_used = assignment.colors_used();
    let valid = score.is_one() && complete && colors_used <= k as usize;
    Ok(Verdict { score, conflicts, colors_used, complete, valid, unassigned })
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// The five-vertex worked example: triangle A-B-C with tail C-D-E.
    pub fn fig2() -> Graph {
        parse_dimacs("p edge 5 5\ne A B\ne A C\ne B C\ne C D\ne D E").unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::numbered(n, edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::numbered(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn assign(pairs: &[(&str, u32)]) -> ColorAssignment {
        pairs.iter().map(|&(v, c)| (v, c)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn parses_letter_labeled_example() {
        let g = fig2();
        assert_eq!(g.labels(), ["A", "B", "C", "D", "E"]);
        assert_eq!(g.edge_count(), 5);
        assert!(g.has_edge(0, 2) && g.has_edge(2, 0));
        assert_eq!(g.degree(2), 3);
    }

    #[test]
    fn parses_empty_graph() {
        let g = parse_dimacs("p edge 0 0").unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_dimacs("p edge 2 1\ne A"), Err(GraphError::EdgeArity { line: 2 }));
        assert_eq!(parse_dimacs("e 1 2"), Err(GraphError::MissingProblemLine));
        assert_eq!(parse_dimacs("p edge 2 2\ne 1 2"), Err(GraphError::EdgeCountMismatch { declared: 2, found: 1 }));
        assert_eq!(parse_dimacs("p edge 3 1\ne A B"), Err(GraphError::VertexCountMismatch { declared: 3, found: 2 }));
        assert!(matches!(parse_dimacs("p edge 2 1\ne 1 1"), Err(GraphError::SelfLoop { line: 2, .. })));
        assert!(matches!(parse_dimacs("p edge 2 2\ne 1 2\ne 2 1"), Err(GraphError::DuplicateEdge { line: 3, .. })));
        assert!(matches!(parse_dimacs("p edge 2 0\np edge 2 0"), Err(GraphError::DuplicateProblemLine { .. })));
        assert!(matches!(parse_dimacs("p col 2 0"), Err(GraphError::BadProblemLine { .. })));
        assert!(matches!(parse_dimacs("p edge 2 0\nx"), Err(GraphError::UnknownLine { .. })));
    }

    #[test]
    fn comments_anywhere_and_numbered_isolated_vertices() {
        let g = parse_dimacs("c hello\np edge 4 1\nc mid\ne 1 3\nc end").unwrap();
        assert_eq!(g.labels(), ["1", "2", "3", "4"]);
        assert_eq!(g.edges(), [(0, 2)]);
    }

    #[test]
    fn serialize_empty_graph() {
        let g = parse_dimacs("p edge 0 0").unwrap();
        assert_eq!(serialize_dimacs(&g, 1, None), "c k 1\np edge 0 0");
    }

    #[test]
    fn serialize_round_trips_and_annotates() {
        let g = fig2();
        let text = serialize_dimacs(&g, 2, Some(Label::Unsat));
        assert!(text.contains("c label UNSAT"));
        let inst = parse_instance(&text).unwrap();
        assert_eq!(inst.graph, g);
        assert_eq!(inst.k, Some(2));
        assert_eq!(inst.label, Some(Label::Unsat));

        let k3 = complete(3);
        assert!(serialize_dimacs(&k3, 2, Some(Label::Unsat)).contains("c label UNSAT"));
    }

    #[test]
    fn isolated_labeled_vertices_round_trip() {
        let g = Graph::from_labeled_edges(&["Z", "A"], &[("A", "B")]).unwrap();
        let text = serialize_dimacs(&g, 3, Some(Label::Sat));
        assert!(text.contains("c vertices Z A B"));
        assert_eq!(parse_dimacs(&text).unwrap(), g);
    }

    #[test]
    fn conflicts_on_worked_example() {
        let g = fig2();
        let a = assign(&[("A", 1), ("B", 1), ("C", 2), ("D", 2), ("E", 1)]);
        let c = detect_conflicts(&g, &a).unwrap();
        assert_eq!(
            c,
            [Conflict { u: "A".into(), v: "B".into(), color: 1 }, Conflict { u: "C".into(), v: "D".into(), color: 2 },]
        );
    }

    #[test]
    fn conflicts_proper_and_monochrome() {
        let k3 = complete(3);
        assert!(detect_conflicts(&k3, &assign(&[("1", 1), ("2", 2), ("3", 3)])).unwrap().is_empty());
        assert_eq!(detect_conflicts(&k3, &assign(&[("1", 1), ("2", 1), ("3", 1)])).unwrap().len(), 3);
    }

    #[test]
    fn unknown_vertex_is_an_error() {
        let k3 = complete(3);
        assert_eq!(detect_conflicts(&k3, &assign(&[("9", 1)])), Err(GraphError::UnknownVertex("9".into())));
        assert!(verdict(&k3, &assign(&[("9", 1)]), 3).is_err());
    }

    #[test]
    fn verdict_examples() {
        let g = fig2();
        let v = verdict(&g, &assign(&[("A", 1), ("B", 1), ("C", 2), ("D", 2), ("E", 1)]), 2).unwrap();
        assert_eq!(v.score, Score::new(3, 5));
        assert!((v.score.value() - 0.6).abs() < 1e-12);
        assert!(!v.valid);

        let k3 = complete(3);
        let proper = assign(&[("1", 1), ("2", 2), ("3", 3)]);
        let v = verdict(&k3, &proper, 3).unwrap();
        assert!(v.score.is_one() && v.valid && v.colors_used == 3);
        let v = verdict(&k3, &proper, 2).unwrap();
        assert!(v.score.is_one() && !v.valid && v.colors_used == 3);
    }

    #[test]
    fn unassigned_endpoints_count_as_violated() {
        let g = fig2();
        let v = verdict(&g, &assign(&[("A", 1), ("B", 2)]), 3).unwrap();
        assert_eq!(v.score, Score::new(1, 5));
        assert!(!v.complete && !v.valid);
        assert_eq!(v.unassigned, [2, 3, 4]);
    }

    #[test]
    fn edgeless_scores_one() {
        let g = Graph::numbered(3, []).unwrap();
        let v = verdict(&g, &assign(&[("1", 1), ("2", 1), ("3", 1)]), 1).unwrap();
        assert!(v.score.is_one() && v.valid);
        let v = verdict(&g, &ColorAssignment::new(), 1).unwrap();
        assert!(v.score.is_one() && !v.valid);
    }

    #[test]
    fn zero_color_rejected() {
        assert_eq!(ColorAssignment::new().insert("A", 0), Err(GraphError::ZeroColor));
    }

    #[test]
    fn score_ordering_is_exact() {
        assert_eq!(Score::new(2, 4), Score::new(1, 2));
        assert!(Score::new(2, 3) > Score::new(3, 5));
        assert_eq!(Score::ONE, Score::new(7, 7));
    }

    #[test]
    fn induced_subgraph_keeps_order() {
        let g = fig2();
        let h = g.induced_subgraph(&[3, 2, 0]);
        assert_eq!(h.labels(), ["A", "C", "D"]);
        assert_eq!(h.edge_count(), 2);
    }
}
