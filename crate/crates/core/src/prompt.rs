//! S1 prompt rendering and response parsing.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::feedback::GeneratedExample;
use crate::graph::{dimacs_body, ColorAssignment, Graph};

const FINAL_INSTRUCTION: &str =
    "Please provide the color assignment for the new problem to solve, or respond with \"NOT SOLVABLE\" if it cannot be solved.";
const FINAL_INSTRUCTION_WITH_EXAMPLES: &str = "Please provide the color assignment for the new problem to solve directly below, or respond with \"NOT SOLVABLE\" if it cannot be solved.";
const MEMORY_NOTE: &str = "This example is provided to demonstrate a previously successful coloring strategy for a similar subgraph, which may be helpful in solving the current problem.";
const GENERATED_INTRO: &str =
    "To generate an example, a subgraph is extracted from the problem graph to demonstrate a valid coloring with fewer vertices.";
const GENERATED_OUTRO: &str = "This example shows how to correctly assign colors in a smaller scope of the main problem. Scaling this approach for larger graphs while maintaining the constraints is crucial.";

/// A worked example shown to S1.
#[derive(Debug, Clone, PartialEq)]
pub enum Example {
    /// A previously solved instance from episodic memory; `None` means UNSAT.
    Memory { graph: Graph, solution: Option<ColorAssignment> },
    /// A greedily colored subgraph of the current problem.
    Generated(GeneratedExample),
}

/// One earlier S1 attempt and the feedback it received.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HistoryEntry {
    /// The attempt as S1 should see it again: pairs, `NOT SOLVABLE`, or raw text.
    pub submission: String,
    pub feedback: Vec<String>,
}

/// A rendered S1 prompt, kept as ordered sections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prompt {
    pub problem: String,
    pub graph: String,
    pub objective: String,
    pub example_format: String,
    pub examples: Vec<String>,
    pub history: Vec<String>,
    pub instruction: String,
}

impl Prompt {
    /// Full prompt text; sections are separated by blank lines.
    pub fn text(&self) -> String {
        let mut parts: Vec<&str> = alloc::vec![&self.problem, &self.graph, &self.objective, &self.example_format];
        parts.extend(self.examples.iter().map(String::as_str));
        parts.extend(self.history.iter().map(String::as_str));
        parts.push(&self.instruction);
        parts.join("\n\n")
    }

    /// Number of earlier attempts with feedback included in this prompt.
    pub fn feedback_rounds(&self) -> usize {
        self.history.len()
    }
}

/// Pairs `(label color)` one per line in the graph's vertex order.
pub fn format_assignment(graph: &Graph, assignment: &ColorAssignment) -> String {
    graph.labels().iter().filter_map(|l| assignment.get(l).map(|c| format!("({l} {c})"))).collect::<Vec<_>>().join("\n")
}

fn edge_lines(graph: &Graph) -> String {
    graph
        .edges()
        .iter()
        .map(|&(u, v)| format!("e {} {}", graph.label(u), graph.label(v)))
        .collect::<Vec<_>>()
        .join("\n")
}

fn header_line(graph: &Graph) -> String {
    format!("p edge {} {}", graph.vertex_count(), graph.edge_count())
}

fn render_example(example: &Example) -> String {
    match example {
        Example::Memory { graph, solution } => {
            let solution = match solution {
                Some(a) => format_assignment(graph, a),
                None => "NOT SOLVABLE".to_string(),
            };
            format!(
                "Episodic Memory Example:\nProblem:\n{}\n\nCorrect Solution:\n{}\n\nEnd of Example\n\n{}",
                dimacs_body(graph).join("\n"),
                solution,
                MEMORY_NOTE
            )
        }
        Example::Generated(g) => {
            let mut edges = edge_lines(&g.subgraph);
            if !edges.is_empty() {
                edges.insert(0, '\n');
            }
            format!(
                "{}\n\nSubgraph Representation:\n- Subgraph vertices and edges: {}.\n- Edges between subgraph vertices are listed as follows:{}\n\nCorrect Coloring of Subgraph:\n{}\n\n{}",
                GENERATED_INTRO,
                header_line(&g.subgraph),
                edges,
                format_assignment(&g.subgraph, &g.coloring),
                GENERATED_OUTRO
            )
        }
    }
}

fn render_history(round: usize, entry: &HistoryEntry) -> String {
    format!(
        "Previous Attempt {round}:\nIncorrect Coloring Submitted:\n{}\n\nFeedback Provided:\n{}",
        entry.submission,
        entry.feedback.join("\n")
    )
}

/// Renders the coloring prompt for `graph` with `k` colors, followed by any
/// worked examples and the accumulated attempt history (oldest first).
pub fn render_prompt(graph: &Graph, k: u32, examples: &[Example], history: &[HistoryEntry]) -> Prompt {
    let problem = format!(
        "New Problem to Solve:\nYou are given an undirected graph with {k} colors available. Your task is to assign a color to each vertex such that no two adjacent vertices share the same color."
    );
    let mut graph_section = format!(
        "Graph Representation:\n- Number of vertices and edges: {}.\n- Edges between vertices are listed as follows:",
        header_line(graph)
    );
    if graph.edge_count() > 0 {
        graph_section.push('\n');
        graph_section.push_str(&edge_lines(graph));
    }
    let objective = format!(
        "Objective:\nAssign a unique color to each vertex, ensuring that no two vertices connected by an edge have the same color. Use no more than {k} distinct colors. Provide the color assignments for each vertex in the format:\n(Vertex Color)"
    );
    let sample: Vec<String> = if graph.vertex_count() == 0 {
        alloc::vec!["(A 1)".to_string()]
    } else {
        graph.labels().iter().take(3).zip([1, 2, 1]).map(|(l, c)| format!("({l} {c})")).collect()
    };
    let example_format = format!("Example Format:\n{}", sample.join("\n"));
    let instruction = if examples.is_empty() { FINAL_INSTRUCTION } else { FINAL_INSTRUCTION_WITH_EXAMPLES };
    Prompt {
        problem,
        graph: graph_section,
        objective,
        example_format,
        examples: examples.iter().map(render_example).collect(),
        history: history.iter().enumerate().map(|(i, h)| render_history(i + 1, h)).collect(),
        instruction: instruction.to_string(),
    }
}

/// What S1 answered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProposerResponse {
    Assignment(ColorAssignment),
    NotSolvable,
    Unparseable(String),
    /// The proposer could not be reached or timed out.
    TransportError(String),
}

/// Extracts every `(<vertex> <color>)` pair naming a vertex of `graph` with a
/// color ≥ 1; a repeated vertex keeps its last color. Without pairs, the
/// phrase "NOT SOLVABLE" (any case) yields [`ProposerResponse::NotSolvable`].
pub fn parse_response(text: &str, graph: &Graph) -> ProposerResponse {
    let mut assignment = ColorAssignment::new();
    let mut rest = text;
    while let Some(open) = rest.find('(') {
        rest = &rest[open + 1..];
        let Some(close) = rest.find([')', '(']) else { break };
        if rest.as_bytes()[close] == b'(' {
            continue;
        }
        let inner = &rest[..close];
        rest = &rest[close + 1..];
        let mut tokens = inner.split_whitespace();
        if let (Some(vertex), Some(color), None) = (tokens.next(), tokens.next(), tokens.next()) {
            if let (Some(_), Ok(color)) = (graph.index_of(vertex), color.parse::<u32>()) {
                if color >= 1 {
                    assignment.insert(vertex, color).expect("color checked non-zero");
                }
            }
        }
    }
    if !assignment.is_empty() {
        ProposerResponse::Assignment(assignment)
    } else if text.to_ascii_uppercase().contains("NOT SOLVABLE") {
        ProposerResponse::NotSolvable
    } else {
        ProposerResponse::Unparseable(text.to_string())
    }
}
