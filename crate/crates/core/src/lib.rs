//! Graph coloring decision core.
//!
//! Everything here is `no_std` + `alloc`: graph representation and DIMACS text,
//! the exact DSATUR backtracking solver, Erdős–Rényi instance generation, S1
//! prompt rendering and response parsing, the metacognitive loop, and result
//! aggregation. Wall clocks, transports and files are supplied by the caller
//! through [`Budget`], [`Proposer`] and [`MemoryStore`].

#![no_std]

extern crate alloc;

pub mod budget;
pub mod dsatur;
pub mod feedback;
pub mod generate;
pub mod graph;
pub mod memory;
pub mod metrics;
pub mod orchestrator;
pub mod prompt;
pub mod proposer;
pub mod trend;

pub use budget::{Budget, NodeLimit, Unlimited};
pub use dsatur::{chromatic_number, select_vertex, solve_decision, ChromaticTimeout, SaturationState, SolveOutcome};
pub use feedback::{format_feedback, generate_example, FeedbackItem, FeedbackKind, GeneratedExample};
pub use generate::{build_dataset, erdos_renyi, generate_record, Dataset, GenError, GenSpec, InstanceRecord, Mix};
pub use graph::{
    detect_conflicts, parse_dimacs, parse_instance, serialize_dimacs, verdict, ColorAssignment, Conflict, Graph,
    GraphError, Instance, Label, Score, Verdict,
};
pub use memory::{
    record_id, retrieve_memory, update_memory, Attributes, EpisodicMemory, EpisodicRecord, MemoryError, MemoryStore,
    SolverKind,
};
pub use metrics::{aggregate, AggregateRow, OutcomeKind, TrialResult};
pub use orchestrator::{
    run_solver, solve_mc_s1, solve_s1, solve_s2, solve_sofai_v1, solve_sofai_v2, Context, IterationRecord,
    OrchestratorConfig, ResponseKind, SolverId, Trace, CORRECTNESS_THRESHOLD,
};
pub use prompt::{format_assignment, parse_response, render_prompt, Example, HistoryEntry, Prompt, ProposerResponse};
pub use proposer::{
    propose, MockProposer, MockStrategy, ProposalRequest, Proposer, ProposerConfig, ProposerError, ProposerKind,
};
pub use trend::{escalation_rule, trend_improved, TrendState};
