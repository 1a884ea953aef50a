//! Metacognitive control: the S1 propose/verify/feedback loop with S2 fallback.
//!
//! All solver configurations share one entry point, [`run_solver`]:
//!
//! | id           | S1 calls      | feedback | memory | S2 fallback |
//! |--------------|---------------|----------|--------|-------------|
//! | `S1`         | 1             | no       | no     | no          |
//! | `S2`         | 0             | -        | no     | always      |
//! | `SOFAI-v1`   | 1             | no       | no     | yes         |
//! | `SOFAI-v2`   | ≤ T           | yes      | yes    | yes         |
//! | `MC-S1-I<N>` | ≤ N           | yes      | yes    | no          |

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::dsatur::{solve_decision, SolveOutcome};
use crate::feedback::{format_feedback, generate_example, signature, FeedbackItem};
use crate::graph::{verdict, ColorAssignment, Graph, Score};
use crate::memory::{EpisodicRecord, MemoryError, MemoryStore, SolverKind};
use crate::prompt::{format_assignment, render_prompt, Example, HistoryEntry, ProposerResponse};
use crate::proposer::{propose, ProposalRequest, Proposer};
use crate::trend::{escalation_rule, TrendState};

/// S1 answers are accepted only at full correctness.
pub const CORRECTNESS_THRESHOLD: f64 = 1.0;

/// Longest raw reply echoed back to S1 in the attempt history.
const MAX_ECHO: usize = 400;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrchestratorConfig {
    /// Maximum S1 iterations `T`.
    pub max_iterations: usize,
    /// Retrieval distance threshold α.
    pub similarity_threshold: f64,
    /// Records retrieved from memory per instance.
    pub memory_limit: usize,
    /// Accept a bare S1 "NOT SOLVABLE" as the final answer.
    pub accept_s1_unsat: bool,
}

impl Default for OrchestratorConfig {
    fn default() -> Self {
        Self { max_iterations: 5, similarity_threshold: 0.1, memory_limit: 1, accept_s1_unsat: false }
    }
}

/// Handles the loop needs for one instance.
pub struct Context<'a> {
    pub proposer: &'a mut dyn Proposer,
    pub memory: &'a mut dyn MemoryStore,
    pub budget: &'a dyn Budget,
}

/// Solver configurations from the experimental protocol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SolverId {
    S1,
    S2,
    SofaiV1,
    SofaiV2,
    /// S1 with 1..=5 feedback iterations and no S2 fallback.
    McS1(u8),
}

impl fmt::Display for SolverId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverId::S1 => f.write_str("S1"),
            SolverId::S2 => f.write_str("S2"),
            SolverId::SofaiV1 => f.write_str("SOFAI-v1"),
            SolverId::SofaiV2 => f.write_str("SOFAI-v2"),
            SolverId::McS1(n) => write!(f, "MC-S1-I{n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown solver id {0:?}; expected S1, S2, SOFAI-v1, SOFAI-v2 or MC-S1-I1..MC-S1-I5")]
pub struct UnknownSolver(pub String);

impl core::str::FromStr for SolverId {
    type Err = UnknownSolver;

    fn from_str(s: &str) -> Result<Self, UnknownSolver> {
        match s {
            "S1" => Ok(SolverId::S1),
            "S2" => Ok(SolverId::S2),
            "SOFAI-v1" | "SOFAI_v1" => Ok(SolverId::SofaiV1),
            "SOFAI-v2" | "SOFAI_v2" => Ok(SolverId::SofaiV2),
            _ => match s.strip_prefix("MC-S1-I").and_then(|n| n.parse::<u8>().ok()) {
                Some(n @ 1..=5) => Ok(SolverId::McS1(n)),
                _ => Err(UnknownSolver(s.to_string())),
            },
        }
    }
}

impl Serialize for SolverId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SolverId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ResponseKind {
    Assignment,
    NotSolvable,
    Unparseable,
    TransportError,
}

/// One S1 iteration as seen by the controller.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IterationRecord {
    pub iteration: usize,
    pub response: ResponseKind,
    pub score: Score,
    pub valid: bool,
    pub feedback: Vec<String>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Trace {
    pub iterations: Vec<IterationRecord>,
    pub retrieved: usize,
    pub escalated_at: Option<usize>,
    pub s2_invoked: bool,
    /// S1 answered "NOT SOLVABLE" at least once.
    pub s1_declared_unsat: bool,
    pub solved_by: Option<SolverKind>,
    /// Memory updates that were rejected or failed to persist.
    pub memory_errors: Vec<String>,
}

impl Trace {
    pub fn s1_calls(&self) -> usize {
        self.iterations.len()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Loop {
    /// SOFAI-v2: trend-based escalation, then S2.
    Escalating,
    /// MC-S1-I<N>: exactly up to N attempts, no S2.
    Capped,
}

fn remember(
    ctx: &mut Context<'_>,
    trace: &mut Trace,
    graph: &Graph,
    k: u32,
    assignment: &ColorAssignment,
    by: SolverKind,
) {
    let record = EpisodicRecord::new(graph, k, Some(assignment.clone()), by, ctx.budget.unix_time());
    match ctx.memory.update(record) {
        // Already known from an earlier solve of the same (graph, k).
        Ok(()) | Err(MemoryError::Duplicate(_)) => {}
        Err(e) => trace.memory_errors.push(e.to_string()),
    }
}

fn run_s2(graph: &Graph, k: u32, ctx: &mut Context<'_>, trace: &mut Trace, update_memory: bool) -> SolveOutcome {
    trace.s2_invoked = true;
    let outcome = solve_decision(graph, k, ctx.budget);
    if let SolveOutcome::Sat(a) = &outcome {
        trace.solved_by = Some(SolverKind::S2);
        if update_memory {
            remember(ctx, trace, graph, k, a, SolverKind::S2);
        }
    }
    outcome
}

fn echo(text: &str) -> String {
    match text.char_indices().nth(MAX_ECHO) {
        Some((cut, _)) => {
            let mut s = text[..cut].to_string();
            s.push_str(" …");
            s
        }
        None => text.to_string(),
    }
}

fn feedback_loop(
    graph: &Graph,
    k: u32,
    cfg: &OrchestratorConfig,
    iterations: usize,
    mode: Loop,
    ctx: &mut Context<'_>,
) -> (SolveOutcome, Trace) {
    let mut trace = Trace::default();
    let retrieved: Vec<Example> = ctx
        .memory
        .retrieve(graph, k, cfg.similarity_threshold, cfg.memory_limit)
        .into_iter()
        .filter_map(|r| Some(Example::Memory { graph: r.graph().ok()?, solution: r.solution }))
        .collect();
    trace.retrieved = retrieved.len();
    let mut examples = retrieved.clone();
    let mut history: Vec<HistoryEntry> = Vec::new();
    let mut trend = TrendState::default();

    for t in 1..=iterations {
        if ctx.budget.expired() {
            return (SolveOutcome::Timeout, trace);
        }
        let prompt = render_prompt(graph, k, &examples, &history);
        let response = propose(ctx.proposer, &ProposalRequest { graph, k, prompt: &prompt }, ctx.budget);

        let (kind, assignment, submission) = match &response {
            ProposerResponse::Assignment(a) => (ResponseKind::Assignment, a.clone(), format_assignment(graph, a)),
            ProposerResponse::NotSolvable => (ResponseKind::NotSolvable, ColorAssignment::new(), "NOT SOLVABLE".into()),
            ProposerResponse::Unparseable(raw) => (ResponseKind::Unparseable, ColorAssignment::new(), echo(raw)),
            ProposerResponse::TransportError(e) => (ResponseKind::TransportError, ColorAssignment::new(), echo(e)),
        };
        let check = verdict(graph, &assignment, k).expect("parsed pairs name graph vertices");
        let mut record = IterationRecord {
            iteration: t,
            response: kind,
            score: check.score,
            valid: check.valid,
            feedback: Vec::new(),
            elapsed: ctx.budget.elapsed(),
        };

        if kind == ResponseKind::Assignment && check.valid && check.score.value() >= CORRECTNESS_THRESHOLD {
            trace.iterations.push(record);
            trace.solved_by = Some(SolverKind::S1);
            remember(ctx, &mut trace, graph, k, &assignment, SolverKind::S1);
            return (SolveOutcome::Sat(assignment), trace);
        }

        let mut generated = None;
        let items: Vec<FeedbackItem> = match kind {
            ResponseKind::Assignment => {
                let items = format_feedback(graph, &assignment, k).expect("parsed pairs name graph vertices");
                let mut involved: Vec<usize> = check
                    .conflicts
                    .iter()
                    .flat_map(|c| [graph.index_of(&c.u), graph.index_of(&c.v)])
                    .flatten()
                    .collect();
                involved.sort_unstable();
                involved.dedup();
                let focus = if involved.is_empty() { graph.clone() } else { graph.induced_subgraph(&involved) };
                if focus.vertex_count() > 0 {
                    generated = Some(Example::Generated(generate_example(&focus)));
                }
                items
            }
            ResponseKind::NotSolvable => {
                trace.s1_declared_unsat = true;
                if cfg.accept_s1_unsat {
                    trace.iterations.push(record);
                    trace.solved_by = Some(SolverKind::S1);
                    return (SolveOutcome::Unsat, trace);
                }
                alloc::vec![FeedbackItem::unverified_unsat()]
            }
            ResponseKind::Unparseable | ResponseKind::TransportError => alloc::vec![FeedbackItem::no_assignment()],
        };

        record.feedback = items.iter().map(|i| i.message.clone()).collect();
        trace.iterations.push(record);
        history.push(HistoryEntry { submission, feedback: items.iter().map(|i| i.message.clone()).collect() });
        trend.push(check.score, signature(&items));

        if mode == Loop::Escalating && escalation_rule(&trend, t, iterations) {
            trace.escalated_at = Some(t);
            break;
        }
        examples = retrieved.clone();
        examples.extend(generated);
    }

    match mode {
        Loop::Capped => (SolveOutcome::Failure("s1-exhausted".into()), trace),
        Loop::Escalating => {
            if ctx.budget.expired() {
                return (SolveOutcome::Timeout, trace);
            }
            let outcome = run_s2(graph, k, ctx, &mut trace, true);
            (outcome, trace)
        }
    }
}

/// SOFAI-v2: memory-seeded S1 attempts with template feedback, escalating to
/// S2 on stalled improvement, repeated failures, or after `T` iterations.
pub fn solve_sofai_v2(graph: &Graph, k: u32, cfg: &OrchestratorConfig, ctx: &mut Context<'_>) -> (SolveOutcome, Trace) {
    feedback_loop(graph, k, cfg, cfg.max_iterations.max(1), Loop::Escalating, ctx)
}

/// MC-S1-I<N>: the SOFAI-v2 loop run for up to `n` attempts without trend
/// escalation or S2; unresolved instances fail with `s1-exhausted`.
pub fn solve_mc_s1(
    graph: &Graph,
    k: u32,
    cfg: &OrchestratorConfig,
    n: usize,
    ctx: &mut Context<'_>,
) -> (SolveOutcome, Trace) {
    feedback_loop(graph, k, cfg, n.max(1), Loop::Capped, ctx)
}

fn single_shot(graph: &Graph, k: u32, ctx: &mut Context<'_>, trace: &mut Trace) -> ProposerResponse {
    let prompt = render_prompt(graph, k, &[], &[]);
    let response = propose(ctx.proposer, &ProposalRequest { graph, k, prompt: &prompt }, ctx.budget);
    let (kind, assignment) = match &response {
        ProposerResponse::Assignment(a) => (ResponseKind::Assignment, a.clone()),
        ProposerResponse::NotSolvable => (ResponseKind::NotSolvable, ColorAssignment::new()),
        ProposerResponse::Unparseable(_) => (ResponseKind::Unparseable, ColorAssignment::new()),
        ProposerResponse::TransportError(_) => (ResponseKind::TransportError, ColorAssignment::new()),
    };
    let check = verdict(graph, &assignment, k).expect("parsed pairs name graph vertices");
    trace.s1_declared_unsat |= kind == ResponseKind::NotSolvable;
    trace.iterations.push(IterationRecord {
        iteration: 1,
        response: kind,
        score: check.score,
        valid: check.valid,
        feedback: Vec::new(),
        elapsed: ctx.budget.elapsed(),
    });
    match response {
        ProposerResponse::Assignment(a) if check.valid => ProposerResponse::Assignment(a),
        ProposerResponse::Assignment(_) => ProposerResponse::Unparseable(String::new()),
        other => other,
    }
}

/// SOFAI-v1: one feedback-free S1 proposal, accepted only if valid; anything
/// else goes straight to S2.
pub fn solve_sofai_v1(graph: &Graph, k: u32, cfg: &OrchestratorConfig, ctx: &mut Context<'_>) -> (SolveOutcome, Trace) {
    let mut trace = Trace::default();
    if ctx.budget.expired() {
        return (SolveOutcome::Timeout, trace);
    }
    match single_shot(graph, k, ctx, &mut trace) {
        ProposerResponse::Assignment(a) => {
            trace.solved_by = Some(SolverKind::S1);
            (SolveOutcome::Sat(a), trace)
        }
        ProposerResponse::NotSolvable if cfg.accept_s1_unsat => {
            trace.solved_by = Some(SolverKind::S1);
            (SolveOutcome::Unsat, trace)
        }
        _ => {
            if ctx.budget.expired() {
                return (SolveOutcome::Timeout, trace);
            }
            let outcome = run_s2(graph, k, ctx, &mut trace, false);
            (outcome, trace)
        }
    }
}

/// S1 alone: one proposal. A valid coloring is Sat and a "NOT SOLVABLE"
/// declaration is taken as Unsat; anything else fails.
pub fn solve_s1(graph: &Graph, k: u32, ctx: &mut Context<'_>) -> (SolveOutcome, Trace) {
    let mut trace = Trace::default();
    if ctx.budget.expired() {
        return (SolveOutcome::Timeout, trace);
    }
    let outcome = match single_shot(graph, k, ctx, &mut trace) {
        ProposerResponse::Assignment(a) => SolveOutcome::Sat(a),
        ProposerResponse::NotSolvable => SolveOutcome::Unsat,
        ProposerResponse::TransportError(e) => SolveOutcome::Failure(e),
        ProposerResponse::Unparseable(_) => SolveOutcome::Failure("s1-invalid".into()),
    };
    if !matches!(outcome, SolveOutcome::Failure(_)) {
        trace.solved_by = Some(SolverKind::S1);
    }
    (outcome, trace)
}

/// S2 alone.
pub fn solve_s2(graph: &Graph, k: u32, ctx: &mut Context<'_>) -> (SolveOutcome, Trace) {
    let mut trace = Trace::default();
    let outcome = run_s2(graph, k, ctx, &mut trace, false);
    (outcome, trace)
}

pub fn run_solver(
    id: SolverId,
    graph: &Graph,
    k: u32,
    cfg: &OrchestratorConfig,
    ctx: &mut Context<'_>,
) -> (SolveOutcome, Trace) {
    match id {
        SolverId::S1 => solve_s1(graph, k, ctx),
        SolverId::S2 => solve_s2(graph, k, ctx),
        SolverId::SofaiV1 => solve_sofai_v1(graph, k, cfg, ctx),
        SolverId::SofaiV2 => solve_sofai_v2(graph, k, cfg, ctx),
        SolverId::McS1(n) => solve_mc_s1(graph, k, cfg, n as usize, ctx),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::{NodeLimit, Unlimited};
    use crate::graph::fixtures::*;
    use crate::memory::EpisodicMemory;
    use crate::proposer::{MockProposer, MockStrategy, ProposerError};

    fn run(id: SolverId, g: &Graph, k: u32, p: &mut dyn Proposer, m: &mut EpisodicMemory) -> (SolveOutcome, Trace) {
        let mut ctx = Context { proposer: p, memory: m, budget: &Unlimited };
        run_solver(id, g, k, &OrchestratorConfig::default(), &mut ctx)
    }

    fn even_cycle() -> Graph {
        cycle(6)
    }

    #[test]
    fn perfect_mock_solves_at_first_iteration() {
        let g = even_cycle();
        let mut m = EpisodicMemory::new();
        let (out, trace) = run(SolverId::SofaiV2, &g, 2, &mut MockProposer::new(MockStrategy::Greedy, 0.0, 0), &mut m);
        assert!(verdict(&g, out_assignment(&out), 2).unwrap().valid);
        assert_eq!(trace.s1_calls(), 1);
        assert!(!trace.s2_invoked);
        assert_eq!(trace.solved_by, Some(SolverKind::S1));
        assert_eq!(m.len(), 1);
    }

    fn out_assignment(o: &SolveOutcome) -> &ColorAssignment {
        match o {
            SolveOutcome::Sat(a) => a,
            other => panic!("expected Sat, got {other:?}"),
        }
    }

    #[test]
    fn noisy_mock_escalates_and_s2_solves() {
        let g = cycle(7);
        for seed in 0..10 {
            let mut m = EpisodicMemory::new();
            let (out, trace) =
                run(SolverId::SofaiV2, &g, 3, &mut MockProposer::new(MockStrategy::Greedy, 1.0, seed), &mut m);
            assert!(verdict(&g, out_assignment(&out), 3).unwrap().valid);
            assert!(trace.s1_calls() <= 5);
            if trace.solved_by == Some(SolverKind::S2) {
                assert!(trace.s2_invoked && trace.escalated_at.is_some());
            }
        }
    }

    #[test]
    fn infeasible_instance_is_unsat() {
        let g = complete(3);
        for id in [SolverId::SofaiV2, SolverId::SofaiV1, SolverId::S2] {
            let (out, trace) =
                run(id, &g, 2, &mut MockProposer::new(MockStrategy::Greedy, 1.0, 3), &mut EpisodicMemory::new());
            assert_eq!(out, SolveOutcome::Unsat);
            assert!(trace.s2_invoked);
        }
    }

    #[test]
    fn s1_unsat_declaration_needs_flag() {
        let g = complete(3);
        let mut p = MockProposer::new(MockStrategy::Exact, 0.0, 0);
        let (out, trace) = run(SolverId::SofaiV2, &g, 2, &mut p, &mut EpisodicMemory::new());
        assert_eq!(out, SolveOutcome::Unsat);
        assert!(trace.s1_declared_unsat && trace.s2_invoked);

        let cfg = OrchestratorConfig { accept_s1_unsat: true, ..Default::default() };
        let mut m = EpisodicMemory::new();
        let mut ctx = Context { proposer: &mut p, memory: &mut m, budget: &Unlimited };
        let (out, trace) = solve_sofai_v2(&g, 2, &cfg, &mut ctx);
        assert_eq!(out, SolveOutcome::Unsat);
        assert!(!trace.s2_invoked);
        assert_eq!(trace.s1_calls(), 1);
    }

    #[test]
    fn v1_is_one_shot() {
        let g = cycle(6);
        let (out, trace) = run(
            SolverId::SofaiV1,
            &g,
            2,
            &mut MockProposer::new(MockStrategy::Greedy, 0.0, 0),
            &mut EpisodicMemory::new(),
        );
        assert!(out.is_sat() && !trace.s2_invoked && trace.s1_calls() == 1);

        let (out, trace) = run(
            SolverId::SofaiV1,
            &g,
            2,
            &mut MockProposer::new(MockStrategy::AlwaysInvalid, 0.0, 0),
            &mut EpisodicMemory::new(),
        );
        assert!(out.is_sat() && trace.s2_invoked && trace.s1_calls() == 1);
        assert!(trace.iterations[0].feedback.is_empty());
    }

    #[test]
    fn capped_loop_runs_exactly_n() {
        let g = cycle(6);
        for n in 1..=5u8 {
            let (out, trace) = run(
                SolverId::McS1(n),
                &g,
                2,
                &mut MockProposer::new(MockStrategy::AlwaysInvalid, 0.0, 0),
                &mut EpisodicMemory::new(),
            );
            assert_eq!(out, SolveOutcome::Failure("s1-exhausted".into()));
            assert_eq!(trace.s1_calls(), n as usize);
            assert!(!trace.s2_invoked);
        }
        let (out, trace) = run(
            SolverId::McS1(4),
            &g,
            2,
            &mut MockProposer::new(MockStrategy::Exact, 0.0, 0),
            &mut EpisodicMemory::new(),
        );
        assert!(out.is_sat());
        assert_eq!(trace.s1_calls(), 1);
    }

    #[test]
    fn repeated_failure_escalates_early() {
        let g = cycle(6);
        let (_, trace) = run(
            SolverId::SofaiV2,
            &g,
            2,
            &mut MockProposer::new(MockStrategy::AlwaysInvalid, 0.0, 0),
            &mut EpisodicMemory::new(),
        );
        assert_eq!(trace.escalated_at, Some(2));
        assert_eq!(trace.s1_calls(), 2);
        assert_eq!(trace.iterations[0].feedback, ["Error: Vertices 6 have no color assigned."]);
    }

    struct Down;

    impl Proposer for Down {
        fn complete(&mut self, _: &ProposalRequest<'_>, _: &dyn Budget) -> Result<String, ProposerError> {
            Err(ProposerError::Transport("connection refused".into()))
        }
    }

    #[test]
    fn transport_failure_is_a_failed_iteration() {
        let g = cycle(5);
        let (out, trace) = run(SolverId::SofaiV2, &g, 3, &mut Down, &mut EpisodicMemory::new());
        assert!(out.is_sat());
        assert_eq!(trace.iterations[0].response, ResponseKind::TransportError);
        assert!(trace.s2_invoked);
        let (out, _) = run(SolverId::S1, &g, 3, &mut Down, &mut EpisodicMemory::new());
        assert!(matches!(out, SolveOutcome::Failure(_)));
    }

    struct Recorder(Vec<String>);

    impl Proposer for Recorder {
        fn complete(&mut self, r: &ProposalRequest<'_>, _: &dyn Budget) -> Result<String, ProposerError> {
            self.0.push(r.prompt.text());
            Ok("(1 1)\n(2 1)\n(3 2)\n(4 1)\n(5 2)\n(6 1)".into())
        }
    }

    #[test]
    fn prompts_accumulate_history_and_examples() {
        let g = cycle(6);
        let mut m = EpisodicMemory::new();
        m.update(EpisodicRecord::new(
            &g,
            2,
            Some(ColorAssignment::from_indexed(&g, &[1, 2, 1, 2, 1, 2])),
            SolverKind::S2,
            0,
        ))
        .unwrap();
        let mut rec = Recorder(Vec::new());
        let cfg = OrchestratorConfig { max_iterations: 3, ..Default::default() };
        let mut ctx = Context { proposer: &mut rec, memory: &mut m, budget: &Unlimited };
        let (out, trace) = solve_mc_s1(&g, 2, &cfg, 3, &mut ctx);
        assert!(matches!(out, SolveOutcome::Failure(_)));
        assert_eq!(trace.retrieved, 1);
        let prompts = rec.0;
        assert_eq!(prompts.len(), 3);
        assert!(prompts[0].contains("Correct Solution:") && !prompts[0].contains("Previous Attempt"));
        assert!(prompts[1].contains("Previous Attempt 1:") && prompts[1].contains("Correct Coloring of Subgraph:"));
        assert!(prompts[2].contains("Previous Attempt 2:"));
        assert!(prompts[2].contains("Error: Vertices 1 and 2 are adjacent but have the same color."));
    }

    #[test]
    fn timeout_before_first_call() {
        let g = cycle(5);
        let mut p = MockProposer::new(MockStrategy::Greedy, 0.0, 0);
        let mut m = EpisodicMemory::new();
        let budget = NodeLimit::new(0);
        let mut ctx = Context { proposer: &mut p, memory: &mut m, budget: &budget };
        assert_eq!(solve_sofai_v2(&g, 3, &OrchestratorConfig::default(), &mut ctx).0, SolveOutcome::Timeout);
    }

    #[test]
    fn solver_ids_round_trip() {
        for id in [SolverId::S1, SolverId::S2, SolverId::SofaiV1, SolverId::SofaiV2, SolverId::McS1(3)] {
            assert_eq!(id.to_string().parse::<SolverId>(), Ok(id));
        }
        assert!("MC-S1-I6".parse::<SolverId>().is_err());
        assert!("S3".parse::<SolverId>().is_err());
    }
}
