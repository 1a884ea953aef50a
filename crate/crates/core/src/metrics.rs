//! Per-trial results and best-of-n aggregation into success rate and average time.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::dsatur::SolveOutcome;
use crate::generate::{Label, Mix};
use crate::orchestrator::SolverId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutcomeKind {
    Sat,
    Unsat,
    Timeout,
    Failure,
}

impl From<&SolveOutcome> for OutcomeKind {
    fn from(o: &SolveOutcome) -> Self {
        match o {
            SolveOutcome::Sat(_) => OutcomeKind::Sat,
            SolveOutcome::Unsat => OutcomeKind::Unsat,
            SolveOutcome::Timeout => OutcomeKind::Timeout,
            SolveOutcome::Failure(_) => OutcomeKind::Failure,
        }
    }
}

impl OutcomeKind {
    /// Whether this outcome answers an instance carrying `label`.
    pub fn matches(self, label: Label) -> bool {
        matches!((self, label), (OutcomeKind::Sat, Label::Sat) | (OutcomeKind::Unsat, Label::Unsat))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialResult {
    pub instance: String,
    pub solver: SolverId,
    pub trial: u32,
    pub n: usize,
    pub p: f64,
    pub mix: Mix,
    pub label: Label,
    pub outcome: OutcomeKind,
    pub correct: bool,
    pub wall_time_s: f64,
    pub s1_iterations: usize,
    pub s2_invoked: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AggregateRow {
    pub n: usize,
    pub p: f64,
    pub mix: Mix,
    pub solver: SolverId,
    /// Percentage of instances solved in at least one trial.
    pub success_rate: f64,
    /// Mean over solved instances of the fastest successful trial; `None`
    /// when nothing was solved.
    pub avg_time_s: Option<f64>,
    pub instances: usize,
    pub solved: usize,
}

type CellKey = (usize, u64, Mix, SolverId);

/// Best-of-n aggregation per `(n, p, mix, solver)` cell: an instance is
/// solved if any trial is correct, its time is the minimum over correct
/// trials, and the cell's average runs over solved instances only.
/// The result does not depend on input order.
pub fn aggregate(results: &[TrialResult]) -> Vec<AggregateRow> {
    let mut cells: BTreeMap<CellKey, BTreeMap<&str, Option<f64>>> = BTreeMap::new();
    for r in results {
        let key = (r.n, r.p.to_bits(), r.mix, r.solver);
        let best = cells.entry(key).or_default().entry(r.instance.as_str()).or_insert(None);
        if r.correct {
            *best = Some(best.map_or(r.wall_time_s, |t: f64| t.min(r.wall_time_s)));
        }
    }
    let mut rows: Vec<AggregateRow> = cells
        .into_iter()
        .map(|((n, p, mix, solver), instances)| {
            let times: Vec<f64> = instances.values().flatten().copied().collect();
            let solved = times.len();
            let total = instances.len();
            AggregateRow {
                n,
                p: f64::from_bits(p),
                mix,
                solver,
                success_rate: 100.0 * solved as f64 / total as f64,
                avg_time_s: (solved > 0).then(|| times.iter().sum::<f64>() / solved as f64),
                instances: total,
                solved,
            }
        })
        .collect();
    rows.sort_by(|a, b| a.n.cmp(&b.n).then(a.p.total_cmp(&b.p)).then(b.mix.cmp(&a.mix)).then(a.solver.cmp(&b.solver)));
    rows
}
