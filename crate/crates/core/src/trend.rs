//! Improvement-trend monitoring and the S2 escalation rule.

use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::Score;

/// True iff every score is strictly greater than the one before it.
pub fn trend_improved<T: PartialOrd>(scores: &[T]) -> bool {
    scores.windows(2).all(|w| w[1] > w[0])
}

/// Correctness scores and feedback signatures of completed S1 iterations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TrendState {
    pub scores: Vec<Score>,
    pub signatures: Vec<Vec<String>>,
}

impl TrendState {
    pub fn push(&mut self, score: Score, signature: Vec<String>) {
        self.scores.push(score);
        self.signatures.push(signature);
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }
}

/// Escalate after iteration `t` of at most `max_iterations` when the cap is
/// reached, the latest score did not strictly improve on the previous one, or
/// the latest two feedback signatures are identical.
pub fn escalation_rule(trend: &TrendState, t: usize, max_iterations: usize) -> bool {
    if t >= max_iterations {
        return true;
    }
    let s = &trend.scores;
    if s.len() >= 2 && !trend_improved(&s[s.len() - 2..]) {
        return true;
    }
    let g = &trend.signatures;
    g.len() >= 2 && g[g.len() - 1] == g[g.len() - 2]
}
