//! The S1 proposer interface and a seeded offline mock.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::dsatur::{solve_decision, SolveOutcome};
use crate::feedback::greedy_coloring;
use crate::graph::{ColorAssignment, Graph};
use crate::prompt::{format_assignment, parse_response, Prompt, ProposerResponse};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProposerError {
    #[error("transport error: {0}")]
    Transport(String),
    #[error("request timed out")]
    Timeout,
    #[error("malformed reply: {0}")]
    Reply(String),
}

/// Everything a proposer may look at for one call.
#[derive(Debug, Clone, Copy)]
pub struct ProposalRequest<'a> {
    pub graph: &'a Graph,
    pub k: u32,
    pub prompt: &'a Prompt,
}

/// A fast, fallible coloring proposer. Returns raw reply text.
pub trait Proposer {
    fn complete(&mut self, request: &ProposalRequest<'_>, budget: &dyn Budget) -> Result<String, ProposerError>;
}

/// Calls `proposer` and parses its reply; transport failures become
/// [`ProposerResponse::TransportError`].
pub fn propose<P: Proposer + ?Sized>(
    proposer: &mut P,
    request: &ProposalRequest<'_>,
    budget: &dyn Budget,
) -> ProposerResponse {
    match proposer.complete(request, budget) {
        Ok(text) => parse_response(&text, request.graph),
        Err(e) => ProposerResponse::TransportError(e.to_string()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProposerKind {
    Remote,
    Mock,
}

/// Base coloring the mock starts from before noise is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MockStrategy {
    /// First-fit in vertex order (may exceed `k`).
    Greedy,
    /// An exact solution when one exists, otherwise "NOT SOLVABLE".
    Exact,
    /// Always leaves the last vertex uncolored, so never valid.
    AlwaysInvalid,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProposerConfig {
    pub kind: ProposerKind,
    pub endpoint: String,
    pub model: String,
    pub api_key: Option<String>,
    pub temperature: f64,
    pub request_timeout: Duration,
    pub retries: u32,
    /// Maximum concurrent in-flight remote requests.
    pub max_in_flight: usize,
    pub mock_strategy: MockStrategy,
    /// Per-vertex probability of replacing the base color with a random one.
    pub noise: f64,
    /// Noise is multiplied by this factor once per feedback round in the prompt.
    pub noise_decay: f64,
    /// Probability of answering "NOT SOLVABLE" regardless of the instance.
    pub not_solvable_rate: f64,
    pub seed: u64,
}

impl Default for ProposerConfig {
    fn default() -> Self {
        Self {
            kind: ProposerKind::Mock,
            endpoint: "http://localhost:8000/v1/chat/completions".into(),
            model: "mistral-7b-instruct".into(),
            api_key: None,
            temperature: 0.0,
            request_timeout: Duration::from_secs(60),
            retries: 2,
            max_in_flight: 4,
            mock_strategy: MockStrategy::Greedy,
            noise: 0.0,
            noise_decay: 1.0,
            not_solvable_rate: 0.0,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConfigError {
    #[error("{name} = {value} is outside [0, 1]")]
    Probability { name: &'static str, value: f64 },
}

impl ProposerConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        for (name, value) in
            [("noise", self.noise), ("noise_decay", self.noise_decay), ("not_solvable_rate", self.not_solvable_rate)]
        {
            if !(0.0..=1.0).contains(&value) {
                return Err(ConfigError::Probability { name, value });
            }
        }
        Ok(())
    }
}

/// Offline S1 stand-in. Deterministic per seed; owns its RNG, so create one per solve.
#[derive(Debug, Clone)]
pub struct MockProposer {
    rng: ChaCha8Rng,
    strategy: MockStrategy,
    noise: f64,
    noise_decay: f64,
    not_solvable_rate: f64,
}

impl MockProposer {
    pub fn new(strategy: MockStrategy, noise: f64, seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed), strategy, noise, noise_decay: 1.0, not_solvable_rate: 0.0 }
    }

    pub fn from_config(cfg: &ProposerConfig, seed: u64) -> Result<Self, ConfigError> {
        cfg.validate()?;
        Ok(Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            strategy: cfg.mock_strategy,
            noise: cfg.noise,
            noise_decay: cfg.noise_decay,
            not_solvable_rate: cfg.not_solvable_rate,
        })
    }

    pub fn with_noise_decay(mut self, decay: f64) -> Self {
        self.noise_decay = decay;
        self
    }

    pub fn with_not_solvable_rate(mut self, rate: f64) -> Self {
        self.not_solvable_rate = rate;
        self
    }

    fn effective_noise(&self, feedback_rounds: usize) -> f64 {
        let mut noise = self.noise;
        for _ in 0..feedback_rounds {
            noise *= self.noise_decay;
        }
        noise
    }
}

impl Proposer for MockProposer {
    fn complete(&mut self, request: &ProposalRequest<'_>, budget: &dyn Budget) -> Result<String, ProposerError> {
        let graph = request.graph;
        if self.not_solvable_rate > 0.0 && self.rng.random_bool(self.not_solvable_rate) {
            return Ok("NOT SOLVABLE".into());
        }
        let mut colors: Vec<u32> = match self.strategy {
            MockStrategy::Greedy | MockStrategy::AlwaysInvalid => greedy_coloring(graph),
            MockStrategy::Exact => match solve_decision(graph, request.k, budget) {
                SolveOutcome::Sat(a) => a.to_indexed(graph).expect("solver labels come from the graph"),
                SolveOutcome::Unsat => return Ok("NOT SOLVABLE".into()),
                SolveOutcome::Timeout | SolveOutcome::Failure(_) => greedy_coloring(graph),
            },
        };
        let noise = self.effective_noise(request.prompt.feedback_rounds());
        if noise > 0.0 && request.k >= 1 {
            for c in colors.iter_mut() {
                if self.rng.random_bool(noise) {
                    *c = self.rng.random_range(1..=request.k);
                }
            }
        }
        if self.strategy == MockStrategy::AlwaysInvalid {
            colors.pop();
        }
        let assignment = ColorAssignment::from_indexed(graph, &colors);
        let body = format_assignment(graph, &assignment);
        Ok(if body.is_empty() {
            "I could not find an assignment.".to_string()
        } else {
            format!("Here is my answer:\n{body}")
        })
    }
}
