//! OpenAI-compatible chat-completions client used as the S1 proposer.

use std::sync::{Arc, Condvar, Mutex};
use std::thread;
use std::time::Duration;

use serde_json::{json, Value};
use sofai_core::budget::Budget;
use sofai_core::proposer::{ProposalRequest, Proposer, ProposerConfig, ProposerError};

pub const ENV_ENDPOINT: &str = "S1_ENDPOINT";
pub const ENV_API_KEY: &str = "S1_API_KEY";
pub const ENV_MODEL: &str = "S1_MODEL";

const BACKOFF: Duration = Duration::from_millis(200);

/// Overrides endpoint, key and model from the environment when set.
pub fn config_from_env(mut cfg: ProposerConfig) -> ProposerConfig {
    if let Ok(v) = std::env::var(ENV_ENDPOINT) {
        cfg.endpoint = v;
    }
    if let Ok(v) = std::env::var(ENV_API_KEY) {
        cfg.api_key = Some(v);
    }
    if let Ok(v) = std::env::var(ENV_MODEL) {
        cfg.model = v;
    }
    cfg
}

/// Counting semaphore bounding in-flight requests.
#[derive(Debug)]
struct Gate {
    free: Mutex<usize>,
    cv: Condvar,
}

struct Permit<'a>(&'a Gate);

impl Gate {
    fn acquire(&self, budget: &dyn Budget) -> Option<Permit<'_>> {
        let mut free = self.free.lock().unwrap_or_else(|p| p.into_inner());
        while *free == 0 {
            if budget.expired() {
                return None;
            }
            let wait = budget.remaining().unwrap_or(Duration::from_secs(1)).min(Duration::from_millis(50));
            free = self.cv.wait_timeout(free, wait).unwrap_or_else(|p| p.into_inner()).0;
        }
        *free -= 1;
        Some(Permit(self))
    }
}

impl Drop for Permit<'_> {
    fn drop(&mut self) {
        *self.0.free.lock().unwrap_or_else(|p| p.into_inner()) += 1;
        self.0.cv.notify_one();
    }
}

/// Cloning shares the connection pool and the in-flight limit.
#[derive(Clone)]
pub struct RemoteProposer {
    cfg: Arc<ProposerConfig>,
    agent: ureq::Agent,
    gate: Arc<Gate>,
}

impl std::fmt::Debug for RemoteProposer {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RemoteProposer")
            .field("endpoint", &self.cfg.endpoint)
            .field("model", &self.cfg.model)
            .finish_non_exhaustive()
    }
}

enum Attempt {
    Done(Result<String, ProposerError>),
    Retry(ProposerError),
}

impl RemoteProposer {
    pub fn new(cfg: ProposerConfig) -> Self {
        let agent = ureq::Agent::config_builder().http_status_as_error(false).build().into();
        let gate = Gate { free: Mutex::new(cfg.max_in_flight.max(1)), cv: Condvar::new() };
        Self { cfg: Arc::new(cfg), agent, gate: Arc::new(gate) }
    }

    pub fn config(&self) -> &ProposerConfig {
        &self.cfg
    }

    fn attempt(&self, body: &Value, timeout: Duration) -> Attempt {
        let mut req = self.agent.post(&self.cfg.endpoint).config().timeout_global(Some(timeout)).build();
        if let Some(key) = &self.cfg.api_key {
            req = req.header("Authorization", format!("Bearer {key}"));
        }
        let mut resp = match req.send_json(body) {
            Ok(r) => r,
            Err(ureq::Error::Timeout(_)) => return Attempt::Retry(ProposerError::Timeout),
            Err(e) => return Attempt::Retry(ProposerError::Transport(e.to_string())),
        };
        let status = resp.status().as_u16();
        if status == 429 || status >= 500 {
            return Attempt::Retry(ProposerError::Transport(format!("http status {status}")));
        }
        if status != 200 {
            return Attempt::Done(Err(ProposerError::Transport(format!("http status {status}"))));
        }
        let reply: Value = match resp.body_mut().read_json() {
            Ok(v) => v,
            Err(e) => return Attempt::Done(Err(ProposerError::Reply(e.to_string()))),
        };
        Attempt::Done(
            reply
                .pointer("/choices/0/message/content")
                .and_then(Value::as_str)
                .map(str::to_owned)
                .ok_or_else(|| ProposerError::Reply("missing choices[0].message.content".into())),
        )
    }
}

impl Proposer for RemoteProposer {
    /// Each try is capped by the request timeout and the budget's remaining
    /// time; transport errors, timeouts, 429 and 5xx are retried.
    fn complete(&mut self, request: &ProposalRequest<'_>, budget: &dyn Budget) -> Result<String, ProposerError> {
        let body = json!({
            "model": self.cfg.model,
            "messages": [{ "role": "user", "content": request.prompt.text() }],
            "temperature": self.cfg.temperature,
        });
        let mut last = ProposerError::Timeout;
        for attempt in 0..=self.cfg.retries {
            if attempt > 0 {
                let pause = BACKOFF * 2u32.pow(attempt - 1);
                thread::sleep(budget.remaining().map_or(pause, |r| r.min(pause)));
            }
            let timeout = budget.remaining().map_or(self.cfg.request_timeout, |r| r.min(self.cfg.request_timeout));
            if budget.expired() || timeout.is_zero() {
                return Err(ProposerError::Timeout);
            }
            let Some(_permit) = self.gate.acquire(budget) else {
                return Err(ProposerError::Timeout);
            };
            match self.attempt(&body, timeout) {
                Attempt::Done(r) => return r,
                Attempt::Retry(e) => last = e,
            }
        }
        Err(last)
    }
}
