use std::time::{Duration, Instant, SystemTime, UNIX_EPOCH};

use sofai_core::budget::Budget;

/// Wall-clock deadline measured from construction.
#[derive(Debug, Clone, Copy)]
pub struct WallClock {
    start: Instant,
    limit: Option<Duration>,
}

impl WallClock {
    pub fn start(limit: Duration) -> Self {
        Self { start: Instant::now(), limit: Some(limit) }
    }

    pub fn unlimited() -> Self {
        Self { start: Instant::now(), limit: None }
    }
}

impl Budget for WallClock {
    fn expired(&self) -> bool {
        self.limit.is_some_and(|l| self.start.elapsed() >= l)
    }

    fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }

    fn remaining(&self) -> Option<Duration> {
        self.limit.map(|l| l.saturating_sub(self.start.elapsed()))
    }

    fn unix_time(&self) -> u64 {
        SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_limit_is_expired() {
        let c = WallClock::start(Duration::ZERO);
        assert!(c.expired());
        assert_eq!(c.remaining(), Some(Duration::ZERO));
        assert!(!WallClock::unlimited().expired());
        assert!(c.unix_time() > 1_600_000_000);
    }
}
