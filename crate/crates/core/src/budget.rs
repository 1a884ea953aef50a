//! Time budgets for cooperative cancellation.

use core::cell::Cell;
use core::time::Duration;

/// A cooperative deadline. Solvers poll [`Budget::expired`] at every search node.
pub trait Budget {
    fn expired(&self) -> bool;

    /// Time spent since the budget was started.
    fn elapsed(&self) -> Duration;

    /// Time left, or `None` when the budget is unbounded.
    fn remaining(&self) -> Option<Duration>;

    /// Seconds since the Unix epoch, used to stamp memory records. Budgets
    /// without a wall clock report 0.
    fn unix_time(&self) -> u64 {
        0
    }
}

/// Never expires.
#[derive(Debug, Default, Clone, Copy)]
pub struct Unlimited;

impl Budget for Unlimited {
    fn expired(&self) -> bool {
        false
    }

    fn elapsed(&self) -> Duration {
        Duration::ZERO
    }

    fn remaining(&self) -> Option<Duration> {
        None
    }
}

/// Expires after a fixed number of `expired()` polls. Deterministic stand-in
/// for a wall clock in tests and `no_std` targets.
#[derive(Debug)]
pub struct NodeLimit {
    max_polls: u64,
    polls: Cell<u64>,
}

impl NodeLimit {
    pub fn new(max_polls: u64) -> Self {
        Self { max_polls, polls: Cell::new(0) }
    }

    pub fn polls(&self) -> u64 {
        self.polls.get()
    }
}

impl Budget for NodeLimit {
    fn expired(&self) -> bool {
        let used = self.polls.get();
        if used >= self.max_polls {
            return true;
        }
        self.polls.set(used + 1);
        false
    }

    fn elapsed(&self) -> Duration {
        Duration::ZERO
    }

    fn remaining(&self) -> Option<Duration> {
        None
    }
}

impl<B: Budget + ?Sized> Budget for &B {
    fn expired(&self) -> bool {
        (**self).expired()
    }

    fn elapsed(&self) -> Duration {
        (**self).elapsed()
    }

    fn remaining(&self) -> Option<Duration> {
        (**self).remaining()
    }

    fn unix_time(&self) -> u64 {
        (**self).unix_time()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_limit_expires_after_budget() {
        let b = NodeLimit::new(2);
        assert!(!b.expired());
        assert!(!b.expired());
        assert!(b.expired());
        assert!(b.expired());
        assert_eq!(b.polls(), 2);
    }
}
