//! Search budgets: optional wall-clock and node limits.

use std::time::{Duration, Instant};

/// Limits on a single solver call. Exhausting either limit stops the search
/// and reports the best bounds found so far, it is never an error.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub time_limit: Option<Duration>,
    pub node_limit: Option<u64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        time_limit: None,
        node_limit: None,
    };

    pub fn unlimited() -> Self {
        Self::UNLIMITED
    }

    pub fn time_ms(ms: u64) -> Self {
        Budget {
            time_limit: Some(Duration::from_millis(ms)),
            node_limit: None,
        }
    }

    pub fn nodes(limit: u64) -> Self {
        Budget {
            time_limit: None,
            node_limit: Some(limit),
        }
    }

    pub fn with_nodes(mut self, limit: u64) -> Self {
        self.node_limit = Some(limit);
        self
    }
}

/// Per-call budget bookkeeping. One `tick` per search-tree node; the clock
/// is only consulted every 256 nodes.
pub(crate) struct Ticker {
    deadline: Option<Instant>,
    node_limit: Option<u64>,
    nodes: u64,
    exhausted: bool,
}

impl Ticker {
    pub fn start(budget: &Budget) -> Self {
        Ticker {
            deadline: budget.time_limit.map(|d| Instant::now() + d),
            node_limit: budget.node_limit,
            nodes: 0,
            exhausted: false,
        }
    }

    /// Counts a node; returns false once the budget is exhausted.
    pub fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if let Some(limit) = self.node_limit {
            if self.nodes > limit {
                self.exhausted = true;
                return false;
            }
        }
        if self.nodes & 0xff == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.exhausted = true;
                    return false;
                }
            }
        }
        true
    }

    pub fn exhausted(&self) -> bool {
        self.exhausted
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }
}
