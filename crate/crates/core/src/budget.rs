use std::time::{Duration, Instant};

use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("time budget of {} ms exceeded", .0.as_millis())]
pub struct BudgetExceeded(pub Duration);

/// Cooperative wall-clock budget for the exponential solvers. The clock is
/// read only every few thousand ticks.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: Option<(Instant, Duration)>,
    ticks: u32,
}

const CHECK_EVERY: u32 = 4096;

impl Budget {
    pub fn unlimited() -> Budget {
        Budget { limit: None, ticks: 0 }
    }

    pub fn new(allowance: Duration) -> Budget {
        Budget {
            limit: Some((Instant::now() + allowance, allowance)),
            ticks: 0,
        }
    }

    pub fn from_option(allowance: Option<Duration>) -> Budget {
        allowance.map_or_else(Budget::unlimited, Budget::new)
    }

    #[inline]
    pub fn tick(&mut self) -> Result<(), BudgetExceeded> {
        let Some((deadline, allowance)) = self.limit else {
            return Ok(());
        };
        self.ticks += 1;
        if self.ticks < CHECK_EVERY {
            return Ok(());
        }
        self.ticks = 0;
        if Instant::now() >= deadline {
            Err(BudgetExceeded(allowance))
        } else {
            Ok(())
        }
    }
}
