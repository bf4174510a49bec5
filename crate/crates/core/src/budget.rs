use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Wall-clock allowance shared by every potentially exponential search.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub const DEFAULT_SECS: u64 = 60;

    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn from_duration(limit: Duration) -> Self {
        Budget { deadline: Instant::now().checked_add(limit) }
    }

    pub fn from_secs(secs: u64) -> Self {
        Self::from_duration(Duration::from_secs(secs))
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self.deadline, Some(d) if Instant::now() >= d)
    }

    pub fn check(&self) -> Result<()> {
        if self.is_exhausted() {
            Err(Error::BudgetExceeded)
        } else {
            Ok(())
        }
    }

    pub(crate) fn meter(&self) -> Meter {
        Meter { budget: *self, ticks: 0 }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::from_secs(Self::DEFAULT_SECS)
    }
}

/// Amortizes clock reads over many search nodes.
pub(crate) struct Meter {
    budget: Budget,
    ticks: u32,
}

impl Meter {
    const STRIDE: u32 = 256;

    pub(crate) fn tick(&mut self) -> Result<()> {
        self.ticks += 1;
        if self.ticks >= Self::STRIDE {
            self.ticks = 0;
            self.budget.check()?;
        }
        Ok(())
    }
}
