use crate::error::{Error, Result};

/// Resource caps shared by one top-level computation.
///
/// `steps` accumulates across every engine call that receives the budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    pub max_steps: u64,
    pub max_basis: usize,
    pub steps: u64,
    pub peak_basis: usize,
}

impl Budget {
    pub const DEFAULT_STEPS: u64 = 1_000_000;
    pub const DEFAULT_BASIS: usize = 10_000;

    pub fn new(max_steps: u64, max_basis: usize) -> Self {
        Budget { max_steps, max_basis, steps: 0, peak_basis: 0 }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX, usize::MAX)
    }

    pub fn step(&mut self, n: u64) -> Result<()> {
        self.steps = self.steps.saturating_add(n);
        if self.steps > self.max_steps {
            return Err(Error::BudgetExceeded { resource: "reduction steps", limit: self.max_steps });
        }
        Ok(())
    }

    pub fn basis(&mut self, size: usize) -> Result<()> {
        if size > self.peak_basis {
            self.peak_basis = size;
        }
        if size > self.max_basis {
            return Err(Error::BudgetExceeded { resource: "basis size", limit: self.max_basis as u64 });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_STEPS, Self::DEFAULT_BASIS)
    }
}
