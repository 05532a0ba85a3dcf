use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Limits for exhaustive searches.
///
/// `workers = 0` uses the global rayon pool; results never depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_candidates: u64,
    pub max_seconds: f64,
    pub exact_required: bool,
    pub workers: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self { max_candidates: 1 << 27, max_seconds: 3600.0, exact_required: false, workers: 0 }
    }
}

impl SearchBudget {
    pub fn new(max_candidates: u64, max_seconds: f64, exact_required: bool) -> Result<Self> {
        let b = Self { max_candidates, max_seconds, exact_required, workers: 0 };
        b.validate()?;
        Ok(b)
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_candidates == 0 {
            return Err(Error::Malformed("max_candidates must be positive".into()));
        }
        if !(self.max_seconds > 0.0) {
            return Err(Error::Malformed(format!("max_seconds must be positive, got {}", self.max_seconds)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<W> {
    Found(W),
    /// Every candidate was examined and none qualified.
    ExhaustedNone,
    BudgetExceeded(Option<W>),
}

impl<W> SearchOutcome<W> {
    pub fn kind(&self) -> &'static str {
        match self {
            SearchOutcome::Found(_) => "found",
            SearchOutcome::ExhaustedNone => "exhausted_none",
            SearchOutcome::BudgetExceeded(_) => "budget_exceeded",
        }
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            SearchOutcome::Found(w) | SearchOutcome::BudgetExceeded(Some(w)) => Some(w),
            _ => None,
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> SearchOutcome<V> {
        match self {
            SearchOutcome::Found(w) => SearchOutcome::Found(f(w)),
            SearchOutcome::ExhaustedNone => SearchOutcome::ExhaustedNone,
            SearchOutcome::BudgetExceeded(w) => SearchOutcome::BudgetExceeded(w.map(f)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchReport<W> {
    pub outcome: SearchOutcome<W>,
    pub candidates_examined: u64,
    pub elapsed: Duration,
}

impl<W> SearchReport<W> {
    /// Turns an incomplete search into an error when the budget demands exactness.
    pub(crate) fn enforce(self, budget: &SearchBudget) -> Result<Self> {
        if budget.exact_required && matches!(self.outcome, SearchOutcome::BudgetExceeded(_)) {
            return Err(Error::BudgetExceeded { examined: self.candidates_examined });
        }
        Ok(self)
    }
}
