//! Exact deciders for desk-scale instances.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};

mod boolean_small;
mod chromatic;
mod dimension;

pub use boolean_small::{
    decide_boolean_dimension_small, decide_boolean_dimension_small_with, MAX_SMALL_ARITY, MAX_SMALL_N,
};
pub use chromatic::{degeneracy_order, exact_chromatic_number, exact_coloring, greedy_coloring, is_proper_coloring};
pub use dimension::{decide_dimension, decide_local_dimension_low, dimension};

/// Default wall-clock budget per decision.
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(60);

/// Wall-clock budget shared by one decision.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    start: Instant,
    limit: Option<Duration>,
}

impl Budget {
    pub fn new(limit: Duration) -> Self {
        Budget { start: Instant::now(), limit: Some(limit) }
    }

    pub fn unlimited() -> Self {
        Budget { start: Instant::now(), limit: None }
    }

    pub fn check(&self) -> Result<()> {
        match self.limit {
            Some(limit) if self.start.elapsed() > limit => Err(Error::Timeout(limit)),
            _ => Ok(()),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_TIMEOUT)
    }
}

/// Outcome of a decision procedure; `Yes` carries a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision<W> {
    Yes(W),
    No,
}

impl<W> Decision<W> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn witness(self) -> Option<W> {
        match self {
            Decision::Yes(w) => Some(w),
            Decision::No => None,
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Decision<V> {
        match self {
            Decision::Yes(w) => Decision::Yes(f(w)),
            Decision::No => Decision::No,
        }
    }
}
