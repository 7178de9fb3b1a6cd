//! Effort caps for the exhaustive searches.

/// Environment variable overriding the default bound.
pub const WORK_BOUND_ENV: &str = "WEAKREP_WORK_BOUND";

const DEFAULT_BITS: f64 = 48.0;

/// Cap on the size of a brute-force search space, in bits: a search over
/// `k^n` candidates needs `n * log2(k)` bits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WorkBound {
    pub bits: f64,
}

impl Default for WorkBound {
    fn default() -> Self {
        WorkBound { bits: DEFAULT_BITS }
    }
}

impl WorkBound {
    pub fn new(bits: f64) -> Self {
        WorkBound { bits }
    }

    /// Reads `WEAKREP_WORK_BOUND`, falling back to the default when unset or
    /// unparsable.
    pub fn from_env() -> Self {
        std::env::var(WORK_BOUND_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<f64>().ok())
            .map(WorkBound::new)
            .unwrap_or_default()
    }

    pub fn check(&self, needed: f64) -> crate::Result<()> {
        if needed > self.bits {
            Err(crate::Error::WorkBound { needed, bound: self.bits })
        } else {
            Ok(())
        }
    }
}
