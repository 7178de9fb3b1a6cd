use crate::graph::Edge;

/// Outcome of checking a representation against a labeled graph: the edges
/// whose label is not realized.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub violations: Vec<Edge>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Result of a bounded brute-force search: a witness, or nothing found
/// inside the searched box (which proves nothing).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GridOutcome<W> {
    Sat(W),
    UnknownUnsat,
}

impl<W> GridOutcome<W> {
    pub fn is_sat(&self) -> bool {
        matches!(self, GridOutcome::Sat(_))
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            GridOutcome::Sat(w) => Some(w),
            GridOutcome::UnknownUnsat => None,
        }
    }
}
