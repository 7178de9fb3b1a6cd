use num_traits::Signed;

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::rational::{denominator_lcm, Q};
use crate::report::VerificationReport;

/// Interval centers on the line plus the common interval length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalRep {
    pub coords: Vec<Q>,
    pub diameter: Q,
}

impl IntervalRep {
    pub fn new(coords: Vec<Q>, diameter: Q) -> Self {
        IntervalRep { coords, diameter }
    }

    pub fn from_integers(coords: &[i64], diameter: i64) -> Self {
        IntervalRep {
            coords: coords.iter().map(|&c| Q::from_integer(c)).collect(),
            diameter: Q::from_integer(diameter),
        }
    }

    /// Every coordinate and the diameter multiplied by `factor`.
    pub fn scaled(&self, factor: Q) -> Self {
        IntervalRep {
            coords: self.coords.iter().map(|c| c * factor).collect(),
            diameter: self.diameter * factor,
        }
    }

    pub fn max_adjacent_gap(&self, g: &LabeledGraph) -> Q {
        g.pairs()
            .map(|(a, b)| (self.coords[a] - self.coords[b]).abs())
            .max()
            .unwrap_or_default()
    }
}

/// Near edges need `|I(u) - I(v)| <= d`, far edges `> d`; touching intervals
/// count as intersecting.
pub fn verify_interval(g: &LabeledGraph, rep: &IntervalRep) -> Result<VerificationReport> {
    if rep.coords.len() < g.vertex_count() {
        return Err(Error::MissingCoordinate(rep.coords.len()));
    }
    let violations = g
        .edges()
        .iter()
        .filter(|e| {
            let gap = (rep.coords[e.u] - rep.coords[e.v]).abs();
            (gap <= rep.diameter) != e.label.is_near()
        })
        .copied()
        .collect();
    Ok(VerificationReport { violations })
}

/// Integer coloring `c : V -> {1..range}` with threshold `t`: near edges
/// differ by at most `t`, far edges by more.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdColoring {
    pub colors: Vec<i64>,
    pub range: i64,
    pub threshold: i64,
}

impl ThresholdColoring {
    pub fn verify(&self, g: &LabeledGraph) -> Result<VerificationReport> {
        if self.colors.len() < g.vertex_count() {
            return Err(Error::MissingCoordinate(self.colors.len()));
        }
        let violations = g
            .edges()
            .iter()
            .filter(|e| ((self.colors[e.u] - self.colors[e.v]).abs() <= self.threshold) != e.label.is_near())
            .copied()
            .collect();
        Ok(VerificationReport { violations })
    }

    pub fn in_range(&self) -> bool {
        self.range > 0 && self.threshold >= 0 && self.colors.iter().all(|&c| (1..=self.range).contains(&c))
    }

    /// Same coloring read as interval centers of length `t`.
    pub fn to_interval_rep(&self) -> IntervalRep {
        IntervalRep::from_integers(&self.colors, self.threshold)
    }
}

/// Turns a rational representation into a threshold coloring by scaling
/// with the lcm of all denominators and shifting the smallest color to 1.
pub fn to_threshold_coloring(g: &LabeledGraph, rep: &IntervalRep) -> Result<ThresholdColoring> {
    if !verify_interval(g, rep)?.is_valid() {
        return Err(Error::Precondition("representation does not realize the labeling".into()));
    }
    let n = g.vertex_count();
    let coords = &rep.coords[..n];
    let scale = denominator_lcm(coords.iter().chain(std::iter::once(&rep.diameter)));
    let scaled: Vec<i64> = coords.iter().map(|c| (c * scale).to_integer()).collect();
    let threshold = (rep.diameter * scale).to_integer();
    let low = scaled.iter().copied().min().unwrap_or(0);
    let colors: Vec<i64> = scaled.iter().map(|c| c - low + 1).collect();
    let range = colors.iter().copied().max().unwrap_or(1);
    let coloring = ThresholdColoring { colors, range, threshold };
    let report = coloring.verify(g)?;
    if !report.is_valid() || !coloring.in_range() {
        return Err(Error::Verification(format!(
            "integer coloring breaks {} edges",
            report.violations.len()
        )));
    }
    Ok(coloring)
}
