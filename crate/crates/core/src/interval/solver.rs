//! Complete decision procedure for weak unit interval representability.
//!
//! Every far edge must put one endpoint strictly more than one unit above the
//! other, so the search branches on that choice. Once all far edges are
//! oriented the constraints form a difference system
//!
//! ```text
//! near (u,v):            x_u - x_v <= 1   and   x_v - x_u <= 1
//! far, u below v:        x_u - x_v <  -1
//! ```
//!
//! which is feasible iff its constraint graph has no cycle of negative weight
//! and no zero-weight cycle through a strict edge. Weights are scaled by
//! `M = 2n` and a strict edge loses one more unit, i.e. `c - 1/(2n)`; a simple
//! cycle has at most `n` strict edges, so the scaled cycle sum is negative
//! exactly when the exact cycle is infeasible. The same scaled shortest-path
//! distances divided by `M` give the coordinates.

use rayon::prelude::*;

use crate::graph::LabeledGraph;
use crate::interval::rep::{verify_interval, IntervalRep};
use crate::rational::Q;

const INF: i64 = i64::MAX / 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FarDirection {
    UAboveV,
    VAboveU,
}

/// One direction per far edge `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FarOrientation {
    pub directions: Vec<((usize, usize), FarDirection)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntervalDecision {
    Sat(IntervalRep),
    Unsat,
}

impl IntervalDecision {
    pub fn is_sat(&self) -> bool {
        matches!(self, IntervalDecision::Sat(_))
    }

    pub fn witness(&self) -> Option<&IntervalRep> {
        match self {
            IntervalDecision::Sat(rep) => Some(rep),
            IntervalDecision::Unsat => None,
        }
    }
}

/// All-pairs shortest distances of the scaled constraint graph, kept closed
/// under insertion of single constraints.
#[derive(Clone)]
struct Closure {
    n: usize,
    dist: Vec<i64>,
}

impl Closure {
    fn new(n: usize) -> Self {
        let mut dist = vec![INF; n * n];
        for i in 0..n {
            dist[i * n + i] = 0;
        }
        Closure { n, dist }
    }

    /// Adds the constraint `x_to <= x_from + weight`. Returns false, leaving
    /// the closure unusable, if it closes an infeasible cycle.
    fn add(&mut self, from: usize, to: usize, weight: i64) -> bool {
        let n = self.n;
        let back = self.dist[to * n + from];
        if back < INF && back + weight < 0 {
            return false;
        }
        if self.dist[from * n + to] <= weight {
            return true;
        }
        let col_from: Vec<i64> = (0..n).map(|i| self.dist[i * n + from]).collect();
        let row_to: Vec<i64> = self.dist[to * n..to * n + n].to_vec();
        for (i, &to_from) in col_from.iter().enumerate() {
            if to_from >= INF {
                continue;
            }
            let row = &mut self.dist[i * n..i * n + n];
            for (j, &rest) in row_to.iter().enumerate() {
                if rest >= INF {
                    continue;
                }
                let via = to_from + weight + rest;
                if via < row[j] {
                    row[j] = via;
                }
            }
        }
        true
    }

    /// Potentials from a virtual source joined to every vertex at weight 0,
    /// shifted so the smallest is 0.
    fn potentials(&self) -> Vec<i64> {
        let n = self.n;
        let raw: Vec<i64> = (0..n).map(|v| (0..n).map(|u| self.dist[u * n + v]).min().unwrap_or(0).min(0)).collect();
        let low = raw.iter().copied().min().unwrap_or(0);
        raw.into_iter().map(|x| x - low).collect()
    }
}

struct Problem {
    scale: i64,
    near: Vec<(usize, usize)>,
    far: Vec<(usize, usize)>,
}

impl Problem {
    fn new(g: &LabeledGraph) -> Self {
        let n = g.vertex_count();
        let mut far: Vec<(usize, usize)> = g.far_edges().map(|e| (e.u, e.v)).collect();
        // most constrained first
        far.sort_by_key(|&(u, v)| (std::cmp::Reverse(g.degree(u) + g.degree(v)), u, v));
        Problem {
            scale: 2 * n.max(1) as i64,
            near: g.near_edges().map(|e| (e.u, e.v)).collect(),
            far,
        }
    }

    fn base(&self, n: usize) -> Closure {
        let mut closure = Closure::new(n);
        for &(u, v) in &self.near {
            let ok = closure.add(v, u, self.scale) && closure.add(u, v, self.scale);
            debug_assert!(ok, "near constraints alone are always feasible");
        }
        closure
    }

    /// `low` strictly more than one unit below `high`.
    fn orient(&self, closure: &mut Closure, low: usize, high: usize) -> bool {
        closure.add(high, low, -self.scale - 1)
    }

    fn endpoints(&self, index: usize, dir: FarDirection) -> (usize, usize) {
        let (u, v) = self.far[index];
        match dir {
            FarDirection::UAboveV => (v, u),
            FarDirection::VAboveU => (u, v),
        }
    }

    fn search(&self, depth: usize, closure: Closure, chosen: &mut Vec<FarDirection>) -> Option<Closure> {
        if depth == self.far.len() {
            return Some(closure);
        }
        // Reflecting the line flips every orientation, so the first far edge
        // can be fixed.
        let options: &[FarDirection] = if depth == 0 {
            &[FarDirection::VAboveU]
        } else {
            &[FarDirection::VAboveU, FarDirection::UAboveV]
        };
        for &dir in options {
            let mut next = closure.clone();
            let (low, high) = self.endpoints(depth, dir);
            if !self.orient(&mut next, low, high) {
                continue;
            }
            chosen.push(dir);
            if let Some(done) = self.search(depth + 1, next, chosen) {
                return Some(done);
            }
            chosen.pop();
        }
        None
    }
}

/// Decides whether `g` has a weak unit interval representation; on success
/// the witness has diameter 1 and rational coordinates with denominators
/// dividing `2n`.
pub fn decide_interval(g: &LabeledGraph) -> IntervalDecision {
    match decide_interval_with_orientation(g) {
        Some((rep, _)) => IntervalDecision::Sat(rep),
        None => IntervalDecision::Unsat,
    }
}

/// As [`decide_interval`], also returning the far-edge orientation the
/// witness realizes.
pub fn decide_interval_with_orientation(g: &LabeledGraph) -> Option<(IntervalRep, FarOrientation)> {
    let problem = Problem::new(g);
    let n = g.vertex_count();
    let mut chosen = Vec::new();
    let closure = problem.search(0, problem.base(n), &mut chosen)?;
    let rep = realize(&closure, problem.scale);
    let report = verify_interval(g, &rep).expect("witness covers every vertex");
    assert!(report.is_valid(), "solver witness violates {:?}", report.violations);
    let mut directions: Vec<_> = problem.far.iter().copied().zip(chosen).collect();
    directions.sort();
    Some((rep, FarOrientation { directions }))
}

/// Coordinates for one fixed orientation, or `None` if it is infeasible.
pub fn realize_orientation(g: &LabeledGraph, orientation: &FarOrientation) -> Option<IntervalRep> {
    let problem = Problem::new(g);
    let mut closure = problem.base(g.vertex_count());
    for &((u, v), dir) in &orientation.directions {
        let (low, high) = match dir {
            FarDirection::UAboveV => (v, u),
            FarDirection::VAboveU => (u, v),
        };
        if !problem.orient(&mut closure, low, high) {
            return None;
        }
    }
    Some(realize(&closure, problem.scale))
}

fn realize(closure: &Closure, scale: i64) -> IntervalRep {
    let coords = closure.potentials().into_iter().map(|x| Q::new(x, scale)).collect();
    IntervalRep::new(coords, Q::from_integer(1))
}

/// Every labeling of `g`'s structure (bit `i` of the mask makes edge `i` far)
/// that has no weak unit interval representation, in mask order.
pub fn find_hard_labelings(g: &LabeledGraph, max_edges: usize) -> crate::Result<Vec<LabeledGraph>> {
    let m = g.edge_count();
    if m > max_edges || m >= 63 {
        return Err(crate::Error::Precondition(format!(
            "{m} edges exceed the labeling enumeration bound of {max_edges}"
        )));
    }
    let mut hard: Vec<(u64, LabeledGraph)> = (0..1u64 << m)
        .into_par_iter()
        .filter_map(|mask| {
            let labeled = g.with_label_mask(mask);
            (!decide_interval(&labeled).is_sat()).then_some((mask, labeled))
        })
        .collect();
    hard.sort_by_key(|(mask, _)| *mask);
    Ok(hard.into_iter().map(|(_, g)| g).collect())
}

/// Default edge cap for [`find_hard_labelings`].
pub const HARD_LABELING_MAX_EDGES: usize = 20;
