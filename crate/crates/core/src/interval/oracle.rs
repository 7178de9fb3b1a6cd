//! Brute-force integer grid oracle: tries colorings `V -> {0..max_color}`
//! with integer thresholds `t in {0..max_color}`. A hit is a definitive
//! witness; a miss only says nothing fits on this grid.

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::interval::rep::IntervalRep;
use crate::rational::Q;
pub use crate::report::GridOutcome;
use crate::work::WorkBound;

/// Integer coloring found by the grid search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridColoring {
    pub colors: Vec<i64>,
    pub threshold: i64,
}

impl GridColoring {
    /// Interval reading with diameter `t + 1/2`, which separates near gaps
    /// (`<= t`) from far gaps (`>= t + 1`) even when `t = 0`.
    pub fn to_interval_rep(&self) -> IntervalRep {
        IntervalRep::new(
            self.colors.iter().map(|&c| Q::from_integer(c)).collect(),
            Q::new(2 * self.threshold + 1, 2),
        )
    }
}

const MAX_GRID_COLOR: u32 = 127;

pub fn grid_oracle_interval(g: &LabeledGraph, max_color: u32, bound: WorkBound) -> Result<GridOutcome<GridColoring>> {
    if max_color == 0 || max_color > MAX_GRID_COLOR {
        return Err(Error::Precondition(format!("max_color must be in 1..={MAX_GRID_COLOR}, got {max_color}")));
    }
    let n = g.vertex_count();
    bound.check(n as f64 * f64::from(max_color + 1).log2())?;
    let has_far = g.far_edges().next().is_some();
    for t in 0..=max_color {
        // a gap above t needs two colors more than t apart
        if has_far && t >= max_color {
            break;
        }
        let mut search = Csp::new(g, max_color, t);
        if let Some(colors) = search.solve() {
            return Ok(GridOutcome::Sat(GridColoring { colors, threshold: i64::from(t) }));
        }
    }
    Ok(GridOutcome::UnknownUnsat)
}

/// Forward-checking backtracking over color bitmasks.
struct Csp<'a> {
    g: &'a LabeledGraph,
    max_color: u32,
    t: u32,
    full: u128,
}

impl<'a> Csp<'a> {
    fn new(g: &'a LabeledGraph, max_color: u32, t: u32) -> Self {
        let full = if max_color == 127 { u128::MAX } else { (1u128 << (max_color + 1)) - 1 };
        Csp { g, max_color, t, full }
    }

    fn near_mask(&self, c: u32) -> u128 {
        let lo = c.saturating_sub(self.t);
        let hi = (c + self.t).min(self.max_color);
        let upto = |k: u32| if k >= 127 { u128::MAX } else { (1u128 << (k + 1)) - 1 };
        upto(hi) & !(if lo == 0 { 0 } else { upto(lo - 1) })
    }

    fn solve(&mut self) -> Option<Vec<i64>> {
        let n = self.g.vertex_count();
        let mut domains = vec![self.full; n];
        let mut colors = vec![None; n];
        if n > 0 {
            // mirror symmetry c -> max - c: the first vertex takes the lower half
            let half = self.max_color / 2;
            domains[0] &= if half >= 127 { u128::MAX } else { (1u128 << (half + 1)) - 1 };
        }
        self.extend(&mut domains, &mut colors)?;
        Some(colors.into_iter().map(|c| i64::from(c.unwrap())).collect())
    }

    fn extend(&self, domains: &mut Vec<u128>, colors: &mut Vec<Option<u32>>) -> Option<()> {
        let pick = (0..colors.len())
            .filter(|&v| colors[v].is_none())
            .min_by_key(|&v| (domains[v].count_ones(), v));
        let Some(v) = pick else { return Some(()) };
        let mut options = domains[v];
        while options != 0 {
            let c = options.trailing_zeros();
            options &= options - 1;
            let near = self.near_mask(c);
            let mut next = domains.clone();
            let mut dead = false;
            for &(w, label) in self.g.labeled_neighbors(v) {
                if colors[w].is_some() {
                    continue;
                }
                next[w] &= if label.is_near() { near } else { self.full & !near };
                if next[w] == 0 {
                    dead = true;
                    break;
                }
            }
            if dead {
                continue;
            }
            colors[v] = Some(c);
            if self.extend(&mut next, colors).is_some() {
                *domains = next;
                return Some(());
            }
            colors[v] = None;
        }
        None
    }
}
