//! Filling the interior of a labeled path between two fixed endpoints at
//! diameter 2, keeping every step at most 6.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::graph::EdgeLabel;
use crate::rational::{denominator_lcm, Q};

const DIAMETER: i64 = 2;
const MAX_STEP: i64 = 6;

fn step_ok(a: Q, b: Q, label: EdgeLabel) -> bool {
    let gap = (a - b).abs();
    gap <= Q::from_integer(MAX_STEP) && (gap <= Q::from_integer(DIAMETER)) == label.is_near()
}

/// Coordinates for the path `u_1..u_n` with `u_1 = x`, `u_n = y` and
/// `labels[i]` on `(u_{i+1}, u_{i+2})`.
///
/// From four vertices on any pair with `|x - y| <= 6` works. On three
/// vertices only gaps of 2 or 3 (any labels), 4 (both near) and 6 (not both
/// near) are accepted.
pub fn assign_path(x: Q, y: Q, labels: &[EdgeLabel]) -> Result<Vec<Q>> {
    let n = labels.len() + 1;
    let gap = (x - y).abs();
    if n < 3 {
        return Err(Error::Precondition(format!("path needs at least 3 vertices, got {n}")));
    }
    if n == 3 {
        let both_near = labels.iter().all(|l| l.is_near());
        let covered = [2, 3].map(Q::from_integer).contains(&gap)
            || (gap == Q::from_integer(4) && both_near)
            || (gap == Q::from_integer(6) && !both_near);
        if !covered {
            return Err(Error::Precondition(format!("pair {x}, {y} is not guaranteed on 3 vertices")));
        }
        if let Some(mid) = short_pair_interior(x, y, labels[0], labels[1]) {
            return Ok(vec![x, mid, y]);
        }
    } else if gap > Q::from_integer(MAX_STEP) {
        return Err(Error::Precondition(format!("endpoints {x} and {y} are more than 6 apart")));
    }
    assign_path_dp(x, y, labels)
        .ok_or_else(|| Error::Infeasible(format!("no interior for {x} .. {y} with {} labels", labels.len())))
}

/// Direct rule for three vertices whose endpoints differ by 2 or 3: the
/// middle sits 2 (near) or 3 (far) from `x`, on the side of `y` exactly when
/// the second edge is near.
pub fn short_pair_interior(x: Q, y: Q, first: EdgeLabel, second: EdgeLabel) -> Option<Q> {
    let gap = (y - x).abs();
    if gap != Q::from_integer(2) && gap != Q::from_integer(3) {
        return None;
    }
    let toward = (y - x).signum();
    let side = if second.is_near() { toward } else { -toward };
    let offset = Q::from_integer(if first.is_near() { 2 } else { 3 });
    Some(x + side * offset)
}

/// Exhaustive search for interior values on `[floor(min) - 6, ceil(max) + 6]`,
/// first over the integers and then, if that fails, over multiples of
/// `1 / (L n)` with `L` the lcm of the endpoint denominators. The finer grid
/// is complete: a difference system with `n` variables whose bounds lie on
/// `(1/L) Z` and has a real solution with strict steps also has one there.
/// Among feasible choices each vertex takes the value closest to the
/// straight line from `x` to `y`, the lower one on ties.
pub fn assign_path_dp(x: Q, y: Q, labels: &[EdgeLabel]) -> Option<Vec<Q>> {
    let n = labels.len() + 1;
    if n < 2 {
        return None;
    }
    if n == 2 {
        return step_ok(x, y, labels[0]).then(|| vec![x, y]);
    }
    let fine = denominator_lcm([&x, &y]) * n as i64;
    [1, fine].into_iter().find_map(|steps| path_on_grid(x, y, labels, steps))
}

/// [`assign_path_dp`] restricted to multiples of `1 / steps`.
fn path_on_grid(x: Q, y: Q, labels: &[EdgeLabel], steps: i64) -> Option<Vec<Q>> {
    let n = labels.len() + 1;
    let lo = (x.min(y).floor().to_integer() - MAX_STEP) * steps;
    let hi = (x.max(y).ceil().to_integer() + MAX_STEP) * steps;
    let grid: Vec<Q> = (lo..=hi).map(|k| Q::new(k, steps)).collect();
    // ok[i][k]: grid value k at interior vertex i can still reach y
    let mut ok = vec![vec![false; grid.len()]; n];
    for (k, &c) in grid.iter().enumerate() {
        ok[n - 2][k] = step_ok(c, y, labels[n - 2]);
    }
    for i in (1..n - 2).rev() {
        let reachable: Vec<usize> = (0..grid.len()).filter(|&j| ok[i + 1][j]).collect();
        for k in 0..grid.len() {
            ok[i][k] = reachable.iter().any(|&j| step_ok(grid[k], grid[j], labels[i]));
        }
    }
    let mut out = vec![x];
    let mut prev = x;
    for (i, row) in ok.iter().enumerate().take(n - 1).skip(1) {
        let target = x + (y - x) * Q::new(i as i64, (n - 1) as i64);
        let best = (0..grid.len())
            .filter(|&k| row[k] && step_ok(prev, grid[k], labels[i - 1]))
            .min_by_key(|&k| ((grid[k] - target).abs(), grid[k]))?;
        prev = grid[best];
        out.push(prev);
    }
    out.push(y);
    Some(out)
}
