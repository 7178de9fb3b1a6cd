//! Interval colorings from a decomposition into a forest and a
//! (nearly) 2-independent set.

use std::collections::VecDeque;

use crate::construct::decomposition::{validate_decomposition, validate_nearly_2independent, Decomposition};
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::interval::{verify_interval, IntervalRep};
use crate::rational::Q;

/// `iset` at 0 and the forest at `{-2, -1, 1, 2}`, diameter 1. Each tree is
/// rooted at its lowest vertex and filled in breadth-first order.
pub fn color_forest_2independent(g: &LabeledGraph, dec: &Decomposition) -> Result<IntervalRep> {
    validate_decomposition(g, dec)?;
    let values = forest_values(g, &dec.membership(g.vertex_count())?);
    finish(g, values, 1)
}

fn forest_values(g: &LabeledGraph, in_i: &[bool]) -> Vec<i64> {
    let n = g.vertex_count();
    let mut value: Vec<Option<i64>> = (0..n).map(|v| in_i[v].then_some(0)).collect();
    // 2-independence leaves each forest vertex at most one neighbor in the set
    let anchor = |u: usize| g.labeled_neighbors(u).iter().find(|(w, _)| in_i[*w]).map(|&(_, l)| l);
    for root in 0..n {
        if value[root].is_some() {
            continue;
        }
        value[root] = Some(match anchor(root) {
            Some(label) if !label.is_near() => 2,
            _ => 1,
        });
        let mut queue = VecDeque::from([root]);
        while let Some(t) = queue.pop_front() {
            let at = value[t].unwrap();
            for &(u, label) in g.labeled_neighbors(t) {
                if value[u].is_some() {
                    continue;
                }
                let pick = match anchor(u) {
                    Some(i_label) => {
                        let base = if i_label.is_near() { 1 } else { 2 };
                        if ((base - at).abs() <= 1) == label.is_near() {
                            base
                        } else {
                            -base
                        }
                    }
                    None if label.is_near() => at.signum(),
                    None => -at.signum(),
                };
                value[u] = Some(pick);
                queue.push_back(u);
            }
        }
    }
    value.into_iter().map(Option::unwrap).collect()
}

fn stretch(x: i64) -> i64 {
    match x.abs() {
        0 => 0,
        1 => 2 * x.signum(),
        _ => 5 * x.signum(),
    }
}

/// Diameter-3 coloring for a nearly 2-independent `iset`. One bad edge per
/// pair (the one at the pair's lower member) is dropped, the remaining graph
/// is colored as above and stretched to `{0, ±2, ±5}`, and each dropped edge is
/// repaired locally.
pub fn color_nearly_2independent(g: &LabeledGraph, dec: &Decomposition) -> Result<IntervalRep> {
    let pairs = validate_nearly_2independent(g, dec)?;
    let n = g.vertex_count();
    let in_i = dec.membership(n)?;
    let removed: Vec<(usize, usize)> = pairs.iter().map(|p| (p.u, p.middle)).collect();
    let reduced = LabeledGraph::new(
        n,
        g.edges()
            .iter()
            .filter(|e| !removed.iter().any(|&(x, y)| (x.min(y), x.max(y)) == (e.u, e.v)))
            .map(|e| (e.u, e.v, e.label)),
    )?;
    let mut values: Vec<i64> = forest_values(&reduced, &in_i).into_iter().map(stretch).collect();
    for &(x, y) in &removed {
        let s = values[y].signum();
        let gap = values[y].abs();
        match (g.label(x, y).expect("bad edge"), gap) {
            (label, 5) if label.is_near() => {
                values[x] = s;
                values[y] = 4 * s;
            }
            (label, 2) if !label.is_near() => {
                values[x] = -s;
                values[y] = 3 * s;
            }
            _ => {}
        }
    }
    finish(g, values, 3)
}

fn finish(g: &LabeledGraph, values: Vec<i64>, diameter: i64) -> Result<IntervalRep> {
    let rep = IntervalRep::new(values.into_iter().map(Q::from_integer).collect(), Q::from_integer(diameter));
    let report = verify_interval(g, &rep)?;
    if !report.is_valid() {
        return Err(Error::Verification(format!("coloring breaks {:?}", report.violations)));
    }
    Ok(rep)
}
