//! Bounded brute-force search for disk representations on a lattice box.

use crate::disk::lattice::Point;
use crate::disk::{squared_distance, DiskRep};
use crate::error::Result;
use crate::graph::LabeledGraph;
use crate::report::GridOutcome;
use crate::work::WorkBound;

/// Tries every placement in `[-r, r]^2` at diameter 2, with distinct
/// endpoints on every edge. The box is symmetric, so the first vertex is
/// restricted to the cone `0 <= y <= x`.
pub fn grid_disk_oracle(g: &LabeledGraph, grid_radius: i64, bound: WorkBound) -> Result<GridOutcome<DiskRep>> {
    let n = g.vertex_count();
    let side = (2 * grid_radius + 1).max(1);
    bound.check(n as f64 * ((side * side) as f64).log2())?;
    let mut cells: Vec<Point> = (-grid_radius..=grid_radius)
        .flat_map(|x| (-grid_radius..=grid_radius).map(move |y| (x, y)))
        .collect();
    cells.sort_by_key(|&p| (squared_distance(p, (0, 0)), p));
    let order = bfs_order(g);
    let mut points = vec![None; n];
    let found = search(g, &order, &cells, &mut points);
    Ok(if found {
        GridOutcome::Sat(DiskRep { points: points.into_iter().map(Option::unwrap).collect(), diameter: 2 })
    } else {
        GridOutcome::UnknownUnsat
    })
}

fn bfs_order(g: &LabeledGraph) -> Vec<usize> {
    g.components()
        .into_iter()
        .flat_map(|comp| {
            let dist = g.distances_from(comp[0]);
            let mut comp = comp;
            comp.sort_by_key(|&v| (dist[v], v));
            comp
        })
        .collect()
}

fn search(g: &LabeledGraph, order: &[usize], cells: &[Point], points: &mut [Option<Point>]) -> bool {
    let depth = points.iter().filter(|p| p.is_some()).count();
    let Some(&v) = order.get(depth) else { return true };
    for &p in cells {
        if depth == 0 && !(0 <= p.1 && p.1 <= p.0) {
            continue;
        }
        let fits = g.labeled_neighbors(v).iter().all(|&(w, label)| match points[w] {
            Some(q) => {
                let d2 = squared_distance(p, q);
                d2 > 0 && (d2 <= 4) == label.is_near()
            }
            None => true,
        });
        if fits {
            points[v] = Some(p);
            if search(g, order, cells, points) {
                return true;
            }
            points[v] = None;
        }
    }
    false
}
