//! Disk representations of degree-2 contractible graphs at diameter 2,
//! built by undoing a contraction sequence one vertex at a time.

use std::collections::BTreeMap;

use crate::contraction::find_degree2_contraction_sequence;
use crate::disk::lattice::{canonicalize_pair, Point};
use crate::disk::{verify_disk, DiskRep};
use crate::error::{Error, Result};
use crate::graph::EdgeLabel::{self, Far, Near};
use crate::graph::LabeledGraph;

/// Canonical positions of `w` (with `u` at the origin) covered by the table.
pub const TABLE_DOMAIN: [Point; 8] = [(1, 0), (2, 0), (3, 0), (4, 0), (1, 1), (2, 1), (3, 1), (2, 2)];

const NEAR_NEAR: [Point; 8] = [(2, 0), (1, 0), (2, 0), (2, 0), (2, 0), (2, 0), (2, 0), (2, 0)];
const NEAR_FAR: [Point; 8] = [(0, 2), (0, 1), (0, 1), (1, 0), (-1, 0), (-1, 0), (1, 0), (1, 0)];
const FAR_FAR: [Point; 8] = [(2, 2), (1, 2), (2, 2), (2, 2), (0, 3), (0, 3), (1, 2), (0, 3)];

/// Position of `v` given `u = (0, 0)`, `w = (a, b)` and the labels of
/// `(u, v)` and `(v, w)`. The far/near case reuses the near/far row with the
/// roles of `u` and `w` exchanged.
pub fn place_vertex_table1(w: Point, uv: EdgeLabel, vw: EdgeLabel) -> Result<Point> {
    let row = TABLE_DOMAIN
        .iter()
        .position(|&p| p == w)
        .ok_or_else(|| Error::Precondition(format!("{w:?} is outside the placement table")))?;
    Ok(match (uv, vw) {
        (Near, Near) => NEAR_NEAR[row],
        (Near, Far) => NEAR_FAR[row],
        (Far, Far) => FAR_FAR[row],
        (Far, Near) => {
            let (iso, w_seen_from_w) = canonicalize_pair(w, (0, 0))?;
            iso.inverse_apply(place_vertex_table1(w_seen_from_w, Near, Far)?)
        }
    })
}

/// Replays the greedy contraction sequence backwards. The last edge of each
/// component starts at gap 2 (near) or 3 (far). A vertex removed with
/// one neighbor goes to `(2, 0)` (near) or `(0, 3)` (far) from it; one removed
/// with two neighbors is placed by the table in the frame of the pair. Edges
/// created by a contraction are treated as near.
pub fn represent_degree2_contractible(g: &LabeledGraph) -> Result<DiskRep> {
    let seq = find_degree2_contraction_sequence(g).ok_or(Error::NotContractible)?;
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut labels: BTreeMap<(usize, usize), EdgeLabel> = g.edges().iter().map(|e| ((e.u, e.v), e.label)).collect();
    let mut recorded = Vec::with_capacity(seq.steps.len());
    for step in &seq.steps {
        let v = step.contracted;
        let uv = labels.remove(&key(step.kept, v)).expect("contracted edge");
        let vw = step.other.map(|w| labels.remove(&key(v, w)).expect("second edge"));
        if let Some(w) = step.other {
            labels.entry(key(step.kept, w)).or_insert(Near);
        }
        recorded.push((uv, vw));
    }
    let n = g.vertex_count();
    let mut points: Vec<Option<Point>> = vec![None; n];
    for (step, &(uv, vw)) in seq.steps.iter().zip(&recorded).rev() {
        let u = step.kept;
        let offset = if uv.is_near() { (2, 0) } else { (0, 3) };
        if points[u].is_none() {
            // last edge of a component: the lower id goes to the origin
            let (low, high) = (u.min(step.contracted), u.max(step.contracted));
            points[low] = Some((0, 0));
            points[high] = Some(offset);
            continue;
        }
        let pu = points[u].unwrap();
        let pv = match (step.other, vw) {
            (Some(w), Some(vw)) => {
                let pw = points[w].expect("pair placed before its contracted vertex");
                let (iso, canon) = canonicalize_pair(pu, pw)?;
                iso.inverse_apply(place_vertex_table1(canon, uv, vw)?)
            }
            _ => (pu.0 + offset.0, pu.1 + offset.1),
        };
        points[step.contracted] = Some(pv);
    }
    let mut points: Vec<Point> = points.into_iter().map(|p| p.unwrap_or((0, 0))).collect();
    spread_components(g, &mut points);
    let rep = DiskRep { points, diameter: 2 };
    let report = verify_disk(g, &rep)?;
    if !report.is_valid() {
        return Err(Error::Verification(format!("placement breaks {:?}", report.violations)));
    }
    Ok(rep)
}

/// Translates components so their bounding boxes sit side by side.
fn spread_components(g: &LabeledGraph, points: &mut [Point]) {
    let mut next_x = 0;
    for comp in g.components() {
        let min_x = comp.iter().map(|&v| points[v].0).min().unwrap();
        let max_x = comp.iter().map(|&v| points[v].0).max().unwrap();
        let min_y = comp.iter().map(|&v| points[v].1).min().unwrap();
        for &v in &comp {
            points[v] = (points[v].0 - min_x + next_x, points[v].1 - min_y);
        }
        next_x += max_x - min_x + 3;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk::squared_distance;
    use crate::generators::{complete, cycle};

    #[test]
    fn table_examples() {
        assert_eq!(place_vertex_table1((1, 0), Near, Near).unwrap(), (2, 0));
        assert_eq!(place_vertex_table1((2, 0), Near, Far).unwrap(), (0, 1));
        assert_eq!(place_vertex_table1((1, 1), Far, Far).unwrap(), (0, 3));
        assert!(place_vertex_table1((3, 2), Near, Near).is_err());
    }

    #[test]
    fn swapped_rows_satisfy_their_labels() {
        for w in TABLE_DOMAIN {
            let v = place_vertex_table1(w, Far, Near).unwrap();
            assert!(squared_distance((0, 0), v) > 4);
            assert!(squared_distance(v, w) <= 4 && v != w);
        }
    }

    #[test]
    fn single_edge() {
        let g = LabeledGraph::new(2, [(0, 1, Near)]).unwrap();
        assert_eq!(represent_degree2_contractible(&g).unwrap().points, vec![(0, 0), (2, 0)]);
    }

    #[test]
    fn four_cycle_every_labeling() {
        for mask in 0..16 {
            let g = cycle(4).with_label_mask(mask);
            let rep = represent_degree2_contractible(&g).unwrap();
            assert!(verify_disk(&g, &rep).unwrap().is_valid());
        }
    }

    #[test]
    fn k4_is_rejected() {
        assert!(matches!(represent_degree2_contractible(&complete(4)), Err(Error::NotContractible)));
    }

    #[test]
    fn components_are_separated() {
        let g = LabeledGraph::new(4, [(0, 1, Far), (2, 3, Near)]).unwrap();
        let rep = represent_degree2_contractible(&g).unwrap();
        assert!(verify_disk(&g, &rep).unwrap().is_valid());
        assert_ne!(rep.points[0], rep.points[2]);
    }
}
