//! Planarity of small graphs by exhaustive search over rotation systems.

use crate::error::Result;
use crate::graph::LabeledGraph;
use crate::work::WorkBound;

/// Cyclic order of neighbors around each vertex.
pub type Rotation = Vec<Vec<usize>>;

/// Number of faces traced by a rotation system of a connected graph.
pub fn face_count(g: &LabeledGraph, rotation: &Rotation) -> usize {
    let n = g.vertex_count();
    let position = |v: usize, w: usize| rotation[v].iter().position(|&x| x == w).unwrap();
    let mut used: Vec<Vec<bool>> = (0..n).map(|v| vec![false; rotation[v].len()]).collect();
    let mut faces = 0;
    for v in 0..n {
        for i in 0..rotation[v].len() {
            if used[v][i] {
                continue;
            }
            faces += 1;
            // follow darts: arriving at w from a, leave along the successor of a
            let (mut a, mut k) = (v, i);
            while !used[a][k] {
                used[a][k] = true;
                let w = rotation[a][k];
                let back = position(w, a);
                k = (back + 1) % rotation[w].len();
                a = w;
            }
        }
    }
    faces
}

/// A planar rotation system for every component, if one exists. Errors when
/// the number of rotation systems exceeds the work bound.
pub fn planar_rotation(g: &LabeledGraph, bound: WorkBound) -> Result<Option<Rotation>> {
    let n = g.vertex_count();
    let bits: f64 = (0..n).map(|v| (1..g.degree(v).max(1)).map(|k| (k as f64).log2()).sum::<f64>()).sum();
    bound.check(bits)?;
    let mut rotation: Rotation = (0..n).map(|v| g.neighbors(v).collect()).collect();
    for comp in g.components() {
        let (sub, map) = g.induced(&comp);
        let target = sub.edge_count() + 2 - sub.vertex_count();
        let mut local: Rotation = (0..sub.vertex_count()).map(|v| sub.neighbors(v).collect()).collect();
        if sub.edge_count() > 0 && !search(&sub, 0, &mut local, target) {
            return Ok(None);
        }
        for (v, order) in local.into_iter().enumerate() {
            rotation[map[v]] = order.into_iter().map(|w| map[w]).collect();
        }
    }
    Ok(Some(rotation))
}

pub fn is_planar(g: &LabeledGraph, bound: WorkBound) -> Result<bool> {
    Ok(planar_rotation(g, bound)?.is_some())
}

fn search(g: &LabeledGraph, v: usize, rotation: &mut Rotation, target: usize) -> bool {
    if v == g.vertex_count() {
        return face_count(g, rotation) == target;
    }
    let d = rotation[v].len();
    if d <= 2 {
        return search(g, v + 1, rotation, target);
    }
    // fix the first neighbor, permute the rest
    let original = rotation[v].clone();
    let mut rest: Vec<usize> = original[1..].to_vec();
    let found = each_permutation(&mut rest, 0, &mut |perm| {
        rotation[v] = std::iter::once(original[0]).chain(perm.iter().copied()).collect();
        search(g, v + 1, rotation, target)
    });
    if !found {
        rotation[v] = original;
    }
    found
}

fn each_permutation(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == items.len() {
        return visit(items);
    }
    for i in k..items.len() {
        items.swap(k, i);
        if each_permutation(items, k + 1, visit) {
            return true;
        }
        items.swap(k, i);
    }
    false
}
