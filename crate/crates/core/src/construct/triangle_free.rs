//! Triangle-free outerplanar graphs at diameter 2: augmentation to a
//! 2-connected supergraph, then face-by-face path filling along the weak
//! dual.

use std::collections::{BTreeMap, VecDeque};

use crate::construct::decomposition::face_path;
use crate::construct::path::assign_path;
use crate::error::{Error, Result};
use crate::graph::{EdgeLabel, LabeledGraph};
use crate::interval::{verify_interval, IntervalRep};
use crate::outerplanar::{internal_faces, outer_embedding, outer_walk};
use crate::rational::Q;

const MAX_GAP: i64 = 6;

/// Adds edges and vertices until the graph is 2-connected, staying
/// triangle-free and outerplanar. New vertices get ids from `n` upward; new
/// edges are near.
///
/// Works along the outer boundary walk: a bridge `(v, w)` walked as
/// `u, v, w, x` gets the edge `(u, x)`; otherwise a corner `a, v, b` at a
/// cut vertex gets a new path `a, z, b`. A single edge becomes a 4-cycle.
pub fn augment_to_2connected(g: &LabeledGraph) -> Result<LabeledGraph> {
    if !g.is_triangle_free() {
        return Err(Error::Triangle);
    }
    if !g.is_connected() {
        return Err(Error::Precondition("augmentation needs a connected graph".into()));
    }
    let mut n = g.vertex_count();
    let mut edges: Vec<(usize, usize, EdgeLabel)> = g.edges().iter().map(|e| (e.u, e.v, e.label)).collect();
    if n <= 1 {
        return Ok(g.clone());
    }
    if n == 2 {
        edges.extend([(1, 2, EdgeLabel::Near), (2, 3, EdgeLabel::Near), (0, 3, EdgeLabel::Near)]);
        n = 4;
    }
    loop {
        let current = LabeledGraph::new(n, edges.iter().copied())?;
        if current.is_biconnected() {
            return match outer_embedding(&current) {
                Some(_) if current.is_triangle_free() => Ok(current),
                _ => Err(Error::NotOuterplanar),
            };
        }
        let walk = outer_walk(&current).map_err(|_| Error::NotOuterplanar)?;
        let mut block_of = BTreeMap::new();
        let blocks = current.blocks();
        for (i, block) in blocks.iter().enumerate() {
            for &(a, b) in &block.edges {
                block_of.insert((a.min(b), a.max(b)), i);
            }
        }
        let block = |a: usize, b: usize| block_of[&(a.min(b), a.max(b))];
        let len = walk.len();
        let at = |i: usize| walk[i % len];
        let bridge = (0..len).find_map(|i| {
            let (u, v, w, x) = (at(i + len - 1), at(i), at(i + 1), at(i + 2));
            (blocks[block(v, w)].is_bridge() && u != w && x != v).then_some((u, x))
        });
        if let Some((u, x)) = bridge {
            edges.push((u.min(x), u.max(x), EdgeLabel::Near));
            continue;
        }
        let corner = (0..len).find_map(|i| {
            let (a, v, b) = (at(i + len - 1), at(i), at(i + 1));
            (block(a, v) != block(v, b)).then_some((a, b))
        });
        let Some((a, b)) = corner else {
            return Err(Error::NotOuterplanar);
        };
        edges.push((a, n, EdgeLabel::Near));
        edges.push((b, n, EdgeLabel::Near));
        n += 1;
    }
}

/// Integer representation at diameter 2 with every edge gap at most 6.
///
/// Each component is augmented to a 2-connected graph. Its first face gets
/// one edge at `0, 2` (near) or `0, 3` (far) and the rest of the face as a
/// filled path; every later face in breadth-first dual order is a path whose
/// two ends are already placed.
pub fn represent_triangle_free_outerplanar(g: &LabeledGraph) -> Result<IntervalRep> {
    if !g.is_triangle_free() {
        return Err(Error::Triangle);
    }
    let mut coords = vec![Q::from_integer(0); g.vertex_count()];
    for comp in g.components() {
        if comp.len() == 1 {
            continue;
        }
        let (sub, map) = g.induced(&comp);
        let placed = place_component(&augment_to_2connected(&sub)?)?;
        for (local, &orig) in map.iter().enumerate() {
            coords[orig] = placed[local];
        }
    }
    let rep = IntervalRep::new(coords, Q::from_integer(2));
    let report = verify_interval(g, &rep)?;
    if !report.is_valid() {
        return Err(Error::Verification(format!("pipeline output breaks {:?}", report.violations)));
    }
    if rep.max_adjacent_gap(g) > Q::from_integer(MAX_GAP) {
        return Err(Error::Verification("an edge gap exceeds 6".into()));
    }
    Ok(rep)
}

fn place_component(h: &LabeledGraph) -> Result<Vec<Q>> {
    let emb = outer_embedding(h).ok_or(Error::NotOuterplanar)?;
    let faces = internal_faces(h, &emb)?;
    let mut coords: Vec<Option<Q>> = vec![None; h.vertex_count()];
    let label = |a: usize, b: usize| h.label(a, b).expect("face edge");
    let fill = |coords: &mut Vec<Option<Q>>, path: &[usize]| -> Result<()> {
        let labels: Vec<EdgeLabel> = path.windows(2).map(|w| label(w[0], w[1])).collect();
        let (first, last) = (path[0], path[path.len() - 1]);
        let values = assign_path(coords[first].unwrap(), coords[last].unwrap(), &labels)?;
        for (&v, value) in path.iter().zip(values).skip(1).take(path.len() - 2) {
            if coords[v].is_some() {
                return Err(Error::InvalidEmbedding(format!("vertex {v} reached twice")));
            }
            coords[v] = Some(value);
        }
        Ok(())
    };
    let root = &faces.faces[0];
    let (c0, c1) = (root[0], root[1]);
    coords[c0] = Some(Q::from_integer(0));
    coords[c1] = Some(Q::from_integer(if label(c0, c1).is_near() { 2 } else { 3 }));
    let mut around: Vec<usize> = root[1..].to_vec();
    around.push(c0);
    fill(&mut coords, &around)?;
    let mut seen = vec![false; faces.faces.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(f) = queue.pop_front() {
        for (child, (a, b)) in faces.dual_neighbors(f) {
            if !seen[child] {
                seen[child] = true;
                queue.push_back(child);
                fill(&mut coords, &face_path(&faces.faces[child], a, b))?;
            }
        }
    }
    coords
        .into_iter()
        .enumerate()
        .map(|(v, c)| c.ok_or(Error::MissingCoordinate(v)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::cycle;
    use crate::graph::EdgeLabel::{Far, Near};

    fn bridged_squares() -> LabeledGraph {
        LabeledGraph::unlabeled(8, [(0, 1), (1, 2), (2, 3), (0, 3), (3, 4), (4, 5), (5, 6), (6, 7), (4, 7)]).unwrap()
    }

    fn squares_at_cut_vertex() -> LabeledGraph {
        LabeledGraph::unlabeled(7, [(0, 1), (1, 2), (2, 3), (0, 3), (3, 4), (4, 5), (5, 6), (3, 6)]).unwrap()
    }

    #[test]
    fn bridge_is_replaced_by_an_edge() {
        let g = bridged_squares();
        let h = augment_to_2connected(&g).unwrap();
        assert_eq!(h.vertex_count(), 8);
        assert_eq!(h.edge_count(), 10);
        assert!(h.is_biconnected());
        assert_eq!(h.girth(), Some(4));
    }

    #[test]
    fn cut_vertex_gets_a_new_path() {
        let h = augment_to_2connected(&squares_at_cut_vertex()).unwrap();
        assert_eq!(h.vertex_count(), 8);
        assert_eq!(h.edge_count(), 10);
        assert!(h.is_biconnected());
        assert!(h.is_triangle_free());
    }

    #[test]
    fn two_connected_input_is_unchanged() {
        let c = cycle(6);
        assert_eq!(augment_to_2connected(&c).unwrap(), c);
        let k2 = LabeledGraph::new(2, [(0, 1, Far)]).unwrap();
        let h = augment_to_2connected(&k2).unwrap();
        assert_eq!(h.edge_count(), 4);
        assert_eq!(h.label(0, 1), Some(Far));
    }

    #[test]
    fn trees_and_triangles() {
        let tree = crate::generators::star(4);
        assert!(augment_to_2connected(&tree).unwrap().is_biconnected());
        assert!(matches!(represent_triangle_free_outerplanar(&cycle(3)), Err(Error::Triangle)));
    }

    #[test]
    fn four_cycles() {
        for label in [Near, Far] {
            let g = cycle(4).with_labels(&[label; 4]);
            let rep = represent_triangle_free_outerplanar(&g).unwrap();
            assert!(verify_interval(&g, &rep).unwrap().is_valid());
        }
    }

    #[test]
    fn both_fixtures_every_labeling() {
        for g in [bridged_squares(), squares_at_cut_vertex()] {
            for mask in 0..1u64 << g.edge_count() {
                let labeled = g.with_label_mask(mask);
                let rep = represent_triangle_free_outerplanar(&labeled).unwrap();
                assert!(rep.max_adjacent_gap(&labeled) <= Q::from_integer(6));
            }
        }
    }
}
