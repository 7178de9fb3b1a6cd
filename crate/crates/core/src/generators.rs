//! Generators for the named instances, random test families, and the
//! unit-disk reduction transformer.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{EdgeLabel, LabeledGraph};

pub fn path(n: usize) -> LabeledGraph {
    LabeledGraph::unlabeled(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn cycle(n: usize) -> LabeledGraph {
    assert!(n >= 3, "a cycle needs three vertices");
    LabeledGraph::unlabeled(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn complete(n: usize) -> LabeledGraph {
    let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
    LabeledGraph::unlabeled(n, pairs).unwrap()
}

pub fn star(leaves: usize) -> LabeledGraph {
    LabeledGraph::unlabeled(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
}

/// Wheel `W_n`: hub 0 joined to every vertex of the rim cycle `1..n`.
pub fn wheel(n: usize) -> LabeledGraph {
    assert!(n >= 4, "wheels start at W_4");
    let rim = n - 1;
    let spokes = (1..n).map(|i| (0, i));
    let ring = (0..rim).map(|i| (1 + i, 1 + (i + 1) % rim));
    LabeledGraph::unlabeled(n, spokes.chain(ring)).unwrap()
}

/// Wheel with the labeling that admits no weak unit interval representation.
///
/// Vertex `v_i` of the usual 1-based naming is id `i - 1`, so the hub is 0 and
/// the rim is `1..n`. Far edges: the rim edge `(v_2, v_n)` and the spokes to
/// `v_3 .. v_{n-1}`; everything else is near.
pub fn gen_wheel_hard(n: usize) -> Result<LabeledGraph> {
    if n < 4 {
        return Err(Error::Precondition(format!("wheel needs n >= 4, got {n}")));
    }
    let base = wheel(n);
    let far = |u: usize, v: usize| {
        (u == 1 && v == n - 1) || (u == 0 && (2..=n - 2).contains(&v))
    };
    let labels: Vec<EdgeLabel> = base
        .edges()
        .iter()
        .map(|e| if far(e.u, e.v) { EdgeLabel::Far } else { EdgeLabel::Near })
        .collect();
    Ok(base.with_labels(&labels))
}

/// The 3-sun: triangle `a=0, b=1, c=2` with `x=3` on `ab`, `y=4` on `bc`,
/// `z=5` on `ca`. All labels near.
pub fn gen_sungraph() -> LabeledGraph {
    LabeledGraph::unlabeled(6, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)]).unwrap()
}

/// Random two-terminal series-parallel graph on `n >= 2` vertices with uniform
/// random labels. Each new vertex subdivides an edge, is added in parallel to
/// an edge as a 2-path, or hangs off an endpoint; all three keep the graph
/// free of `K_4` minors.
pub fn gen_random_series_parallel(n: usize, seed: u64) -> Result<LabeledGraph> {
    if n < 2 {
        return Err(Error::Precondition(format!("series-parallel generator needs n >= 2, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = vec![(0, 1)];
    for fresh in 2..n {
        let i = rng.gen_range(0..pairs.len());
        let (a, b) = pairs[i];
        match rng.gen_range(0..3) {
            0 => {
                pairs.swap_remove(i);
                pairs.push((a, fresh));
                pairs.push((fresh, b));
            }
            1 => {
                pairs.push((a, fresh));
                pairs.push((fresh, b));
            }
            _ => {
                let end = if rng.gen() { a } else { b };
                pairs.push((end, fresh));
            }
        }
    }
    let edges: Vec<_> = pairs
        .into_iter()
        .map(|(a, b)| (a, b, if rng.gen() { EdgeLabel::Far } else { EdgeLabel::Near }))
        .collect();
    LabeledGraph::new(n, edges)
}

/// Uniformly random labels on a fixed structure.
pub fn random_labeling(g: &LabeledGraph, seed: u64) -> LabeledGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<EdgeLabel> = (0..g.edge_count())
        .map(|_| if rng.gen() { EdgeLabel::Far } else { EdgeLabel::Near })
        .collect();
    g.with_labels(&labels)
}

/// Labeled `K_n` whose near edges are exactly the edges of `g`; `g` has a
/// unit disk representation iff the result has a weak one. Input labels are
/// ignored.
pub fn np_reduction(g: &LabeledGraph) -> LabeledGraph {
    let n = g.vertex_count();
    let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).map(|(a, b)| {
        let label = if g.has_edge(a, b) { EdgeLabel::Near } else { EdgeLabel::Far };
        (a, b, label)
    });
    LabeledGraph::new(n, edges).unwrap()
}

pub fn icosahedron() -> LabeledGraph {
    let mut pairs = Vec::new();
    for i in 0..5 {
        let up = 1 + i;
        let up_next = 1 + (i + 1) % 5;
        let low = 6 + i;
        let low_next = 6 + (i + 1) % 5;
        pairs.extend([(0, up), (up, up_next), (up, low), (up, low_next), (low, low_next), (low, 11)]);
    }
    LabeledGraph::unlabeled(12, pairs).unwrap()
}

pub fn octahedron() -> LabeledGraph {
    let pairs = (0..6).flat_map(|a| (a + 1..6).map(move |b| (a, b))).filter(|&(a, b)| b - a != 3);
    LabeledGraph::unlabeled(6, pairs).unwrap()
}

/// Random stacked triangulation (maximal planar, `3n - 6` edges) on `n >= 3`
/// vertices: repeatedly insert a vertex into a random triangular face.
pub fn stacked_triangulation(n: usize, seed: u64) -> LabeledGraph {
    assert!(n >= 3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = vec![(0, 1), (1, 2), (0, 2)];
    let mut faces = vec![[0, 1, 2], [0, 1, 2]];
    for fresh in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        pairs.extend([(a, fresh), (b, fresh), (c, fresh)]);
        faces.extend([[a, b, fresh], [b, c, fresh], [a, c, fresh]]);
    }
    LabeledGraph::unlabeled(n, pairs).unwrap()
}

/// The 3-dimensional cube graph `Q_3`.
pub fn cube_graph() -> LabeledGraph {
    let pairs = (0..8usize).flat_map(|a| (0..3).map(move |bit| (a, a ^ (1 << bit)))).filter(|&(a, b)| a < b);
    LabeledGraph::unlabeled(8, pairs).unwrap()
}

/// A planar girth-4 graph on 8 vertices with a labeling that has no weak
/// unit interval representation, found by
/// [`search_girth4_unsat`](crate::search::search_girth4_unsat).
pub fn girth4_fixture() -> LabeledGraph {
    LabeledGraph::from_text(include_str!("../fixtures/girth4_unsat.txt")).expect("fixture parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn far_set(g: &LabeledGraph) -> Vec<(usize, usize)> {
        g.far_edges().map(|e| (e.u, e.v)).collect()
    }

    #[test]
    fn hard_wheel_labelings() {
        // v_i -> id i-1
        let w4 = gen_wheel_hard(4).unwrap();
        assert_eq!(w4.edge_count(), 6);
        assert_eq!(far_set(&w4), vec![(0, 2), (1, 3)]);
        let w5 = gen_wheel_hard(5).unwrap();
        assert_eq!(far_set(&w5), vec![(0, 2), (0, 3), (1, 4)]);
        let w11 = gen_wheel_hard(11).unwrap();
        assert_eq!(w11.edge_count(), 20);
        assert_eq!(w11.far_edges().count(), 1 + 8);
        assert!(gen_wheel_hard(3).is_err());
    }

    #[test]
    fn sungraph_shape() {
        let s = gen_sungraph();
        assert_eq!(s.vertex_count(), 6);
        assert_eq!(s.edge_count(), 9);
        assert_eq!(s.girth(), Some(3));
    }

    #[test]
    fn series_parallel_generator() {
        let g2 = gen_random_series_parallel(2, 99).unwrap();
        assert_eq!(g2.edge_count(), 1);
        let a = gen_random_series_parallel(8, 1).unwrap();
        let b = gen_random_series_parallel(8, 1).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.vertex_count(), 8);
        assert!(a.is_connected());
        assert!(gen_random_series_parallel(1, 0).is_err());
    }

    #[test]
    fn reduction_examples() {
        let c4 = cycle(4);
        let k4 = np_reduction(&c4);
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.near_edges().count(), 4);
        assert_eq!(k4.far_edges().count(), 2);
        assert!(np_reduction(&complete(3)).edges().iter().all(|e| e.label.is_near()));
        assert!(np_reduction(&LabeledGraph::empty(3)).edges().iter().all(|e| !e.label.is_near()));
    }

    #[test]
    fn named_planar_graphs() {
        assert_eq!(icosahedron().edge_count(), 30);
        assert!(icosahedron().edges().iter().all(|e| e.u < 12 && e.v < 12));
        assert!((0..12).all(|v| icosahedron().degree(v) == 5));
        assert_eq!(octahedron().edge_count(), 12);
        assert!((0..6).all(|v| octahedron().degree(v) == 4));
        assert_eq!(stacked_triangulation(9, 3).edge_count(), 21);
        assert_eq!(cube_graph().edge_count(), 12);
        assert_eq!(cube_graph().girth(), Some(4));
    }
}
