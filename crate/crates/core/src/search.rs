//! Search for small planar graphs of girth 4 with a labeling that has no
//! weak unit interval representation.

use crate::enumerate::graphs_with;
use crate::error::Result;
use crate::graph::LabeledGraph;
use crate::interval::find_hard_labelings;
use crate::planarity::is_planar;
use crate::work::WorkBound;

/// Smallest vertex count first, then enumeration order; within a graph the
/// first hard labeling by edge mask. Candidates are connected triangle-free
/// planar graphs with a 4-cycle and at most `2n - 4` edges.
pub fn search_girth4_unsat(max_vertices: usize, bound: WorkBound) -> Result<Option<LabeledGraph>> {
    for n in 4..=max_vertices {
        let max_edges = 2 * n - 4;
        bound.check(max_edges as f64)?;
        let mut planar_err = None;
        let candidates = graphs_with(n, max_edges, |g| {
            g.is_triangle_free()
                && match is_planar(g, bound) {
                    Ok(p) => p,
                    Err(e) => {
                        planar_err.get_or_insert(e);
                        false
                    }
                }
        });
        if let Some(e) = planar_err {
            return Err(e);
        }
        for g in candidates.iter().filter(|g| g.is_connected() && g.girth() == Some(4)) {
            if let Some(hard) = find_hard_labelings(g, max_edges)?.into_iter().next() {
                return Ok(Some(hard));
            }
        }
    }
    Ok(None)
}
