//! Degree-2 contraction sequences.
//!
//! A step removes a vertex of degree at most two; when it had two neighbors
//! they are joined by an edge unless already adjacent. This is the same as
//! contracting the vertex into one neighbor and dropping parallel edges.

use std::collections::BTreeSet;

use crate::graph::LabeledGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContractionStep {
    pub contracted: usize,
    pub kept: usize,
    pub other: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionSequence {
    pub steps: Vec<ContractionStep>,
}

/// Adjacency sets of the working graph during elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedGraph {
    pub alive: Vec<bool>,
    pub adj: Vec<BTreeSet<usize>>,
}

impl ReducedGraph {
    pub fn from_graph(g: &LabeledGraph) -> Self {
        let n = g.vertex_count();
        let mut adj = vec![BTreeSet::new(); n];
        for (a, b) in g.pairs() {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        ReducedGraph { alive: vec![true; n], adj }
    }

    /// Applies one step; panics if the step does not match the graph.
    pub fn apply(&mut self, step: &ContractionStep) {
        let v = step.contracted;
        assert!(self.alive[v], "vertex {v} already removed");
        let mut expected: BTreeSet<usize> = [step.kept].into_iter().collect();
        expected.extend(step.other);
        assert_eq!(self.adj[v], expected, "step does not match the neighborhood of {v}");
        for w in std::mem::take(&mut self.adj[v]) {
            self.adj[w].remove(&v);
        }
        self.alive[v] = false;
        if let Some(w) = step.other {
            self.adj[step.kept].insert(w);
            self.adj[w].insert(step.kept);
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }
}

impl ContractionSequence {
    /// Replays the sequence on `g`, returning the graph after every step
    /// (index 0 is `g` itself).
    pub fn replay(&self, g: &LabeledGraph) -> Vec<ReducedGraph> {
        let mut state = ReducedGraph::from_graph(g);
        let mut out = vec![state.clone()];
        for step in &self.steps {
            state.apply(step);
            out.push(state.clone());
        }
        out
    }
}

/// Greedy elimination: repeatedly remove the lowest-numbered vertex of degree
/// one or two, keeping its lowest-numbered neighbor. Returns `None` when the
/// process gets stuck with every remaining non-isolated vertex of degree at
/// least three.
pub fn find_degree2_contraction_sequence(g: &LabeledGraph) -> Option<ContractionSequence> {
    let mut state = ReducedGraph::from_graph(g);
    let mut steps = Vec::new();
    loop {
        let pick = (0..g.vertex_count()).find(|&v| state.alive[v] && matches!(state.adj[v].len(), 1 | 2));
        let Some(v) = pick else { break };
        let mut nbrs = state.adj[v].iter().copied();
        let kept = nbrs.next().unwrap();
        let step = ContractionStep { contracted: v, kept, other: nbrs.next() };
        state.apply(&step);
        steps.push(step);
    }
    (state.edge_count() == 0).then_some(ContractionSequence { steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, gen_random_series_parallel, gen_sungraph, wheel};

    #[test]
    fn four_cycle_reduces_in_three_steps() {
        let seq = find_degree2_contraction_sequence(&cycle(4)).unwrap();
        assert_eq!(seq.steps.len(), 3);
        let states = seq.replay(&cycle(4));
        let last = states.last().unwrap();
        assert_eq!(last.alive.iter().filter(|&&a| a).count(), 1);
    }

    #[test]
    fn k4_and_wheels_are_not_contractible() {
        // K_4 is 3-regular, so no step is ever available.
        assert!((0..4).all(|v| complete(4).degree(v) == 3));
        assert!(find_degree2_contraction_sequence(&complete(4)).is_none());
        assert!(find_degree2_contraction_sequence(&wheel(6)).is_none());
    }

    #[test]
    fn series_parallel_graphs_reduce() {
        for n in 2..=10 {
            for seed in 0..20 {
                let g = gen_random_series_parallel(n, seed).unwrap();
                let seq = find_degree2_contraction_sequence(&g).expect("series-parallel");
                assert_eq!(seq.steps.len(), n - 1);
            }
        }
        assert!(find_degree2_contraction_sequence(&gen_sungraph()).is_some());
    }

    #[test]
    fn isolated_vertices_need_no_steps() {
        let g = LabeledGraph::empty(3);
        assert_eq!(find_degree2_contraction_sequence(&g).unwrap().steps.len(), 0);
    }
}
