//! Near/far edge-labeled simple graphs and the structural queries the
//! representation algorithms rely on.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Label of an edge: the endpoints' balls must intersect (`Near`) or be
/// disjoint (`Far`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeLabel {
    Near,
    Far,
}

impl EdgeLabel {
    pub fn symbol(self) -> char {
        match self {
            EdgeLabel::Near => 'N',
            EdgeLabel::Far => 'F',
        }
    }

    pub fn from_symbol(symbol: &str) -> Option<Self> {
        match symbol {
            "N" => Some(EdgeLabel::Near),
            "F" => Some(EdgeLabel::Far),
            _ => None,
        }
    }

    pub fn is_near(self) -> bool {
        self == EdgeLabel::Near
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub label: EdgeLabel,
}

impl Edge {
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A 2-connected piece of a graph (or a bridge, which has two vertices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }
}

/// Simple undirected graph with a total near/far edge labeling.
///
/// Edges are stored with `u < v` and sorted, so two graphs are equal exactly
/// when they have the same vertex count, edge set and labels.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(usize, EdgeLabel)>>,
}

impl PartialEq for LabeledGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for LabeledGraph {}

impl LabeledGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize, EdgeLabel)>) -> Result<Self> {
        let mut list = Vec::new();
        for (a, b, label) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!("edge ({a},{b}) out of range for {n} vertices")));
            }
            list.push(Edge { u: a.min(b), v: a.max(b), label });
        }
        list.sort();
        for pair in list.windows(2) {
            if (pair[0].u, pair[0].v) == (pair[1].u, pair[1].v) {
                return Err(Error::InvalidGraph(format!("parallel edge ({},{})", pair[0].u, pair[0].v)));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for e in &list {
            adj[e.u].push((e.v, e.label));
            adj[e.v].push((e.u, e.label));
        }
        for row in &mut adj {
            row.sort();
        }
        Ok(LabeledGraph { n, edges: list, adj })
    }

    /// Graph with every edge labeled near; used for structures whose labels
    /// are assigned later.
    pub fn unlabeled(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::new(n, pairs.into_iter().map(|(a, b)| (a, b, EdgeLabel::Near)))
    }

    pub fn empty(n: usize) -> Self {
        LabeledGraph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|e| (e.u, e.v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn labeled_neighbors(&self, v: usize) -> &[(usize, EdgeLabel)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn label(&self, a: usize, b: usize) -> Option<EdgeLabel> {
        self.adj
            .get(a)?
            .binary_search_by_key(&b, |&(w, _)| w)
            .ok()
            .map(|i| self.adj[a][i].1)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.label(a, b).is_some()
    }

    pub fn labels(&self) -> Vec<EdgeLabel> {
        self.edges.iter().map(|e| e.label).collect()
    }

    /// Same structure, labels taken from `labels` in canonical edge order.
    pub fn with_labels(&self, labels: &[EdgeLabel]) -> Self {
        assert_eq!(labels.len(), self.edges.len(), "one label per edge");
        let edges = self.edges.iter().zip(labels).map(|(e, &l)| (e.u, e.v, l));
        Self::new(self.n, edges).expect("structure already valid")
    }

    /// Labeling number `mask` of the `2^m` labelings: bit `i` set means edge
    /// `i` is far.
    pub fn with_label_mask(&self, mask: u64) -> Self {
        let labels: Vec<EdgeLabel> = (0..self.edges.len())
            .map(|i| if mask >> i & 1 == 1 { EdgeLabel::Far } else { EdgeLabel::Near })
            .collect();
        self.with_labels(&labels)
    }

    pub fn all_near(&self) -> Self {
        self.with_labels(&vec![EdgeLabel::Near; self.edges.len()])
    }

    pub fn near_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| e.label.is_near())
    }

    pub fn far_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| !e.label.is_near())
    }

    /// Subgraph induced by `vertices`, renumbered in the given order. The
    /// returned vector maps new ids to old ids.
    pub fn induced(&self, vertices: &[usize]) -> (LabeledGraph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.u] != usize::MAX && index[e.v] != usize::MAX)
            .map(|e| (index[e.u], index[e.v], e.label));
        let sub = LabeledGraph::new(vertices.len(), edges).expect("induced subgraph is simple");
        (sub, vertices.to_vec())
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for y in self.neighbors(x) {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Length of a shortest cycle, `None` when the graph is acyclic.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[x] + 1 >= b) {
                    break;
                }
                for y in self.neighbors(x) {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let len = dist[x] + dist[y] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn is_triangle_free(&self) -> bool {
        self.girth().is_none_or(|g| g > 3)
    }

    /// Biconnected components (Tarjan, iterative). Isolated vertices produce
    /// no block.
    pub fn blocks(&self) -> Vec<Block> {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0;
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut blocks = Vec::new();

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            // (vertex, parent, next neighbor index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            while let Some(&mut (x, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[x].len() {
                    let y = self.adj[x][*idx].0;
                    *idx += 1;
                    if y == parent {
                        continue;
                    }
                    if disc[y] == usize::MAX {
                        edge_stack.push((x, y));
                        disc[y] = timer;
                        low[y] = timer;
                        timer += 1;
                        stack.push((y, x, 0));
                    } else if disc[y] < disc[x] {
                        edge_stack.push((x, y));
                        low[x] = low[x].min(disc[y]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[x]);
                        if low[x] >= disc[parent] {
                            let mut edges = Vec::new();
                            while let Some(e) = edge_stack.pop() {
                                edges.push((e.0.min(e.1), e.0.max(e.1)));
                                if e == (parent, x) {
                                    break;
                                }
                            }
                            edges.sort_unstable();
                            let mut vertices: Vec<usize> =
                                edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                            vertices.sort_unstable();
                            vertices.dedup();
                            blocks.push(Block { vertices, edges });
                        }
                    }
                }
            }
        }
        blocks
    }

    pub fn articulation_points(&self) -> Vec<usize> {
        let mut count = vec![0usize; self.n];
        for block in self.blocks() {
            for v in block.vertices {
                count[v] += 1;
            }
        }
        (0..self.n).filter(|&v| count[v] > 1).collect()
    }

    /// At least three vertices, connected, no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.blocks().len() == 1
    }

    /// Text form: a header `n m`, then one `u v L` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for e in &self.edges {
            out.push_str(&format!("{} {} {}\n", e.u, e.v, e.label.symbol()));
        }
        out
    }

    /// Parses the text form. Blank lines and lines starting with `#` are
    /// skipped.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
        let nums: Vec<&str> = header.split_whitespace().collect();
        let parse_usize = |s: &str, line: usize, what: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse { line, msg: format!("bad {what} {s:?}") })
        };
        if nums.len() != 2 {
            return Err(Error::Parse { line: hline, msg: "header must be `n m`".into() });
        }
        let n = parse_usize(nums[0], hline, "vertex count")?;
        let m = parse_usize(nums[1], hline, "edge count")?;
        let mut edges = Vec::with_capacity(m);
        for (line, body) in lines {
            let fields: Vec<&str> = body.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(Error::Parse { line, msg: "edge line must be `u v L`".into() });
            }
            let u = parse_usize(fields[0], line, "vertex")?;
            let v = parse_usize(fields[1], line, "vertex")?;
            let label = EdgeLabel::from_symbol(fields[2])
                .ok_or_else(|| Error::Parse { line, msg: format!("label must be N or F, got {:?}", fields[2]) })?;
            if u >= n || v >= n {
                return Err(Error::Parse { line, msg: format!("vertex out of range 0..{n}") });
            }
            edges.push((u, v, label));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: hline,
                msg: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        LabeledGraph::new(n, edges).map_err(|e| Error::Parse { line: hline, msg: e.to_string() })
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, wheel};

    #[test]
    fn canonical_storage() {
        let a = LabeledGraph::new(3, [(2, 0, EdgeLabel::Far), (1, 0, EdgeLabel::Near)]).unwrap();
        let b = LabeledGraph::new(3, [(0, 1, EdgeLabel::Near), (0, 2, EdgeLabel::Far)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edges()[0], Edge { u: 0, v: 1, label: EdgeLabel::Near });
        assert_eq!(a.label(2, 0), Some(EdgeLabel::Far));
        assert_eq!(a.label(1, 2), None);
    }

    #[test]
    fn rejects_loops_and_parallel_edges() {
        assert!(LabeledGraph::unlabeled(2, [(0, 0)]).is_err());
        assert!(LabeledGraph::unlabeled(2, [(0, 1), (1, 0)]).is_err());
        assert!(LabeledGraph::unlabeled(2, [(0, 2)]).is_err());
    }

    #[test]
    fn girth_examples() {
        assert_eq!(wheel(5).girth(), Some(3));
        assert_eq!(cycle(5).girth(), Some(5));
        assert_eq!(path(6).girth(), None);
        assert_eq!(complete(4).girth(), Some(3));
        assert_eq!(cycle(13).girth(), Some(13));
    }

    #[test]
    fn blocks_of_two_cycles_sharing_vertex() {
        let g = LabeledGraph::unlabeled(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)]).unwrap();
        let blocks = g.blocks();
        assert_eq!(blocks.len(), 2);
        assert_eq!(g.articulation_points(), vec![0]);
        assert!(!g.is_biconnected());
        assert!(cycle(5).is_biconnected());
        let p = path(3);
        assert_eq!(p.blocks().len(), 2);
        assert!(p.blocks().iter().all(Block::is_bridge));
    }

    #[test]
    fn text_round_trip_and_errors() {
        let g = wheel(5).with_label_mask(0b1010_0101);
        let text = g.to_text();
        assert_eq!(LabeledGraph::from_text(&text).unwrap(), g);
        assert!(matches!(LabeledGraph::from_text("2 1\n0 1 X\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(LabeledGraph::from_text("2 2\n0 1 N\n"), Err(Error::Parse { .. })));
        assert!(matches!(LabeledGraph::from_text("2 1\n0 5 N\n"), Err(Error::Parse { line: 2, .. })));
    }
}
