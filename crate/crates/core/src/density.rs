//! Maximum average degree and the planar edge-count certificate.

use std::collections::VecDeque;

use crate::graph::LabeledGraph;
use crate::rational::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DensityVerdict {
    WithinBound,
    ExceedsBound,
}

/// Upper bound on the edge count of a planar weak unit interval graph,
/// `floor(11 n / 4) - 6`. Only meaningful from four vertices on.
pub fn interval_edge_bound(n: usize) -> i64 {
    (11 * n as i64) / 4 - 6
}

/// `ExceedsBound` when a planar graph has more edges than any planar weak
/// unit interval graph on as many vertices can have. Planarity is the
/// caller's responsibility. Graphs on fewer than four vertices are always
/// within bound.
pub fn density_certificate(g: &LabeledGraph) -> DensityVerdict {
    let n = g.vertex_count();
    if n >= 4 && g.edge_count() as i64 > interval_edge_bound(n) {
        DensityVerdict::ExceedsBound
    } else {
        DensityVerdict::WithinBound
    }
}

/// Maximum over subgraphs `H` of `2|E(H)| / |V(H)|`, exactly.
pub fn mad(g: &LabeledGraph) -> Q {
    if g.vertex_count() <= 10 {
        mad_by_enumeration(g)
    } else {
        mad_by_flow(g)
    }
}

/// Enumerates all induced subgraphs; fine up to about 20 vertices.
pub fn mad_by_enumeration(g: &LabeledGraph) -> Q {
    let n = g.vertex_count();
    assert!(n < 64);
    let edge_masks: Vec<u64> = g.pairs().map(|(a, b)| (1u64 << a) | (1u64 << b)).collect();
    let mut best = Q::from_integer(0);
    for set in 1u64..(1u64 << n) {
        let m = edge_masks.iter().filter(|&&e| e & set == e).count() as i64;
        let density = Q::new(2 * m, set.count_ones() as i64);
        if density > best {
            best = density;
        }
    }
    best
}

/// Dinkelbach iteration over densest-subgraph max-closure problems, each
/// solved by max flow with integer capacities.
pub fn mad_by_flow(g: &LabeledGraph) -> Q {
    let n = g.vertex_count();
    let m = g.edge_count();
    if m == 0 {
        return Q::from_integer(0);
    }
    let mut density = Q::new(m as i64, n as i64);
    loop {
        let (gain, chosen) = densest_improvement(g, density);
        if gain == 0 {
            return density * 2;
        }
        let inside: Vec<bool> = chosen;
        let nv = inside.iter().filter(|&&x| x).count() as i64;
        let ne = g.pairs().filter(|&(a, b)| inside[a] && inside[b]).count() as i64;
        let next = Q::new(ne, nv);
        debug_assert!(next > density);
        density = next;
    }
}

/// Max over vertex sets `S` of `q |E(S)| - p |S|` for `lambda = p/q`, with a
/// maximizing set.
fn densest_improvement(g: &LabeledGraph, lambda: Q) -> (i64, Vec<bool>) {
    let n = g.vertex_count();
    let m = g.edge_count();
    let (p, q) = (*lambda.numer(), *lambda.denom());
    let source = 0;
    let sink = 1;
    let edge_node = |i: usize| 2 + i;
    let vertex_node = |v: usize| 2 + m + v;
    let mut net = FlowNetwork::new(2 + m + n);
    let inf = q * m as i64 + 1;
    for (i, (a, b)) in g.pairs().enumerate() {
        net.add_edge(source, edge_node(i), q);
        net.add_edge(edge_node(i), vertex_node(a), inf);
        net.add_edge(edge_node(i), vertex_node(b), inf);
    }
    for v in 0..n {
        net.add_edge(vertex_node(v), sink, p);
    }
    let flow = net.max_flow(source, sink);
    let reach = net.residual_reachable(source);
    let chosen = (0..n).map(|v| reach[vertex_node(v)]).collect();
    (q * m as i64 - flow, chosen)
}

struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork { head: vec![Vec::new(); nodes], to: Vec::new(), cap: Vec::new() }
    }

    fn add_edge(&mut self, a: usize, b: usize, c: i64) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    fn bfs_levels(&self, s: usize) -> Vec<Option<usize>> {
        let mut level = vec![None; self.head.len()];
        level[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &e in &self.head[x] {
                if self.cap[e] > 0 && level[self.to[e]].is_none() {
                    level[self.to[e]] = Some(level[x].unwrap() + 1);
                    queue.push_back(self.to[e]);
                }
            }
        }
        level
    }

    fn augment(&mut self, x: usize, t: usize, pushed: i64, level: &[Option<usize>], next: &mut [usize]) -> i64 {
        if x == t {
            return pushed;
        }
        while next[x] < self.head[x].len() {
            let e = self.head[x][next[x]];
            let y = self.to[e];
            if self.cap[e] > 0 && level[y] == level[x].map(|l| l + 1) {
                let got = self.augment(y, t, pushed.min(self.cap[e]), level, next);
                if got > 0 {
                    self.cap[e] -= got;
                    self.cap[e ^ 1] += got;
                    return got;
                }
            }
            next[x] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        loop {
            let level = self.bfs_levels(s);
            if level[t].is_none() {
                return total;
            }
            let mut next = vec![0; self.head.len()];
            loop {
                let got = self.augment(s, t, i64::MAX, &level, &mut next);
                if got == 0 {
                    break;
                }
                total += got;
            }
        }
    }

    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        self.bfs_levels(s).into_iter().map(|l| l.is_some()).collect()
    }
}
