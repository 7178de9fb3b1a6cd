//! Small graphs up to isomorphism, generated edge by edge with a canonical
//! form for deduplication.

use std::collections::BTreeSet;

use crate::graph::LabeledGraph;

/// Bit index of the pair `a < b` among the pairs of `0..n`.
fn pair_index(n: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < n);
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

fn pairs_of(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// Smallest edge mask over all relabelings that list vertices by
/// non-decreasing degree. Two graphs on `n <= 11` vertices are isomorphic
/// iff their canonical masks agree.
pub fn canonical_mask(n: usize, mask: u64) -> u64 {
    let pairs = pairs_of(n);
    assert!(pairs.len() <= 64, "too many vertices for a 64-bit edge mask");
    let mut degree = vec![0usize; n];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            degree[a] += 1;
            degree[b] += 1;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (degree[v], v));
    // permute within runs of equal degree
    let mut runs = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || degree[order[i]] != degree[order[start]] {
            runs.push((start, i));
            start = i;
        }
    }
    let mut best = u64::MAX;
    let mut perm = order.clone();
    permute_runs(&runs, 0, &mut perm, &mut |perm: &[usize]| {
        // perm[new] = old
        let mut inverse = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        let mut out = 0u64;
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (x, y) = (inverse[a].min(inverse[b]), inverse[a].max(inverse[b]));
                out |= 1 << pair_index(n, x, y);
            }
        }
        best = best.min(out);
    });
    best
}

fn permute_runs(runs: &[(usize, usize)], k: usize, perm: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    let Some(&(lo, hi)) = runs.get(k) else {
        visit(perm);
        return;
    };
    heap_permutations(lo, hi - lo, perm, &mut |p| {
        let mut owned = p.to_vec();
        permute_runs(runs, k + 1, &mut owned, visit)
    });
}

/// Heap's algorithm on `perm[lo..lo + size]`.
fn heap_permutations(lo: usize, size: usize, perm: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if size <= 1 {
        visit(perm);
        return;
    }
    for i in 0..size {
        heap_permutations(lo, size - 1, perm, visit);
        let j = if size.is_multiple_of(2) { i } else { 0 };
        if i + 1 < size {
            perm.swap(lo + j, lo + size - 1);
        }
    }
}

pub fn graph_from_mask(n: usize, mask: u64) -> LabeledGraph {
    let pairs = pairs_of(n);
    LabeledGraph::unlabeled(n, pairs.into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| p))
        .expect("pairs are simple")
}

/// One representative of every isomorphism class of graphs on `n` vertices
/// with at most `max_edges` edges satisfying `keep`. `keep` must be
/// inherited by subgraphs, since classes are grown one edge at a time.
pub fn graphs_with(n: usize, max_edges: usize, mut keep: impl FnMut(&LabeledGraph) -> bool) -> Vec<LabeledGraph> {
    let total = n * n.saturating_sub(1) / 2;
    let mut level: BTreeSet<u64> = [0u64].into_iter().collect();
    let mut out: Vec<u64> = level.iter().copied().collect();
    for _ in 0..max_edges.min(total) {
        let mut next = BTreeSet::new();
        for &mask in &level {
            for i in 0..total {
                if mask >> i & 1 == 0 {
                    let canon = canonical_mask(n, mask | 1 << i);
                    if !next.contains(&canon) && keep(&graph_from_mask(n, canon)) {
                        next.insert(canon);
                    }
                }
            }
        }
        out.extend(next.iter().copied());
        level = next;
    }
    out.into_iter().map(|m| graph_from_mask(n, m)).collect()
}

/// Connected graphs on exactly `n` vertices with at most `max_edges` edges,
/// one per isomorphism class.
pub fn connected_graphs(n: usize, max_edges: usize) -> Vec<LabeledGraph> {
    graphs_with(n, max_edges, |_| true).into_iter().filter(LabeledGraph::is_connected).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_indices_are_dense() {
        let n = 6;
        let idx: Vec<usize> = pairs_of(n).iter().map(|&(a, b)| pair_index(n, a, b)).collect();
        assert_eq!(idx, (0..15).collect::<Vec<_>>());
    }

    #[test]
    fn known_class_counts() {
        // connected graphs on 1..=6 vertices
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n, 15).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        // all graphs on 5 vertices
        assert_eq!(graphs_with(5, 10, |_| true).len(), 34);
    }

    #[test]
    fn isomorphic_relabelings_agree() {
        let n = 5;
        let a = LabeledGraph::unlabeled(n, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 2)]).unwrap();
        let b = LabeledGraph::unlabeled(n, [(4, 3), (3, 2), (2, 1), (1, 0), (4, 2)]).unwrap();
        let mask = |g: &LabeledGraph| g.pairs().fold(0u64, |m, (x, y)| m | 1 << pair_index(n, x, y));
        assert_eq!(canonical_mask(n, mask(&a)), canonical_mask(n, mask(&b)));
    }
}
