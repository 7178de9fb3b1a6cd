//! Vertex partitions into a (nearly) 2-independent set and a forest.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::outerplanar::{internal_faces, OuterEmbedding};

/// `iset` and `fset` partition the vertices; both lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub iset: Vec<usize>,
    pub fset: Vec<usize>,
}

/// Two set members at distance two, joined through `middle`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IPair {
    pub u: usize,
    pub v: usize,
    pub middle: usize,
}

impl Decomposition {
    pub fn from_iset(n: usize, iset: impl IntoIterator<Item = usize>) -> Self {
        let mut member = vec![false; n];
        for v in iset {
            member[v] = true;
        }
        Decomposition {
            iset: (0..n).filter(|&v| member[v]).collect(),
            fset: (0..n).filter(|&v| !member[v]).collect(),
        }
    }

    /// Membership flags, after checking the two lists partition `0..n`.
    pub fn membership(&self, n: usize) -> Result<Vec<bool>> {
        let mut seen = vec![None; n];
        for (list, flag) in [(&self.iset, true), (&self.fset, false)] {
            for &v in list {
                if v >= n {
                    return Err(Error::InvalidDecomposition(format!("vertex {v} out of range")));
                }
                if seen[v].replace(flag).is_some() {
                    return Err(Error::InvalidDecomposition(format!("vertex {v} listed twice")));
                }
            }
        }
        seen.into_iter()
            .enumerate()
            .map(|(v, s)| s.ok_or_else(|| Error::InvalidDecomposition(format!("vertex {v} unassigned"))))
            .collect()
    }
}

fn check_forest(g: &LabeledGraph, in_i: &[bool]) -> Result<()> {
    let mut dsu = Dsu::new(g.vertex_count());
    for (a, b) in g.pairs().filter(|&(a, b)| !in_i[a] && !in_i[b]) {
        if !dsu.union(a, b) {
            return Err(Error::InvalidDecomposition(format!("forest part has a cycle through ({a},{b})")));
        }
    }
    Ok(())
}

/// Members of the set exactly two steps from `v`, with the number of
/// 2-paths reaching each.
fn set_mates(g: &LabeledGraph, in_i: &[bool], v: usize) -> Vec<(usize, usize, usize)> {
    let mut found: Vec<(usize, usize, usize)> = Vec::new();
    for x in g.neighbors(v) {
        for w in g.neighbors(x) {
            if w != v && in_i[w] && !g.has_edge(v, w) {
                match found.iter_mut().find(|f| f.0 == w) {
                    Some(f) => f.1 += 1,
                    None => found.push((w, 1, x)),
                }
            }
        }
    }
    found
}

/// `iset` pairwise more than two apart, `fset` inducing a forest.
pub fn validate_decomposition(g: &LabeledGraph, dec: &Decomposition) -> Result<()> {
    let in_i = dec.membership(g.vertex_count())?;
    check_forest(g, &in_i)?;
    for &v in &dec.iset {
        if let Some(w) = g.neighbors(v).find(|&w| in_i[w]) {
            return Err(Error::InvalidDecomposition(format!("{v} and {w} are adjacent")));
        }
        if let Some(&(w, _, _)) = set_mates(g, &in_i, v).first() {
            return Err(Error::InvalidDecomposition(format!("{v} and {w} are at distance 2")));
        }
    }
    Ok(())
}

/// Relaxed check: `iset` independent, each member with at most one mate at
/// distance two through a unique 2-path. Returns the pairs with `u < v`.
pub fn validate_nearly_2independent(g: &LabeledGraph, dec: &Decomposition) -> Result<Vec<IPair>> {
    let in_i = dec.membership(g.vertex_count())?;
    check_forest(g, &in_i)?;
    let mut pairs = Vec::new();
    for &v in &dec.iset {
        if let Some(w) = g.neighbors(v).find(|&w| in_i[w]) {
            return Err(Error::InvalidDecomposition(format!("{v} and {w} are adjacent")));
        }
        match set_mates(g, &in_i, v).as_slice() {
            [] => {}
            [(w, 1, middle)] => {
                if v < *w {
                    pairs.push(IPair { u: v, v: *w, middle: *middle });
                }
            }
            [(w, _, _)] => {
                return Err(Error::InvalidDecomposition(format!("{v} and {w} share several 2-paths")));
            }
            _ => return Err(Error::InvalidDecomposition(format!("{v} has several mates at distance 2"))),
        }
    }
    Ok(pairs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecomposeMode {
    /// Complete backtracking; errors above `max_vertices`.
    Exact { max_vertices: usize },
    /// Greedy 2-independent set, then a forest check. `None` is inconclusive.
    Greedy,
}

impl Default for DecomposeMode {
    fn default() -> Self {
        DecomposeMode::Exact { max_vertices: 24 }
    }
}

pub fn decompose_forest_2independent(g: &LabeledGraph, mode: DecomposeMode) -> Result<Option<Decomposition>> {
    let n = g.vertex_count();
    let found = match mode {
        DecomposeMode::Exact { max_vertices } => {
            if n > max_vertices || n > 64 {
                return Err(Error::Precondition(format!("{n} vertices exceed the exact search bound {max_vertices}")));
            }
            let search = ExactSearch::new(g);
            let mut in_i = vec![false; n];
            search.run(0, 0, Dsu::new(n), &mut in_i).then_some(in_i)
        }
        DecomposeMode::Greedy => greedy(g),
    };
    let Some(in_i) = found else { return Ok(None) };
    let dec = Decomposition::from_iset(n, (0..n).filter(|&v| in_i[v]));
    validate_decomposition(g, &dec)?;
    Ok(Some(dec))
}

fn greedy(g: &LabeledGraph) -> Option<Vec<bool>> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut in_i = vec![false; n];
    let mut blocked = vec![false; n];
    for v in order {
        if blocked[v] {
            continue;
        }
        in_i[v] = true;
        for x in g.neighbors(v) {
            blocked[x] = true;
            for w in g.neighbors(x) {
                blocked[w] = true;
            }
        }
    }
    check_forest(g, &in_i).ok().map(|_| in_i)
}

struct ExactSearch {
    order: Vec<usize>,
    /// vertices within distance two, as bitmasks
    ball: Vec<u64>,
    neighbors: Vec<Vec<usize>>,
}

impl ExactSearch {
    fn new(g: &LabeledGraph) -> Self {
        let n = g.vertex_count();
        let mut ball = vec![0u64; n];
        for (v, b) in ball.iter_mut().enumerate() {
            for x in g.neighbors(v) {
                *b |= 1 << x;
                for w in g.neighbors(x) {
                    if w != v {
                        *b |= 1 << w;
                    }
                }
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        ExactSearch { order, ball, neighbors: (0..n).map(|v| g.neighbors(v).collect()).collect() }
    }

    fn run(&self, depth: usize, iset: u64, dsu: Dsu, in_i: &mut [bool]) -> bool {
        let Some(&v) = self.order.get(depth) else { return true };
        if self.ball[v] & iset == 0 {
            in_i[v] = true;
            if self.run(depth + 1, iset | 1 << v, dsu.clone(), in_i) {
                return true;
            }
            in_i[v] = false;
        }
        // v joins the forest: its edges to earlier forest vertices must not close a cycle
        let placed = &self.order[..depth];
        let mut next = dsu;
        for &w in &self.neighbors[v] {
            if placed.contains(&w) && !in_i[w] && !next.union(v, w) {
                return false;
            }
        }
        self.run(depth + 1, iset, next, in_i)
    }
}

#[derive(Clone)]
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Face-by-face decomposition of a 2-connected outerplanar graph of girth at
/// least five. Faces are visited in breadth-first order over the weak dual
/// starting from face 0; each new face adds its third vertex to `iset`
/// unless an endpoint of the shared edge is already there.
pub fn decompose_girth5_outerplanar(g: &LabeledGraph, emb: &OuterEmbedding) -> Result<Decomposition> {
    let faces = internal_faces(g, emb).map_err(|_| Error::NotOuterplanar)?;
    match g.girth() {
        Some(girth) if girth < 5 => {
            return Err(Error::Precondition(format!("girth {girth} is below 5")));
        }
        _ => {}
    }
    let n = g.vertex_count();
    let mut in_i = vec![false; n];
    let mut done = vec![false; faces.faces.len()];
    let mut queue = std::collections::VecDeque::new();
    if let Some(root) = faces.faces.first() {
        in_i[root[2]] = true;
        done[0] = true;
        queue.push_back(0);
    }
    while let Some(f) = queue.pop_front() {
        for (child, (a, b)) in faces.dual_neighbors(f) {
            if done[child] {
                continue;
            }
            done[child] = true;
            queue.push_back(child);
            let path = face_path(&faces.faces[child], a, b);
            if !in_i[a] && !in_i[b] {
                in_i[path[2]] = true;
            }
        }
    }
    let dec = Decomposition::from_iset(n, (0..n).filter(|&v| in_i[v]));
    validate_decomposition(g, &dec)?;
    Ok(dec)
}

/// The face cycle as a path from `a` to `b` avoiding the edge `(a, b)`.
pub(crate) fn face_path(face: &[usize], a: usize, b: usize) -> Vec<usize> {
    let len = face.len();
    let ia = face.iter().position(|&x| x == a).expect("endpoint on face");
    let forward: Vec<usize> = (0..len).map(|k| face[(ia + k) % len]).collect();
    if forward[len - 1] == b {
        forward
    } else {
        debug_assert_eq!(forward[1], b);
        (0..len).map(|k| face[(ia + len - k) % len]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};
    use crate::outerplanar::outer_embedding;

    #[test]
    fn exact_search_examples() {
        let dec = decompose_forest_2independent(&path(5), DecomposeMode::default()).unwrap().unwrap();
        validate_decomposition(&path(5), &dec).unwrap();
        assert!(decompose_forest_2independent(&cycle(13), DecomposeMode::default()).unwrap().is_some());
        assert!(decompose_forest_2independent(&complete(4), DecomposeMode::default()).unwrap().is_none());
        let big = cycle(30);
        assert!(decompose_forest_2independent(&big, DecomposeMode::default()).is_err());
        assert!(decompose_forest_2independent(&big, DecomposeMode::Greedy).unwrap().is_some());
    }

    #[test]
    fn k4_has_no_decomposition_by_enumeration() {
        let g = complete(4);
        for mask in 0u32..16 {
            let dec = Decomposition::from_iset(4, (0..4).filter(|&v| mask >> v & 1 == 1));
            assert!(validate_decomposition(&g, &dec).is_err());
        }
    }

    #[test]
    fn validator_rejects_bad_partitions() {
        let g = path(3);
        let overlap = Decomposition { iset: vec![0], fset: vec![0, 1, 2] };
        assert!(validate_decomposition(&g, &overlap).is_err());
        let missing = Decomposition { iset: vec![], fset: vec![0, 1] };
        assert!(validate_decomposition(&g, &missing).is_err());
        let close = Decomposition::from_iset(3, [0, 2]);
        assert!(validate_decomposition(&g, &close).is_err());
        let pairs = validate_nearly_2independent(&g, &close).unwrap();
        assert_eq!(pairs, vec![IPair { u: 0, v: 2, middle: 1 }]);
        // two 2-paths between 0 and 2
        let c4 = Decomposition::from_iset(4, [0, 2]);
        assert!(validate_nearly_2independent(&cycle(4), &c4).is_err());
    }

    #[test]
    fn girth5_faces() {
        let c5 = cycle(5);
        let dec = decompose_girth5_outerplanar(&c5, &outer_embedding(&c5).unwrap()).unwrap();
        assert_eq!(dec.iset.len(), 1);
        let c6 = cycle(6);
        decompose_girth5_outerplanar(&c6, &outer_embedding(&c6).unwrap()).unwrap();
        // two pentagons sharing the edge (0, 4)
        let mut pairs: Vec<(usize, usize)> = (0..7).map(|i| (i, i + 1)).collect();
        pairs.extend([(7, 0), (0, 4)]);
        let g = LabeledGraph::unlabeled(8, pairs).unwrap();
        let dec = decompose_girth5_outerplanar(&g, &outer_embedding(&g).unwrap()).unwrap();
        validate_decomposition(&g, &dec).unwrap();
        let c4 = cycle(4);
        assert!(decompose_girth5_outerplanar(&c4, &outer_embedding(&c4).unwrap()).is_err());
    }

    #[test]
    fn face_path_orientation() {
        assert_eq!(face_path(&[3, 1, 4, 5, 9], 4, 1), vec![4, 5, 9, 3, 1]);
        assert_eq!(face_path(&[3, 1, 4, 5, 9], 1, 4), vec![1, 3, 9, 5, 4]);
    }
}
