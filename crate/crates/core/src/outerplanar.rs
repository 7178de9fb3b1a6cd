//! Outerplanar embeddings: the Hamiltonian outer cycle of a 2-connected
//! outerplanar graph, its bounded faces and weak dual, and the outer-face
//! boundary walk of a connected outerplanar graph.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

/// Cyclic order of the vertices along the outer face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterEmbedding {
    pub outer_cycle: Vec<usize>,
}

/// Bounded faces of an outerplanar embedding and the weak dual between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Faces {
    pub faces: Vec<Vec<usize>>,
    /// `(face, face, shared edge)` with the edge stored as `(min, max)`.
    pub dual: Vec<(usize, usize, (usize, usize))>,
}

impl Faces {
    pub fn dual_is_tree(&self) -> bool {
        let k = self.faces.len();
        if self.dual.len() + 1 != k {
            return false;
        }
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &(a, b, _) in &self.dual {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }

    pub fn dual_neighbors(&self, face: usize) -> Vec<(usize, (usize, usize))> {
        let mut out: Vec<_> = self
            .dual
            .iter()
            .filter_map(|&(a, b, e)| {
                if a == face {
                    Some((b, e))
                } else if b == face {
                    Some((a, e))
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// The outer cycle of a 2-connected outerplanar graph, rotated to start at
/// vertex 0 and oriented so the second entry is smaller than the last.
/// `None` when the graph is not 2-connected or not outerplanar.
///
/// Works by repeatedly removing a degree-2 vertex and joining its two
/// neighbors, then reinserting the removed vertices between their neighbors;
/// the candidate is accepted only after an explicit non-crossing check.
pub fn outer_embedding(g: &LabeledGraph) -> Option<OuterEmbedding> {
    if !g.is_biconnected() {
        return None;
    }
    let n = g.vertex_count();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (a, b) in g.pairs() {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let mut alive = vec![true; n];
    let mut remaining = n;
    let mut removed = Vec::new();
    while remaining > 3 {
        let v = (0..n).find(|&v| alive[v] && adj[v].len() == 2)?;
        let mut it = adj[v].iter().copied();
        let (a, b) = (it.next().unwrap(), it.next().unwrap());
        adj[a].remove(&v);
        adj[b].remove(&v);
        adj[v].clear();
        adj[a].insert(b);
        adj[b].insert(a);
        alive[v] = false;
        remaining -= 1;
        removed.push((v, a, b));
    }
    let rest: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    if rest.iter().any(|&v| adj[v].len() != 2) {
        return None;
    }
    let mut cycle = rest;
    for &(v, a, b) in removed.iter().rev() {
        let len = cycle.len();
        let ia = cycle.iter().position(|&x| x == a)?;
        let ib = cycle.iter().position(|&x| x == b)?;
        if (ia + 1) % len == ib {
            cycle.insert(ia + 1, v);
        } else if (ib + 1) % len == ia {
            cycle.insert(ib + 1, v);
        } else {
            return None;
        }
    }
    let emb = OuterEmbedding { outer_cycle: normalize_cycle(cycle) };
    validate_embedding(g, &emb).ok()?;
    Some(emb)
}

fn normalize_cycle(mut cycle: Vec<usize>) -> Vec<usize> {
    let start = cycle.iter().enumerate().min_by_key(|&(_, &v)| v).map(|(i, _)| i).unwrap_or(0);
    cycle.rotate_left(start);
    if cycle.len() > 2 && cycle[1] > cycle[cycle.len() - 1] {
        cycle[1..].reverse();
    }
    cycle
}

/// Checks that the cycle is a Hamiltonian cycle of `g` and that every other
/// edge is a chord crossing no other chord.
pub fn validate_embedding(g: &LabeledGraph, emb: &OuterEmbedding) -> Result<()> {
    let n = g.vertex_count();
    let cyc = &emb.outer_cycle;
    if cyc.len() != n || n < 3 {
        return Err(Error::InvalidEmbedding(format!("outer cycle has {} of {n} vertices", cyc.len())));
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in cyc.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(Error::InvalidEmbedding(format!("vertex {v} repeated or out of range")));
        }
        pos[v] = i;
    }
    for i in 0..n {
        let (a, b) = (cyc[i], cyc[(i + 1) % n]);
        if !g.has_edge(a, b) {
            return Err(Error::InvalidEmbedding(format!("outer cycle edge ({a},{b}) is not in the graph")));
        }
    }
    let chords: Vec<(usize, usize)> = g
        .pairs()
        .map(|(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b])))
        .filter(|&(p, q)| q - p != 1 && !(p == 0 && q == n - 1))
        .collect();
    for (i, &(a, b)) in chords.iter().enumerate() {
        for &(c, d) in &chords[i + 1..] {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                return Err(Error::InvalidEmbedding(format!(
                    "chords ({},{}) and ({},{}) cross",
                    cyc[a], cyc[b], cyc[c], cyc[d]
                )));
            }
        }
    }
    Ok(())
}

/// Bounded faces, obtained by cutting the outer polygon along each chord in
/// canonical edge order.
pub fn internal_faces(g: &LabeledGraph, emb: &OuterEmbedding) -> Result<Faces> {
    validate_embedding(g, emb)?;
    let n = g.vertex_count();
    let cyc = &emb.outer_cycle;
    let on_cycle: BTreeSet<(usize, usize)> = (0..n)
        .map(|i| {
            let (a, b) = (cyc[i], cyc[(i + 1) % n]);
            (a.min(b), a.max(b))
        })
        .collect();
    let mut faces = vec![cyc.clone()];
    for (a, b) in g.pairs().filter(|e| !on_cycle.contains(e)) {
        let idx = faces
            .iter()
            .position(|f| f.contains(&a) && f.contains(&b))
            .ok_or_else(|| Error::InvalidEmbedding(format!("chord ({a},{b}) lies in no face")))?;
        let face = faces[idx].clone();
        let len = face.len();
        let ia = face.iter().position(|&x| x == a).unwrap();
        let ib = face.iter().position(|&x| x == b).unwrap();
        let arc = |from: usize, to: usize| {
            let mut out = vec![face[from]];
            let mut i = from;
            while i != to {
                i = (i + 1) % len;
                out.push(face[i]);
            }
            out
        };
        faces[idx] = arc(ia, ib);
        faces.push(arc(ib, ia));
    }
    let mut by_edge: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (fi, f) in faces.iter().enumerate() {
        for i in 0..f.len() {
            let (a, b) = (f[i], f[(i + 1) % f.len()]);
            by_edge.entry((a.min(b), a.max(b))).or_default().push(fi);
        }
    }
    let mut dual = Vec::new();
    for (e, fs) in by_edge {
        match fs.as_slice() {
            [_] => {}
            [x, y] => dual.push((*x.min(y), *x.max(y), e)),
            _ => return Err(Error::InvalidEmbedding(format!("edge {e:?} borders {} faces", fs.len()))),
        }
    }
    dual.sort_unstable();
    Ok(Faces { faces, dual })
}

/// Closed boundary walk of the outer face of a connected outerplanar graph
/// with at least two vertices. A vertex appears once per block containing
/// it. Errors when some block is not outerplanar.
pub fn outer_walk(g: &LabeledGraph) -> Result<Vec<usize>> {
    if g.vertex_count() < 2 || !g.is_connected() {
        return Err(Error::Precondition("outer walk needs a connected graph on at least two vertices".into()));
    }
    let blocks = g.blocks();
    let mut cycles = Vec::with_capacity(blocks.len());
    for block in &blocks {
        if block.is_bridge() {
            cycles.push(block.vertices.clone());
            continue;
        }
        let (sub, map) = g.induced(&block.vertices);
        let emb = outer_embedding(&sub).ok_or(Error::NotOuterplanar)?;
        cycles.push(emb.outer_cycle.iter().map(|&i| map[i]).collect());
    }
    let mut at_vertex: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (bi, block) in blocks.iter().enumerate() {
        for &v in &block.vertices {
            at_vertex[v].push(bi);
        }
    }

    fn tour(bi: usize, start: usize, cycles: &[Vec<usize>], at_vertex: &[Vec<usize>], used: &mut [bool]) -> Vec<usize> {
        let mut cyc = cycles[bi].clone();
        let s = cyc.iter().position(|&x| x == start).unwrap();
        cyc.rotate_left(s);
        let mut seq = Vec::new();
        for (i, &c) in cyc.iter().enumerate() {
            seq.push(c);
            if i == 0 {
                continue;
            }
            for &other in &at_vertex[c] {
                if !used[other] {
                    used[other] = true;
                    let sub = tour(other, c, cycles, at_vertex, used);
                    seq.extend_from_slice(&sub[1..]);
                    seq.push(c);
                }
            }
        }
        seq
    }

    let mut used = vec![false; blocks.len()];
    let mut walk = Vec::new();
    let root = 0;
    for &bi in &at_vertex[root] {
        if !used[bi] {
            used[bi] = true;
            walk.extend(tour(bi, root, &cycles, &at_vertex, &mut used));
        }
    }
    Ok(walk)
}
