//! Unit-cube contact scenes obtained by lifting a unit-square contact
//! drawing by the colors of a threshold coloring.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Edge, LabeledGraph};
use crate::interval::ThresholdColoring;
use crate::rational::{to_f64, Q};

/// Axis-aligned squares given by their centers, all of side `side`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareContactRep {
    pub centers: Vec<(Q, Q)>,
    pub side: Q,
}

/// Axis-aligned cubes given by their lowest corner, all of side `side`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeScene {
    pub corners: Vec<(Q, Q, Q)>,
    pub side: Q,
}

/// Squares in a row, consecutive ones sharing a full side.
pub fn grid_strip(n: usize, side: Q) -> SquareContactRep {
    SquareContactRep { centers: (0..n).map(|i| (side * Q::from_integer(i as i64), Q::from_integer(0))).collect(), side }
}

/// Length of the overlap of `[a, a + s]` and `[b, b + s]`; negative when
/// they are apart.
fn overlap(a: Q, b: Q, s: Q) -> Q {
    (a + s).min(b + s) - a.max(b)
}

impl SquareContactRep {
    /// Errors if two squares share interior points.
    pub fn check_disjoint(&self) -> Result<()> {
        let zero = Q::from_integer(0);
        for i in 0..self.centers.len() {
            for j in i + 1..self.centers.len() {
                let (a, b) = (self.centers[i], self.centers[j]);
                if overlap(a.0, b.0, self.side) > zero && overlap(a.1, b.1, self.side) > zero {
                    return Err(Error::Precondition(format!("squares {i} and {j} overlap")));
                }
            }
        }
        Ok(())
    }
}

/// Puts the cube of `v` over its square with its bottom face at height
/// `c(v)`. The squares must have side `t + eps` with `0 < eps < 1`.
pub fn lift_cubes(sq: &SquareContactRep, col: &ThresholdColoring, t: i64, eps: Q) -> Result<CubeScene> {
    if eps <= Q::from_integer(0) || eps >= Q::from_integer(1) {
        return Err(Error::Precondition(format!("eps = {eps} is not in (0, 1)")));
    }
    if sq.side != Q::from_integer(t) + eps {
        return Err(Error::Precondition(format!("square side {} differs from t + eps = {}", sq.side, Q::from_integer(t) + eps)));
    }
    if col.threshold != t || !col.in_range() {
        return Err(Error::Precondition("coloring is not a threshold coloring with threshold t".into()));
    }
    if col.colors.len() < sq.centers.len() {
        return Err(Error::MissingCoordinate(col.colors.len()));
    }
    sq.check_disjoint()?;
    let half = sq.side / 2;
    let corners = sq
        .centers
        .iter()
        .zip(&col.colors)
        .map(|(&(x, y), &c)| (x - half, y - half, Q::from_integer(c)))
        .collect();
    Ok(CubeScene { corners, side: sq.side })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Contact {
    /// Interiors meet.
    Overlap,
    /// A common boundary piece of positive area.
    Face,
    /// Apart, or touching only along an edge or at a corner.
    None,
}

impl CubeScene {
    pub fn contact(&self, a: usize, b: usize) -> Contact {
        let (p, q) = (self.corners[a], self.corners[b]);
        let o = [overlap(p.0, q.0, self.side), overlap(p.1, q.1, self.side), overlap(p.2, q.2, self.side)];
        let zero = Q::from_integer(0);
        let positive = o.iter().filter(|&&x| x > zero).count();
        let touching = o.iter().filter(|&&x| x == zero).count();
        match (positive, touching) {
            (3, _) => Contact::Overlap,
            (2, 1) => Contact::Face,
            _ => Contact::None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ContactReport {
    /// Near edges without face contact, far edges with contact, and edges
    /// whose cubes overlap.
    pub violations: Vec<Edge>,
    /// Non-adjacent pairs in contact or overlapping.
    pub extra_contacts: Vec<(usize, usize)>,
}

impl ContactReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty() && self.extra_contacts.is_empty()
    }
}

/// Exact contact check. With `check_nonedges`, non-adjacent pairs must not
/// touch either.
pub fn verify_cube_contacts(g: &LabeledGraph, scene: &CubeScene, check_nonedges: bool) -> Result<ContactReport> {
    let n = g.vertex_count();
    if scene.corners.len() < n {
        return Err(Error::MissingCoordinate(scene.corners.len()));
    }
    let violations = g
        .edges()
        .iter()
        .filter(|e| {
            let c = scene.contact(e.u, e.v);
            c == Contact::Overlap || (c == Contact::Face) != e.label.is_near()
        })
        .copied()
        .collect();
    let mut extra_contacts = Vec::new();
    if check_nonedges {
        for a in 0..n {
            for b in a + 1..n {
                if !g.has_edge(a, b) && scene.contact(a, b) != Contact::None {
                    extra_contacts.push((a, b));
                }
            }
        }
    }
    Ok(ContactReport { violations, extra_contacts })
}

/// Wavefront OBJ text: eight vertices and six quads per cube.
pub fn to_obj(scene: &CubeScene) -> String {
    let mut out = String::from("# cube scene\n");
    let s = to_f64(&scene.side);
    for (i, c) in scene.corners.iter().enumerate() {
        let (x, y, z) = (to_f64(&c.0), to_f64(&c.1), to_f64(&c.2));
        writeln!(out, "o v{i}").unwrap();
        for k in 0..8 {
            let dx = if k & 1 != 0 { s } else { 0.0 };
            let dy = if k & 2 != 0 { s } else { 0.0 };
            let dz = if k & 4 != 0 { s } else { 0.0 };
            writeln!(out, "v {:.6} {:.6} {:.6}", x + dx, y + dy, z + dz).unwrap();
        }
        let base = 8 * i + 1;
        for face in [[0, 2, 3, 1], [4, 5, 7, 6], [0, 1, 5, 4], [2, 6, 7, 3], [0, 4, 6, 2], [1, 3, 7, 5]] {
            let idx: Vec<String> = face.iter().map(|k| (base + k).to_string()).collect();
            writeln!(out, "f {}", idx.join(" ")).unwrap();
        }
    }
    out
}
