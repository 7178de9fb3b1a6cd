//! Weak unit disk representations on the integer lattice.

pub mod lattice;
pub mod oracle;
pub mod placement;

pub use lattice::{canonicalize_pair, LatticeIsometry, Point};
pub use oracle::grid_disk_oracle;
pub use placement::{place_vertex_table1, represent_degree2_contractible, TABLE_DOMAIN};

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::report::VerificationReport;

/// Lattice points and an integer diameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskRep {
    pub points: Vec<Point>,
    pub diameter: i64,
}

pub fn squared_distance(p: Point, q: Point) -> i64 {
    let (dx, dy) = (p.0 - q.0, p.1 - q.1);
    dx * dx + dy * dy
}

/// Near edges need squared distance at most `d^2`, far edges more. An edge
/// whose endpoints coincide is always reported.
pub fn verify_disk(g: &LabeledGraph, rep: &DiskRep) -> Result<VerificationReport> {
    if rep.points.len() < g.vertex_count() {
        return Err(Error::MissingCoordinate(rep.points.len()));
    }
    let limit = rep.diameter * rep.diameter;
    let violations = g
        .edges()
        .iter()
        .filter(|e| {
            let d2 = squared_distance(rep.points[e.u], rep.points[e.v]);
            d2 == 0 || (d2 <= limit) != e.label.is_near()
        })
        .copied()
        .collect();
    Ok(VerificationReport { violations })
}
