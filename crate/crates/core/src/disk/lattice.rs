use crate::error::{Error, Result};

pub type Point = (i64, i64);

/// `p -> sigma(p) + shift`, where `sigma` is one of the eight symmetries of
/// the square lattice: optionally swap the axes, then negate either.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeIsometry {
    pub swap: bool,
    pub negate_x: bool,
    pub negate_y: bool,
    pub shift: Point,
}

impl LatticeIsometry {
    pub const IDENTITY: LatticeIsometry = LatticeIsometry { swap: false, negate_x: false, negate_y: false, shift: (0, 0) };

    /// All eight symmetries fixing the origin.
    pub fn symmetries() -> impl Iterator<Item = LatticeIsometry> {
        (0..8u8).map(|k| LatticeIsometry { swap: k & 4 != 0, negate_x: k & 2 != 0, negate_y: k & 1 != 0, shift: (0, 0) })
    }

    fn linear(&self, p: Point) -> Point {
        let (x, y) = if self.swap { (p.1, p.0) } else { p };
        (if self.negate_x { -x } else { x }, if self.negate_y { -y } else { y })
    }

    pub fn apply(&self, p: Point) -> Point {
        let (x, y) = self.linear(p);
        (x + self.shift.0, y + self.shift.1)
    }

    pub fn inverse_apply(&self, q: Point) -> Point {
        let (x, y) = (q.0 - self.shift.0, q.1 - self.shift.1);
        let (x, y) = (if self.negate_x { -x } else { x }, if self.negate_y { -y } else { y });
        if self.swap {
            (y, x)
        } else {
            (x, y)
        }
    }

    pub fn inverse(&self) -> LatticeIsometry {
        let probe = LatticeIsometry { shift: (0, 0), ..*self };
        // the inverse of a lattice symmetry is found among the eight
        let linear = Self::symmetries()
            .find(|s| [(1, 0), (0, 1)].iter().all(|&e| s.linear(probe.linear(e)) == e))
            .expect("symmetry group is closed");
        let back = linear.linear(self.shift);
        LatticeIsometry { shift: (-back.0, -back.1), ..linear }
    }
}

/// An isometry sending `pu` to the origin and `pw` to `(a, b)` with
/// `0 <= b <= a`.
pub fn canonicalize_pair(pu: Point, pw: Point) -> Result<(LatticeIsometry, Point)> {
    if pu == pw {
        return Err(Error::Precondition(format!("points coincide at {pu:?}")));
    }
    let delta = (pw.0 - pu.0, pw.1 - pu.1);
    for sym in LatticeIsometry::symmetries() {
        let (a, b) = sym.linear(delta);
        if 0 <= b && b <= a {
            let at_u = sym.linear(pu);
            let iso = LatticeIsometry { shift: (-at_u.0, -at_u.1), ..sym };
            return Ok((iso, (a, b)));
        }
    }
    unreachable!("some symmetry maps any nonzero vector into the cone 0 <= b <= a")
}
