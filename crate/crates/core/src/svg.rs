//! SVG drawings of verified representations. Near edges are thick solid
//! lines, far edges thin dashed ones. Output is byte-stable.

use std::fmt::Write;

use crate::disk::{verify_disk, DiskRep};
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::interval::{verify_interval, IntervalRep};
use crate::rational::to_f64;
use crate::report::VerificationReport;

const UNIT: f64 = 40.0;
const MARGIN: f64 = 20.0;

fn refuse_invalid(report: VerificationReport) -> Result<()> {
    if report.is_valid() {
        Ok(())
    } else {
        Err(Error::Verification(format!("refusing to draw: {} edges violated", report.violations.len())))
    }
}

struct Canvas {
    min_x: f64,
    min_y: f64,
    width: f64,
    height: f64,
    body: String,
}

impl Canvas {
    fn new(min_x: f64, max_x: f64, min_y: f64, max_y: f64) -> Self {
        Canvas {
            min_x,
            min_y,
            width: (max_x - min_x) * UNIT + 2.0 * MARGIN,
            height: (max_y - min_y) * UNIT + 2.0 * MARGIN,
            body: String::new(),
        }
    }

    fn px(&self, x: f64, y: f64) -> (f64, f64) {
        ((x - self.min_x) * UNIT + MARGIN, (y - self.min_y) * UNIT + MARGIN)
    }

    fn edge(&mut self, a: (f64, f64), b: (f64, f64), near: bool) {
        let (p, q) = (self.px(a.0, a.1), self.px(b.0, b.1));
        let style = if near {
            r#"stroke="black" stroke-width="3""#
        } else {
            r#"stroke="black" stroke-width="1.5" stroke-dasharray="6 4""#
        };
        writeln!(self.body, r#"  <line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" {style}/>"#, p.0, p.1, q.0, q.1).unwrap();
    }

    fn label(&mut self, at: (f64, f64), v: usize) {
        let p = self.px(at.0, at.1);
        writeln!(self.body, r#"  <text x="{:.3}" y="{:.3}" font-size="12" text-anchor="middle">{v}</text>"#, p.0, p.1 - 6.0)
            .unwrap();
    }

    fn finish(self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.3}\" height=\"{h:.3}\" viewBox=\"0 0 {w:.3} {h:.3}\">\n{}</svg>\n",
            self.body,
            w = self.width,
            h = self.height
        )
    }
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold(None, |acc: Option<(f64, f64)>, x| Some(acc.map_or((x, x), |(lo, hi)| (lo.min(x), hi.max(x)))))
        .unwrap_or((0.0, 0.0))
}

/// One row per vertex: a horizontal segment of length `d` centered at its
/// coordinate. Edges join the segment midpoints.
pub fn render_interval_svg(g: &LabeledGraph, rep: &IntervalRep) -> Result<String> {
    refuse_invalid(verify_interval(g, rep)?)?;
    let n = g.vertex_count();
    let d = to_f64(&rep.diameter);
    let xs: Vec<f64> = rep.coords[..n].iter().map(to_f64).collect();
    let (lo, hi) = bounds(xs.iter().copied());
    let mut canvas = Canvas::new(lo - d / 2.0, hi + d / 2.0, 0.0, n.saturating_sub(1) as f64);
    let at = |v: usize| (xs[v], v as f64);
    for e in g.edges() {
        canvas.edge(at(e.u), at(e.v), e.label.is_near());
    }
    for (v, &x) in xs.iter().enumerate() {
        let (a, b) = (canvas.px(x - d / 2.0, v as f64), canvas.px(x + d / 2.0, v as f64));
        writeln!(
            canvas.body,
            r#"  <line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="steelblue" stroke-width="6" stroke-opacity="0.6"/>"#,
            a.0, a.1, b.0, b.1
        )
        .unwrap();
        canvas.label(at(v), v);
    }
    Ok(canvas.finish())
}

/// Circles of radius `d / 2` at the lattice points, `y` pointing up.
pub fn render_disk_svg(g: &LabeledGraph, rep: &DiskRep) -> Result<String> {
    refuse_invalid(verify_disk(g, rep)?)?;
    let n = g.vertex_count();
    let r = rep.diameter as f64 / 2.0;
    let pts: Vec<(f64, f64)> = rep.points[..n].iter().map(|&(x, y)| (x as f64, -(y as f64))).collect();
    let (x0, x1) = bounds(pts.iter().map(|p| p.0));
    let (y0, y1) = bounds(pts.iter().map(|p| p.1));
    let mut canvas = Canvas::new(x0 - r, x1 + r, y0 - r, y1 + r);
    for e in g.edges() {
        canvas.edge(pts[e.u], pts[e.v], e.label.is_near());
    }
    for (v, &p) in pts.iter().enumerate() {
        let c = canvas.px(p.0, p.1);
        writeln!(
            canvas.body,
            r#"  <circle cx="{:.3}" cy="{:.3}" r="{:.3}" fill="steelblue" fill-opacity="0.25" stroke="steelblue"/>"#,
            c.0,
            c.1,
            r * UNIT
        )
        .unwrap();
        canvas.label(p, v);
    }
    Ok(canvas.finish())
}
