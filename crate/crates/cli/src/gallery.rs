//! Named instances with their computed verdicts and representations.

use weakrep::construct::represent_triangle_free_outerplanar;
use weakrep::disk::{place_vertex_table1, represent_degree2_contractible, DiskRep, TABLE_DOMAIN};
use weakrep::generators::{cycle, gen_random_series_parallel, gen_sungraph, gen_wheel_hard, girth4_fixture, random_labeling};
use weakrep::interval::{decide_interval, find_hard_labelings, IntervalDecision, HARD_LABELING_MAX_EDGES};
use weakrep::io::{verdict_line, Document};
use weakrep::svg::{render_disk_svg, render_interval_svg};
use weakrep::{EdgeLabel, LabeledGraph, Result};

/// A file to write, relative to the gallery directory.
pub struct Artifact {
    pub path: String,
    pub contents: String,
}

#[derive(Default)]
pub struct Gallery {
    pub artifacts: Vec<Artifact>,
    verdicts: Vec<String>,
}

impl Gallery {
    fn add(&mut self, path: impl Into<String>, contents: String) {
        self.artifacts.push(Artifact { path: path.into(), contents });
    }

    /// Graph file plus the interval verdict (and witness drawing if any).
    fn instance(&mut self, name: &str, g: &LabeledGraph) -> Result<bool> {
        self.add(format!("{name}.txt"), g.to_text());
        let decision = decide_interval(g);
        let doc = match &decision {
            IntervalDecision::Sat(rep) => {
                self.add(format!("{name}.interval.svg"), render_interval_svg(g, rep)?);
                Document::Interval(rep.clone())
            }
            IntervalDecision::Unsat => Document::Unsat,
        };
        self.add(format!("{name}.interval.json"), doc.to_json());
        let verdict = if decision.is_sat() { "sat" } else { "unsat" };
        self.verdicts.push(verdict_line(name, g.vertex_count(), g.edge_count(), verdict));
        Ok(decision.is_sat())
    }

    fn disk(&mut self, name: &str, g: &LabeledGraph, rep: &DiskRep) -> Result<()> {
        self.add(format!("{name}.disk.json"), Document::Disk(rep.clone()).to_json());
        self.add(format!("{name}.disk.svg"), render_disk_svg(g, rep)?);
        Ok(())
    }
}

pub fn build(seed: u64) -> Result<Gallery> {
    let mut gal = Gallery::default();

    let sun = gen_sungraph();
    gal.add("sungraph.txt", sun.to_text());
    let hard = find_hard_labelings(&sun, HARD_LABELING_MAX_EDGES)?;
    if let Some(h) = hard.first() {
        gal.instance("sungraph_hard", h)?;
        gal.disk("sungraph_hard", h, &represent_degree2_contractible(h)?)?;
    }

    for n in 4..=11 {
        gal.instance(&format!("wheel_hard_{n}"), &gen_wheel_hard(n)?)?;
    }
    gal.instance("girth4_unsat", &girth4_fixture())?;

    // small demos: a triangle with one near edge, a mixed square, a
    // series-parallel graph and a triangle-free outerplanar construction
    let triangle = LabeledGraph::new(3, [(0, 1, EdgeLabel::Near), (1, 2, EdgeLabel::Far), (0, 2, EdgeLabel::Far)])?;
    gal.instance("demo_triangle", &triangle)?;
    gal.disk("demo_triangle", &triangle, &represent_degree2_contractible(&triangle)?)?;
    let square = cycle(4).with_label_mask(0b0101);
    gal.instance("demo_square", &square)?;
    let tf = represent_triangle_free_outerplanar(&square)?;
    gal.add("demo_square.outerplanar.json", Document::Interval(tf).to_json());
    let sp = random_labeling(&gen_random_series_parallel(9, seed)?, seed);
    gal.instance("demo_series_parallel", &sp)?;
    gal.disk("demo_series_parallel", &sp, &represent_degree2_contractible(&sp)?)?;

    for (uv, vw) in [(EdgeLabel::Near, EdgeLabel::Near), (EdgeLabel::Near, EdgeLabel::Far), (EdgeLabel::Far, EdgeLabel::Far), (EdgeLabel::Far, EdgeLabel::Near)] {
        for w in TABLE_DOMAIN {
            let v = place_vertex_table1(w, uv, vw)?;
            let g = LabeledGraph::new(3, [(0, 1, uv), (1, 2, vw)])?;
            let name = format!("table/{}{}_{}_{}", uv.symbol(), vw.symbol(), w.0, w.1);
            gal.add(format!("{name}.txt"), g.to_text());
            gal.disk(&name, &g, &DiskRep { points: vec![(0, 0), v, w], diameter: 2 })?;
        }
    }

    let verdicts = gal.verdicts.join("\n") + "\n";
    gal.add("verdicts.jsonl", verdicts);
    Ok(gal)
}
