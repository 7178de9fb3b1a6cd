//! End-to-end checks of the library's headline guarantees. Each check prints
//! one PASS or FAIL line; the test fails if any of them fails.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;

use weakrep::construct::{
    color_forest_2independent, color_nearly_2independent, decompose_forest_2independent,
    represent_triangle_free_outerplanar, validate_decomposition, validate_nearly_2independent, DecomposeMode,
    Decomposition,
};
use weakrep::cube::{grid_strip, lift_cubes, verify_cube_contacts};
use weakrep::density::{density_certificate, DensityVerdict};
use weakrep::disk::{place_vertex_table1, represent_degree2_contractible, squared_distance, verify_disk, DiskRep, Point};
use weakrep::enumerate::connected_graphs;
use weakrep::generators::{
    gen_random_series_parallel, gen_sungraph, gen_wheel_hard, girth4_fixture, path, random_labeling,
    stacked_triangulation, wheel,
};
use weakrep::interval::{decide_interval, find_hard_labelings, grid_oracle_interval, to_threshold_coloring, verify_interval};
use weakrep::outerplanar::outer_embedding;
use weakrep::planarity::is_planar;
use weakrep::rational::{q, qi};
use weakrep::search::search_girth4_unsat;
use weakrep::work::WorkBound;
use weakrep::EdgeLabel::{self, Far, Near};
use weakrep::{LabeledGraph, Q};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

/// Label pair plus `(w, v)` placements.
type TableColumn = (EdgeLabel, EdgeLabel, [(Point, Point); 8]);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_labelings(g: &LabeledGraph) -> impl ParallelIterator<Item = LabeledGraph> + '_ {
    (0..1u64 << g.edge_count()).into_par_iter().map(|mask| g.with_label_mask(mask))
}

// Rows as printed: (w, v) for each label pair, u at the origin.
const ROWS: [TableColumn; 3] = [
    (
        Near,
        Near,
        [
            ((1, 0), (2, 0)),
            ((2, 0), (1, 0)),
            ((3, 0), (2, 0)),
            ((4, 0), (2, 0)),
            ((1, 1), (2, 0)),
            ((2, 1), (2, 0)),
            ((3, 1), (2, 0)),
            ((2, 2), (2, 0)),
        ],
    ),
    (
        Near,
        Far,
        [
            ((1, 0), (0, 2)),
            ((2, 0), (0, 1)),
            ((3, 0), (0, 1)),
            ((4, 0), (1, 0)),
            ((1, 1), (-1, 0)),
            ((2, 1), (-1, 0)),
            ((3, 1), (1, 0)),
            ((2, 2), (1, 0)),
        ],
    ),
    (
        Far,
        Far,
        [
            ((1, 0), (2, 2)),
            ((2, 0), (1, 2)),
            ((3, 0), (2, 2)),
            ((4, 0), (2, 2)),
            ((1, 1), (0, 3)),
            ((2, 1), (0, 3)),
            ((3, 1), (1, 2)),
            ((2, 2), (0, 3)),
        ],
    ),
];

fn labels_hold(w: Point, v: Point, uv: EdgeLabel, vw: EdgeLabel) -> bool {
    let ok = |d2: i64, label: EdgeLabel| d2 > 0 && (d2 <= 4) == label.is_near();
    ok(squared_distance((0, 0), v), uv) && ok(squared_distance(v, w), vw)
}

fn table_rows() -> Check {
    let mut checked = 0;
    for (uv, vw, rows) in ROWS {
        for (w, v) in rows {
            ensure(labels_hold(w, v, uv, vw), || format!("row {uv:?}{vw:?} w={w:?} v={v:?} breaks its labels"))?;
            let placed = place_vertex_table1(w, uv, vw).map_err(|e| e.to_string())?;
            ensure(placed == v, || format!("placement for {uv:?}{vw:?} w={w:?} is {placed:?}, table says {v:?}"))?;
            let g = LabeledGraph::new(3, [(0, 1, uv), (1, 2, vw)]).unwrap();
            let rep = DiskRep { points: vec![(0, 0), v, w], diameter: 2 };
            ensure(verify_disk(&g, &rep).unwrap().is_valid(), || format!("verify_disk rejects {w:?} {v:?}"))?;
            checked += 1;
        }
        if uv != vw {
            for (w, _) in rows {
                let v = place_vertex_table1(w, vw, uv).map_err(|e| e.to_string())?;
                ensure(labels_hold(w, v, vw, uv), || format!("swapped placement w={w:?} v={v:?} breaks its labels"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} placements"))
}

fn wheels() -> Check {
    for n in 4..=10 {
        let g = gen_wheel_hard(n).map_err(|e| e.to_string())?;
        ensure(!decide_interval(&g).is_sat(), || format!("W_{n} labeling is representable"))?;
    }
    Ok("W_4..W_10 unsat".into())
}

fn sungraph() -> Check {
    let hard = find_hard_labelings(&gen_sungraph(), 20).map_err(|e| e.to_string())?;
    let first = hard.first().ok_or("no hard labeling")?;
    let rep = represent_degree2_contractible(first).map_err(|e| e.to_string())?;
    ensure(verify_disk(first, &rep).unwrap().is_valid(), || "disk witness invalid".into())?;
    Ok(format!("hard labelings: {}, disk witness verified", hard.len()))
}

fn solver_oracle_agreement() -> Check {
    let corpus: Vec<LabeledGraph> = (1..=7).flat_map(|n| connected_graphs(n, 9)).collect();
    ensure(corpus.len() >= 200, || format!("corpus has only {} structures", corpus.len()))?;
    let bound = WorkBound::default();
    let labelings: usize = corpus.iter().map(|g| 1usize << g.edge_count()).sum();
    corpus.par_iter().try_for_each(|g| {
        all_labelings(g).try_for_each(|lg| {
            let exact = decide_interval(&lg).is_sat();
            let grid = grid_oracle_interval(&lg, 2 * lg.vertex_count() as u32, bound)
                .map_err(|e| format!("{lg}: {e}"))?
                .is_sat();
            ensure(exact == grid, || format!("{lg}: solver {exact}, grid {grid}"))
        })
    })?;
    Ok(format!("{} structures, {labelings} labelings", corpus.len()))
}

fn series_parallel_disks() -> Check {
    let cases: Vec<(usize, u64)> = (0..200u64).map(|s| (2 + (s as usize % 11), s)).collect();
    cases.par_iter().try_for_each(|&(n, seed)| {
        let base = gen_random_series_parallel(n, seed).map_err(|e| e.to_string())?;
        for k in 0..5 {
            let g = random_labeling(&base, seed * 31 + k);
            let rep = represent_degree2_contractible(&g).map_err(|e| format!("{g}: {e}"))?;
            ensure(verify_disk(&g, &rep).unwrap().is_valid(), || format!("{g}: invalid disk rep"))?;
            for e in g.edges() {
                let d2 = squared_distance(rep.points[e.u], rep.points[e.v]);
                ensure(d2 > 0 && d2 <= 16, || format!("{g}: edge ({},{}) has squared gap {d2}", e.u, e.v))?;
            }
        }
        Ok::<(), String>(())
    })?;
    Ok("200 graphs x 5 labelings".into())
}

/// Glues faces of length at least four along outer edges.
fn triangle_free_family() -> Vec<LabeledGraph> {
    fn glue(pairs: &[(usize, usize)], n: usize, edge: (usize, usize), len: usize) -> (Vec<(usize, usize)>, usize) {
        let mut out = pairs.to_vec();
        let mut prev = edge.0;
        for i in 0..len - 2 {
            out.push((prev, n + i));
            prev = n + i;
        }
        out.push((prev, edge.1));
        (out, n + len - 2)
    }
    let cyc = |k: usize| -> Vec<(usize, usize)> { (0..k).map(|i| (i, (i + 1) % k)).collect() };
    let mut family: Vec<(Vec<(usize, usize)>, usize)> = (4..=12).map(|k| (cyc(k), k)).collect();
    for (a, b) in [(4, 4), (4, 5), (4, 6), (5, 5), (4, 7), (5, 6), (4, 8), (5, 7), (6, 6)] {
        family.push(glue(&cyc(a), a, (0, 1), b));
    }
    // three squares in a row and around a shared vertex, a square with two
    // pentagons on opposite sides
    let (p, n) = glue(&cyc(4), 4, (0, 1), 4);
    family.push(glue(&p, n, (2, 3), 4));
    family.push(glue(&p, n, (1, 2), 4));
    family.push(glue(&p, n, (4, 5), 4));
    let (p, n) = glue(&cyc(4), 4, (0, 1), 5);
    family.push(glue(&p, n, (2, 3), 5));
    family
        .into_iter()
        .map(|(pairs, n)| LabeledGraph::unlabeled(n, pairs).unwrap())
        .filter(|g| g.edge_count() <= 12)
        .collect()
}

fn triangle_free_outerplanar() -> Check {
    let family = triangle_free_family();
    for g in &family {
        ensure(g.is_triangle_free() && g.is_biconnected() && outer_embedding(g).is_some(), || {
            format!("{g} is not a 2-connected triangle-free outerplanar graph")
        })?;
    }
    let total: usize = family.iter().map(|g| 1usize << g.edge_count()).sum();
    family.par_iter().try_for_each(|g| {
        all_labelings(g).try_for_each(|lg| {
            let rep = represent_triangle_free_outerplanar(&lg).map_err(|e| format!("{lg}: {e}"))?;
            ensure(rep.diameter == qi(2), || format!("{lg}: diameter {}", rep.diameter))?;
            ensure(verify_interval(&lg, &rep).unwrap().is_valid(), || format!("{lg}: invalid"))?;
            ensure(rep.max_adjacent_gap(&lg) <= qi(6), || format!("{lg}: gap above 6"))?;
            ensure(decide_interval(&lg).is_sat(), || format!("{lg}: solver says unsat"))
        })
    })?;
    Ok(format!("{} graphs, {total} labelings", family.len()))
}

fn values_within(rep: &weakrep::interval::IntervalRep, limit: i64) -> bool {
    rep.coords.iter().all(|c| c.is_integer() && c.to_integer().abs() <= limit)
}

fn decomposition_colorings() -> Check {
    let corpus: Vec<LabeledGraph> = (1..=7).flat_map(|n| connected_graphs(n, 7)).collect();
    let mut strict: Vec<(LabeledGraph, Decomposition)> = Vec::new();
    let mut nearly: Vec<(LabeledGraph, Decomposition)> = Vec::new();
    for g in &corpus {
        let n = g.vertex_count();
        if let Some(d) = decompose_forest_2independent(g, DecomposeMode::default()).map_err(|e| e.to_string())? {
            strict.push((g.clone(), d));
        }
        for mask in 0u64..1 << n {
            let d = Decomposition::from_iset(n, (0..n).filter(|&v| mask >> v & 1 == 1));
            if validate_decomposition(g, &d).is_err() && validate_nearly_2independent(g, &d).is_ok() {
                nearly.push((g.clone(), d));
                break;
            }
        }
    }
    let labelings: usize = strict.iter().chain(&nearly).map(|(g, _)| 1usize << g.edge_count()).sum();
    strict.par_iter().try_for_each(|(g, d)| {
        all_labelings(g).try_for_each(|lg| {
            let rep = color_forest_2independent(&lg, d).map_err(|e| format!("{lg}: {e}"))?;
            ensure(rep.diameter == qi(1) && verify_interval(&lg, &rep).unwrap().is_valid(), || format!("{lg}: invalid"))?;
            ensure(values_within(&rep, 2), || format!("{lg}: values outside -2..2"))
        })
    })?;
    nearly.par_iter().try_for_each(|(g, d)| {
        all_labelings(g).try_for_each(|lg| {
            let rep = color_nearly_2independent(&lg, d).map_err(|e| format!("{lg}: {e}"))?;
            ensure(rep.diameter == qi(3) && verify_interval(&lg, &rep).unwrap().is_valid(), || format!("{lg}: invalid"))?;
            ensure(values_within(&rep, 5), || format!("{lg}: values outside -5..5"))
        })
    })?;
    Ok(format!("{} strict and {} relaxed instances, {labelings} labelings", strict.len(), nearly.len()))
}

fn density() -> Check {
    let maximal: Vec<LabeledGraph> = (4..=14).flat_map(|n| (0..3).map(move |s| stacked_triangulation(n, s))).collect();
    for g in &maximal {
        let n = g.vertex_count();
        ensure(g.edge_count() == 3 * n - 6, || format!("{g} is not maximal planar"))?;
        ensure(density_certificate(g) == DensityVerdict::ExceedsBound, || format!("{g} not flagged"))?;
    }
    // W_5 has 8 edges against a bound of 7, one short of maximal planar
    let w5 = gen_wheel_hard(5).map_err(|e| e.to_string())?;
    ensure(density_certificate(&wheel(5)) == DensityVerdict::ExceedsBound, || "W_5 not flagged".into())?;
    ensure(!decide_interval(&w5).is_sat(), || "hard W_5 labeling is representable".into())?;
    Ok(format!("{} maximal planar graphs flagged, W_5 flagged and unsat", maximal.len()))
}

fn same_graph(a: &LabeledGraph, b: &LabeledGraph) -> bool {
    let mut x = a.edges().to_vec();
    let mut y = b.edges().to_vec();
    x.sort_by_key(|e| (e.u, e.v));
    y.sort_by_key(|e| (e.u, e.v));
    a.vertex_count() == b.vertex_count() && x == y
}

fn girth4() -> Check {
    let bound = WorkBound::from_env();
    let found = search_girth4_unsat(8, bound).map_err(|e| e.to_string())?.ok_or("search found nothing")?;
    let fixture = girth4_fixture();
    ensure(same_graph(&found, &fixture), || format!("search found {found}, fixture is {fixture}"))?;
    ensure(fixture.girth() == Some(4), || "fixture girth is not 4".into())?;
    ensure(is_planar(&fixture, bound).map_err(|e| e.to_string())?, || "fixture is not planar".into())?;
    ensure(!decide_interval(&fixture).is_sat(), || "fixture labeling is representable".into())?;
    Ok(format!("{} vertices, {} edges", fixture.vertex_count(), fixture.edge_count()))
}

fn cube_lift() -> Check {
    let eps = q(1, 2);
    for mask in 0..16 {
        let g = path(5).with_label_mask(mask);
        let rep = decide_interval(&g).witness().cloned().ok_or("path unsat")?;
        let col = to_threshold_coloring(&g, &rep).map_err(|e| e.to_string())?;
        let side: Q = qi(col.threshold) + eps;
        let scene = lift_cubes(&grid_strip(5, side), &col, col.threshold, eps).map_err(|e| e.to_string())?;
        let report = verify_cube_contacts(&g, &scene, true).map_err(|e| e.to_string())?;
        ensure(report.is_valid(), || format!("{g}: {report:?}"))?;
    }
    Ok("all 16 labelings of P_5".into())
}

/// Straight to stderr so the lines show up without `--nocapture`.
#[allow(clippy::explicit_write)]
fn line(text: String) {
    writeln!(std::io::stderr(), "{text}").unwrap();
}

#[test]
fn acceptance() {
    let checks: [Criterion; 10] = [
        ("placement table", table_rows),
        ("wheel impossibility", wheels),
        ("sungraph dichotomy", sungraph),
        ("solver and grid oracle agree", solver_oracle_agreement),
        ("degree-2 contractible disks", series_parallel_disks),
        ("triangle-free outerplanar", triangle_free_outerplanar),
        ("decomposition colorings", decomposition_colorings),
        ("density bound", density),
        ("planar girth-4 counterexample", girth4),
        ("cube lifting", cube_lift),
    ];
    let mut failed = 0;
    for (i, (name, check)) in checks.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => line(format!("PASS {:>2} {name}: {detail} ({secs:.2}s)", i + 1)),
            Err(why) => {
                failed += 1;
                line(format!("FAIL {:>2} {name}: {why} ({secs:.2}s)", i + 1));
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance checks failed");
}
