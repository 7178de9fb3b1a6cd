use weakrep::cube::{grid_strip, lift_cubes, verify_cube_contacts, SquareContactRep};
use weakrep::generators::path;
use weakrep::interval::{decide_interval, to_threshold_coloring};
use weakrep::rational::{q, qi};
use weakrep::{LabeledGraph, Q};

/// `rows x cols` grid of touching squares and its contact graph.
fn grid(rows: usize, cols: usize, side: Q) -> (SquareContactRep, LabeledGraph) {
    let id = |r: usize, c: usize| r * cols + c;
    let centers = (0..rows * cols).map(|i| (side * qi((i % cols) as i64), side * qi((i / cols) as i64))).collect();
    let mut pairs = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                pairs.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                pairs.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    (SquareContactRep { centers, side }, LabeledGraph::unlabeled(rows * cols, pairs).unwrap())
}

fn lift_every_labeling(rows: usize, cols: usize) -> usize {
    let mut lifted = 0;
    let (_, shape) = grid(rows, cols, qi(1));
    for mask in 0..1u64 << shape.edge_count() {
        let g = shape.with_label_mask(mask);
        let Some(rep) = decide_interval(&g).witness().cloned() else { continue };
        let col = to_threshold_coloring(&g, &rep).unwrap();
        for eps in [q(1, 3), q(1, 2), q(9, 10)] {
            let side = qi(col.threshold) + eps;
            let (sq, _) = grid(rows, cols, side);
            let scene = lift_cubes(&sq, &col, col.threshold, eps).unwrap();
            let report = verify_cube_contacts(&g, &scene, true).unwrap();
            assert!(report.is_valid(), "{g} {report:?}");
            for (v, corner) in scene.corners.iter().enumerate() {
                // footprint and elevation are exactly the square and color
                assert_eq!(corner.0 + side / 2, sq.centers[v].0);
                assert_eq!(corner.1 + side / 2, sq.centers[v].1);
                assert_eq!(corner.2, qi(col.colors[v]));
            }
            assert_eq!(scene.side, side);
        }
        lifted += 1;
    }
    lifted
}

#[test]
fn strips_lift_for_every_labeling() {
    for n in 2..=8 {
        assert_eq!(lift_every_labeling(1, n), 1 << (n - 1));
    }
}

#[test]
fn grids_lift_for_every_representable_labeling() {
    assert!(lift_every_labeling(2, 2) > 0);
    assert!(lift_every_labeling(2, 3) > 0);
    assert!(lift_every_labeling(3, 3) > 0);
}

#[test]
fn strip_generator_matches_the_contact_graph() {
    let (sq, g) = grid(1, 5, q(5, 2));
    assert_eq!(sq, grid_strip(5, q(5, 2)));
    assert_eq!(g.edges(), path(5).edges());
}
