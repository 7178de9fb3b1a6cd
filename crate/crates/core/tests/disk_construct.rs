use rayon::prelude::*;

use weakrep::contraction::find_degree2_contraction_sequence;
use weakrep::disk::{canonicalize_pair, grid_disk_oracle, represent_degree2_contractible, squared_distance, verify_disk};
use weakrep::enumerate::graphs_with;
use weakrep::generators::{gen_random_series_parallel, np_reduction, path, random_labeling};
use weakrep::work::WorkBound;

#[test]
fn canonicalization_round_trips_on_the_box() {
    let pts: Vec<(i64, i64)> = (-10..=10).flat_map(|x| (-10..=10).map(move |y| (x, y))).collect();
    for &pu in pts.iter().step_by(7) {
        for &pw in &pts {
            if pw == pu {
                assert!(canonicalize_pair(pu, pw).is_err());
                continue;
            }
            let (iso, (a, b)) = canonicalize_pair(pu, pw).unwrap();
            assert!(0 <= b && b <= a);
            assert_eq!(iso.apply(pu), (0, 0));
            assert_eq!(iso.apply(pw), (a, b));
            assert_eq!(squared_distance(pu, pw), a * a + b * b);
            for &p in pts.iter().step_by(13) {
                assert_eq!(iso.inverse_apply(iso.apply(p)), p);
                assert_eq!(iso.inverse().apply(iso.apply(p)), p);
            }
        }
    }
}

#[test]
fn construction_implies_grid_witness() {
    let bound = WorkBound::default();
    let corpus: Vec<_> = (1..=5).flat_map(|n| graphs_with(n, 10, |_| true)).collect();
    let checked: usize = corpus.par_iter().map(|g| {
        if find_degree2_contraction_sequence(g).is_none() {
            assert!(represent_degree2_contractible(g).is_err());
            return 0;
        }
        for mask in 0..1u64 << g.edge_count() {
            let lg = g.with_label_mask(mask);
            let rep = represent_degree2_contractible(&lg).unwrap();
            assert!(verify_disk(&lg, &rep).unwrap().is_valid(), "{lg}");
            let oracle = grid_disk_oracle(&lg, 6, bound).unwrap();
            let w = oracle.witness().unwrap_or_else(|| panic!("{lg}: oracle found nothing"));
            assert!(verify_disk(&lg, w).unwrap().is_valid());
        }
        1usize << g.edge_count()
    }).sum();
    assert!(checked > 1000, "{checked}");
}

#[test]
fn series_parallel_gaps_stay_small() {
    for n in 2..=14 {
        for seed in 0..25 {
            let g = random_labeling(&gen_random_series_parallel(n, seed).unwrap(), seed ^ 0x5eed);
            let rep = represent_degree2_contractible(&g).unwrap();
            assert!(verify_disk(&g, &rep).unwrap().is_valid());
            for e in g.edges() {
                let d2 = squared_distance(rep.points[e.u], rep.points[e.v]);
                assert!(d2 > 0 && d2 <= 16, "{g}");
            }
        }
    }
}

#[test]
fn reduced_path_is_a_unit_disk_graph() {
    let k = np_reduction(&path(3));
    assert!(grid_disk_oracle(&k, 3, WorkBound::default()).unwrap().is_sat());
}
