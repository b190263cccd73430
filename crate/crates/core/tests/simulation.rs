use std::f64::consts::PI;

use jigsaw_spread::geometry::{
    convex_hull, polygon_area, principal_extents, OrientedSquare, Point2,
};
use jigsaw_spread::sim::{
    find_overlap, generate, hex_layout, measure_layout, pack_grid, pack_random, ratio_statistics,
    run_batch, Layout, Provenance, SimParams, Strategy,
};
use proptest::prelude::*;

fn greedy(seed: u64) -> SimParams {
    SimParams {
        seed,
        ..SimParams::new(Strategy::GreedyRadial)
    }
}

/// Piece area over the hull area of the half of the pieces nearest the origin.
fn centre_packing_fraction(layout: &Layout) -> f64 {
    let mut pieces = layout.pieces().to_vec();
    pieces.sort_by(|a, b| a.center().norm().total_cmp(&b.center().norm()));
    let inner = &pieces[..pieces.len() / 2];
    let corners: Vec<Point2> = inner.iter().flat_map(|p| p.corners()).collect();
    let area: f64 = inner.iter().map(|p| p.area()).sum();
    area / polygon_area(&convex_hull(&corners).unwrap()).unwrap()
}

#[test]
fn greedy_centre_density_golden() {
    let layout = pack_random(500, 1.0, &greedy(42)).unwrap();
    let frac = centre_packing_fraction(&layout);
    assert!((frac - 0.6478).abs() < 1e-4, "packing fraction {frac}");
    assert!(frac > 0.5 && frac < PI / (2.0 * 3f64.sqrt()));
}

#[test]
fn greedy_row1_golden() {
    let p = greedy(7);
    let r = measure_layout(&generate(1008, 3463.8, &p).unwrap(), 3463.8).unwrap();
    assert!(
        (r.spread_ratio_ellipse - 1.5479).abs() < 1e-4,
        "{}",
        r.spread_ratio_ellipse
    );
    assert!((1.3..=2.1).contains(&r.spread_ratio_ellipse));
}

#[test]
fn greedy_batch_mean_in_band() {
    let stats = ratio_statistics(&run_batch(500, 500.0, &greedy(0), 20).unwrap()).unwrap();
    assert!(
        (1.3..=2.1).contains(&stats.ellipse.mean),
        "{:?}",
        stats.ellipse
    );
    assert!(stats.ellipse.stddev > 0.0);
}

#[test]
fn greedy_layouts_are_deterministic() {
    let a = pack_random(300, 1.3, &greedy(5)).unwrap();
    let b = pack_random(300, 1.3, &greedy(5)).unwrap();
    assert_eq!(a, b);
    let c = pack_random(300, 1.3, &greedy(6)).unwrap();
    assert_ne!(a, c);
}

#[test]
fn layouts_pass_full_overlap_audit() {
    for seed in 0..3 {
        assert_eq!(
            find_overlap(pack_random(800, 2.0, &greedy(seed)).unwrap().pieces()),
            None
        );
        assert_eq!(
            find_overlap(hex_layout(800, 2.0, 0.0, seed).unwrap().pieces()),
            None
        );
        assert_eq!(
            find_overlap(hex_layout(800, 2.0, 0.5, seed).unwrap().pieces()),
            None
        );
    }
    assert_eq!(
        find_overlap(pack_grid(800, 2.0, 0.0).unwrap().pieces()),
        None
    );
}

#[test]
fn hex_cluster_extents() {
    let layout = hex_layout(1027, 1.0, 0.0, 0).unwrap();
    let e = principal_extents(&layout.centers(), 0.5).unwrap();
    // 18 rings span 36 across corners and 36 * sqrt(3)/2 across flats.
    let lo = 36.0 * 3f64.sqrt() / 2.0 + 1.0;
    assert!(e.major >= lo - 1e-9 && e.major <= 37.0 + 1e-9, "{e:?}");
    assert!(e.minor >= lo - 1e-9 && e.minor <= 37.0 + 1e-9, "{e:?}");
    assert!((e.major - e.minor).abs() < 1e-9 * e.major);
}

#[test]
fn hex_ratio_shrinks_towards_sqrt3() {
    let sqrt3 = 3f64.sqrt();
    let ratio = |rings: u64| {
        let n = (1 + 3 * rings * (rings + 1)) as usize;
        let area = 0.5 * n as f64;
        measure_layout(&hex_layout(n, 1.0, 0.0, 3).unwrap(), area)
            .unwrap()
            .spread_ratio_hull
    };
    let (r10, r30) = (ratio(10), ratio(30));
    assert!(r10 > r30 && r30 > sqrt3, "{r10} {r30}");
}

#[test]
fn simulation_results_are_ordered_by_seed() {
    let results = run_batch(50, 50.0, &greedy(100), 6).unwrap();
    let seeds: Vec<u64> = results.iter().map(|r| r.seed).collect();
    assert_eq!(seeds, vec![100, 101, 102, 103, 104, 105]);
}

#[test]
fn layout_csv_round_trip() {
    let layout = hex_layout(61, 1.7, 0.4, 11).unwrap();
    let mut buf = Vec::new();
    layout.write_csv(&mut buf).unwrap();
    let back = Layout::read_csv(buf.as_slice(), layout.provenance()).unwrap();
    assert_eq!(back, layout);
}

#[test]
fn overlapping_csv_is_rejected() {
    let text = "idx,cx_cm,cy_cm,edge_cm,rot_rad\n0,0,0,1,0\n1,0.5,0,1,0\n";
    let prov = Provenance {
        strategy: Strategy::Grid,
        seed: 0,
    };
    assert!(Layout::read_csv(text.as_bytes(), prov).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn greedy_never_overlaps(seed in any::<u64>(), n in 1usize..120, edge in 0.1f64..5.0) {
        let layout = pack_random(n, edge, &greedy(seed)).unwrap();
        prop_assert_eq!(layout.len(), n);
        prop_assert_eq!(find_overlap(layout.pieces()), None);
    }

    #[test]
    fn csv_preserves_pieces_exactly(
        pieces in prop::collection::vec((-1e3f64..1e3, -1e3f64..1e3, 0f64..10.0), 1..30),
    ) {
        // Spread pieces far apart so the layout is valid.
        let squares: Vec<OrientedSquare> = pieces
            .iter()
            .enumerate()
            .map(|(i, &(x, y, r))| {
                OrientedSquare::new(Point2::new(x * 1e-3 + 10.0 * i as f64, y * 1e-3), 1.0, r).unwrap()
            })
            .collect();
        let prov = Provenance { strategy: Strategy::Hex, seed: 1 };
        let layout = Layout::new(squares, prov).unwrap();
        let mut buf = Vec::new();
        layout.write_csv(&mut buf).unwrap();
        prop_assert_eq!(Layout::read_csv(buf.as_slice(), prov).unwrap(), layout);
    }
}
