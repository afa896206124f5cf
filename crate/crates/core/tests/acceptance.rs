//! Acceptance suite: one test per criterion, each printing a pass line.
//! Criteria with stated runtime budgets assert them (the test profile builds
//! with optimizations, see the workspace manifest).

use std::collections::BTreeSet;
use std::time::Instant;

use tamecx::algebra::quadratic_form;
use tamecx::complex::{
    builders, corner_angle, AngleTables, Ext, GeodesicDag, Metric, PolygonalComplex,
};
use tamecx::contraction::{
    all_pairs, check_checkpoint_system, check_coarse_lipschitz, contraction_constant,
    cross_check_aov_scp, CheckpointSystem, ScpOptions, Violation,
};
use tamecx::tame::{derive_common_stabilizer_constraints, explicit_g, sample_words, ConstraintSet};
use tamecx::tame_complex::{enumerate_ball, verify_grid, BallCaps};
use tamecx::Rat;

/// The test corpus: trees up to 100 vertices, grids up to 9x9, ladders, two
/// glued squares, and one triangle complex, each with its tested quasi-lines.
fn corpus() -> Vec<(String, PolygonalComplex, Vec<BTreeSet<usize>>)> {
    let mut out = Vec::new();

    let c = builders::path(100);
    let all: BTreeSet<usize> = (0..100).collect();
    let half: BTreeSet<usize> = (20..60).collect();
    out.push(("path100".to_string(), c, vec![all, half]));

    let c = builders::star(12);
    let spine: BTreeSet<usize> = [1, 0, 2].into();
    out.push(("star12".to_string(), c, vec![spine]));

    let c = builders::binary_tree(5);
    let spine: BTreeSet<usize> = [0usize, 1, 3, 7, 15, 31].into();
    out.push(("btree5".to_string(), c, vec![spine]));

    let c = builders::random_tree(80, 17);
    let m = Metric::new(&c);
    let far = (0..c.vertex_count()).max_by_key(|&v| m.dist[0][v]).unwrap();
    let spine = GeodesicDag::new(&c, 0, far).unwrap().interval();
    out.push(("rtree80".to_string(), c, vec![spine]));

    for n in [5usize, 7, 9] {
        let c = builders::grid(n, n);
        let mid = n / 2;
        let row = |j: usize| -> BTreeSet<usize> {
            (0..n)
                .map(|i| c.vertex_by_label(&format!("({i},{j})")).unwrap())
                .collect()
        };
        let lines = vec![row(0), row(mid)];
        out.push((format!("grid{n}x{n}"), c, lines));
    }

    let c = builders::ladder(10);
    let bottom: BTreeSet<usize> = (0..10)
        .map(|i| c.vertex_by_label(&format!("({i},0)")).unwrap())
        .collect();
    out.push(("ladder10".to_string(), c, vec![bottom]));

    let c = builders::glued_squares();
    let bottom: BTreeSet<usize> = (0..3)
        .map(|i| c.vertex_by_label(&format!("({i},0)")).unwrap())
        .collect();
    out.push(("glued_squares".to_string(), c, vec![bottom]));

    let c = builders::triangle();
    let edge: BTreeSet<usize> = [0, 1].into();
    out.push(("triangle".to_string(), c, vec![edge]));

    out
}

#[test]
fn criterion_1_q_invariance() {
    let start = Instant::now();
    let q = quadratic_form();
    let g = explicit_g();
    assert_eq!(g.forward.quadratic_form_pullback(), q);
    assert_eq!(g.inverse.quadratic_form_pullback(), q);
    for el in sample_words(2024, 20, 4) {
        assert_eq!(el.forward.quadratic_form_pullback(), q);
        assert_eq!(el.inverse.quadratic_form_pullback(), q);
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "q-invariance took {elapsed:?}, budget 1 s"
    );
    println!("ACCEPTANCE 1 q-invariance: PASS ({elapsed:?})");
}

#[test]
fn criterion_2_inverse_identity() {
    let g = explicit_g();
    assert!(g.forward.compose(&g.inverse).is_identity());
    assert!(g.inverse.compose(&g.forward).is_identity());
    println!("ACCEPTANCE 2 exact inverse: PASS");
}

#[test]
fn criterion_3_stabilizer_constraints() {
    let start = Instant::now();
    let set = derive_common_stabilizer_constraints().unwrap();
    let summary: Vec<String> = set.summary.iter().map(|p| p.to_string()).collect();
    assert_eq!(summary, vec!["a^6 - 1", "b^6 - 1", "c", "d"]);
    let mirrors: Vec<String> = set.mirrors.iter().map(|p| p.to_string()).collect();
    assert_eq!(mirrors, vec!["a*a' - 1", "b - b'", "c'", "d'"]);

    let identity = ConstraintSet::identity_params();
    assert!(set.violated_by(&identity).unwrap().is_empty());

    let mut a_two = identity;
    a_two[0] = Rat::from_integer(2.into());
    assert!(!set.violated_by(&a_two).unwrap().is_empty());

    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "stabilizer derivation took {elapsed:?}, budget 10 s"
    );
    println!("ACCEPTANCE 3 stabilizer constraints: PASS ({elapsed:?})");
}

#[test]
fn criterion_4_grid_reproduction() {
    let start = Instant::now();
    let g = explicit_g();
    let portion = enumerate_ball(&[g.clone()], 2, &BallCaps::default()).unwrap();
    let report = verify_grid(&portion, &g).unwrap();
    assert_eq!(report.interval_vertices, 25);
    assert_eq!(report.interval_edges, 40);
    assert_eq!(report.interval_squares, 16);
    assert_eq!(report.distance_v_g2v, 8);
    assert_eq!(report.distance_v_gv, 4);
    assert_eq!(report.distance_gv_g2v, 4);
    assert!(report.is_grid_4x4, "{report:?}");
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "grid reproduction took {elapsed:?}, budget 60 s"
    );
    println!("ACCEPTANCE 4 grid reproduction: PASS ({elapsed:?})");
}

#[test]
fn criterion_5_coarse_lipschitz_corpus() {
    for (name, c, lines) in corpus() {
        let m = Metric::new(&c);
        for (k, lambda) in lines.iter().enumerate() {
            let rep = contraction_constant(&c, &m, lambda, m.diameter());
            let violations = check_coarse_lipschitz(&c, &m, lambda, rep.constant);
            assert!(
                violations.is_empty(),
                "{name} line {k}: C = {} leaves {} violations",
                rep.constant,
                violations.len()
            );
        }
    }
    println!("ACCEPTANCE 5 coarsely Lipschitz projections: PASS");
}

#[test]
fn criterion_6_aov_implies_scp() {
    for (name, c, _) in corpus() {
        assert!(
            cross_check_aov_scp(&c, &ScpOptions::default()),
            "{name} fails the angle-of-view / concatenation cross-check"
        );
    }
    println!("ACCEPTANCE 6 angle of view => strong concatenation: PASS");
}

#[test]
fn criterion_7_checkpoints() {
    // tree example: path of 200 vertices, shift by one, singleton checkpoints
    let c = builders::path(200);
    let m = Metric::new(&c);
    let sys = CheckpointSystem::new(
        (0..200).map(|v| [v].into()).collect(),
        (0..200).collect(),
        0,
    )
    .unwrap();
    let pairs = all_pairs(&c, &m, 2);
    let rep = check_checkpoint_system(&c, &m, &sys, &pairs, None).unwrap();
    assert!(
        rep.violations.is_empty(),
        "tree checkpoints: {} violations",
        rep.violations.len()
    );

    // plane example: horizontal shift along the bottom row of a 9x9 portion
    let c = builders::grid(9, 9);
    let m = Metric::new(&c);
    let axis: Vec<usize> = (0..9)
        .map(|i| c.vertex_by_label(&format!("({i},0)")).unwrap())
        .collect();
    let sys = CheckpointSystem::new(
        axis.iter().map(|&v| [v].into()).collect(),
        (0..9).collect(),
        0,
    )
    .unwrap();
    let pairs = all_pairs(&c, &m, 2);
    let rep = check_checkpoint_system(&c, &m, &sys, &pairs, None).unwrap();
    assert!(!rep.violations.is_empty(), "plane shift must violate");
    // the witness geodesic is re-checkable: a genuine geodesic avoiding the
    // checkpoint
    let Violation::CheckpointMissed {
        x,
        y,
        checkpoint_index,
        witness_geodesic,
    } = &rep.violations[0]
    else {
        panic!("wrong violation kind");
    };
    let verts: Vec<usize> = witness_geodesic
        .iter()
        .map(|l| c.vertex_by_label(l).unwrap())
        .collect();
    assert!(tamecx::complex::is_geodesic_path(&c, &m, &verts));
    assert_eq!(verts.first(), c.vertex_by_label(x).as_ref());
    assert_eq!(verts.last(), c.vertex_by_label(y).as_ref());
    let checkpoint = axis[*checkpoint_index as usize];
    assert!(!verts.contains(&checkpoint));
    println!("ACCEPTANCE 7 checkpoint systems: PASS");
}

#[test]
fn criterion_8_angle_ground_truths() {
    // opposite edges at an interior plane vertex: 2
    let c = builders::grid(3, 3);
    let v = c.vertex_by_label("(1,1)").unwrap();
    let e = c.vertex_by_label("(2,1)").unwrap();
    let w = c.vertex_by_label("(0,1)").unwrap();
    assert_eq!(corner_angle(&c, v, e, w).unwrap(), Ext::Fin(2));

    // distinct edges at a tree vertex: infinite
    let t = builders::star(5);
    assert_eq!(corner_angle(&t, 0, 1, 2).unwrap(), Ext::Inf);

    // a single square corner: 1
    let s = builders::single_square();
    let a = s.vertex_by_label("(0,0)").unwrap();
    let b = s.vertex_by_label("(1,0)").unwrap();
    let d = s.vertex_by_label("(0,1)").unwrap();
    assert_eq!(corner_angle(&s, a, b, d).unwrap(), Ext::Fin(1));
    println!("ACCEPTANCE 8 angle ground truths: PASS");
}

#[test]
fn criterion_9_json_round_trip() {
    // library half of criterion 9: export/import is an isomorphism on the
    // corpus (the CLI half checks byte-determinism of command output)
    for (name, c, _) in corpus() {
        let json = c.to_json();
        let text = serde_json::to_string(&json).unwrap();
        let parsed: tamecx::complex::ComplexJson = serde_json::from_str(&text).unwrap();
        let back = PolygonalComplex::from_json(&parsed).unwrap();
        assert_eq!(c, back, "round trip changed {name}");
    }
    println!("ACCEPTANCE 9 (library half) JSON round trip: PASS");
}

#[test]
fn angle_of_view_values_on_reference_complexes() {
    // supporting evidence for criterion 6: the measured angles themselves
    let c = builders::grid(7, 7);
    let m = Metric::new(&c);
    let t = AngleTables::new(&c);
    let aov = tamecx::contraction::measure_angle_of_view(&c, &m, &t);
    assert_eq!(aov.angle_of_view, Ext::Fin(2));

    let c = builders::random_tree(50, 23);
    let m = Metric::new(&c);
    let t = AngleTables::new(&c);
    let aov = tamecx::contraction::measure_angle_of_view(&c, &m, &t);
    assert_eq!(aov.angle_of_view, Ext::Fin(0));
}
