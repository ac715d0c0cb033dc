//! End-to-end run of the worked example through the public API only:
//! three production constraints over the nonnegative quadrant, the
//! pentagon they cut out, its ten-class fan, both solvers on the headline
//! objective, and the multiobjective verdicts.

use fanlp::{
    argmax_enumerate, build_fan, build_polygon, classify_instance, project_onto_line,
    simplex_solve, verify_ideal, ArgmaxKind, Halfspace, HalfspaceSystem, LinearForm,
    MolppInstance, Vector2, Verdict,
};

fn system() -> HalfspaceSystem {
    HalfspaceSystem::with_nonnegativity(vec![
        Halfspace::new(0.25, 0.5, 40.0),
        Halfspace::new(0.4, 0.2, 40.0),
        Halfspace::new(0.0, 0.8, 40.0),
    ])
    .unwrap()
}

#[test]
fn pentagon_fan_and_both_solvers() {
    let sys = system();
    let polygon = build_polygon(&sys, 1e-9).unwrap();

    let expected = [
        (0.0, 0.0),
        (100.0, 0.0),
        (80.0, 40.0),
        (60.0, 50.0),
        (0.0, 50.0),
    ];
    assert_eq!(polygon.vertex_count(), 5);
    for (v, (x1, x2)) in polygon.vertices().iter().zip(expected) {
        assert!((*v - Vector2::new(x1, x2)).norm() < 1e-9);
    }

    let fan = build_fan(&polygon).unwrap();
    assert_eq!(fan.len(), 10);

    // Both solvers agree on the headline objective 2*x1 + 3*x2.
    let f = LinearForm::new(2.0, 3.0).unwrap();
    let by_enum = argmax_enumerate(&polygon, f, 1e-9).unwrap();
    assert_eq!(by_enum.kind, ArgmaxKind::Vertex(2));
    assert!((by_enum.optimal_value - 280.0).abs() < 1e-9);
    let (x, value) = simplex_solve(&sys, f).unwrap();
    assert!((x - Vector2::new(80.0, 40.0)).norm() < 1e-7);
    assert!((value - 280.0).abs() < 1e-7);

    // The optimum also maximizes the distance to the objective's zero
    // line: 280 / sqrt(13).
    let distances: Vec<f64> = polygon
        .vertices()
        .iter()
        .map(|&v| (v - project_onto_line(v, f.kernel_line())).norm())
        .collect();
    let best = distances
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
        .unwrap();
    assert_eq!(best.0, 2);
    assert!((best.1 - 77.65802747153208).abs() < 1e-9);

    // Sensitivity: the optimum survives any objective direction strictly
    // between 26.565° and 63.435°.
    let cone = fan.sensitivity_interval(2).unwrap();
    assert!((cone.lo().degrees() - 26.56505117707799).abs() < 0.01);
    assert!((cone.hi().degrees() - 63.43494882292201).abs() < 0.01);

    // All five cones together cover the full circle of directions.
    let total: f64 = (0..5)
        .map(|v| fan.sensitivity_interval(v).unwrap().width())
        .sum();
    assert!((total - std::f64::consts::TAU).abs() < 1e-9);
}

#[test]
fn multiobjective_verdicts() {
    // Three objectives inside one cone: the shared optimum is (80, 40).
    let agreeing = MolppInstance::new(
        system(),
        vec![
            LinearForm::new(2.0, 3.0).unwrap(),
            LinearForm::new(1.0, 1.0).unwrap(),
            LinearForm::new(3.0, 4.0).unwrap(),
        ],
    )
    .unwrap();
    let report = classify_instance(&agreeing).unwrap();
    match report.verdict() {
        Verdict::IdealVertex { vertex_index, point } => {
            assert_eq!(vertex_index, 2);
            assert!((point - Vector2::new(80.0, 40.0)).norm() < 1e-7);
            assert!(verify_ideal(&agreeing, point).unwrap());
        }
        other => panic!("expected IdealVertex, got {other:?}"),
    }

    // Pulling one objective to the x-axis breaks the agreement.
    let conflicting = MolppInstance::new(
        system(),
        vec![
            LinearForm::new(2.0, 3.0).unwrap(),
            LinearForm::new(1.0, 0.0).unwrap(),
        ],
    )
    .unwrap();
    let report = classify_instance(&conflicting).unwrap();
    assert_eq!(report.verdict(), Verdict::NoIdeal);
    assert_eq!(report.groups().len(), 2);
    assert!(!verify_ideal(&conflicting, Vector2::new(80.0, 40.0)).unwrap());
}
