use qtangle::algorithms::{grover_run, grover_table, optimal_iterations, GroverRun, StageMeasures};

#[test]
fn table_is_target_independent() {
    let reference = grover_table::<f64>(7, 2).unwrap();
    for target in 0..8 {
        let rows = grover_table::<f64>(target, 2).unwrap();
        for (a, b) in rows.iter().zip(&reference) {
            for (x, y) in [(a.tau3, b.tau3), (a.c_ab, b.c_ab), (a.c_ac, b.c_ac), (a.c_bc, b.c_bc)] {
                assert!((x - y).abs() < 1e-9, "target {target}");
            }
        }
    }
}

#[test]
fn success_probability_at_optimal_iterations() {
    for n in 2..=6 {
        let k = optimal_iterations(n);
        let run: GroverRun<f64> = grover_run(n, 1, k).unwrap();
        let theta = (1.0 / ((1 << n) as f64).sqrt()).asin();
        let expected = ((2 * k + 1) as f64 * theta).sin().powi(2);
        assert!((run.success_probability() - expected).abs() < 1e-12, "n={n}");
        assert!(run.success_probability() >= 0.94, "n={n}");
    }
}

#[test]
fn snapshot_labels() {
    let run: GroverRun<f64> = grover_run(3, 2, 2).unwrap();
    let labels: Vec<&str> = run.trace.labels().collect();
    assert_eq!(
        labels,
        ["initial", "superposition", "oracle-1", "diffuser-1", "oracle-2", "diffuser-2"]
    );
    assert!(run
        .stages
        .iter()
        .all(|s| matches!(s.measures, StageMeasures::ThreeQubit(_))));
}

#[test]
fn three_qubit_records_satisfy_monogamy() {
    let run: GroverRun<f64> = grover_run(3, 7, 2).unwrap();
    for stage in &run.stages {
        if let StageMeasures::ThreeQubit(r) = &stage.measures {
            assert!(r.satisfies_monogamy(1e-9), "{}", stage.label);
        }
    }
}
