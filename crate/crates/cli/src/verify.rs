use std::collections::BTreeMap;

use anyhow::{Context, Result};

use qtangle::algorithms::{
    b0_squared_grid, closed_form_tangles, cross_validate_against, grover_run, grover_table, hhl_run, sweep,
    HhlProblem, StageMeasures, VALIDATION_TOLERANCE,
};
use qtangle::entanglement::{analyze_three_qubit, pi_tangle, EntanglementRecord, Rank2Family};
use qtangle::{StateVector, StateVector64};

use crate::output::number;
use crate::Common;

const INVARIANT_TOLERANCE: f64 = 1e-9;

/// Worst discrepancy seen for one named check, against a fixed tolerance.
struct Line {
    name: &'static str,
    worst: f64,
    tolerance: f64,
}

impl Line {
    fn passed(&self) -> bool {
        self.worst.is_finite() && self.worst <= self.tolerance
    }
}

#[derive(Default)]
struct Report {
    lines: Vec<Line>,
}

impl Report {
    fn record(&mut self, name: &'static str, discrepancy: f64, tolerance: f64) {
        let d = if discrepancy.is_nan() { f64::INFINITY } else { discrepancy };
        match self.lines.iter_mut().find(|l| l.name == name) {
            Some(l) => l.worst = l.worst.max(d),
            None => self.lines.push(Line {
                name,
                worst: d,
                tolerance,
            }),
        }
    }

    fn print(&self) -> bool {
        println!("check\tmax_discrepancy\ttolerance\tstatus");
        for l in &self.lines {
            let status = if l.passed() { "ok" } else { "FAILED" };
            println!("{}\t{}\t{:.1e}\t{status}", l.name, number(l.worst), l.tolerance);
        }
        let failed: Vec<&str> = self.lines.iter().filter(|l| !l.passed()).map(|l| l.name).collect();
        if failed.is_empty() {
            let worst = self.lines.iter().map(|l| l.worst).fold(0.0, f64::max);
            println!("all {} checks passed; max discrepancy {}", self.lines.len(), number(worst));
            true
        } else {
            eprintln!("failing checks: {}", failed.join(", "));
            false
        }
    }
}

pub fn run(common: &Common, closed_form_c: Option<f64>) -> Result<bool> {
    let c = common.rotation_constant();
    let reference_c = closed_form_c.unwrap_or(c);
    let mut report = Report::default();

    hhl_checks(&mut report, common.grid_points, c, reference_c)?;
    grover_checks(&mut report)?;
    reference_states(&mut report)?;
    rank2_checks(&mut report)?;

    Ok(report.print())
}

fn hhl_checks(report: &mut Report, points: usize, c: f64, reference_c: f64) -> Result<()> {
    let grid = b0_squared_grid::<f64>(points);
    let results = sweep(&grid, |&b0_sq| -> qtangle::Result<_> {
        let simulated = HhlProblem::from_b0_squared(b0_sq, c)?;
        let reference = simulated.with_c(reference_c)?;
        let validation = cross_validate_against(&simulated, &reference)?;
        let states = hhl_run(&simulated)?;
        let records = [
            analyze_three_qubit(&states.psi1_bar())?,
            analyze_three_qubit(&states.rho2_bar)?,
            analyze_three_qubit(&states.rho3_bar)?,
        ];
        let solution = simulated.solution();
        let direction = states.solution_direction(solution)?;
        Ok((validation, states.clock_leakage(), records, solution, direction, closed_form_tangles(&reference)))
    });

    for (&b0_sq, r) in grid.iter().zip(results) {
        let (validation, leakage, records, solution, direction, tangles) =
            r.with_context(|| format!("b0_sq = {b0_sq}"))?;
        for check in &validation.checks {
            report.record(check.name, check.discrepancy, VALIDATION_TOLERANCE);
        }
        report.record("clock-uncomputed", leakage, 1e-10);

        let norm = solution[0].hypot(solution[1]);
        let err = (direction[0] - solution[0] / norm)
            .abs()
            .max((direction[1] - solution[1] / norm).abs());
        report.record("solution-direction", err, VALIDATION_TOLERANCE);

        for rec in &records {
            report.record("hhl-monogamy", monogamy_violation(rec), INVARIANT_TOLERANCE);
            report.record(
                "hhl-pairwise-concurrence",
                rec.pairwise_concurrences.to_array().into_iter().fold(0.0, f64::max),
                INVARIANT_TOLERANCE,
            );
        }

        let order = (tangles.stage2.tau3 - tangles.stage1.tau3)
            .max(tangles.stage2.pi3 - tangles.stage1.pi3)
            .max(0.0);
        report.record("stage-ordering", order, INVARIANT_TOLERANCE);
    }
    Ok(())
}

fn monogamy_violation(rec: &EntanglementRecord<f64>) -> f64 {
    rec.monogamy_residuals()
        .to_array()
        .into_iter()
        .map(|r| (-r).max(0.0))
        .fold(0.0, f64::max)
}

fn grover_checks(report: &mut Report) -> Result<()> {
    let expected_tau = [1.0 / 4.0, 1.0 / 16.0, 9.0 / 64.0, 9.0 / 256.0];
    let expected_c = [1.0 / 2.0, 1.0 / 4.0, 3.0 / 8.0, 3.0 / 16.0];
    let rows = grover_table::<f64>(7, 2)?;
    if rows.len() != expected_tau.len() {
        report.record("grover-table", f64::INFINITY, INVARIANT_TOLERANCE);
    }
    for (row, (&tau, &conc)) in rows.iter().zip(expected_tau.iter().zip(&expected_c)) {
        let err = [row.c_ab, row.c_ac, row.c_bc]
            .into_iter()
            .map(|x| (x - conc).abs())
            .fold((row.tau3 - tau).abs(), f64::max);
        report.record("grover-table", err, INVARIANT_TOLERANCE);
    }

    for n in 2..=6 {
        let run = grover_run::<f64>(n, (1 << n) - 1, qtangle::algorithms::optimal_iterations(n))?;
        report.record("grover-success", (0.94 - run.success_probability()).max(0.0), 0.0);
        if n == 3 {
            for stage in &run.stages {
                if let StageMeasures::ThreeQubit(rec) = &stage.measures {
                    report.record("grover-monogamy", monogamy_violation(rec), INVARIANT_TOLERANCE);
                }
            }
        }
    }

    let two = grover_run::<f64>(2, 3, 1)?;
    report.record("grover-n4-success", (1.0 - two.success_probability()).abs(), 1e-12);
    if let Some(StageMeasures::TwoQubit { concurrence }) = two.stage("oracle-1").map(|s| &s.measures) {
        report.record("grover-n4-oracle-concurrence", (concurrence - 1.0).abs(), 1e-10);
    } else {
        report.record("grover-n4-oracle-concurrence", f64::INFINITY, 1e-10);
    }
    Ok(())
}

fn reference_states(report: &mut Report) -> Result<()> {
    let ghz = StateVector64::from_real(&[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0])?;
    let w = StateVector64::from_real(&[0.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0])?;
    let expected = BTreeMap::from([(0, 1.0), (1, 4.0 / 9.0 * (5f64.sqrt() - 1.0))]);
    for (i, state) in [&ghz, &w].into_iter().enumerate() {
        let pi = pi_tangle(&state.to_density())?;
        report.record("pi-tangle-references", (pi - expected[&i]).abs(), INVARIANT_TOLERANCE);
        let rec = analyze_three_qubit(state)?;
        report.record("reference-monogamy", monogamy_violation(&rec), INVARIANT_TOLERANCE);
    }
    let product: StateVector<f64> = StateVector::zero(3);
    let tau = analyze_three_qubit(&product)?.three_tangle.unwrap_or(f64::INFINITY);
    report.record("pi-tangle-references", tau.abs(), INVARIANT_TOLERANCE);
    Ok(())
}

fn rank2_checks(report: &mut Report) -> Result<()> {
    let steps = 101;
    let thetas: Vec<f64> = (0..16).map(|k| std::f64::consts::TAU * k as f64 / 16.0).collect();
    for i in 0..=20 {
        let x1 = i as f64 / 20.0;
        let base = Rank2Family::new(x1, 0.0)?;
        let (lo, hi) = base.p_bounds();
        let zeros = base.with_p(lo)?.minimal_characteristic().max(base.with_p(hi)?.minimal_characteristic());
        report.record("rank2-zeros", zeros, 1e-12);

        let mut hull = Vec::with_capacity(steps);
        for j in 0..steps {
            let family = base.with_p(j as f64 / (steps - 1) as f64)?;
            let h = family.three_tangle();
            let f = family.minimal_characteristic();
            let above = thetas.iter().map(|&t| h - family.characteristic(t)).fold(h - f, f64::max);
            report.record("rank2-hull-below-curves", above.max(0.0), 1e-12);
            hull.push(h);
        }
        let concavity = hull
            .windows(3)
            .map(|w| w[1] - 0.5 * (w[0] + w[2]))
            .fold(0.0, f64::max);
        report.record("rank2-hull-convexity", concavity, 1e-12);
    }
    Ok(())
}
