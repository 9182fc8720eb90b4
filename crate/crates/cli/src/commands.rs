use std::collections::BTreeMap;
use std::f64::consts::TAU;

use anyhow::{Context, Result};
use serde_json::json;

use qtangle::algorithms::{b0_squared_grid, closed_form_tangles, grover_table as table_rows, sweep, HhlProblem};
use qtangle::entanglement::Rank2Family;

use crate::output::{ensure_dir, number, Meta, Table};
use crate::Common;

fn meta(command: &'static str, common: &Common, parameters: BTreeMap<&'static str, serde_json::Value>, files: Vec<String>) -> Meta {
    Meta {
        tool: "qtangle",
        version: env!("CARGO_PKG_VERSION"),
        command,
        rotation_constant: common.rotation_constant(),
        grid_points: common.grid_points,
        format: common.format,
        parameters,
        files,
    }
}

pub fn grover_table(target: usize, iterations: usize, common: &Common) -> Result<bool> {
    let dir = ensure_dir(&common.output_dir)?;
    let rows = table_rows::<f64>(target, iterations)?;
    let mut table = Table::new(&["state", "tau3", "C_AB", "C_AC", "C_BC"]);
    for r in rows {
        table.push(vec![
            r.state,
            number(r.tau3),
            number(r.c_ab),
            number(r.c_ac),
            number(r.c_bc),
        ]);
    }
    let file = table.write(&dir, "grover_table", common.format)?;
    let params = BTreeMap::from([
        ("n", json!(3)),
        ("target", json!(target)),
        ("iterations", json!(iterations)),
    ]);
    meta("grover-table", common, params, vec![file]).write(&dir)?;
    table.print();
    Ok(true)
}

pub fn hhl_sweep(common: &Common) -> Result<bool> {
    let dir = ensure_dir(&common.output_dir)?;
    let c = common.rotation_constant();
    let grid = b0_squared_grid::<f64>(common.grid_points);
    let results = sweep(&grid, |&b0_sq| {
        HhlProblem::from_b0_squared(b0_sq, c).map(|p| closed_form_tangles(&p))
    });

    let mut tau = Table::new(&["b0_sq", "tau3_psi1", "tau3_rho2", "tau3_rho3"]);
    let mut pi = Table::new(&["b0_sq", "pi3_psi1", "pi3_rho2", "pi3_rho3"]);
    for (&b0_sq, r) in grid.iter().zip(results) {
        let t = r.with_context(|| format!("b0_sq = {b0_sq}"))?;
        let [s1, s2, s3] = t.stages();
        tau.push(vec![number(b0_sq), number(s1.tau3), number(s2.tau3), number(s3.tau3)]);
        pi.push(vec![number(b0_sq), number(s1.pi3), number(s2.pi3), number(s3.pi3)]);
    }
    let files = vec![
        tau.write(&dir, "fig4a", common.format)?,
        pi.write(&dir, "fig4b", common.format)?,
    ];
    meta("hhl-sweep", common, BTreeMap::new(), files).write(&dir)?;
    tau.print();
    println!();
    pi.print();
    Ok(true)
}

/// `p_steps` evenly spaced values plus the two zeros of `f`, sorted.
fn p_grid(family: &Rank2Family<f64>, p_steps: usize) -> Vec<(f64, &'static str)> {
    let (lo, hi) = family.p_bounds();
    let mut grid: Vec<(f64, &'static str)> = (0..p_steps)
        .map(|i| (i as f64 / (p_steps - 1) as f64, ""))
        .filter(|&(p, _)| p != lo && p != hi)
        .collect();
    if lo == hi {
        grid.push((lo, "p-/p+"));
    } else {
        grid.push((lo, "p-"));
        grid.push((hi, "p+"));
    }
    grid.sort_by(|a, b| a.0.total_cmp(&b.0));
    grid
}

pub fn rank2_curve(x1: f64, theta_steps: usize, p_steps: usize, common: &Common) -> Result<bool> {
    let dir = ensure_dir(&common.output_dir)?;
    let base = Rank2Family::new(x1, 0.0)?;
    let mut table = Table::new(&["p", "theta", "tau3_Z", "f_p", "convex_hull", "p_marker"]);
    for (p, marker) in p_grid(&base, p_steps) {
        let family = base.with_p(p)?;
        let f = family.minimal_characteristic();
        let hull = family.three_tangle();
        for k in 0..theta_steps {
            let theta = TAU * k as f64 / theta_steps as f64;
            table.push(vec![
                number(p),
                number(theta),
                number(family.characteristic(theta)),
                number(f),
                number(hull),
                marker.to_string(),
            ]);
        }
    }
    let file = table.write(&dir, "rank2_curves", common.format)?;
    let (lo, hi) = base.p_bounds();
    let params = BTreeMap::from([
        ("x1", json!(x1)),
        ("theta_steps", json!(theta_steps)),
        ("p_steps", json!(p_steps)),
        ("p_minus", json!(lo)),
        ("p_plus", json!(hi)),
    ]);
    meta("rank2-curve", common, params, vec![file]).write(&dir)?;
    table.print();
    Ok(true)
}
