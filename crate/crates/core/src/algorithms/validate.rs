use rayon::prelude::*;

use super::closed_form::{closed_form_params, closed_form_states, closed_form_tangles};
use super::hhl::{hhl_run, HhlProblem};
use crate::entanglement::{family_basis, mixed_three_tangle, pi_tangle, three_tangle_pure};
use crate::error::Result;
use crate::scalar::{cr, Real, C};
use crate::tensor::{hermitian_eig, DensityMatrix, StateVector};

pub const VALIDATION_TOLERANCE: f64 = 1e-8;

/// Eigenvector comparisons are skipped when the spectral gap is smaller
/// than this, since the eigenvectors are then ill-conditioned.
const MIN_GAP: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct Check<T> {
    pub name: &'static str,
    pub discrepancy: T,
    pub passed: bool,
}

/// Simulation vs. closed form for one problem.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossValidation<T> {
    pub checks: Vec<Check<T>>,
}

impl<T: Real> CrossValidation<T> {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn max_discrepancy(&self) -> T {
        self.checks.iter().map(|c| c.discrepancy).fold(T::zero(), T::max)
    }

    pub fn get(&self, name: &str) -> Option<&Check<T>> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check<T>> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn state_from_real<T: Real>(amps: &[T]) -> StateVector<T> {
    StateVector::from_real(amps).expect("nonzero pattern")
}

/// Largest of the eigenvalue errors and, when the gap allows, the
/// phase-aligned eigenvector errors.
fn spectrum_discrepancy<T: Real>(rho: &DensityMatrix<T>, top: T, vectors: [StateVector<T>; 2]) -> Result<T> {
    let spec = hermitian_eig(rho.matrix())?;
    let ev = spec.eigenvalues();
    let mut worst = (ev[0] - top).abs().max((ev[1] - (T::one() - top)).abs());
    for e in &ev[2..] {
        worst = worst.max(e.abs());
    }
    let gaps = [ev[0] - ev[1], ev[1] - ev[2]];
    for (i, v) in vectors.iter().enumerate() {
        let below = if i == 0 { gaps[0] } else { gaps[0].min(gaps[1]) };
        if below > T::tol(MIN_GAP) {
            let e = StateVector::normalized(spec.eigenvector(i))?;
            worst = worst.max(e.phase_aligned_distance(v));
        }
    }
    Ok(worst)
}

/// Runs the HHL circuit and compares against the closed forms:
///
/// - `psi-states`: simulated `psi1..psi3` against the written-out states
/// - `psi1-tangle`: tangle of the stage-1 state against `(b0² - b1²)²`
/// - `rho2-spectrum`: `p` and the two eigenvectors of the stage-2 state
/// - `rho2-tangle`: three-tangle of the stage-2 state via [`mixed_three_tangle`]
/// - `rho2-pi-tangle`: numerical pi-tangle against its closed form
/// - `rho3-spectrum`: `q` and the product eigenvectors of the stage-3 state
/// - `rho3-tangles`: stage-3 three-tangle and pi-tangle against zero
pub fn cross_validate<T: Real>(problem: &HhlProblem<T>) -> Result<CrossValidation<T>> {
    cross_validate_against(problem, problem)
}

/// Like [`cross_validate`], but evaluates the closed forms on `reference`
/// while simulating `simulated`. Used to confirm that a mismatched rotation
/// constant is caught.
pub fn cross_validate_against<T: Real>(simulated: &HhlProblem<T>, reference: &HhlProblem<T>) -> Result<CrossValidation<T>> {
    let states = hhl_run(simulated)?;
    let cf = closed_form_params(reference);
    let tangles = closed_form_tangles(reference);
    let mut checks = Vec::new();
    let mut push = |name, discrepancy: T| {
        checks.push(Check {
            name,
            discrepancy,
            passed: discrepancy <= T::tol(VALIDATION_TOLERANCE),
        })
    };

    let expected = closed_form_states(reference);
    let sims = [&states.psi1, &states.psi2, &states.psi3];
    push(
        "psi-states",
        sims.iter()
            .zip(&expected)
            .map(|(s, e)| s.phase_aligned_distance(e))
            .fold(T::zero(), T::max),
    );

    push("psi1-tangle", (three_tangle_pure(&states.psi1_bar())? - tangles.stage1.tau3).abs());

    let [v1, v2] = family_basis::<T>();
    let combo = |u: T, w: T| {
        let amps: Vec<C<T>> = v1.iter().zip(&v2).map(|(a, b)| *a * cr(u) + *b * cr(w)).collect();
        StateVector::normalized(amps).expect("orthonormal pattern")
    };
    push(
        "rho2-spectrum",
        spectrum_discrepancy(&states.rho2_bar, cf.p, [combo(cf.x1, cf.x2), combo(-cf.x2, cf.x1)])?,
    );

    let (tau_rho2, _) = mixed_three_tangle(&states.rho2_bar)?;
    push(
        "rho2-tangle",
        tau_rho2.map_or(T::infinity(), |t| (t - tangles.stage2.tau3).abs()),
    );

    push("rho2-pi-tangle", (pi_tangle(&states.rho2_bar)? - tangles.stage2.pi3).abs());

    let z = T::zero();
    let phi1 = state_from_real(&[cf.y1, cf.y2, z, z, z, z, z, z]);
    let phi2 = state_from_real(&[-cf.y2, cf.y1, z, z, z, z, z, z]);
    push("rho3-spectrum", spectrum_discrepancy(&states.rho3_bar, cf.q, [phi1, phi2])?);

    let (tau_rho3, _) = mixed_three_tangle(&states.rho3_bar)?;
    let pi_rho3 = pi_tangle(&states.rho3_bar)?;
    push(
        "rho3-tangles",
        tau_rho3
            .map_or(T::infinity(), |t| (t - tangles.stage3.tau3).abs())
            .max((pi_rho3 - tangles.stage3.pi3).abs()),
    );

    Ok(CrossValidation { checks })
}

/// `points` evenly spaced values over `[0, 1]`, endpoints included.
pub fn b0_squared_grid<T: Real>(points: usize) -> Vec<T> {
    match points {
        0 => Vec::new(),
        1 => vec![T::zero()],
        _ => (0..points)
            .map(|i| T::lit(i as f64 / (points - 1) as f64))
            .collect(),
    }
}

/// Evaluates `f` over `grid` in parallel; output keeps grid order.
#[allow(clippy::redundant_closure)] // `f` itself is not Send
pub fn sweep<T, R, F>(grid: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    grid.par_iter().map(|x| f(x)).collect()
}
