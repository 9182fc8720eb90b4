use std::f64::consts::PI;

use num_traits::One;

use crate::circuit::{Circuit, Gate, StageTrace};
use crate::entanglement::{analyze_three_qubit, concurrence_pure, EntanglementRecord};
use crate::error::{Error, Result};
use crate::scalar::{cr, Real, C};
use crate::tensor::{ComplexMatrix, StateVector};

pub const MAX_GROVER_QUBITS: usize = 6;

/// `floor(pi sqrt(N) / 4)` for `N = 2^n`.
pub fn optimal_iterations(n: usize) -> usize {
    (PI * ((1usize << n) as f64).sqrt() / 4.0).floor() as usize
}

/// `1 - 2 |target><target|`
fn oracle<T: Real>(n: usize, target: usize) -> Gate<T> {
    let mut diag = vec![C::one(); 1 << n];
    diag[target] = -C::one();
    Gate::new("oracle", ComplexMatrix::diagonal(&diag)).expect("diagonal ±1 is unitary")
}

/// `2 |s><s| - 1`
fn diffuser<T: Real>(n: usize) -> Gate<T> {
    let dim = 1usize << n;
    let two_over_n = cr(T::lit(2.0 / dim as f64));
    let m = ComplexMatrix::from_fn(dim, dim, |r, c| if r == c { two_over_n - C::one() } else { two_over_n });
    Gate::new("diffuser", m).expect("reflection is unitary")
}

fn check_args(n: usize, target: usize) -> Result<()> {
    if n == 0 || n > MAX_GROVER_QUBITS {
        return Err(Error::InvalidParameter(format!(
            "grover needs 1..={MAX_GROVER_QUBITS} qubits, got {n}"
        )));
    }
    if target >= 1 << n {
        return Err(Error::InvalidParameter(format!(
            "target {target} out of range for {n} qubits"
        )));
    }
    Ok(())
}

/// Hadamards, then `iterations` oracle/diffuser rounds. Snapshots:
/// `superposition`, then `oracle-k` and `diffuser-k` for `k = 1..`.
pub fn grover_circuit<T: Real>(n: usize, target: usize, iterations: usize) -> Result<Circuit<T>> {
    check_args(n, target)?;
    let all: Vec<usize> = (0..n).collect();
    let mut c = Circuit::new(n);
    for q in 0..n {
        c.push(Gate::hadamard(), &[q])?;
    }
    c.snapshot("superposition");
    let (o, d) = (oracle(n, target), diffuser(n));
    for k in 1..=iterations {
        c.push(o.clone(), &all)?;
        c.snapshot(format!("oracle-{k}"));
        c.push(d.clone(), &all)?;
        c.snapshot(format!("diffuser-{k}"));
    }
    Ok(c)
}

#[derive(Debug, Clone, PartialEq)]
pub enum StageMeasures<T: Real> {
    /// Registers other than two or three qubits.
    None,
    TwoQubit { concurrence: T },
    ThreeQubit(Box<EntanglementRecord<T>>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroverStage<T: Real> {
    pub label: String,
    pub measures: StageMeasures<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroverRun<T: Real> {
    pub n: usize,
    pub target: usize,
    pub iterations: usize,
    pub trace: StageTrace<T>,
    /// One entry per snapshot after the initial `|0...0>`.
    pub stages: Vec<GroverStage<T>>,
}

impl<T: Real> GroverRun<T> {
    pub fn final_state(&self) -> &StateVector<T> {
        &self.trace.final_state
    }

    /// `|<target|final>|²`
    pub fn success_probability(&self) -> T {
        self.trace.final_state.probability(self.target)
    }

    pub fn stage(&self, label: &str) -> Option<&GroverStage<T>> {
        self.stages.iter().find(|s| s.label == label)
    }
}

fn measure<T: Real>(state: &StateVector<T>) -> Result<StageMeasures<T>> {
    Ok(match state.num_qubits() {
        2 => StageMeasures::TwoQubit {
            concurrence: concurrence_pure(state)?,
        },
        3 => StageMeasures::ThreeQubit(Box::new(analyze_three_qubit(state)?)),
        _ => StageMeasures::None,
    })
}

/// Runs Grover search from `|0...0>` and records entanglement at every
/// snapshot.
pub fn grover_run<T: Real>(n: usize, target: usize, iterations: usize) -> Result<GroverRun<T>> {
    let circuit = grover_circuit::<T>(n, target, iterations)?;
    let trace = circuit.run(&StateVector::zero(n))?;
    let stages = trace.snapshots[1..]
        .iter()
        .map(|s| {
            Ok(GroverStage {
                label: s.label.clone(),
                measures: measure(&s.state)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GroverRun {
        n,
        target,
        iterations,
        trace,
        stages,
    })
}

/// One row of the three-qubit entanglement table.
#[derive(Debug, Clone, PartialEq)]
pub struct GroverRow<T> {
    pub state: String,
    pub tau3: T,
    pub c_ab: T,
    pub c_ac: T,
    pub c_bc: T,
}

/// Three-tangle and pairwise concurrences after every oracle and diffuser
/// call (`psi1`, `psi2`, ...). With zero iterations the only row is the
/// uniform superposition `s`.
pub fn grover_table<T: Real>(target: usize, iterations: usize) -> Result<Vec<GroverRow<T>>> {
    let run = grover_run::<T>(3, target, iterations)?;
    let picked: Vec<(String, &GroverStage<T>)> = if iterations == 0 {
        vec![("s".to_string(), &run.stages[0])]
    } else {
        run.stages[1..]
            .iter()
            .enumerate()
            .map(|(i, s)| (format!("psi{}", i + 1), s))
            .collect()
    };
    picked
        .into_iter()
        .map(|(state, stage)| match &stage.measures {
            StageMeasures::ThreeQubit(r) => {
                let r = r.clamped();
                Ok(GroverRow {
                    state,
                    tau3: r.three_tangle.unwrap_or(T::zero()),
                    c_ab: r.pairwise_concurrences.ab,
                    c_ac: r.pairwise_concurrences.ac,
                    c_bc: r.pairwise_concurrences.bc,
                })
            }
            _ => unreachable!("three-qubit run"),
        })
        .collect()
}
