use super::gate::{apply, check_targets, Gate};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::tensor::StateVector;

/// Label of the first snapshot in every [`StageTrace`].
pub const INITIAL_LABEL: &str = "initial";

#[derive(Debug, Clone, PartialEq)]
pub enum Step<T: Real> {
    Apply { gate: Gate<T>, targets: Vec<usize> },
    Snapshot(String),
}

/// Ordered gate list over a fixed register, with labelled snapshot markers.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit<T: Real> {
    num_qubits: usize,
    steps: Vec<Step<T>>,
}

/// Controlled `u^power` step: acts on `targets` iff `control` is `|1>`.
pub fn controlled_power<T: Real>(u: &Gate<T>, power: usize, control: usize, targets: &[usize]) -> Result<Step<T>> {
    if targets.contains(&control) {
        return Err(Error::ControlInTargets(control));
    }
    let gate = u.power(power).controlled();
    let mut all = Vec::with_capacity(targets.len() + 1);
    all.push(control);
    all.extend_from_slice(targets);
    check_targets(usize::MAX, gate.arity(), &all)?;
    Ok(Step::Apply { gate, targets: all })
}

impl<T: Real> Circuit<T> {
    pub fn new(num_qubits: usize) -> Self {
        Self {
            num_qubits,
            steps: Vec::new(),
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn steps(&self) -> &[Step<T>] {
        &self.steps
    }

    pub fn gate_count(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| matches!(s, Step::Apply { .. }))
            .count()
    }

    pub fn push(&mut self, gate: Gate<T>, targets: &[usize]) -> Result<&mut Self> {
        check_targets(self.num_qubits, gate.arity(), targets)?;
        self.steps.push(Step::Apply {
            gate,
            targets: targets.to_vec(),
        });
        Ok(self)
    }

    pub fn push_step(&mut self, step: Step<T>) -> Result<&mut Self> {
        if let Step::Apply { gate, targets } = &step {
            check_targets(self.num_qubits, gate.arity(), targets)?;
        }
        self.steps.push(step);
        Ok(self)
    }

    pub fn snapshot(&mut self, label: impl Into<String>) -> &mut Self {
        self.steps.push(Step::Snapshot(label.into()));
        self
    }

    pub fn controlled_power(&mut self, u: &Gate<T>, power: usize, control: usize, targets: &[usize]) -> Result<&mut Self> {
        let step = controlled_power(u, power, control, targets)?;
        self.push_step(step)
    }

    /// Appends `other`, sending its qubit `i` to `mapping[i]`. Snapshot
    /// markers are carried over.
    pub fn append_mapped(&mut self, other: &Circuit<T>, mapping: &[usize]) -> Result<&mut Self> {
        check_targets(self.num_qubits, other.num_qubits, mapping)?;
        for step in &other.steps {
            match step {
                Step::Apply { gate, targets } => {
                    let mapped: Vec<usize> = targets.iter().map(|&q| mapping[q]).collect();
                    self.push(gate.clone(), &mapped)?;
                }
                Step::Snapshot(label) => {
                    self.snapshot(label.clone());
                }
            }
        }
        Ok(self)
    }

    /// Adjoint circuit: gates reversed and inverted, snapshots dropped.
    pub fn inverse(&self) -> Self {
        let steps = self
            .steps
            .iter()
            .rev()
            .filter_map(|s| match s {
                Step::Apply { gate, targets } => Some(Step::Apply {
                    gate: gate.inverse(),
                    targets: targets.clone(),
                }),
                Step::Snapshot(_) => None,
            })
            .collect();
        Self {
            num_qubits: self.num_qubits,
            steps,
        }
    }

    /// Final state only.
    pub fn apply_to(&self, initial: &StateVector<T>) -> Result<StateVector<T>> {
        Ok(self.run(initial)?.final_state)
    }

    /// Executes the circuit, recording the initial state and every snapshot.
    pub fn run(&self, initial: &StateVector<T>) -> Result<StageTrace<T>> {
        if initial.num_qubits() != self.num_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.num_qubits,
                actual: initial.num_qubits(),
            });
        }
        let mut snapshots = vec![Snapshot {
            label: INITIAL_LABEL.to_string(),
            state: initial.clone(),
        }];
        let mut state = initial.clone();
        for step in &self.steps {
            match step {
                Step::Apply { gate, targets } => state = apply(&state, gate, targets)?,
                Step::Snapshot(label) => snapshots.push(Snapshot {
                    label: label.clone(),
                    state: state.clone(),
                }),
            }
        }
        Ok(StageTrace {
            snapshots,
            final_state: state,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Snapshot<T: Real> {
    pub label: String,
    pub state: StateVector<T>,
}

/// Result of [`Circuit::run`].
#[derive(Debug, Clone, PartialEq)]
pub struct StageTrace<T: Real> {
    pub snapshots: Vec<Snapshot<T>>,
    pub final_state: StateVector<T>,
}

impl<T: Real> StageTrace<T> {
    pub fn get(&self, label: &str) -> Option<&StateVector<T>> {
        self.snapshots
            .iter()
            .find(|s| s.label == label)
            .map(|s| &s.state)
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.snapshots.iter().map(|s| s.label.as_str())
    }

    pub fn initial(&self) -> &StateVector<T> {
        &self.snapshots[0].state
    }
}
