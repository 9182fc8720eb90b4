//! Grover search and the 2×2 HHL example, simulated gate by gate, plus the
//! closed-form HHL states and tangles they are checked against.

mod closed_form;
mod grover;
mod hhl;
mod qpe;
mod validate;

pub use closed_form::{
    closed_form_params, closed_form_states, closed_form_tangles, ClosedFormParams, ClosedFormTangles, StageTangles,
};
pub use grover::{
    grover_circuit, grover_run, grover_table, optimal_iterations, GroverRow, GroverRun, GroverStage, StageMeasures,
    MAX_GROVER_QUBITS,
};
pub use hhl::{
    default_rotation_constant, eigenvalue_rotation, hhl_circuit, hhl_run, HhlProblem, HhlStageStates,
    POST_QPE, POST_ROTATION, POST_UNCOMPUTE,
};
pub use qpe::{qpe, qpe_circuit};
pub use validate::{b0_squared_grid, cross_validate, cross_validate_against, sweep, Check, CrossValidation, VALIDATION_TOLERANCE};
