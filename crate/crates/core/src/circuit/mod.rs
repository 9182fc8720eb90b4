//! Gate-level state-vector simulation.

mod evolution;
mod gate;
mod qft;
mod sequence;

pub use evolution::hamiltonian_evolution;
pub use gate::{apply, Gate};
pub use qft::qft;
pub use sequence::{controlled_power, Circuit, Snapshot, StageTrace, Step, INITIAL_LABEL};
