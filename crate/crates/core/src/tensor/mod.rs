//! Dense complex linear algebra for registers of a few qubits.

mod density;
mod eig;
pub mod index;
mod matrix;
mod state;

pub use density::DensityMatrix;
pub use eig::{hermitian_eig, trace_norm, SpectralDecomposition, RANK_TOLERANCE};
pub use matrix::{kron, ComplexMatrix};
pub use state::StateVector;
