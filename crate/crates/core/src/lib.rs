//! State-vector simulation of Grover search and the HHL linear-system
//! algorithm, with bipartite and tripartite entanglement measures evaluated at
//! every stage.
//!
//! All numerics are generic over [`Real`] (`f32` or `f64`); the `*64` aliases
//! below are what most callers want.

pub mod algorithms;
pub mod circuit;
pub mod entanglement;
mod error;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
pub use scalar::{Real, C};

pub use tensor::{hermitian_eig, kron, trace_norm, ComplexMatrix, DensityMatrix, SpectralDecomposition, StateVector};

pub type Complex64 = C<f64>;
pub type ComplexMatrix64 = ComplexMatrix<f64>;
pub type ComplexMatrix32 = ComplexMatrix<f32>;
pub type StateVector64 = StateVector<f64>;
pub type StateVector32 = StateVector<f32>;
pub type DensityMatrix64 = DensityMatrix<f64>;
pub type DensityMatrix32 = DensityMatrix<f32>;
pub type SpectralDecomposition64 = SpectralDecomposition<f64>;
pub type Gate64 = circuit::Gate<f64>;
pub type Circuit64 = circuit::Circuit<f64>;
pub type StageTrace64 = circuit::StageTrace<f64>;
pub type EntanglementRecord64 = entanglement::EntanglementRecord<f64>;
pub type Rank2Family64 = entanglement::Rank2Family<f64>;
pub type HhlProblem64 = algorithms::HhlProblem<f64>;
pub type HhlStageStates64 = algorithms::HhlStageStates<f64>;
pub type ClosedFormParams64 = algorithms::ClosedFormParams<f64>;
pub type GroverRun64 = algorithms::GroverRun<f64>;
