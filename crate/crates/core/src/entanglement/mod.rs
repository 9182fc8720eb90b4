//! Bipartite and tripartite entanglement measures for two- and three-qubit
//! states.

mod concurrence;
mod negativity;
mod rank2;
mod record;
mod tangle;

pub use concurrence::{concurrence_mixed, concurrence_pure};
pub use negativity::{negativity, one_to_rest_negativities, pairwise_negativities, pi_residuals, pi_tangle};
pub use rank2::Rank2Family;
pub use record::{
    analyze_three_qubit, clamp_noise, mixed_three_tangle, EntanglementRecord, Pairwise, PerQubit, ThreeQubitState,
};
pub use tangle::three_tangle_pure;
pub(crate) use record::family_basis;
